//! The Greither–Pareigis Hopf algebra `H = Q[c,s]/(c²+s²−1, cs)` acting on
//! `Q[x]/(x⁴−2)`, with its embedding into the universal weak Hopf algebra.

use super::UniversalWha;
use crate::algebra::FinDimAlgebra;
use crate::linear::tensor::{add_vec, outer, sub_vec};
use crate::linear::{q, qi, Matrix, Rational, Vector};
use crate::morphism::{check_strict_morphism, check_weak_left_morphism, ModuleAlgebraAction};
use crate::report::Report;
use crate::wba::{WeakBialgebra, WeakHopfAlgebra};

/// Basis order of `H`.
pub const H_BASIS: [&str; 4] = ["1", "c", "s", "c^2"];

#[derive(Clone, Debug)]
pub struct GpExample {
    pub h: WeakHopfAlgebra,
    pub a: UniversalWha,
    pub action: ModuleAlgebraAction,
    /// `dim A × dim H`; column `h` is the operator `z ↦ h▷z`.
    pub embedding: Matrix,
}

fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| qi(x)).collect()
}

/// `H` with `Δ(c) = c⊗c − s⊗s`, `Δ(s) = c⊗s + s⊗c`, `ε(c) = 1`, `ε(s) = 0`,
/// `S(c) = c`, `S(s) = −s`.
pub fn gp_hopf_algebra() -> WeakHopfAlgebra {
    let (one, c, s, c2) = (v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1]));
    let zero = v(&[0, 0, 0, 0]);
    let table = |i: usize, j: usize| -> Vector {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        match (i, j) {
            (0, k) => [&one, &c, &s, &c2][k].clone(),
            (1, 1) => c2.clone(),
            (1, 2) => zero.clone(),
            (1, 3) => c.clone(),
            (2, 2) => sub_vec(&one, &c2),
            (2, 3) => zero.clone(),
            (3, 3) => c2.clone(),
            _ => unreachable!(),
        }
    };
    let alg = FinDimAlgebra::from_fn(4, table, one.clone()).with_basis_names(H_BASIS.iter().map(|s| s.to_string()).collect());
    let t = |x: &Vector, y: &Vector| outer(x, y);
    let one_m_c2 = sub_vec(&one, &c2);
    let coproducts = vec![
        t(&one, &one),
        sub_vec(&t(&c, &c), &t(&s, &s)),
        add_vec(&t(&c, &s), &t(&s, &c)),
        add_vec(&t(&c2, &c2), &t(&one_m_c2, &one_m_c2)),
    ];
    let wba = WeakBialgebra::from_coproducts(alg, &coproducts, v(&[1, 1, 0, 1])).expect("consistent shapes");
    let antipode = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]);
    WeakHopfAlgebra::new(wba, antipode).expect("consistent shapes")
}

/// The action on `(1, x, x², x³)`: `c = diag(1,0,−1,0)`, `s = diag(0,−1,0,1)`.
pub fn gp_example() -> GpExample {
    let h = gp_hopf_algebra();
    let a = UniversalWha::from_poly("x^4-2").expect("x^4-2 is separable");
    let diags: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 0, -1, 0], [0, -1, 0, 1], [1, 0, 1, 0]];
    let mut action = Matrix::zeros(4, 16);
    for (w, d) in diags.iter().enumerate() {
        for (m, &x) in d.iter().enumerate() {
            action[(m, w * 4 + m)] = qi(x);
        }
    }
    let action = ModuleAlgebraAction::new(h.wba.clone(), a.field.algebra().clone(), action).expect("shapes");
    let cols: Vec<Vector> = (0..4).map(|w| action.basis_operator(w).into_entries()).collect();
    let embedding = Matrix::from_columns(&cols, 16);
    GpExample {
        h,
        a,
        action,
        embedding,
    }
}

/// Expected `Δ_A(1)` and `Δ_A(λ(x))` as coefficient matrices `c_kl` of
/// `λ(x^k)⊗λ(x^l)`.
pub fn expected_delta_tables() -> (Matrix, Matrix) {
    let e = q(1, 8);
    let mut one = Matrix::zeros(4, 4);
    one[(0, 0)] = q(1, 4);
    for k in 1..4 {
        one[(k, 4 - k)] = e.clone();
    }
    let mut x = Matrix::zeros(4, 4);
    x[(1, 0)] = q(1, 4);
    x[(0, 1)] = q(1, 4);
    x[(3, 2)] = e.clone();
    x[(2, 3)] = e;
    (one, x)
}

impl GpExample {
    pub fn c(&self) -> Vector {
        self.embedding.col(1)
    }

    pub fn s(&self) -> Vector {
        self.embedding.col(2)
    }

    pub fn x(&self) -> Vector {
        self.a.lambda_power(1)
    }

    pub fn check(&self) -> Report {
        let a = &self.a;
        let w = &a.wha.wba;
        let alg = a.algebra();
        let (c, s, x) = (self.c(), self.s(), self.x());
        let one = alg.unit().clone();
        let d1 = w.delta_one();
        let mut r = Report::new("Greither–Pareigis example");
        let flag = |ok: bool, why: &str| if ok { Ok(()) } else { Err(why.to_string()) };

        r.absorb("H", self.h.check());
        r.absorb("action", self.action.check());

        let (t1, tx) = expected_delta_tables();
        r.record(
            "Δ(1) = ¼1⊗1 + ⅛Σ x^k⊗x^{4−k}",
            flag(a.multiplication_form(&d1) == Some(t1), "coefficients differ"),
        );
        r.record(
            "Δ(x) = ¼(x⊗1+1⊗x) + ⅛(x³⊗x²+x²⊗x³)",
            flag(a.multiplication_form(&w.coproduct(&x)) == Some(tx), "coefficients differ"),
        );
        let cc_ss = sub_vec(&outer(&c, &c), &outer(&s, &s));
        let cs_sc = add_vec(&outer(&c, &s), &outer(&s, &c));
        r.record("Δ(c) = Δ(1)(c⊗c − s⊗s)", flag(w.coproduct(&c) == w.mul2(&d1, &cc_ss), "Δ(c) differs"));
        r.record("Δ(s) = Δ(1)(c⊗s + s⊗c)", flag(w.coproduct(&s) == w.mul2(&d1, &cs_sc), "Δ(s) differs"));
        r.record("ε(c) = 4", flag(w.counit(&c) == qi(4), "ε(c) ≠ 4"));
        r.record("ε(s) = 0", flag(w.counit(&s).is_zero(), "ε(s) ≠ 0"));
        r.record("ε(x) = 0", flag(w.counit(&x).is_zero(), "ε(x) ≠ 0"));
        let sa = &a.wha.antipode;
        let neg_s: Vector = s.iter().map(|t| -t).collect();
        r.record("S(c) = c", flag(sa.mul_vec(&c) == c, "S(c) ≠ c"));
        r.record("S(s) = −s", flag(sa.mul_vec(&s) == neg_s, "S(s) ≠ −s"));
        r.record("S(x) = x", flag(sa.mul_vec(&x) == x, "S(x) ≠ x"));

        let m = |p: &Vector, q: &Vector| alg.mul(p, q);
        let zero = vec![Rational::zero(); 16];
        let two: Vector = one.iter().map(|t| t * &qi(2)).collect();
        let rels: [(&str, bool); 6] = [
            ("c² + s² = 1", add_vec(&m(&c, &c), &m(&s, &s)) == one),
            ("cs = 0", m(&c, &s) == zero),
            ("sc = 0", m(&s, &c) == zero),
            ("cx = xs", m(&c, &x) == m(&x, &s)),
            ("sx = −xc", add_vec(&m(&s, &x), &m(&x, &c)) == zero),
            ("x⁴ = 2", alg.pow(&x, 4) == two),
        ];
        for (name, ok) in rels {
            r.record(format!("relation {name}"), flag(ok, "matrix identity fails"));
        }

        r.absorb("f weak left", check_weak_left_morphism(&self.embedding, &self.h.wba, w));
        let strict = check_strict_morphism(&self.embedding, &self.h.wba, w);
        r.record("f not strict", flag(!strict.passed(), "f is unexpectedly strict"));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_tables() {
        let gp = gp_example();
        let r = gp.check();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn printed_delta_one() {
        let gp = gp_example();
        let c = gp.a.multiplication_form(&gp.a.wha.wba.delta_one()).unwrap();
        assert_eq!(
            gp.a.format_multiplication_form(&c),
            "1/4·1⊗1 + 1/8·x⊗x^3 + 1/8·x^2⊗x^2 + 1/8·x^3⊗x"
        );
    }
}
