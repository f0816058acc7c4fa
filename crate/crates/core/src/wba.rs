//! Weak bialgebras and weak Hopf algebras over Q.

use crate::algebra::{check_multiplicative, tensor_mul, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::linear::tensor::{add_scaled, apply_on_leg, basis_vector, flip_vec, nonzeros, outer, reshape};
use crate::linear::{flip, Matrix, Rational, Subspace, Vector};
use crate::report::Report;

/// Comultiplication (`n² × n`) and counit of an `n`-dimensional coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub delta: Matrix,
    pub epsilon: Vector,
}

impl Coalgebra {
    pub fn new(delta: Matrix, epsilon: Vector) -> Result<Self> {
        let n = epsilon.len();
        if delta.shape() != (n * n, n) {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication is {:?}, expected ({}, {n})",
                delta.shape(),
                n * n
            )));
        }
        Ok(Coalgebra { delta, epsilon })
    }

    pub fn dim(&self) -> usize {
        self.epsilon.len()
    }

    /// Coassociativity and both counit laws on every basis vector.
    pub fn check(&self) -> Report {
        let n = self.dim();
        let mut r = Report::new(format!("coalgebra axioms (dim {n})"));
        let cols = self.delta.columns();
        let eps = Matrix::row_vector(self.epsilon.clone());
        let mut coassoc = Ok(());
        let mut left = Ok(());
        let mut right = Ok(());
        for (i, d) in cols.iter().enumerate() {
            if coassoc.is_ok()
                && apply_on_leg(d, &[n, n], 0, &self.delta) != apply_on_leg(d, &[n, n], 1, &self.delta)
            {
                coassoc = Err(format!("basis element {i}"));
            }
            let e = basis_vector(n, i);
            if left.is_ok() && apply_on_leg(d, &[n, n], 0, &eps) != e {
                left = Err(format!("basis element {i}"));
            }
            if right.is_ok() && apply_on_leg(d, &[n, n], 1, &eps) != e {
                right = Err(format!("basis element {i}"));
            }
        }
        r.record("coassociativity", coassoc);
        r.record("left counit law", left);
        r.record("right counit law", right);
        r
    }
}

/// An algebra and a coalgebra on the same space.
#[derive(Clone, Debug)]
pub struct WeakBialgebra {
    algebra: FinDimAlgebra,
    coalgebra: Coalgebra,
    delta_cols: Vec<Vector>,
}

impl PartialEq for WeakBialgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coalgebra == other.coalgebra
    }
}

impl Eq for WeakBialgebra {}

/// The maps `Π^L, Π^R, t^L, t^R` as `n × n` matrices and their images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSubalgebras {
    pub left: Subspace,
    pub right: Subspace,
    pub pi_l: Matrix,
    pub pi_r: Matrix,
    pub t_l: Matrix,
    pub t_r: Matrix,
}

/// Informative antipode properties beyond the defining identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AntipodeFlags {
    pub involutive: bool,
    pub anti_multiplicative: bool,
    pub anti_comultiplicative: bool,
}

/// Outcome of [`WeakBialgebra::grouplike_group`].
#[derive(Clone, Debug)]
pub struct GrouplikeGroup {
    pub members: Vec<Vector>,
    /// Candidate index and the reason it was excluded.
    pub excluded: Vec<(usize, String)>,
    pub report: Report,
}

/// A deformed weak bialgebra together with its axiom report.
#[derive(Clone, Debug)]
pub struct Deformation {
    pub wba: WeakBialgebra,
    pub report: Report,
}

impl WeakBialgebra {
    pub fn new(algebra: FinDimAlgebra, delta: Matrix, epsilon: Vector) -> Result<Self> {
        if epsilon.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {} but the counit has length {}",
                algebra.dim(),
                epsilon.len()
            )));
        }
        let coalgebra = Coalgebra::new(delta, epsilon)?;
        let delta_cols = coalgebra.delta.columns();
        Ok(WeakBialgebra {
            algebra,
            coalgebra,
            delta_cols,
        })
    }

    /// Builds Δ from its values on basis vectors.
    pub fn from_coproducts(algebra: FinDimAlgebra, coproducts: &[Vector], epsilon: Vector) -> Result<Self> {
        let n = algebra.dim();
        if coproducts.len() != n {
            return Err(Error::DimensionMismatch("one coproduct per basis vector expected".into()));
        }
        let delta = Matrix::from_columns(coproducts, n * n);
        Self::new(algebra, delta, epsilon)
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn delta(&self) -> &Matrix {
        &self.coalgebra.delta
    }

    pub fn epsilon(&self) -> &Vector {
        &self.coalgebra.epsilon
    }

    pub fn coproduct_of_basis(&self, i: usize) -> &Vector {
        &self.delta_cols[i]
    }

    pub fn coproduct(&self, x: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim() * self.dim()];
        for (i, c) in nonzeros(x) {
            for (k, d) in nonzeros(&self.delta_cols[i]) {
                out[k] += c * d;
            }
        }
        out
    }

    pub fn counit(&self, x: &[Rational]) -> Rational {
        crate::linear::tensor::dot(&self.coalgebra.epsilon, x)
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit()
    }

    pub fn delta_one(&self) -> Vector {
        self.coproduct(self.algebra.unit())
    }

    /// Product in `W ⊗ W`.
    pub fn mul2(&self, x: &[Rational], y: &[Rational]) -> Vector {
        tensor_mul(&[&self.algebra, &self.algebra], x, y)
    }

    /// Product in `W ⊗ W ⊗ W`.
    pub fn mul3(&self, x: &[Rational], y: &[Rational]) -> Vector {
        tensor_mul(&[&self.algebra, &self.algebra, &self.algebra], x, y)
    }

    /// `(Δ ⊗ id) Δ(x)` in `W^{⊗3}`.
    pub fn coproduct2(&self, x: &[Rational]) -> Vector {
        let n = self.dim();
        apply_on_leg(&self.coproduct(x), &[n, n], 0, self.delta())
    }

    /// `M[a][b] = ε(e_a e_b)`.
    pub fn counit_form(&self) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |a, b| {
            self.algebra
                .basis_product(a, b)
                .iter()
                .map(|(k, c)| c * &self.coalgebra.epsilon[*k])
                .sum()
        })
    }

    /// Every WBA axiom group, each as a named clause with a witness.
    pub fn check(&self) -> Report {
        let n = self.dim();
        let mut r = Report::new(format!("weak bialgebra axioms (dim {n})"));
        r.absorb("algebra", self.algebra.check());
        r.absorb("coalgebra", self.coalgebra.check());

        let mut mult = Ok(());
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs = self.coproduct(&self.algebra.mult_table()[i][j]);
                let rhs = self.mul2(&self.delta_cols[i], &self.delta_cols[j]);
                if lhs != rhs {
                    mult = Err(format!("basis pair ({i}, {j})"));
                    break 'outer;
                }
            }
        }
        r.record("Δ multiplicative", mult);

        // ε(xyz) against ε(x y_1) ε(y_2 z) and ε(x y_2) ε(y_1 z), all x, z at once
        let m = self.counit_form();
        let mut weak = Ok(());
        let mut weak_op = Ok(());
        for y in 0..n {
            let lhs = m.mul(&self.algebra.left_mult(&basis_vector(n, y)));
            let c = reshape(&self.delta_cols[y], n, n);
            if weak.is_ok() && m.mul(&c).mul(&m) != lhs {
                weak = Err(format!("middle basis element {y}"));
            }
            if weak_op.is_ok() && m.mul(&c.transpose()).mul(&m) != lhs {
                weak_op = Err(format!("middle basis element {y}"));
            }
        }
        r.record("ε weakly multiplicative (Δ)", weak);
        r.record("ε weakly multiplicative (Δ^op)", weak_op);

        let d1 = self.delta_one();
        let one = self.unit();
        let dd1 = apply_on_leg(&d1, &[n, n], 0, self.delta());
        let left = outer(&d1, one);
        let right = outer(one, &d1);
        let lr = self.mul3(&left, &right);
        let rl = self.mul3(&right, &left);
        r.record(
            "unit weakly comultiplicative (m)",
            if dd1 == lr { Ok(()) } else { Err("Δ²(1) ≠ (Δ(1)⊗1)(1⊗Δ(1))".into()) },
        );
        r.record(
            "unit weakly comultiplicative (m^op)",
            if dd1 == rl { Ok(()) } else { Err("Δ²(1) ≠ (1⊗Δ(1))(Δ(1)⊗1)".into()) },
        );
        r
    }

    /// Whether `Δ(1) = 1 ⊗ 1`.
    pub fn is_ordinary_bialgebra(&self) -> bool {
        self.delta_one() == outer(self.unit(), self.unit())
    }

    pub fn canonical_subalgebras(&self) -> CanonicalSubalgebras {
        let n = self.dim();
        let c = reshape(&self.delta_one(), n, n);
        let m = self.counit_form();
        let pi_l = c.transpose().mul(&m);
        let pi_r = c.mul(&m.transpose());
        let t_l = c.mul(&m);
        let t_r = c.transpose().mul(&m.transpose());
        CanonicalSubalgebras {
            left: pi_l.image(),
            right: pi_r.image(),
            pi_l,
            pi_r,
            t_l,
            t_r,
        }
    }

    pub fn pi_l(&self, x: &[Rational]) -> Vector {
        let n = self.dim();
        let d1 = self.delta_one();
        let mut out = vec![Rational::zero(); n];
        for (k, c) in nonzeros(&d1) {
            let e = self.counit(&self.algebra.mul(&basis_vector(n, k / n), x));
            if !e.is_zero() {
                out[k % n] += c * &e;
            }
        }
        out
    }

    /// The three antipode identities `S(w₁)w₂ = Π^R(w)`, `w₁S(w₂) = Π^L(w)`,
    /// `S(w₁)w₂S(w₃) = S(w)` on every basis vector.
    pub fn check_antipode(&self, s: &Matrix) -> Report {
        let n = self.dim();
        let mut r = Report::new("antipode identities");
        if s.shape() != (n, n) {
            r.record("shape", Err(format!("antipode is {:?}, expected ({n}, {n})", s.shape())));
            return r;
        }
        let subs = self.canonical_subalgebras();
        let s_cols = s.columns();
        let mut right = Ok(());
        let mut left = Ok(());
        let mut triple = Ok(());
        for w in 0..n {
            let mut a = vec![Rational::zero(); n];
            let mut b = vec![Rational::zero(); n];
            for (k, c) in nonzeros(&self.delta_cols[w]) {
                let (i, j) = (k / n, k % n);
                for (t, x) in self.algebra.mul(&s_cols[i], &basis_vector(n, j)).into_iter().enumerate() {
                    if !x.is_zero() {
                        a[t] += c * &x;
                    }
                }
                for (t, x) in self.algebra.mul(&basis_vector(n, i), &s_cols[j]).into_iter().enumerate() {
                    if !x.is_zero() {
                        b[t] += c * &x;
                    }
                }
            }
            if right.is_ok() && a != subs.pi_r.col(w) {
                right = Err(format!("basis element {w}"));
            }
            if left.is_ok() && b != subs.pi_l.col(w) {
                left = Err(format!("basis element {w}"));
            }
            if triple.is_ok() {
                let mut t = vec![Rational::zero(); n];
                for (k, c) in nonzeros(&self.coproduct2(&basis_vector(n, w))) {
                    let (i, j, l) = (k / (n * n), (k / n) % n, k % n);
                    let x = self.algebra.mul(&self.algebra.mul(&s_cols[i], &basis_vector(n, j)), &s_cols[l]);
                    for (p, y) in x.into_iter().enumerate() {
                        if !y.is_zero() {
                            t[p] += c * &y;
                        }
                    }
                }
                if t != s_cols[w] {
                    triple = Err(format!("basis element {w}"));
                }
            }
        }
        r.record("S(w₁)w₂ = Π^R(w)", right);
        r.record("w₁S(w₂) = Π^L(w)", left);
        r.record("S(w₁)w₂S(w₃) = S(w)", triple);
        r
    }

    pub fn antipode_flags(&self, s: &Matrix) -> AntipodeFlags {
        let n = self.dim();
        let involutive = s.mul(s) == Matrix::identity(n);
        let anti_multiplicative = check_multiplicative(s, &self.algebra, &self.algebra, true).is_ok();
        let lhs = self.delta().mul(s);
        let rhs = s.kron(s).mul(&flip(n, n)).mul(self.delta());
        AntipodeFlags {
            involutive,
            anti_multiplicative,
            anti_comultiplicative: lhs == rhs,
        }
    }

    /// Invertible with `Δ(g) = Δ(1)(g ⊗ g)`.
    pub fn is_left_grouplike(&self, g: &[Rational]) -> bool {
        self.algebra.invert(g).is_ok() && self.coproduct(g) == self.mul2(&self.delta_one(), &outer(g, g))
    }

    /// `u = ε(g1₁)1₂`.
    pub fn grouplike_u(&self, g: &[Rational]) -> Vector {
        let n = self.dim();
        let mut u = vec![Rational::zero(); n];
        for (k, c) in nonzeros(&self.delta_one()) {
            let e = self.counit(&self.algebra.mul(g, &basis_vector(n, k / n)));
            if !e.is_zero() {
                u[k % n] += c * &e;
            }
        }
        u
    }

    /// Keeps the left grouplike candidates, then verifies that they form a
    /// group and satisfy the derived grouplike identities.
    pub fn grouplike_group(&self, candidates: &[Vector]) -> GrouplikeGroup {
        let mut members: Vec<Vector> = Vec::new();
        let mut excluded = Vec::new();
        let d1 = self.delta_one();
        for (idx, g) in candidates.iter().enumerate() {
            if g.len() != self.dim() {
                excluded.push((idx, "wrong length".to_string()));
            } else if self.algebra.invert(g).is_err() {
                excluded.push((idx, "not invertible".to_string()));
            } else if self.coproduct(g) != self.mul2(&d1, &outer(g, g)) {
                excluded.push((idx, "Δ(g) ≠ Δ(1)(g⊗g)".to_string()));
            } else if members.contains(g) {
                excluded.push((idx, "duplicate".to_string()));
            } else {
                members.push(g.clone());
            }
        }
        let mut report = Report::new(format!("left grouplike group ({} members)", members.len()));
        let closed = members.iter().enumerate().find_map(|(i, g)| {
            members.iter().enumerate().find_map(|(j, h)| {
                (!members.contains(&self.algebra.mul(g, h))).then(|| format!("members ({i}, {j})"))
            })
        });
        report.record("closed under products", closed.map_or(Ok(()), Err));
        let mut inverses = Ok(());
        let mut pi_one = Ok(());
        let mut delta_inv = Ok(());
        let mut delta_u = Ok(());
        for (i, g) in members.iter().enumerate() {
            let gi = self.algebra.invert(g).expect("members are invertible");
            if inverses.is_ok() && !members.contains(&gi) {
                inverses = Err(format!("member {i}"));
            }
            if pi_one.is_ok() && self.pi_l(g) != *self.unit() {
                pi_one = Err(format!("member {i}"));
            }
            if delta_inv.is_ok() && self.coproduct(&gi) != self.mul2(&d1, &outer(&gi, &gi)) {
                delta_inv = Err(format!("member {i}"));
            }
            if delta_u.is_ok() {
                let u = self.grouplike_u(g);
                let ok = match self.algebra.invert(&u) {
                    Ok(ui) => {
                        let rhs = self.mul2(&outer(g, &self.algebra.mul(g, &ui)), &d1);
                        self.coproduct(g) == rhs
                    }
                    Err(_) => false,
                };
                if !ok {
                    delta_u = Err(format!("member {i}"));
                }
            }
        }
        report.record("closed under inverses", inverses);
        report.record("Π^L(g) = 1", pi_one);
        report.record("Δ(g⁻¹) = Δ(1)(g⁻¹⊗g⁻¹)", delta_inv);
        report.record("Δ(g) = (g⊗gu⁻¹)Δ(1)", delta_u);
        GrouplikeGroup {
            members,
            excluded,
            report,
        }
    }

    /// Conjugation `w ↦ gwg⁻¹` by a left grouplike `g`, with the counit
    /// identity `ε(gwg⁻¹) = ε(uw)` checked.
    pub fn ad_grouplike(&self, g: &[Rational]) -> Result<(Matrix, Report)> {
        if !self.is_left_grouplike(g) {
            return Err(Error::NotGrouplike);
        }
        let gi = self.algebra.invert(g)?;
        let ad = self.algebra.left_mult(g).mul(&self.algebra.right_mult(&gi));
        let u = self.grouplike_u(g);
        let mut r = Report::new("inner automorphism by a left grouplike");
        let n = self.dim();
        let eps = (0..n).find(|&w| {
            self.counit(&ad.col(w)) != self.counit(&self.algebra.mul(&u, &basis_vector(n, w)))
        });
        r.record("ε(gwg⁻¹) = ε(uw)", eps.map_or(Ok(()), |w| Err(format!("basis element {w}"))));
        Ok((ad, r))
    }

    /// `Δ'(w) = (1⊗u⁻¹)Δ(w)`, `ε'(w) = ε(uw)` for invertible `u ∈ L`.
    pub fn deform(&self, u: &[Rational]) -> Result<Deformation> {
        let n = self.dim();
        if u.len() != n {
            return Err(Error::DimensionMismatch("deformation element length".into()));
        }
        if !self.canonical_subalgebras().left.contains(u) {
            return Err(Error::NotInLeftSubalgebra);
        }
        let ui = self.algebra.invert(u)?;
        let shift = outer(self.unit(), &ui);
        let coproducts: Vec<Vector> = self.delta_cols.iter().map(|d| self.mul2(&shift, d)).collect();
        let epsilon: Vector = (0..n)
            .map(|w| self.counit(&self.algebra.mul(u, &basis_vector(n, w))))
            .collect();
        let wba = WeakBialgebra::from_coproducts(self.algebra.clone(), &coproducts, epsilon)?;
        let report = wba.check();
        Ok(Deformation { wba, report })
    }

    /// `{l : wl = Π^L(w)l for all w}`.
    pub fn left_integrals(&self) -> Subspace {
        let n = self.dim();
        let pi_l = self.canonical_subalgebras().pi_l;
        let blocks: Vec<Matrix> = (0..n)
            .map(|w| {
                self.algebra
                    .left_mult(&basis_vector(n, w))
                    .sub(&self.algebra.left_mult(&pi_l.col(w)))
            })
            .collect();
        Matrix::vstack(&blocks).kernel()
    }

    /// `{r : rw = rΠ^R(w) for all w}`.
    pub fn right_integrals(&self) -> Subspace {
        let n = self.dim();
        let pi_r = self.canonical_subalgebras().pi_r;
        let blocks: Vec<Matrix> = (0..n)
            .map(|w| {
                self.algebra
                    .right_mult(&basis_vector(n, w))
                    .sub(&self.algebra.right_mult(&pi_r.col(w)))
            })
            .collect();
        Matrix::vstack(&blocks).kernel()
    }

    pub fn haar_check(&self, h: &[Rational], antipode: Option<&Matrix>) -> Report {
        let mut r = Report::new("Haar integral");
        let subs = self.canonical_subalgebras();
        let flag = |ok: bool, why: &str| if ok { Ok(()) } else { Err(why.to_string()) };
        r.record("left integral", flag(self.left_integrals().contains(h), "wh ≠ Π^L(w)h"));
        r.record("right integral", flag(self.right_integrals().contains(h), "hw ≠ hΠ^R(w)"));
        r.record("Π^L(h) = 1", flag(subs.pi_l.mul_vec(h) == *self.unit(), "Π^L(h) ≠ 1"));
        r.record("Π^R(h) = 1", flag(subs.pi_r.mul_vec(h) == *self.unit(), "Π^R(h) ≠ 1"));
        if let Some(s) = antipode {
            r.record("S(h) = h", flag(s.mul_vec(h) == h, "S(h) ≠ h"));
        }
        r
    }

    /// Opposite algebra with the flipped comultiplication.
    pub fn opposite_coopposite(&self) -> WeakBialgebra {
        let n = self.dim();
        let coproducts: Vec<Vector> = self.delta_cols.iter().map(|d| flip_vec(d, n, n)).collect();
        WeakBialgebra::from_coproducts(self.algebra.opposite(), &coproducts, self.epsilon().clone())
            .expect("same shapes")
    }
}

/// A weak bialgebra with an antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakHopfAlgebra {
    pub wba: WeakBialgebra,
    pub antipode: Matrix,
}

impl WeakHopfAlgebra {
    pub fn new(wba: WeakBialgebra, antipode: Matrix) -> Result<Self> {
        let n = wba.dim();
        if antipode.shape() != (n, n) {
            return Err(Error::DimensionMismatch(format!(
                "antipode is {:?}, expected ({n}, {n})",
                antipode.shape()
            )));
        }
        Ok(WeakHopfAlgebra { wba, antipode })
    }

    /// `Q[Z/n]` with `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
    pub fn cyclic_group(n: usize) -> Self {
        let alg = FinDimAlgebra::group_algebra_cyclic(n);
        let coproducts: Vec<Vector> = (0..n)
            .map(|k| outer(&basis_vector(n, k), &basis_vector(n, k)))
            .collect();
        let wba = WeakBialgebra::from_coproducts(alg, &coproducts, vec![Rational::one(); n]).unwrap();
        let s = Matrix::from_fn(n, n, |i, j| {
            if i == (n - j) % n {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        WeakHopfAlgebra::new(wba, s).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.wba.dim()
    }

    /// WBA axioms followed by the antipode identities.
    pub fn check(&self) -> Report {
        let mut r = self.wba.check();
        r.subject = format!("weak Hopf algebra axioms (dim {})", self.dim());
        r.absorb("antipode", self.wba.check_antipode(&self.antipode));
        r
    }

    pub fn opposite_coopposite(&self) -> WeakHopfAlgebra {
        WeakHopfAlgebra::new(self.wba.opposite_coopposite(), self.antipode.clone()).unwrap()
    }

    /// `1₂S(1₁)`; a tracial deformation exists iff it is invertible.
    pub fn twist_element(&self) -> Vector {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (k, c) in nonzeros(&self.wba.delta_one()) {
            let prod = self
                .wba
                .algebra()
                .mul(&basis_vector(n, k % n), &self.antipode.col(k / n));
            add_scaled(&mut out, c, &prod);
        }
        out
    }

    pub fn has_invertible_twist(&self) -> bool {
        self.wba.algebra().invert(&self.twist_element()).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::qi;

    #[test]
    fn twist_of_universal_and_group_algebras() {
        let h = WeakHopfAlgebra::cyclic_group(3);
        assert_eq!(h.twist_element(), *h.wba.unit());
        let a = crate::field::UniversalWha::from_poly("x^3-2").unwrap();
        assert!(a.wha.has_invertible_twist());
    }

    #[test]
    fn group_algebra_is_a_hopf_algebra() {
        let h = WeakHopfAlgebra::cyclic_group(2);
        let r = h.check();
        assert!(r.passed(), "{r}");
        assert!(h.wba.is_ordinary_bialgebra());
        let subs = h.wba.canonical_subalgebras();
        assert_eq!(subs.left, Subspace::span(2, vec![vec![qi(1), qi(0)]]));
        assert_eq!(subs.right, subs.left);
        assert_eq!(h.wba.left_integrals(), Subspace::span(2, vec![vec![qi(1), qi(1)]]));
        let flags = h.wba.antipode_flags(&h.antipode);
        assert!(flags.involutive && flags.anti_multiplicative && flags.anti_comultiplicative);
        assert!(h.check().passed());
        assert!(WeakHopfAlgebra::cyclic_group(3).check().passed());
    }

    #[test]
    fn broken_counit_is_reported() {
        let h = WeakHopfAlgebra::cyclic_group(2);
        let bad = WeakBialgebra::new(h.wba.algebra().clone(), h.wba.delta().clone(), vec![qi(1), qi(2)]).unwrap();
        let r = bad.check();
        assert!(!r.clause_passed("coalgebra: left counit law"));
        assert_eq!(r.clause("coalgebra: left counit law").unwrap().witness.as_deref(), Some("basis element 1"));
    }

    #[test]
    fn grouplikes_of_a_group_algebra() {
        let h = WeakHopfAlgebra::cyclic_group(3);
        let cands: Vec<Vector> = (0..3).map(|k| basis_vector(3, k)).chain([vec![qi(1), qi(1), qi(0)]]).collect();
        let g = h.wba.grouplike_group(&cands);
        assert_eq!(g.members.len(), 3);
        assert_eq!(g.excluded.len(), 1);
        assert!(g.report.passed(), "{}", g.report);
        let (ad, r) = h.wba.ad_grouplike(&basis_vector(3, 1)).unwrap();
        assert_eq!(ad, Matrix::identity(3));
        assert!(r.passed());
    }

    #[test]
    fn opposite_coopposite_is_a_wba() {
        let h = WeakHopfAlgebra::cyclic_group(2);
        assert!(h.opposite_coopposite().check().passed());
    }
}
