//! The eight structural properties of the universal weak Hopf algebra.

use super::roots::{automorphisms_with_precision, verify_automorphisms, FieldAutomorphism, DEFAULT_PRECISION_BITS};
use super::smash::smash_product;
use super::UniversalWha;
use crate::error::Result;
use crate::linear::tensor::{basis_vector, flip_vec};
use crate::linear::{Matrix, Rational, Subspace, Vector};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct StructuralReport {
    pub report: Report,
    pub degree: usize,
    pub automorphisms: Vec<FieldAutomorphism>,
    pub grouplike_count: usize,
    pub integral_dim: usize,
    /// `h(z) = τ(z)/n · 1`.
    pub haar: Vector,
}

impl StructuralReport {
    pub fn is_galois(&self) -> bool {
        self.grouplike_count == self.degree
    }
}

pub fn verify_structural_properties(a: &UniversalWha) -> Result<StructuralReport> {
    verify_structural_properties_with_precision(a, DEFAULT_PRECISION_BITS)
}

pub fn verify_structural_properties_with_precision(a: &UniversalWha, bits: u32) -> Result<StructuralReport> {
    let n = a.degree();
    let d = n * n;
    let w = &a.wha.wba;
    let s = &a.wha.antipode;
    let tf = a.field.trace_form();
    let e = a.field.algebra();
    let subs = w.canonical_subalgebras();
    let mut r = Report::new(format!("universal weak Hopf algebra of Q[x]/({})", a.field.min_poly()));
    let flag = |ok: bool, why: String| if ok { Ok(()) } else { Err(why) };

    // 1
    let lam_e = Subspace::span(d, (0..n).map(|k| a.lambda(&basis_vector(n, k))));
    r.record("1. A^L = λ(E)", flag(subs.left == lam_e, "left subalgebra differs".into()));
    r.record("1. A^R = λ(E)", flag(subs.right == lam_e, "right subalgebra differs".into()));

    // 2
    r.record("2. S² = id", flag(s.mul(s) == Matrix::identity(d), "S² ≠ id".into()));
    let mut transpose = Ok(());
    'tr: for b in 0..d {
        let op = a.operator(&basis_vector(d, b));
        let sop = a.operator(&s.col(b));
        for x in 0..n {
            for y in 0..n {
                let lhs = tf.trace(&e.mul(&basis_vector(n, x), &op.col(y)));
                let rhs = tf.trace(&e.mul(&sop.col(x), &basis_vector(n, y)));
                if lhs != rhs {
                    transpose = Err(format!("operator {b}, x^{x}, x^{y}"));
                    break 'tr;
                }
            }
        }
    }
    r.record("2. τ(x·a(y)) = τ(S(a)(x)·y)", transpose);

    // 3
    let cocomm = (0..d).find(|&b| flip_vec(w.coproduct_of_basis(b), d, d) != *w.coproduct_of_basis(b));
    r.record("3. cocommutative", cocomm.map_or(Ok(()), |b| Err(format!("basis element {b}"))));

    // 4: operators with image in Q·1 are those whose rows 1..n vanish
    let integrals = w.left_integrals();
    let rank_one = Subspace::span(d, (0..n).map(|l| basis_vector(d, l)));
    r.record(
        "4. left integrals = {a : a(E) ⊆ Q·1}",
        flag(integrals == rank_one, format!("integral space has dimension {}", integrals.dim())),
    );
    let trace_ops = Subspace::span(
        d,
        (0..n).map(|k| {
            // z ↦ τ(x^k z)·1
            let row: Vector = (0..n).map(|m| tf.trace(&e.mul(&basis_vector(n, k), &basis_vector(n, m)))).collect();
            let mut v = vec![Rational::zero(); d];
            v[..n].clone_from_slice(&row);
            v
        }),
    );
    r.record(
        "4. every left integral is τ(r·_)",
        flag(trace_ops == integrals, "τ(r·_) does not exhaust the integrals".into()),
    );
    let inv = a.natural_action().invariants();
    r.record(
        "4. invariant subalgebra of E is Q",
        flag(inv.dim() == 1, format!("invariants have dimension {}", inv.dim())),
    );

    // 5
    let inv_n = Rational::from_int(n as i64).recip().expect("positive degree");
    let mut haar = vec![Rational::zero(); d];
    for m in 0..n {
        haar[m] = &tf.tau[m] * &inv_n;
    }
    r.absorb("5. τ/n", w.haar_check(&haar, Some(s)));

    // 6
    let search = automorphisms_with_precision(&a.field, bits)?;
    let autos = search.automorphisms;
    r.record("6. automorphisms verified exactly", verify_automorphisms(&a.field, &autos));
    let gens: Vec<Vector> = autos.iter().map(|g| a.from_operator(&g.matrix)).collect();
    let group = w.grouplike_group(&gens);
    r.record(
        "6. automorphisms are left grouplike",
        match group.excluded.first() {
            None => Ok(()),
            Some((i, why)) => Err(format!("automorphism {i}: {why}")),
        },
    );
    r.absorb("6. grouplike group", group.report);
    let count = group.members.len();
    r.record("6. |G^L| divides n", flag(count > 0 && n % count == 0, format!("{count} ∤ {n}")));

    // 7: a(x) = Π^L(a∘λ(x))(1)
    let mut trivial = Ok(());
    'triv: for b in 0..d {
        let av = basis_vector(d, b);
        for x in 0..n {
            let ax = a.algebra().mul(&av, &a.lambda(&basis_vector(n, x)));
            let lhs = a.apply(&av, &basis_vector(n, x));
            let rhs = a.apply(&subs.pi_l.mul_vec(&ax), e.unit());
            if lhs != rhs {
                trivial = Err(format!("operator {b}, x^{x}"));
                break 'triv;
            }
        }
    }
    r.record("7. a(x) = Π^L(ax)(1)", trivial);

    // 8
    let smash = smash_product(&a.natural_action());
    r.record(
        "8. E⋊A → A bijective",
        flag(smash.is_bijective(), format!("rank {} of {}", smash.rank, d)),
    );
    let end_e = crate::algebra::FinDimAlgebra::matrix_algebra(n);
    r.absorb(
        "8. E⋊A → A",
        crate::algebra::AlgebraMap::new(smash.canonical.clone()).check(&smash.algebra, &end_e),
    );

    Ok(StructuralReport {
        report: r,
        degree: n,
        automorphisms: autos,
        grouplike_count: count,
        integral_dim: integrals.dim(),
        haar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_field_is_galois() {
        let a = UniversalWha::from_poly("x^2-2").unwrap();
        let s = verify_structural_properties(&a).unwrap();
        assert!(s.report.passed(), "{}", s.report);
        assert_eq!(s.grouplike_count, 2);
        assert!(s.is_galois());
    }

    #[test]
    fn cube_root_has_trivial_group() {
        let a = UniversalWha::from_poly("x^3-2").unwrap();
        let s = verify_structural_properties(&a).unwrap();
        assert!(s.report.passed(), "{}", s.report);
        assert_eq!(s.grouplike_count, 1);
        assert!(!s.is_galois());
    }
}
