//! Smash products `E ⋊ W` and the W-Galois test for an action on a field.

use super::UniversalWha;
use crate::algebra::{AlgebraMap, FinDimAlgebra};
use crate::linear::tensor::{apply_kron, basis_vector, flip_vec, nonzeros, outer};
use crate::linear::{Matrix, QuotientSpace, Rational, Subspace, Vector};
use crate::morphism::{check_weak_left_morphism, check_weak_right_morphism, ModuleAlgebraAction};
use crate::report::Report;

/// `E ⊗_L W` with the smash multiplication
/// `(x⋊w)(y⋊w′) = x(w₁▷y) ⋊ w₂w′`, where `x·l = x(l▷1)`.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    pub algebra: FinDimAlgebra,
    /// Quotient of `E⊗W`, flat index `x·dim W + w`.
    pub quotient: QuotientSpace,
    /// `Φ(x⊗w) = λ(x)∘α(w)` on all of `E⊗W`, into row-major `End(E)`.
    pub phi_full: Matrix,
    /// `Φ` on the quotient basis.
    pub canonical: Matrix,
    pub rank: usize,
}

impl SmashProduct {
    pub fn is_bijective(&self) -> bool {
        let n = self.phi_full.rows();
        self.rank == self.quotient.dim() && self.rank == n
    }
}

pub fn smash_product(action: &ModuleAlgebraAction) -> SmashProduct {
    let e = &action.algebra;
    let w = &action.wba;
    let (n, dw) = (e.dim(), w.dim());
    let left = w.canonical_subalgebras().left;
    let one_e = e.unit();

    let mut rels = Vec::new();
    for l in left.basis_vectors() {
        let l1 = action.act(&l, one_e);
        for x in 0..n {
            let xl = e.mul(&basis_vector(n, x), &l1);
            for b in 0..dw {
                let lw = w.algebra().mul(&l, &basis_vector(dw, b));
                let mut v = outer(&xl, &basis_vector(dw, b));
                for (k, c) in nonzeros(&outer(&basis_vector(n, x), &lw)) {
                    v[k] -= c;
                }
                rels.push(v);
            }
        }
    }
    let quotient = QuotientSpace::new(Subspace::span(n * dw, rels));

    let ops: Vec<Matrix> = (0..dw).map(|b| action.basis_operator(b)).collect();
    let lams: Vec<Matrix> = (0..n).map(|x| e.left_mult(&basis_vector(n, x))).collect();
    let phi_cols: Vec<Vector> = (0..n * dw)
        .map(|k| lams[k / dw].mul(&ops[k % dw]).into_entries())
        .collect();
    let phi_full = Matrix::from_columns(&phi_cols, n * n);

    let dq = quotient.dim();
    let reps: Vec<Vector> = (0..dq).map(|i| quotient.section(&basis_vector(dq, i))).collect();
    let smash_mul = |u: &[Rational], v: &[Rational]| -> Vector {
        let mut out = vec![Rational::zero(); n * dw];
        for (i, a) in nonzeros(u) {
            let (x, wi) = (i / dw, i % dw);
            for (j, b) in nonzeros(v) {
                let (y, wj) = (j / dw, j % dw);
                let yv = basis_vector(n, y);
                let wj_v = basis_vector(dw, wj);
                for (k, c) in nonzeros(w.coproduct_of_basis(wi)) {
                    let (p, q) = (k / dw, k % dw);
                    let first = e.mul(&basis_vector(n, x), &ops[p].mul_vec(&yv));
                    let second = w.algebra().mul(&basis_vector(dw, q), &wj_v);
                    let coef = &(a * b) * c;
                    for (idx, t) in nonzeros(&outer(&first, &second)) {
                        out[idx] += &coef * t;
                    }
                }
            }
        }
        out
    };
    let table: Vec<Vec<Vector>> = (0..dq)
        .map(|i| (0..dq).map(|j| quotient.project(&smash_mul(&reps[i], &reps[j]))).collect())
        .collect();
    let unit = quotient.project(&outer(one_e, w.unit()));
    let algebra = FinDimAlgebra::from_fn(dq, |i, j| table[i][j].clone(), unit);
    let section = Matrix::from_columns(&reps, n * dw);
    let canonical = phi_full.mul(&section);
    let rank = phi_full.rank();
    SmashProduct {
        algebra,
        quotient,
        phi_full,
        canonical,
        rank,
    }
}

/// Verdicts of the W-Galois test and, when it holds, of its consequences.
#[derive(Clone, Debug)]
pub struct WGaloisReport {
    pub report: Report,
    pub galois: bool,
    pub smash: SmashProduct,
    /// `{l▷1 : l ∈ W^L}` inside `E`.
    pub intermediate_field: Option<Subspace>,
    /// `u ∈ L` with `τ(l▷1) = ε_W(ul)`.
    pub u: Option<Vector>,
}

pub fn w_galois_check(action: &ModuleAlgebraAction, antipode: Option<&Matrix>, a: &UniversalWha) -> WGaloisReport {
    let e = &action.algebra;
    let w = &action.wba;
    let (n, dw) = (e.dim(), w.dim());
    let mut r = Report::new("W-Galois extension");
    r.absorb("action", action.check());
    let smash = smash_product(action);
    let kills = smash
        .quotient
        .relations()
        .basis_vectors()
        .iter()
        .all(|v| smash.phi_full.mul_vec(v).iter().all(Rational::is_zero));
    r.record("Φ defined on E⊗_L W", if kills { Ok(()) } else { Err("Φ does not kill the relations".into()) });
    let galois = kills && smash.is_bijective();
    r.record(
        "Φ: E⊗_L W → End(E) bijective",
        if galois {
            Ok(())
        } else {
            Err(format!(
                "rank {}, dim E⊗_L W = {}, dim End(E) = {}",
                smash.rank,
                smash.quotient.dim(),
                n * n
            ))
        },
    );
    if !galois {
        return WGaloisReport {
            report: r,
            galois,
            smash,
            intermediate_field: None,
            u: None,
        };
    }

    let end_e = FinDimAlgebra::matrix_algebra(n);
    r.absorb("E⋊W", smash.algebra.check());
    r.absorb("Φ algebra map", AlgebraMap::new(smash.canonical.clone()).check(&smash.algebra, &end_e));

    let subs = w.canonical_subalgebras();
    let one_e = e.unit();
    let phi = Matrix::from_columns(
        &(0..dw).map(|b| action.basis_operator(b).into_entries()).collect::<Vec<_>>(),
        n * n,
    );
    let lam_e = Subspace::span(n * n, (0..n).map(|k| a.lambda(&basis_vector(n, k))));
    let phi_l = subs.left.map(&phi);
    r.record(
        "φ(L) ⊆ E",
        if phi_l.is_subspace_of(&lam_e).unwrap_or(false) { Ok(()) } else { Err("φ(L) ⊄ λ(E)".into()) },
    );
    let field = Subspace::span(n, subs.left.basis_vectors().iter().map(|l| action.act(l, one_e)));
    r.record(
        "φ(L) is an intermediate field",
        if e.is_unital_subalgebra(&field) { Ok(()) } else { Err("not a subalgebra".into()) },
    );
    r.record(
        "W^L = W^R",
        if subs.left == subs.right { Ok(()) } else { Err("left and right subalgebras differ".into()) },
    );
    if let Some(s) = antipode {
        let bad = subs.left.basis_vectors().iter().position(|l| s.mul_vec(l) != *l);
        r.record("S = id on L", bad.map_or(Ok(()), |i| Err(format!("L basis vector {i}"))));
    }

    let aw = &a.wha.wba;
    let d1a = aw.delta_one();
    let d1w = apply_kron(&phi, &phi, &w.delta_one());
    let sub = aw.mul2(&d1w, &d1a) == d1a && aw.mul2(&d1a, &d1w) == d1a;
    r.record(
        "(φ⊗φ)(Δ_W(1))Δ_A(1) = Δ_A(1) = Δ_A(1)(φ⊗φ)(Δ_W(1))",
        if sub { Ok(()) } else { Err("Δ_A(1) is not a subprojection".into()) },
    );
    r.absorb("φ weak left", check_weak_left_morphism(&phi, w, aw));
    r.absorb("φ weak right", check_weak_right_morphism(&phi, w, aw));
    let cocomm = (0..dw).find(|&b| flip_vec(w.coproduct_of_basis(b), dw, dw) != *w.coproduct_of_basis(b));
    r.record("W cocommutative", cocomm.map_or(Ok(()), |b| Err(format!("basis element {b}"))));
    let inv = action.invariants();
    r.record(
        "E^W = Q·1",
        if inv.dim() == 1 && inv.contains(one_e) { Ok(()) } else { Err(format!("invariants have dimension {}", inv.dim())) },
    );

    // τ(l▷1) = ε_W(ul) for l ∈ L, solved for u in the basis of L
    let lb = subs.left.basis_vectors();
    let tf = a.field.trace_form();
    let m = Matrix::from_fn(lb.len(), lb.len(), |i, j| w.counit(&w.algebra().mul(&lb[j], &lb[i])));
    let rhs: Vector = lb.iter().map(|l| tf.trace(&action.act(l, one_e))).collect();
    let u = m.solve(&rhs).map(|c| subs.left.vector(&c));
    match u.as_ref().and_then(|u| w.algebra().invert(u).ok().map(|ui| (u, ui))) {
        Some((_, ui)) => {
            let bad = (0..dw).find(|&b| {
                let shifted = w.algebra().mul(&ui, &basis_vector(dw, b));
                w.epsilon()[b] != aw.counit(&phi.mul_vec(&shifted))
            });
            r.record("ε_W(w) = ε_A(φ(u⁻¹w))", bad.map_or(Ok(()), |b| Err(format!("basis element {b}"))));
        }
        None => r.record("ε_W(w) = ε_A(φ(u⁻¹w))", Err("no invertible u ∈ L".into())),
    }

    WGaloisReport {
        report: r,
        galois,
        smash,
        intermediate_field: Some(field),
        u,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::NumberField;
    use crate::linear::qi;
    use crate::wba::WeakHopfAlgebra;

    #[test]
    fn universal_action_is_galois() {
        let a = UniversalWha::from_poly("x^4-2").unwrap();
        let g = w_galois_check(&a.natural_action(), Some(&a.wha.antipode), &a);
        assert!(g.galois);
        assert!(g.report.passed(), "{}", g.report);
        assert_eq!(g.smash.rank, 16);
        assert_eq!(g.intermediate_field.unwrap().dim(), 4);
        assert_eq!(g.u.unwrap(), a.wha.wba.unit().clone());
    }

    #[test]
    fn trivial_action_is_not_galois() {
        let e2 = NumberField::parse("x^2-2").unwrap();
        let a = crate::field::UniversalWha::new(e2.clone());
        let h = WeakHopfAlgebra::cyclic_group(2);
        let mut act = Matrix::zeros(2, 4);
        for wi in 0..2 {
            for m in 0..2 {
                act[(m, wi * 2 + m)] = qi(1);
            }
        }
        let action = ModuleAlgebraAction::new(h.wba.clone(), e2.algebra().clone(), act).unwrap();
        let g = w_galois_check(&action, Some(&h.antipode), &a);
        assert!(!g.galois);
        assert!(g.smash.rank < 4);
        assert_eq!(action.invariants().dim(), 2);
    }

    #[test]
    fn smash_over_rationals_is_the_acting_algebra() {
        let q = NumberField::parse("x-1").unwrap();
        let h = WeakHopfAlgebra::cyclic_group(2);
        let action = ModuleAlgebraAction::new(h.wba.clone(), q.algebra().clone(), Matrix::from_i64(&[&[1, 1]])).unwrap();
        let s = smash_product(&action);
        assert_eq!(s.algebra, *h.wba.algebra());
        assert_eq!(s.canonical, Matrix::from_i64(&[&[1, 1]]));
    }
}
