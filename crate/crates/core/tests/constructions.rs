use qgw::bialgebroid::{beta_l, check_equivalent, galois_bialgebroid, Extension};
use qgw::field::smash::w_galois_check;
use qgw::field::UniversalWha;
use qgw::linear::tensor::{basis_vector, outer};
use qgw::linear::{qi, Matrix, Subspace};
use qgw::morphism::{check_strict_morphism, check_weak_left_morphism, universal_morphism, ModuleAlgebraAction};
use qgw::wba::WeakHopfAlgebra;

fn sign_operator(a: &UniversalWha) -> Matrix {
    let n = a.degree();
    Matrix::from_fn(n, n, |i, j| if i == j { qi(if i % 2 == 0 { 1 } else { -1 }) } else { qi(0) })
}

#[test]
fn coproduct_on_commutative_left_subalgebra() {
    let a = UniversalWha::from_poly("x^2-2").unwrap();
    let w = &a.wha.wba;
    let d1 = w.delta_one();
    let one = w.unit().clone();
    let left = w.canonical_subalgebras().left;
    assert_eq!(left.dim(), 2);
    // L is commutative here, so both placements agree
    for l in left.basis_vectors() {
        assert_eq!(w.coproduct(&l), w.mul2(&outer(&l, &one), &d1));
        assert_eq!(w.coproduct(&l), w.mul2(&outer(&one, &l), &d1));
    }
}

#[test]
fn conjugation_by_an_automorphism_is_weak_left() {
    let a = UniversalWha::from_poly("x^4-2").unwrap();
    let w = &a.wha.wba;
    let g = a.from_operator(&sign_operator(&a));
    assert!(w.is_left_grouplike(&g));
    let (ad, r) = w.ad_grouplike(&g).unwrap();
    assert!(r.passed(), "{r}");
    assert!(check_weak_left_morphism(&ad, w, w).passed());
    assert_eq!(ad.mul(&ad), Matrix::identity(16));
}

#[test]
fn sign_action_of_z2_on_quadratic_field() {
    let a = UniversalWha::from_poly("x^2-2").unwrap();
    let h = WeakHopfAlgebra::cyclic_group(2);
    let sign = sign_operator(&a);
    let mut act = Matrix::zeros(2, 4);
    for m in 0..2 {
        act[(m, m)] = qi(1);
        act[(m, 2 + m)] = sign[(m, m)].clone();
    }
    let action = ModuleAlgebraAction::new(h.wba.clone(), a.field.algebra().clone(), act).unwrap();
    assert!(action.check().passed());
    assert_eq!(action.invariants(), Subspace::span(2, [basis_vector(2, 0)]));

    let u = universal_morphism(&action, &a).unwrap();
    assert!(u.report.passed(), "{}", u.report);
    assert_eq!(u.map.col(1), a.from_operator(&sign));
    assert!(!check_strict_morphism(&u.map, &h.wba, &a.wha.wba).passed());

    let g = w_galois_check(&action, Some(&h.antipode), &a);
    assert!(g.galois, "{}", g.report);
    assert!(g.report.passed(), "{}", g.report);
}

#[test]
fn galois_bialgebroid_matches_underlying_bialgebroid() {
    for poly in ["x^2-2", "x^2+1", "x^3-2"] {
        let a = UniversalWha::from_poly(poly).unwrap();
        let e = a.field.algebra().clone();
        let n = e.dim();
        let g = galois_bialgebroid(&Extension {
            inner: Subspace::span(n, [e.unit().clone()]),
            outer: e,
        })
        .unwrap();
        assert_eq!(g.canonical_rank, g.hom_dim, "{poly}");
        let r = check_equivalent(&g.bialgebroid, &beta_l(&a.wha.wba));
        assert!(r.passed(), "{poly}: {r}");
    }
}

#[test]
fn top_extension_is_trivial() {
    let a = UniversalWha::from_poly("x^3-2").unwrap();
    let e = a.field.algebra().clone();
    let g = galois_bialgebroid(&Extension {
        inner: Subspace::full(3),
        outer: e,
    })
    .unwrap();
    assert_eq!(g.bialgebroid.total.dim(), 3);
    assert!(g.bialgebroid.check().passed());
}

/// `B⊗B^op` for `B = M₂` with `Δ(a⊗b) = Σ (a⊗e_i)⊗(e^i⊗b)`, `ε(a⊗b) = ψ(ab)`,
/// `ψ = 2·tr`, whose left subalgebra is a copy of `M₂`.
fn enveloping_wba() -> qgw::wba::WeakBialgebra {
    use qgw::algebra::FinDimAlgebra;
    use qgw::linear::q;
    let b = FinDimAlgebra::matrix_algebra(2);
    let alg = FinDimAlgebra::tensor(&b, &b.opposite());
    // e = Σ E_kl ⊗ E_lk / 2
    let sep: Vec<(usize, usize)> = (0..2).flat_map(|k| (0..2).map(move |l| (k * 2 + l, l * 2 + k))).collect();
    let coproducts: Vec<_> = (0..16)
        .map(|x| {
            let (p, r) = (x / 4, x % 4);
            let mut v = vec![qi(0); 256];
            for &(ei, ej) in &sep {
                let first = outer(&basis_vector(4, p), &basis_vector(4, ei));
                let second = outer(&basis_vector(4, ej), &basis_vector(4, r));
                for (k, c) in outer(&first, &second).iter().enumerate() {
                    if !c.is_zero() {
                        v[k] += &(c * &q(1, 2));
                    }
                }
            }
            v
        })
        .collect();
    let epsilon = (0..16)
        .map(|x| {
            let prod = b.mul(&basis_vector(4, x / 4), &basis_vector(4, x % 4));
            &(&prod[0] + &prod[3]) * &qi(2)
        })
        .collect();
    qgw::wba::WeakBialgebra::from_coproducts(alg, &coproducts, epsilon).unwrap()
}

#[test]
fn coproduct_on_noncommutative_left_subalgebra() {
    let w = enveloping_wba();
    let r = w.check();
    assert!(r.passed(), "{r}");
    let left = w.canonical_subalgebras().left;
    assert_eq!(left.dim(), 4);
    let one = w.unit().clone();
    let d1 = w.delta_one();
    let mut left_leg = true;
    let mut right_leg = true;
    for l in left.basis_vectors() {
        left_leg &= w.coproduct(&l) == w.mul2(&outer(&l, &one), &d1);
        right_leg &= w.coproduct(&l) == w.mul2(&outer(&one, &l), &d1);
    }
    assert!(left_leg);
    assert!(!right_leg);
    assert!(qgw::bialgebroid::beta_l(&w).check().passed());
}
