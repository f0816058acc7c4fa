//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All comparisons are exact.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use qgw::bialgebroid::{beta_l, check_equivalent, counit_separability, galois_bialgebroid, lift_to_wba, Extension};
use qgw::cli::{run, UniversalTables};
use qgw::field::galois::{check_galois_connection, fix, gal, is_delta_closed, SubWhaDatum, SubfieldDatum};
use qgw::field::gp::gp_example;
use qgw::field::properties::verify_structural_properties;
use qgw::field::smash::smash_product;
use qgw::field::UniversalWha;
use qgw::io::read_doc;
use qgw::linear::tensor::{add_vec, basis_vector, outer, sub_vec};
use qgw::linear::{q, qi, Matrix, Rational, Subspace, Vector};
use qgw::morphism::{
    blow_up_hopf, check_strict_morphism, check_weak_left_morphism, check_weak_right_morphism, diagonal_embedding,
    universal_morphism,
};
use qgw::wba::{WeakBialgebra, WeakHopfAlgebra};

type Outcome = Result<String, String>;

fn ensure(ok: bool, why: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

const POLYS: [&str; 4] = ["x^2-2", "x^2+1", "x^3-2", "x^4-2"];

/// `c_kl` of `Σ c_kl x^k⊗x^l` from the printed tables.
fn printed_delta_one() -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    m[(0, 0)] = q(1, 4);
    m[(1, 3)] = q(1, 8);
    m[(2, 2)] = q(1, 8);
    m[(3, 1)] = q(1, 8);
    m
}

fn printed_delta_x() -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    m[(1, 0)] = q(1, 4);
    m[(0, 1)] = q(1, 4);
    m[(3, 2)] = q(1, 8);
    m[(2, 3)] = q(1, 8);
    m
}

fn gp_coefficients() -> Outcome {
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("tables.json");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = ["qgw", "galois", "build", "--poly", "x^4-2", "--emit", path.to_str().unwrap()];
    let code = run(argv, &mut out, &mut err);
    ensure(code == 0, format!("exit code {code}: {}", String::from_utf8_lossy(&err)))?;
    let t: UniversalTables = read_doc(&path).map_err(|e| e.to_string())?;
    ensure(t.delta_one == printed_delta_one(), format!("Δ(1) = {}", t.delta_one_text))?;
    ensure(t.delta_x == printed_delta_x(), format!("Δ(x) = {}", t.delta_x_text))?;
    let elapsed = within(start, Duration::from_secs(1))?;
    Ok(format!("Δ(1) = {}; {elapsed:?}", t.delta_one_text))
}

fn gp_generator_table() -> Outcome {
    let start = Instant::now();
    let gp = gp_example();
    let w = &gp.a.wha.wba;
    let s = &gp.a.wha.antipode;
    let (c, sn, x) = (gp.c(), gp.s(), gp.x());
    // c = diag(1,0,-1,0), s = diag(0,-1,0,1) on (1, x, x², x³)
    let diag = |d: [i64; 4]| {
        let mut v = vec![Rational::zero(); 16];
        for (k, &e) in d.iter().enumerate() {
            v[k * 4 + k] = qi(e);
        }
        v
    };
    ensure(c == diag([1, 0, -1, 0]), "c is not diag(1,0,-1,0)")?;
    ensure(sn == diag([0, -1, 0, 1]), "s is not diag(0,-1,0,1)")?;
    ensure(w.counit(&c) == qi(4), format!("ε(c) = {}", w.counit(&c)))?;
    ensure(w.counit(&sn).is_zero(), "ε(s) ≠ 0")?;
    ensure(w.counit(&x).is_zero(), "ε(x) ≠ 0")?;
    ensure(s.mul_vec(&c) == c, "S(c) ≠ c")?;
    let neg: Vector = sn.iter().map(|t| -t).collect();
    ensure(s.mul_vec(&sn) == neg, "S(s) ≠ −s")?;
    ensure(s.mul_vec(&x) == x, "S(x) ≠ x")?;
    let d1 = w.delta_one();
    let cc_ss = sub_vec(&outer(&c, &c), &outer(&sn, &sn));
    let cs_sc = add_vec(&outer(&c, &sn), &outer(&sn, &c));
    ensure(w.coproduct(&c) == w.mul2(&d1, &cc_ss), "Δ(c) ≠ Δ(1)(c⊗c − s⊗s)")?;
    ensure(w.coproduct(&sn) == w.mul2(&d1, &cs_sc), "Δ(s) ≠ Δ(1)(c⊗s + s⊗c)")?;
    let elapsed = within(start, Duration::from_secs(1))?;
    Ok(format!("{elapsed:?}"))
}

fn fixtures() -> Vec<(String, WeakHopfAlgebra)> {
    let mut v: Vec<(String, WeakHopfAlgebra)> = POLYS
        .iter()
        .map(|p| (format!("End(Q[x]/({p}))"), UniversalWha::from_poly(p).unwrap().wha))
        .collect();
    let z2 = WeakHopfAlgebra::cyclic_group(2);
    for n in 1..=3 {
        v.push((format!("blow-up of Q[Z/2], n = {n}"), blow_up_hopf(&z2, n)));
    }
    v.push(("Q[Z/2]".into(), z2));
    v
}

fn axiom_suite() -> Outcome {
    let start = Instant::now();
    let mut clauses = 0;
    for (name, h) in fixtures() {
        let r = h.wba.check();
        let s = h.wba.check_antipode(&h.antipode);
        for rep in [&r, &s] {
            if let Some(f) = rep.failures().next() {
                return Err(format!("{name}: {} ({:?})", f.name, f.witness));
            }
            clauses += rep.clauses.len();
        }
    }
    let elapsed = within(start, Duration::from_secs(10))?;
    Ok(format!("8 objects, {clauses} clauses; {elapsed:?}"))
}

fn grouplike_counts() -> Outcome {
    let expected = [2usize, 2, 1, 2];
    let galois = [true, true, false, false];
    let mut got = Vec::new();
    for ((p, &want), &is_galois) in POLYS.iter().zip(&expected).zip(&galois) {
        let a = UniversalWha::from_poly(p).unwrap();
        let s = verify_structural_properties(&a).map_err(|e| format!("{p}: {e}"))?;
        if let Some(c) = s.report.failures().next() {
            return Err(format!("{p}: {}", c.name));
        }
        let n = a.degree();
        let k = s.grouplike_count;
        ensure(k == want, format!("{p}: {k} grouplikes, expected {want}"))?;
        ensure(n % k == 0, format!("{p}: {k} ∤ {n}"))?;
        ensure((k == n) == is_galois, format!("{p}: equality with n is wrong"))?;
        got.push(k);
    }
    Ok(format!("{got:?}"))
}

fn round_trip() -> Outcome {
    for (name, h) in fixtures() {
        let w = &h.wba;
        let b = beta_l(w);
        let sep = counit_separability(w, &b).map_err(|e| format!("{name}: {e}"))?;
        let back = lift_to_wba(&b, &sep).map_err(|e| format!("{name}: {e}"))?;
        ensure(back.delta() == w.delta(), format!("{name}: Δ differs"))?;
        ensure(back.epsilon() == w.epsilon(), format!("{name}: ε differs"))?;
        ensure(back.algebra() == w.algebra(), format!("{name}: algebra differs"))?;
    }
    Ok("8 objects".into())
}

fn morphism_verdicts() -> Outcome {
    let h = WeakHopfAlgebra::cyclic_group(2);
    let b = blow_up_hopf(&h, 2);
    let f = diagonal_embedding(2, 2);
    ensure(check_weak_left_morphism(&f, &h.wba, &b.wba).passed(), "diagonal: weak left fails")?;
    ensure(check_weak_right_morphism(&f, &h.wba, &b.wba).passed(), "diagonal: weak right fails")?;
    ensure(!check_strict_morphism(&f, &h.wba, &b.wba).passed(), "diagonal: unexpectedly strict")?;
    let gp = gp_example();
    let w = &gp.a.wha.wba;
    ensure(check_weak_left_morphism(&gp.embedding, &gp.h.wba, w).passed(), "GP: weak left fails")?;
    ensure(!check_strict_morphism(&gp.embedding, &gp.h.wba, w).passed(), "GP: unexpectedly strict")?;
    Ok("diagonal weak left+right, not strict; GP weak left, not strict".into())
}

fn galois_connection() -> Outcome {
    let a = UniversalWha::from_poly("x^4-2").unwrap();
    let fields: Vec<SubfieldDatum> = [vec![], vec![basis_vector(4, 2)], vec![basis_vector(4, 1)]]
        .iter()
        .map(|g| SubfieldDatum::generated(&a, g))
        .collect();
    let dims: Vec<usize> = fields.iter().map(SubfieldDatum::dim).collect();
    ensure(dims == [1, 2, 4], format!("subfield dimensions {dims:?}"))?;
    let gals: Vec<SubWhaDatum> = fields.iter().map(|f| gal(&a, f)).collect();
    for (f, g) in fields.iter().zip(&gals) {
        ensure(is_delta_closed(&a, &g.space), format!("Gal of dim-{} field not Δ-closed", f.dim()))?;
        ensure(fix(&a, g) == *f, format!("Fix(Gal(F)) ≠ F for dim {}", f.dim()))?;
    }
    let r = check_galois_connection(&a, &fields, &gals);
    if let Some(c) = r.failures().next() {
        return Err(format!("{}: {:?}", c.name, c.witness));
    }
    let gd: Vec<usize> = gals.iter().map(SubWhaDatum::dim).collect();
    Ok(format!("Gal dimensions {gd:?}"))
}

fn smash_products() -> Outcome {
    let a = UniversalWha::from_poly("x^4-2").unwrap();
    let sa = smash_product(&a.natural_action());
    ensure(sa.rank == 16 && sa.is_bijective(), format!("E⋊A: rank {}", sa.rank))?;
    let gp = gp_example();
    let sh = smash_product(&gp.action);
    ensure(sh.rank == 16 && sh.is_bijective(), format!("E⋊H: rank {}", sh.rank))?;

    let alg = gp.a.algebra();
    let (c, s, x) = (gp.c(), gp.s(), gp.x());
    let one = alg.unit().clone();
    let zero = vec![Rational::zero(); 16];
    let m = |p: &Vector, r: &Vector| alg.mul(p, r);
    let two: Vector = one.iter().map(|t| t * &qi(2)).collect();
    ensure(add_vec(&m(&c, &c), &m(&s, &s)) == one, "c² + s² ≠ 1")?;
    ensure(m(&c, &s) == zero && m(&s, &c) == zero, "cs or sc ≠ 0")?;
    ensure(m(&c, &x) == m(&x, &s), "cx ≠ xs")?;
    ensure(add_vec(&m(&s, &x), &m(&x, &c)) == zero, "sx ≠ −xc")?;
    ensure(alg.pow(&x, 4) == two, "x⁴ ≠ 2")?;
    Ok("ranks 16, 16; relations hold".into())
}

fn integrals() -> Outcome {
    let a = UniversalWha::from_poly("x^4-2").unwrap();
    let w = &a.wha.wba;
    let li = w.left_integrals();
    // a(E) ⊆ Q·1: every column of the operator has zero x^k part for k ≥ 1
    let mut rows = Vec::new();
    for k in 1..4 {
        for l in 0..4 {
            rows.push(basis_vector(16, k * 4 + l));
        }
    }
    let rank_one = Matrix::from_rows(rows).kernel();
    ensure(rank_one.dim() == 4, "operator space with image in Q·1 is not 4-dimensional")?;
    ensure(li == rank_one, format!("left integrals have dimension {}", li.dim()))?;
    let tau = &a.field.trace_form().tau;
    let mut haar = vec![Rational::zero(); 16];
    for m in 0..4 {
        haar[m] = &tau[m] * &q(1, 4);
    }
    let r = w.haar_check(&haar, Some(&a.wha.antipode));
    if let Some(c) = r.failures().next() {
        return Err(format!("τ/4: {}", c.name));
    }
    Ok("dim 4; τ/4 is a Haar integral".into())
}

fn universality() -> Outcome {
    let gp = gp_example();
    let u = universal_morphism(&gp.action, &gp.a).map_err(|e| e.to_string())?;
    ensure(u.map == gp.embedding, "extracted map differs from the embedding")?;
    // α_A(f(h)⊗z) recomputed from operator coordinates
    for h in 0..4 {
        for z in 0..4 {
            let zv = basis_vector(4, z);
            let lhs = gp.a.apply(&u.map.col(h), &zv);
            let rhs = gp.action.act(&basis_vector(4, h), &zv);
            ensure(lhs == rhs, format!("α_A(f(e_{h})⊗x^{z}) ≠ e_{h}▷x^{z}"))?;
        }
    }
    ensure(u.report.passed(), format!("{}", u.report))?;
    let inv = gp.action.invariants();
    ensure(inv == Subspace::span(4, [basis_vector(4, 0)]), format!("invariants of dimension {}", inv.dim()))?;
    Ok("f recovered; E^H = Q·1".into())
}

fn cross_construction() -> Outcome {
    let a = UniversalWha::from_poly("x^2-2").unwrap();
    let e = a.field.algebra().clone();
    let inner = Subspace::span(2, [e.unit().clone()]);
    let g = galois_bialgebroid(&Extension { outer: e, inner }).map_err(|err| err.to_string())?;
    let b = beta_l(&a.wha.wba);
    let r = check_equivalent(&g.bialgebroid, &b);
    if let Some(c) = r.failures().next() {
        return Err(format!("{}: {:?}", c.name, c.witness));
    }
    Ok(format!("canonical rank {} = {}", g.canonical_rank, g.hom_dim))
}

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: 200,
        failure_persistence: None,
        ..Config::default()
    })
}

fn fail(e: impl std::fmt::Display) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

fn deformation_round_trips() -> Result<(), String> {
    let objects: Vec<WeakBialgebra> = vec![
        UniversalWha::from_poly("x^2-2").unwrap().wha.wba,
        UniversalWha::from_poly("x^3-2").unwrap().wha.wba,
        blow_up_hopf(&WeakHopfAlgebra::cyclic_group(2), 2).wba,
        blow_up_hopf(&WeakHopfAlgebra::cyclic_group(2), 3).wba,
    ];
    let lefts: Vec<Vec<Vector>> = objects.iter().map(|w| w.canonical_subalgebras().left.basis_vectors()).collect();
    let coeffs = prop::collection::vec((-6i64..=6, 1i64..=4), 3);
    runner()
        .run(&(0..objects.len(), coeffs), |(i, cs)| {
            let w = &objects[i];
            let mut u = vec![Rational::zero(); w.dim()];
            for (l, &(p, d)) in lefts[i].iter().zip(&cs) {
                for (k, t) in l.iter().enumerate() {
                    u[k] += &(t * &q(p, d));
                }
            }
            let Ok(ui) = w.algebra().invert(&u) else {
                return Err(TestCaseError::reject("u not invertible"));
            };
            let d = w.deform(&u).map_err(fail)?;
            let back = d.wba.deform(&ui).map_err(fail)?;
            prop_assert_eq!(&back.wba, w);
            Ok(())
        })
        .map_err(|e| format!("deformation: {e}"))
}

fn random_subspace(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=n)
        .prop_map(move |rows| Subspace::span(n, rows.into_iter().map(|r| r.into_iter().map(qi).collect())))
}

fn subspace_and_adjointness_probes() -> Result<(), String> {
    runner()
        .run(&(random_subspace(5), random_subspace(5)), |(u, v)| {
            let s = u.sum(&v).map_err(fail)?;
            let i = u.intersection(&v).map_err(fail)?;
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
            prop_assert!(u.is_subspace_of(&s).map_err(fail)?);
            prop_assert!(i.is_subspace_of(&v).map_err(fail)?);
            Ok(())
        })
        .map_err(|e| format!("subspace lattice: {e}"))?;

    let a = UniversalWha::from_poly("x^4-2").unwrap();
    let pool: Vec<Vector> = {
        let sigma = {
            // x ↦ −x
            let mut m = Matrix::zeros(4, 4);
            for k in 0..4 {
                m[(k, k)] = qi(if k % 2 == 0 { 1 } else { -1 });
            }
            a.from_operator(&m)
        };
        vec![sigma, a.lambda_power(1), a.lambda_power(2), basis_vector(16, 0), basis_vector(16, 5)]
    };
    let subfield_gens = prop::collection::vec((0usize..4, -2i64..=2), 0..3);
    let wha_gens = prop::sample::subsequence((0..pool.len()).collect::<Vec<_>>(), 0..=2);
    let grid = prop::collection::vec((subfield_gens, wha_gens), 1..=2);
    let mut cases = TestRunner::new(Config {
        cases: 200,
        failure_persistence: None,
        ..Config::default()
    });
    cases
        .run(&grid, |probes| {
            for (fg, wg) in probes {
                let gen: Vector = {
                    let mut z = vec![Rational::zero(); 4];
                    for (k, c) in fg {
                        z[k] += &qi(c);
                    }
                    z
                };
                let f = SubfieldDatum::generated(&a, &[gen]);
                let gens: Vec<Vector> = wg.iter().map(|&k| pool[k].clone()).collect();
                let w = SubWhaDatum::closure(&a, &gens);
                let g = gal(&a, &f);
                let fx = fix(&a, &w);
                let lhs = w.space.is_subspace_of(&g.space).map_err(fail)?;
                let rhs = f.space.is_subspace_of(&fx.space).map_err(fail)?;
                prop_assert_eq!(lhs, rhs);
                prop_assert_eq!(&fix(&a, &g), &f);
                prop_assert!(w.space.is_subspace_of(&gal(&a, &fx).space).map_err(fail)?);
            }
            Ok(())
        })
        .map_err(|e| format!("adjointness: {e}"))
}

fn small_matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, r * c)
        .prop_map(move |v| Matrix::from_fn(r, c, |i, j| qi(v[i * c + j])))
}

fn kron_kernel_laws() -> Result<(), String> {
    runner()
        .run(
            &(small_matrix(2, 3), small_matrix(3, 2), small_matrix(2, 2), small_matrix(2, 3)),
            |(a, c, b, d)| {
                // (A⊗B)(C⊗D) = AC⊗BD
                prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
                prop_assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
                let k = a.kernel();
                prop_assert_eq!(k.dim() + a.rank(), a.cols());
                for v in k.basis_vectors() {
                    prop_assert!(a.mul_vec(&v).iter().all(Rational::is_zero));
                }
                prop_assert_eq!(a.kron(&b).transpose(), a.transpose().kron(&b.transpose()));
                Ok(())
            },
        )
        .map_err(|e| format!("kron/kernel: {e}"))
}

fn property_based() -> Outcome {
    deformation_round_trips()?;
    subspace_and_adjointness_probes()?;
    kron_kernel_laws()?;
    Ok("200 deformations, 200 subspace + 200 adjointness probes, 200 kron/kernel cases".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("GP coefficients", gp_coefficients),
        ("GP generator table", gp_generator_table),
        ("axiom suite", axiom_suite),
        ("grouplike counts", grouplike_counts),
        ("bialgebroid round trip", round_trip),
        ("morphism verdicts", morphism_verdicts),
        ("Galois connection", galois_connection),
        ("smash products", smash_products),
        ("integrals", integrals),
        ("universality", universality),
        ("cross-construction", cross_construction),
        ("property-based", property_based),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
