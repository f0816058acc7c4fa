//! Left bialgebroids over finite-dimensional bases, the passage from weak
//! bialgebras to bialgebroids and back, and the Galois bialgebroid of a
//! finite-dimensional extension.

use crate::algebra::{check_multiplicative, AlgebraMap, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::linear::tensor::{apply_on_leg, basis_vector, dot, is_zero_vec, nonzeros, outer, sub_vec};
use crate::linear::{Matrix, QuotientSpace, Rational, Subspace, Vector};
use crate::report::Report;
use crate::wba::WeakBialgebra;

/// Largest `dim A³` for which the triple quotient is reduced by elimination
/// when no separability idempotent is available.
const GENERIC_TRIPLE_LIMIT: usize = 4096;

/// Solves for `e ∈ R⊗R` with `Σ e_i e^i = 1` and `r·e = e·r`.
pub fn separability_idempotent(r: &FinDimAlgebra) -> Option<Vector> {
    let d = r.dim();
    let id = Matrix::identity(d);
    let mut blocks = vec![r.mult_matrix()];
    for k in 0..d {
        let rk = basis_vector(d, k);
        blocks.push(r.left_mult(&rk).kron(&id).sub(&id.kron(&r.right_mult(&rk))));
    }
    let m = Matrix::vstack(&blocks);
    let mut rhs = r.unit().clone();
    rhs.resize(m.rows(), Rational::zero());
    m.solve(&rhs)
}

/// `A ⊗_R A`: the quotient of `A⊗A` by `t(r)a⊗a' − a⊗s(r)a'`.
#[derive(Clone, Debug)]
pub struct BaseTensorSquare {
    dim_a: usize,
    quotient: QuotientSpace,
    /// `P(a⊗a') = Σ t(e_i)a ⊗ s(e^i)a'`, an idempotent with kernel equal to
    /// the relations, available when the base is separable.
    projector: Option<Matrix>,
    /// Relations of the triple quotient, used only without a projector.
    triple_relations: Option<Subspace>,
}

impl BaseTensorSquare {
    pub fn new(a: &FinDimAlgebra, r: &FinDimAlgebra, s: &Matrix, t: &Matrix) -> Self {
        let da = a.dim();
        let lam = |m: &Matrix, k: usize| a.left_mult(&m.col(k));
        if let Some(e) = separability_idempotent(r) {
            let dr = r.dim();
            let mut p = Matrix::zeros(da * da, da * da);
            for (k, c) in nonzeros(&e) {
                p = p.add(&lam(t, k / dr).kron(&lam(s, k % dr)).scale(c));
            }
            let id = Matrix::identity(da * da);
            let relations = id.sub(&p).image();
            return BaseTensorSquare {
                dim_a: da,
                quotient: QuotientSpace::new(relations),
                projector: Some(p),
                triple_relations: None,
            };
        }
        let mut gens = Vec::new();
        for k in 0..r.dim() {
            let tl = lam(t, k);
            let sl = lam(s, k);
            for i in 0..da {
                for j in 0..da {
                    let x = outer(&tl.col(i), &basis_vector(da, j));
                    let y = outer(&basis_vector(da, i), &sl.col(j));
                    gens.push(sub_vec(&x, &y));
                }
            }
        }
        let relations = Subspace::span(da * da, gens);
        let triple_relations = (da * da * da <= GENERIC_TRIPLE_LIMIT).then(|| {
            let mut g = Vec::new();
            for v in relations.basis_vectors() {
                for k in 0..da {
                    g.push(outer(&v, &basis_vector(da, k)));
                    g.push(outer(&basis_vector(da, k), &v));
                }
            }
            Subspace::span(da * da * da, g)
        });
        BaseTensorSquare {
            dim_a: da,
            quotient: QuotientSpace::new(relations),
            projector: None,
            triple_relations,
        }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn relations(&self) -> &Subspace {
        self.quotient.relations()
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    pub fn projector(&self) -> Option<&Matrix> {
        self.projector.as_ref()
    }

    /// Quotient coordinates of a representative.
    pub fn project(&self, v: &[Rational]) -> Vector {
        self.quotient.project(v)
    }

    pub fn section(&self, coords: &[Rational]) -> Vector {
        self.quotient.section(coords)
    }

    pub fn is_relation(&self, v: &[Rational]) -> bool {
        match &self.projector {
            Some(p) => is_zero_vec(&p.mul_vec(v)),
            None => self.quotient.relations().contains(v),
        }
    }

    pub fn same_class(&self, x: &[Rational], y: &[Rational]) -> bool {
        self.is_relation(&sub_vec(x, y))
    }

    /// Whether `x − y ∈ Rel⊗A + A⊗Rel` in `A^{⊗3}`; `None` when the triple
    /// quotient is out of reach.
    pub fn same_class3(&self, x: &[Rational], y: &[Rational]) -> Option<bool> {
        let d = self.dim_a;
        let diff = sub_vec(x, y);
        match (&self.projector, &self.triple_relations) {
            (Some(p), _) => {
                // the two leg projectors commute, so the kernel of their
                // product is the sum of their kernels
                let v = apply_on_leg(&diff, &[d, d * d], 1, p);
                let v = apply_on_leg(&v, &[d * d, d], 0, p);
                Some(is_zero_vec(&v))
            }
            (None, Some(rel3)) => Some(rel3.contains(&diff)),
            (None, None) => None,
        }
    }
}

/// `⟨A, R, s, t, γ, π⟩` with `γ` held by representatives in `A⊗A`.
#[derive(Clone, Debug)]
pub struct LeftBialgebroid {
    pub total: FinDimAlgebra,
    pub base: FinDimAlgebra,
    /// `dim A × dim R`.
    pub s: Matrix,
    /// `dim A × dim R`, anti-multiplicative.
    pub t: Matrix,
    /// `dim A² × dim A`; column `a` is a representative of `γ(e_a)`.
    pub gamma_rep: Matrix,
    /// `dim R × dim A`.
    pub pi: Matrix,
    square: BaseTensorSquare,
}

impl LeftBialgebroid {
    pub fn new(
        total: FinDimAlgebra,
        base: FinDimAlgebra,
        s: Matrix,
        t: Matrix,
        gamma_rep: Matrix,
        pi: Matrix,
    ) -> Result<Self> {
        let (da, dr) = (total.dim(), base.dim());
        let shapes = [
            ("s", s.shape(), (da, dr)),
            ("t", t.shape(), (da, dr)),
            ("gamma_representative", gamma_rep.shape(), (da * da, da)),
            ("pi", pi.shape(), (dr, da)),
        ];
        for (name, got, want) in shapes {
            if got != want {
                return Err(Error::DimensionMismatch(format!("{name} is {got:?}, expected {want:?}")));
            }
        }
        let square = BaseTensorSquare::new(&total, &base, &s, &t);
        Ok(LeftBialgebroid {
            total,
            base,
            s,
            t,
            gamma_rep,
            pi,
            square,
        })
    }

    pub fn square(&self) -> &BaseTensorSquare {
        &self.square
    }

    /// `γ` as a matrix into quotient coordinates.
    pub fn gamma(&self) -> Matrix {
        self.square.quotient().project_matrix(&self.gamma_rep)
    }

    pub fn gamma_of(&self, a: &[Rational]) -> Vector {
        self.gamma_rep.mul_vec(a)
    }

    fn mul2(&self, x: &[Rational], y: &[Rational]) -> Vector {
        crate::algebra::tensor_mul(&[&self.total, &self.total], x, y)
    }

    /// Every clause of the left bialgebroid definition.
    pub fn check(&self) -> Report {
        let a = &self.total;
        let r = &self.base;
        let (da, dr) = (a.dim(), r.dim());
        let sq = &self.square;
        let mut rep = Report::new(format!("left bialgebroid axioms (dim A {da}, dim R {dr})"));
        let ea = |i: usize| basis_vector(da, i);
        let s_cols = self.s.columns();
        let t_cols = self.t.columns();
        let one_a = a.unit();

        rep.absorb("s", AlgebraMap::new(self.s.clone()).check(r, a));
        let mut t_rep = Report::new("t");
        t_rep.record("anti-multiplicative", check_multiplicative(&self.t, r, a, true));
        t_rep.record(
            "unital",
            if self.t.mul_vec(r.unit()) == *one_a { Ok(()) } else { Err("t(1) ≠ 1".into()) },
        );
        rep.absorb("t", t_rep);

        let commute = (0..dr)
            .flat_map(|i| (0..dr).map(move |j| (i, j)))
            .find(|&(i, j)| a.mul(&s_cols[i], &t_cols[j]) != a.mul(&t_cols[j], &s_cols[i]));
        rep.record(
            "s(r) and t(r') commute",
            commute.map_or(Ok(()), |(i, j)| Err(format!("base pair ({i}, {j})"))),
        );

        // π(s(r)a) = rπ(a), π(t(r)a) = π(a)r
        let mut pi_bimod = Ok(());
        'pi: for k in 0..dr {
            let rk = basis_vector(dr, k);
            for i in 0..da {
                let pa = self.pi.col(i);
                let left = self.pi.mul_vec(&a.mul(&s_cols[k], &ea(i)));
                let right = self.pi.mul_vec(&a.mul(&t_cols[k], &ea(i)));
                if left != r.mul(&rk, &pa) || right != r.mul(&pa, &rk) {
                    pi_bimod = Err(format!("base element {k}, total element {i}"));
                    break 'pi;
                }
            }
        }
        rep.record("π bimodule map", pi_bimod);

        // γ(s(r)a) = (s(r)⊗1)γ(a), γ(t(r)a) = (1⊗t(r))γ(a)
        let mut gamma_bimod = Ok(());
        'g: for k in 0..dr {
            let sl = outer(&s_cols[k], one_a);
            let tr = outer(one_a, &t_cols[k]);
            for i in 0..da {
                let g = self.gamma_rep.col(i);
                let ok_s = sq.same_class(&self.gamma_of(&a.mul(&s_cols[k], &ea(i))), &self.mul2(&sl, &g));
                let ok_t = sq.same_class(&self.gamma_of(&a.mul(&t_cols[k], &ea(i))), &self.mul2(&tr, &g));
                if !(ok_s && ok_t) {
                    gamma_bimod = Err(format!("base element {k}, total element {i}"));
                    break 'g;
                }
            }
        }
        rep.record("γ bimodule map", gamma_bimod);

        let mut takeuchi = Ok(());
        'tk: for i in 0..da {
            let g = self.gamma_rep.col(i);
            for k in 0..dr {
                let x = self.mul2(&g, &outer(&t_cols[k], one_a));
                let y = self.mul2(&g, &outer(one_a, &s_cols[k]));
                if !sq.same_class(&x, &y) {
                    takeuchi = Err(format!("total element {i}, base element {k}"));
                    break 'tk;
                }
            }
        }
        let takeuchi_ok = takeuchi.is_ok();
        rep.record("Takeuchi condition γ(a)(t(r)⊗1) = γ(a)(1⊗s(r))", takeuchi);

        let mut mult = Ok(());
        if !takeuchi_ok {
            mult = Err("product on A⊗_R A not well defined".to_string());
        } else {
            let gammas = self.gamma_rep.columns();
            'm: for i in 0..da {
                for j in 0..da {
                    let lhs = self.gamma_of(&a.mult_table()[i][j]);
                    if !sq.same_class(&lhs, &self.mul2(&gammas[i], &gammas[j])) {
                        mult = Err(format!("basis pair ({i}, {j})"));
                        break 'm;
                    }
                }
            }
        }
        rep.record("γ multiplicative", mult);
        rep.record(
            "γ(1) = 1⊗1",
            if sq.same_class(&self.gamma_of(one_a), &outer(one_a, one_a)) {
                Ok(())
            } else {
                Err("γ(1) ≠ 1⊗1".into())
            },
        );

        let mut coassoc = Ok(());
        for i in 0..da {
            let g = self.gamma_rep.col(i);
            let lhs = apply_on_leg(&g, &[da, da], 0, &self.gamma_rep);
            let rhs = apply_on_leg(&g, &[da, da], 1, &self.gamma_rep);
            match sq.same_class3(&lhs, &rhs) {
                Some(true) => {}
                Some(false) => {
                    coassoc = Err(format!("total element {i}"));
                    break;
                }
                None => {
                    coassoc = Err("triple quotient too large without a separable base".into());
                    break;
                }
            }
        }
        rep.record("γ coassociative", coassoc);

        // s(π(a₁))a₂ = a = t(π(a₂))a₁
        let mut left_counit = Ok(());
        let mut right_counit = Ok(());
        for i in 0..da {
            let mut l = vec![Rational::zero(); da];
            let mut rr = vec![Rational::zero(); da];
            for (k, c) in nonzeros(&self.gamma_rep.col(i)) {
                let (p, q) = (k / da, k % da);
                let sp = self.s.mul_vec(&self.pi.col(p));
                let tq = self.t.mul_vec(&self.pi.col(q));
                for (acc, x) in l.iter_mut().zip(a.mul(&sp, &ea(q))) {
                    *acc += c * &x;
                }
                for (acc, x) in rr.iter_mut().zip(a.mul(&tq, &ea(p))) {
                    *acc += c * &x;
                }
            }
            if left_counit.is_ok() && l != ea(i) {
                left_counit = Err(format!("total element {i}"));
            }
            if right_counit.is_ok() && rr != ea(i) {
                right_counit = Err(format!("total element {i}"));
            }
        }
        rep.record("left counit law", left_counit);
        rep.record("right counit law", right_counit);

        let mut pi_s = Ok(());
        let mut pi_t = Ok(());
        for i in 0..da {
            for j in 0..da {
                let pab = self.pi.mul_vec(&a.mult_table()[i][j]);
                let pb = self.pi.col(j);
                if pi_s.is_ok() && self.pi.mul_vec(&a.mul(&ea(i), &self.s.mul_vec(&pb))) != pab {
                    pi_s = Err(format!("basis pair ({i}, {j})"));
                }
                if pi_t.is_ok() && self.pi.mul_vec(&a.mul(&ea(i), &self.t.mul_vec(&pb))) != pab {
                    pi_t = Err(format!("basis pair ({i}, {j})"));
                }
            }
        }
        rep.record("π(a s(π(b))) = π(ab)", pi_s);
        rep.record("π(a t(π(b))) = π(ab)", pi_t);
        rep.record(
            "π(1) = 1",
            if self.pi.mul_vec(one_a) == *r.unit() { Ok(()) } else { Err("π(1) ≠ 1".into()) },
        );
        rep
    }

    /// The same data with `s` and `t` exchanged.
    pub fn swap_source_target(&self) -> Result<Self> {
        Self::new(
            self.total.clone(),
            self.base.clone(),
            self.t.clone(),
            self.s.clone(),
            self.gamma_rep.clone(),
            self.pi.clone(),
        )
    }
}

/// A right bialgebroid, held as the left bialgebroid of the
/// opposite-coopposite weak bialgebra.
#[derive(Clone, Debug)]
pub struct RightBialgebroid {
    pub left: LeftBialgebroid,
}

impl RightBialgebroid {
    pub fn check(&self) -> Report {
        let mut r = self.left.check();
        r.subject = format!("right bialgebroid axioms (via opposite-coopposite), {}", r.subject);
        r
    }
}

/// `β_l(W) = ⟨W, L, s^L, t^L, γ^L, Π^L⟩`, with the base in the canonical
/// basis of `L`.
pub fn beta_l(w: &WeakBialgebra) -> LeftBialgebroid {
    let subs = w.canonical_subalgebras();
    let (base, incl) = w
        .algebra()
        .subalgebra(&subs.left)
        .expect("the left subalgebra is a unital subalgebra");
    let t = subs.t_l.mul(&incl);
    let pivots = subs.left.pivots();
    let pi = Matrix::from_fn(pivots.len(), w.dim(), |c, j| subs.pi_l[(pivots[c], j)].clone());
    LeftBialgebroid::new(w.algebra().clone(), base, incl, t, w.delta().clone(), pi)
        .expect("shapes agree by construction")
}

pub fn beta_r(w: &WeakBialgebra) -> RightBialgebroid {
    RightBialgebroid {
        left: beta_l(&w.opposite_coopposite()),
    }
}

/// A nondegenerate index-one functional `ψ` on `R` with its quasibasis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityStructure {
    pub base: FinDimAlgebra,
    pub psi: Vector,
    /// `e = Σ e_i ⊗ e^i` in `R⊗R`.
    pub e: Vector,
}

pub fn separability_from_functional(r: &FinDimAlgebra, psi: &[Rational]) -> Result<SeparabilityStructure> {
    let d = r.dim();
    if psi.len() != d {
        return Err(Error::DimensionMismatch("functional length differs from base dimension".into()));
    }
    let gram = Matrix::from_fn(d, d, |i, j| dot(psi, &r.mult_table()[i][j]));
    let g_inv = gram.inverse().ok_or(Error::DegenerateFunctional)?;
    let mut e = vec![Rational::zero(); d * d];
    for i in 0..d {
        for j in 0..d {
            e[i * d + j] = g_inv[(i, j)].clone();
        }
    }
    let m = r.mult_matrix().mul_vec(&e);
    if m != *r.unit() {
        let shown: Vec<String> = m.iter().map(ToString::to_string).collect();
        return Err(Error::IndexNotOne(format!("({})", shown.join(", "))));
    }
    for k in 0..d {
        let rk = basis_vector(d, k);
        let lhs = apply_on_leg(&e, &[d, d], 0, &r.left_mult(&rk));
        let rhs = apply_on_leg(&e, &[d, d], 1, &r.right_mult(&rk));
        if lhs != rhs {
            return Err(Error::InvalidInput(format!("quasibasis is not central (base element {k})")));
        }
    }
    Ok(SeparabilityStructure {
        base: r.clone(),
        psi: psi.to_vec(),
        e,
    })
}

/// The splitting map `σ(b⊗b') = Σ t(e_i)b ⊗ s(e^i)b'` as a matrix on `A⊗A`.
pub fn splitting_map(b: &LeftBialgebroid, sep: &SeparabilityStructure) -> Matrix {
    let (da, dr) = (b.total.dim(), b.base.dim());
    let mut p = Matrix::zeros(da * da, da * da);
    for (k, c) in nonzeros(&sep.e) {
        let tl = b.total.left_mult(&b.t.col(k / dr));
        let sl = b.total.left_mult(&b.s.col(k % dr));
        p = p.add(&tl.kron(&sl).scale(c));
    }
    p
}

/// `Δ = σ∘γ`, `ε = ψ∘π`.
pub fn lift_to_wba(b: &LeftBialgebroid, sep: &SeparabilityStructure) -> Result<WeakBialgebra> {
    if sep.base != b.base {
        return Err(Error::InvalidInput("separability structure is on a different base".into()));
    }
    let sigma = splitting_map(b, sep);
    let delta = sigma.mul(&b.gamma_rep);
    let epsilon = b.pi.vec_mul(&sep.psi);
    WeakBialgebra::new(b.total.clone(), delta, epsilon)
}

/// `τ∘σ = id` on the quotient and `σ∘τ` is left multiplication by `Δ(1)`.
pub fn check_splitting(b: &LeftBialgebroid, sep: &SeparabilityStructure) -> Report {
    let mut rep = Report::new("splitting map");
    let sigma = splitting_map(b, sep);
    let sq = b.square();
    let tau_sigma = (0..sq.dim()).find(|&q| {
        let c = basis_vector(sq.dim(), q);
        sq.project(&sigma.mul_vec(&sq.section(&c))) != c
    });
    rep.record("τ∘σ = id", tau_sigma.map_or(Ok(()), |q| Err(format!("quotient basis element {q}"))));
    let da = b.total.dim();
    let one = b.total.unit();
    let d1 = sigma.mul_vec(&outer(one, one));
    let alg = [&b.total, &b.total];
    let sigma_tau = (0..da * da).find(|&k| {
        let v = basis_vector(da * da, k);
        sigma.mul_vec(&v) != crate::algebra::tensor_mul(&alg, &d1, &v)
    });
    rep.record(
        "σ∘τ = Δ(1)·",
        sigma_tau.map_or(Ok(()), |k| Err(format!("tensor basis element {k}"))),
    );
    rep.record(
        "σ kills relations",
        if sq.relations().basis_vectors().iter().all(|v| is_zero_vec(&sigma.mul_vec(v))) {
            Ok(())
        } else {
            Err("σ is not defined on the quotient".into())
        },
    );
    rep
}

/// `ε|_L` of a weak bialgebra as a separability structure on the base of
/// `β_l(W)`.
pub fn counit_separability(w: &WeakBialgebra, b: &LeftBialgebroid) -> Result<SeparabilityStructure> {
    let psi = b.s.transpose().mul_vec(w.epsilon());
    separability_from_functional(&b.base, &psi)
}

/// A unital subalgebra `N` of a finite-dimensional algebra `M`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub outer: FinDimAlgebra,
    pub inner: Subspace,
}

/// Intermediate objects of the Galois bialgebroid construction.
#[derive(Clone, Debug)]
pub struct GaloisBialgebroid {
    pub bialgebroid: LeftBialgebroid,
    /// `dim M² × dim A`: the operators on `M` spanning `A`.
    pub operators: Matrix,
    /// `dim M × dim R`.
    pub base_inclusion: Matrix,
    pub canonical_rank: usize,
    pub hom_dim: usize,
}

/// `A = End_{N-N}(M)` over `R = C_M(N)` with `γ` solved through the
/// canonical map `A⊗_R A → Hom_{N-N}(M⊗_N M, M)`.
pub fn galois_bialgebroid(ext: &Extension) -> Result<GaloisBialgebroid> {
    let m = &ext.outer;
    let dm = m.dim();
    if ext.inner.ambient_dim() != dm {
        return Err(Error::DimensionMismatch("inner subspace ambient dimension".into()));
    }
    if !m.is_unital_subalgebra(&ext.inner) {
        return Err(Error::InvalidInput("inner algebra is not a unital subalgebra".into()));
    }
    let id = Matrix::identity(dm);
    let n_basis = ext.inner.basis_vectors();

    // a X = X a for X = λ(n), ρ(n), with a flattened row-major
    let mut blocks = Vec::new();
    for n in &n_basis {
        for x in [m.left_mult(n), m.right_mult(n)] {
            blocks.push(id.kron(&x.transpose()).sub(&x.kron(&id)));
        }
    }
    let a_space = if blocks.is_empty() { Subspace::full(dm * dm) } else { Matrix::vstack(&blocks).kernel() };
    let end_m = FinDimAlgebra::matrix_algebra(dm);
    let (a_alg, a_incl) = end_m.subalgebra(&a_space)?;
    let da = a_alg.dim();
    let coords_a = |op: &Matrix| -> Vector {
        a_space.coords(op.entries()).expect("operator lies in End_{N-N}(M)")
    };
    let op_of = |k: usize| -> Matrix {
        let v = a_incl.col(k);
        Matrix::from_rows_with_cols(v.chunks(dm).map(<[Rational]>::to_vec).collect(), dm)
    };
    let ops: Vec<Matrix> = (0..da).map(op_of).collect();

    let r_space = m.commutant(&ext.inner)?;
    let (r_alg, r_incl) = m.subalgebra(&r_space)?;
    let dr = r_alg.dim();
    let s_cols: Vec<Vector> = (0..dr).map(|k| coords_a(&m.left_mult(&r_incl.col(k)))).collect();
    let t_cols: Vec<Vector> = (0..dr).map(|k| coords_a(&m.right_mult(&r_incl.col(k)))).collect();
    let s = Matrix::from_columns(&s_cols, da);
    let t = Matrix::from_columns(&t_cols, da);
    let pi_cols: Vec<Vector> = ops
        .iter()
        .map(|op| r_space.coords(&op.mul_vec(m.unit())).expect("a(1) commutes with N"))
        .collect();
    let pi = Matrix::from_columns(&pi_cols, dr);

    // Can(a⊗a') = m∘(a⊗a'), flattened as a dim M × dim M² matrix
    let mult = m.mult_matrix();
    let mut can_cols = Vec::with_capacity(da * da);
    for a in &ops {
        for b in &ops {
            can_cols.push(mult.mul(&a.kron(b)).into_entries());
        }
    }
    let can = Matrix::from_columns(&can_cols, dm * dm * dm);
    let square = BaseTensorSquare::new(&a_alg, &r_alg, &s, &t);
    let rank = can.rank();
    let hom_dim = balanced_hom_dim(m, &n_basis);
    if rank != square.dim() || rank != hom_dim {
        return Err(Error::NotLiftable {
            rank,
            quotient_dim: square.dim(),
            hom_dim,
        });
    }
    let mut gamma_cols = Vec::with_capacity(da);
    for a in &ops {
        let target = a.mul(&mult).into_entries();
        let x = can.solve(&target).ok_or(Error::NotLiftable {
            rank,
            quotient_dim: square.dim(),
            hom_dim,
        })?;
        gamma_cols.push(x);
    }
    let gamma_rep = Matrix::from_columns(&gamma_cols, da * da);
    let bialgebroid = LeftBialgebroid::new(a_alg, r_alg, s, t, gamma_rep, pi)?;
    Ok(GaloisBialgebroid {
        bialgebroid,
        operators: a_incl,
        base_inclusion: r_incl,
        canonical_rank: rank,
        hom_dim,
    })
}

/// `dim Hom_{N-N}(M⊗_N M, M)`, as maps `h: M⊗M → M` that are `N`-linear on
/// both outer sides and `N`-balanced in the middle.
fn balanced_hom_dim(m: &FinDimAlgebra, n_basis: &[Vector]) -> usize {
    let dm = m.dim();
    let id = Matrix::identity(dm);
    let mut blocks = Vec::new();
    // h is a dm × dm² matrix, flattened row-major; vec(X h) = kron(X, I) vec(h),
    // vec(h Y) = kron(I, Yᵀ) vec(h)
    let id2 = Matrix::identity(dm * dm);
    for n in n_basis {
        let ln = m.left_mult(n);
        let rn = m.right_mult(n);
        blocks.push(ln.kron(&id2).sub(&id.kron(&ln.kron(&id).transpose())));
        blocks.push(rn.kron(&id2).sub(&id.kron(&id.kron(&rn).transpose())));
        let mid = rn.kron(&id).sub(&id.kron(&ln));
        blocks.push(id.kron(&mid.transpose()));
    }
    if blocks.is_empty() {
        return dm * dm * dm;
    }
    Matrix::vstack(&blocks).kernel().dim()
}

/// `ω` with `s₂∘ω = s₁`, when it exists.
pub fn align_bases(b1: &LeftBialgebroid, b2: &LeftBialgebroid) -> Option<Matrix> {
    if b1.total.dim() != b2.total.dim() {
        return None;
    }
    let cols: Option<Vec<Vector>> = b1.s.columns().iter().map(|c| b2.s.solve(c)).collect();
    let cols = cols?;
    Some(Matrix::from_columns(&cols, b2.base.dim()))
}

/// Same total algebra and, after the base alignment `ω`, the same source,
/// target, counit, relations and coproduct classes.
pub fn check_equivalent(b1: &LeftBialgebroid, b2: &LeftBialgebroid) -> Report {
    let mut rep = Report::new("bialgebroid comparison");
    let flag = |ok: bool, why: &str| if ok { Ok(()) } else { Err(why.to_string()) };
    rep.record("same total algebra", flag(b1.total == b2.total, "structure constants differ"));
    let Some(omega) = align_bases(b1, b2) else {
        rep.record("base alignment", Err("s₁ does not factor through s₂".into()));
        return rep;
    };
    let iso = omega.is_square() && omega.inverse().is_some();
    rep.record("base alignment is invertible", flag(iso, "ω is not invertible"));
    rep.absorb("ω", AlgebraMap::new(omega.clone()).check(&b1.base, &b2.base));
    rep.record("t₂∘ω = t₁", flag(b2.t.mul(&omega) == b1.t, "targets differ"));
    rep.record("π₂ = ω∘π₁", flag(b2.pi == omega.mul(&b1.pi), "counits differ"));
    rep.record(
        "same relation subspace",
        flag(b1.square().relations() == b2.square().relations(), "relations differ"),
    );
    let gamma = (0..b1.total.dim())
        .find(|&i| !b2.square().same_class(&b1.gamma_rep.col(i), &b2.gamma_rep.col(i)));
    rep.record("same coproduct", gamma.map_or(Ok(()), |i| Err(format!("total element {i}"))));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{q, qi};
    use crate::wba::WeakHopfAlgebra;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn separability_examples() {
        let qq = FinDimAlgebra::poly_quotient(&"x-1".parse().unwrap()).unwrap();
        let s = separability_from_functional(&qq, &v(&[1])).unwrap();
        assert_eq!(s.e, v(&[1]));
        let e2 = FinDimAlgebra::poly_quotient(&"x^2-2".parse().unwrap()).unwrap();
        let s = separability_from_functional(&e2, &v(&[2, 0])).unwrap();
        assert_eq!(s.e, vec![q(1, 2), qi(0), qi(0), q(1, 4)]);
        let q2 = FinDimAlgebra::from_fn(
            2,
            |i, j| if i == j { basis_vector(2, i) } else { v(&[0, 0]) },
            v(&[1, 1]),
        );
        let s = separability_from_functional(&q2, &v(&[1, 1])).unwrap();
        assert_eq!(s.e, v(&[1, 0, 0, 1]));
        assert!(matches!(
            separability_from_functional(&q2, &v(&[1, 0])),
            Err(Error::DegenerateFunctional)
        ));
        assert!(matches!(
            separability_from_functional(&q2, &v(&[2, 2])),
            Err(Error::IndexNotOne(_))
        ));
    }

    #[test]
    fn group_algebra_round_trip() {
        let h = WeakHopfAlgebra::cyclic_group(2);
        let b = beta_l(&h.wba);
        assert_eq!(b.base.dim(), 1);
        let r = b.check();
        assert!(r.passed(), "{r}");
        let sep = counit_separability(&h.wba, &b).unwrap();
        assert!(check_splitting(&b, &sep).passed());
        assert_eq!(lift_to_wba(&b, &sep).unwrap(), h.wba);
        assert!(beta_r(&h.wba).check().passed());
    }

    #[test]
    fn trivial_extension() {
        let qq = FinDimAlgebra::poly_quotient(&"x-1".parse().unwrap()).unwrap();
        let ext = Extension {
            inner: Subspace::full(1),
            outer: qq,
        };
        let g = galois_bialgebroid(&ext).unwrap();
        assert_eq!(g.bialgebroid.total.dim(), 1);
        assert_eq!(g.bialgebroid.base.dim(), 1);
        assert!(g.bialgebroid.check().passed());
    }

    #[test]
    fn diagonals_in_two_by_two_matrices() {
        let m2 = FinDimAlgebra::matrix_algebra(2);
        let diag = Subspace::span(4, vec![v(&[1, 0, 0, 0]), v(&[0, 0, 0, 1])]);
        let g = galois_bialgebroid(&Extension { outer: m2, inner: diag }).unwrap();
        assert_eq!(g.bialgebroid.total.dim(), 4);
        assert_eq!(g.bialgebroid.base.dim(), 2);
        assert_eq!(g.canonical_rank, 8);
        assert_eq!(g.hom_dim, 8);
        let r = g.bialgebroid.check();
        assert!(r.passed(), "{r}");
    }
}
