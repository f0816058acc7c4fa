//! Finite-dimensional unital associative algebras by structure constants.

use crate::error::{Error, Result};
use crate::linear::tensor::{basis_vector, join_index, nonzeros, outer, split_index, sub_vec};
use crate::linear::{Matrix, Rational, Subspace, Vector};
use crate::poly::Polynomial;
use crate::report::Report;

/// An algebra over Q with basis `e_0..e_{n-1}`; `mult[i][j]` holds the
/// coordinates of `e_i·e_j`. Elements are plain coordinate vectors.
#[derive(Clone, Debug)]
pub struct FinDimAlgebra {
    dim: usize,
    mult: Vec<Vec<Vector>>,
    unit: Vector,
    basis_names: Option<Vec<String>>,
    // nonzero terms of e_i·e_j at index i*dim + j
    sparse: Vec<Vec<(usize, Rational)>>,
}

impl PartialEq for FinDimAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.mult == other.mult && self.unit == other.unit
    }
}

impl Eq for FinDimAlgebra {}

impl FinDimAlgebra {
    pub fn new(mult: Vec<Vec<Vector>>, unit: Vector) -> Result<Self> {
        let dim = unit.len();
        if mult.len() != dim
            || mult
                .iter()
                .any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim))
        {
            return Err(Error::DimensionMismatch(format!(
                "multiplication table is not {dim}×{dim} of length-{dim} vectors"
            )));
        }
        let sparse = mult
            .iter()
            .flat_map(|row| {
                row.iter()
                    .map(|v| nonzeros(v).map(|(k, c)| (k, c.clone())).collect())
            })
            .collect();
        Ok(FinDimAlgebra {
            dim,
            mult,
            unit,
            basis_names: None,
            sparse,
        })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector, unit: Vector) -> Self {
        let mult = (0..dim).map(|i| (0..dim).map(|j| f(i, j)).collect()).collect();
        Self::new(mult, unit).expect("constructed table has consistent shape")
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.basis_names = Some(names);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn mult_table(&self) -> &[Vec<Vector>] {
        &self.mult
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        basis_vector(self.dim, i)
    }

    pub fn zero(&self) -> Vector {
        vec![Rational::zero(); self.dim]
    }

    /// Nonzero terms of `e_i·e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.sparse[i * self.dim + j]
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = self.zero();
        for (i, a) in nonzeros(x) {
            for (j, b) in nonzeros(y) {
                let ab = a * b;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[Rational], k: u32) -> Vector {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(&cols, self.dim)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(&cols, self.dim)
    }

    /// The multiplication `m: A⊗A → A` as a `dim × dim²` matrix.
    pub fn mult_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    m[(*k, i * self.dim + j)] = c.clone();
                }
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Associativity and unit laws on all basis triples.
    pub fn check(&self) -> Report {
        let mut report = Report::new(format!("algebra axioms (dim {})", self.dim));
        let n = self.dim;
        let mut assoc = Ok(());
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let lhs = self.mul(ij, &self.basis_vector(k));
                    let rhs = self.mul(&self.basis_vector(i), &self.mult[j][k]);
                    if lhs != rhs {
                        assoc = Err(format!("basis triple ({i}, {j}, {k})"));
                        break 'outer;
                    }
                }
            }
        }
        report.record("associativity", assoc);
        let mut left = Ok(());
        let mut right = Ok(());
        for i in 0..n {
            let e = self.basis_vector(i);
            if left.is_ok() && self.mul(&self.unit, &e) != e {
                left = Err(format!("basis element {i}"));
            }
            if right.is_ok() && self.mul(&e, &self.unit) != e {
                right = Err(format!("basis element {i}"));
            }
        }
        report.record("left unit law", left);
        report.record("right unit law", right);
        report
    }

    /// `K[x]/(p)` with basis `1, x, …, x^{n-1}`.
    pub fn poly_quotient(p: &Polynomial) -> Result<Self> {
        if !p.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = p.degree().unwrap();
        if n == 0 {
            return Err(Error::InvalidInput("polynomial must have degree ≥ 1".into()));
        }
        // powers[k] = x^k reduced mod p, k < 2n - 1
        let mut powers: Vec<Vector> = (0..n).map(|k| basis_vector(n, k)).collect();
        while powers.len() < 2 * n - 1 {
            let prev = powers.last().unwrap();
            let mut next = vec![Rational::zero(); n];
            for k in 0..n - 1 {
                next[k + 1] = prev[k].clone();
            }
            let top = &prev[n - 1];
            if !top.is_zero() {
                for k in 0..n {
                    next[k] -= top * &p.coeffs()[k];
                }
            }
            powers.push(next);
        }
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            })
            .collect();
        Ok(Self::from_fn(n, |i, j| powers[i + j].clone(), basis_vector(n, 0)).with_basis_names(names))
    }

    /// `M_n(Q)` with matrix units `E_kl` at index `k·n + l`.
    pub fn matrix_algebra(n: usize) -> Self {
        assert!(n >= 1);
        let d = n * n;
        let mut unit = vec![Rational::zero(); d];
        for k in 0..n {
            unit[k * n + k] = Rational::one();
        }
        let names = (0..d).map(|i| format!("E{}{}", i / n + 1, i % n + 1)).collect();
        Self::from_fn(
            d,
            |i, j| {
                let (k, l) = (i / n, i % n);
                let (p, q) = (j / n, j % n);
                if l == p {
                    basis_vector(d, k * n + q)
                } else {
                    vec![Rational::zero(); d]
                }
            },
            unit,
        )
        .with_basis_names(names)
    }

    /// `Q[Z/n]` with basis `g^0..g^{n-1}`.
    pub fn group_algebra_cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        Self::from_fn(n, |i, j| basis_vector(n, (i + j) % n), basis_vector(n, 0)).with_basis_names(names)
    }

    /// `A ⊗ B` with legwise multiplication; `e_i ⊗ f_j` at index `i·dim B + j`.
    pub fn tensor(a: &Self, b: &Self) -> Self {
        let names = match (&a.basis_names, &b.basis_names) {
            (Some(x), Some(y)) => Some(
                x.iter()
                    .flat_map(|u| y.iter().map(move |v| format!("{u}⊗{v}")))
                    .collect(),
            ),
            _ => None,
        };
        let m = b.dim;
        let alg = Self::from_fn(
            a.dim * m,
            |i, j| outer(&a.mult[i / m][j / m], &b.mult[i % m][j % m]),
            outer(&a.unit, &b.unit),
        );
        match names {
            Some(n) => alg.with_basis_names(n),
            None => alg,
        }
    }

    /// Same space with `m^op = m∘Σ`.
    pub fn opposite(&self) -> Self {
        let mut out = Self::from_fn(self.dim, |i, j| self.mult[j][i].clone(), self.unit.clone());
        out.basis_names = self.basis_names.clone();
        out
    }

    /// `{a : a·s = s·a for all s ∈ S}`.
    pub fn commutant(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "subspace of Q^{} in an algebra of dimension {}",
                s.ambient_dim(),
                self.dim
            )));
        }
        let blocks: Vec<Matrix> = s
            .basis_vectors()
            .iter()
            .map(|v| self.right_mult(v).sub(&self.left_mult(v)))
            .collect();
        if blocks.is_empty() {
            return Ok(Subspace::full(self.dim));
        }
        Ok(Matrix::vstack(&blocks).kernel())
    }

    /// Two-sided inverse, if any.
    pub fn invert(&self, v: &[Rational]) -> Result<Vector> {
        let inv = self.left_mult(v).inverse().ok_or(Error::NotInvertible)?;
        let w = inv.mul_vec(&self.unit);
        if self.mul(v, &w) != self.unit || self.mul(&w, v) != self.unit {
            return Err(Error::NotInvertible);
        }
        Ok(w)
    }

    /// Whether `s` contains 1 and is closed under multiplication.
    pub fn is_unital_subalgebra(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        s.contains(&self.unit)
            && basis
                .iter()
                .all(|x| basis.iter().all(|y| s.contains(&self.mul(x, y))))
    }

    /// The subalgebra spanned by `s` as an algebra in its own right, in the
    /// canonical basis of `s`, together with its inclusion matrix.
    pub fn subalgebra(&self, s: &Subspace) -> Result<(FinDimAlgebra, Matrix)> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch("subalgebra ambient dimension".into()));
        }
        let basis = s.basis_vectors();
        let unit = s
            .coords(&self.unit)
            .ok_or_else(|| Error::InvalidInput("subspace does not contain the unit".into()))?;
        let mut mult = Vec::with_capacity(basis.len());
        for x in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for y in &basis {
                row.push(s.coords(&self.mul(x, y)).ok_or_else(|| {
                    Error::InvalidInput("subspace is not closed under multiplication".into())
                })?);
            }
            mult.push(row);
        }
        Ok((FinDimAlgebra::new(mult, unit)?, s.inclusion()))
    }

    /// Smallest unital subalgebra containing the given elements.
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Subspace {
        let mut s = Subspace::span(self.dim, std::iter::once(self.unit.clone()).chain(gens.iter().cloned()));
        loop {
            let basis = s.basis_vectors();
            let mut products = Vec::new();
            for x in &basis {
                for y in &basis {
                    products.push(self.mul(x, y));
                }
            }
            let next = Subspace::span(self.dim, basis.into_iter().chain(products));
            if next.dim() == s.dim() {
                return s;
            }
            s = next;
        }
    }
}

/// Product in `A_1 ⊗ … ⊗ A_k` computed legwise.
pub fn tensor_mul(algs: &[&FinDimAlgebra], x: &[Rational], y: &[Rational]) -> Vector {
    let dims: Vec<usize> = algs.iter().map(|a| a.dim()).collect();
    let total: usize = dims.iter().product();
    assert_eq!(x.len(), total);
    assert_eq!(y.len(), total);
    let mut out = vec![Rational::zero(); total];
    let ys: Vec<(Vec<usize>, &Rational)> = nonzeros(y).map(|(j, c)| (split_index(j, &dims), c)).collect();
    let mut parts = vec![0; dims.len()];
    for (i, a) in nonzeros(x) {
        let xi = split_index(i, &dims);
        for (yj, b) in &ys {
            let coef = a * *b;
            let legs: Vec<&[(usize, Rational)]> = (0..dims.len())
                .map(|l| algs[l].basis_product(xi[l], yj[l]))
                .collect();
            if legs.iter().any(|l| l.is_empty()) {
                continue;
            }
            accumulate_legs(&legs, 0, &coef, &mut parts, &dims, &mut out);
        }
    }
    out
}

fn accumulate_legs(
    legs: &[&[(usize, Rational)]],
    depth: usize,
    coef: &Rational,
    parts: &mut Vec<usize>,
    dims: &[usize],
    out: &mut [Rational],
) {
    if depth == legs.len() {
        out[join_index(parts, dims)] += coef;
        return;
    }
    for (k, c) in legs[depth] {
        parts[depth] = *k;
        accumulate_legs(legs, depth + 1, &(coef * c), parts, dims, out);
    }
}

/// A linear map between algebras, held as a `codomain.dim × domain.dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    pub matrix: Matrix,
}

impl AlgebraMap {
    pub fn new(matrix: Matrix) -> Self {
        AlgebraMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        AlgebraMap::new(Matrix::identity(n))
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &AlgebraMap) -> AlgebraMap {
        AlgebraMap::new(self.matrix.mul(&first.matrix))
    }

    /// Multiplicativity and unitality against the given tables.
    pub fn check(&self, dom: &FinDimAlgebra, cod: &FinDimAlgebra) -> Report {
        let mut r = Report::new("algebra map");
        if self.matrix.shape() != (cod.dim(), dom.dim()) {
            r.record(
                "shape",
                Err(format!(
                    "matrix is {:?}, expected {:?}",
                    self.matrix.shape(),
                    (cod.dim(), dom.dim())
                )),
            );
            return r;
        }
        r.record("multiplicative", check_multiplicative(&self.matrix, dom, cod, false));
        let unital = if self.apply(dom.unit()) == *cod.unit() {
            Ok(())
        } else {
            Err("f(1) ≠ 1".to_string())
        };
        r.record("unital", unital);
        r
    }
}

/// `f(e_i e_j) = f(e_i) f(e_j)` (or `f(e_j) f(e_i)` when `anti`) on all pairs.
pub fn check_multiplicative(
    f: &Matrix,
    dom: &FinDimAlgebra,
    cod: &FinDimAlgebra,
    anti: bool,
) -> std::result::Result<(), String> {
    let images = f.columns();
    for i in 0..dom.dim() {
        for j in 0..dom.dim() {
            let lhs = f.mul_vec(&dom.mult_table()[i][j]);
            let rhs = if anti {
                cod.mul(&images[j], &images[i])
            } else {
                cod.mul(&images[i], &images[j])
            };
            if !crate::linear::tensor::is_zero_vec(&sub_vec(&lhs, &rhs)) {
                return Err(format!("basis pair ({i}, {j})"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{q, qi};

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn constructors_pass_axioms() {
        assert!(FinDimAlgebra::matrix_algebra(2).check().passed());
        assert!(FinDimAlgebra::matrix_algebra(3).check().passed());
        assert!(FinDimAlgebra::group_algebra_cyclic(5).check().passed());
        let p: Polynomial = "x^2-2".parse().unwrap();
        assert!(FinDimAlgebra::poly_quotient(&p).unwrap().check().passed());
        let t = FinDimAlgebra::tensor(
            &FinDimAlgebra::group_algebra_cyclic(2),
            &FinDimAlgebra::matrix_algebra(2),
        );
        assert_eq!(t.dim(), 8);
        assert!(t.check().passed());
    }

    #[test]
    fn broken_unit_is_reported() {
        // e0·e0 = e1, e1·anything = 0, unit = e0
        let a = FinDimAlgebra::from_fn(
            2,
            |i, j| if i == 0 && j == 0 { v(&[0, 1]) } else { v(&[0, 0]) },
            v(&[1, 0]),
        );
        let r = a.check();
        assert!(!r.passed());
        assert!(!r.clause_passed("left unit law"));
    }

    #[test]
    fn poly_quotient_examples() {
        let a = FinDimAlgebra::poly_quotient(&"x-1".parse().unwrap()).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.mult_table()[0][0], v(&[1]));
        let e2 = FinDimAlgebra::poly_quotient(&"x^2-2".parse().unwrap()).unwrap();
        assert_eq!(e2.mult_table()[1][1], v(&[2, 0]));
        let e4 = FinDimAlgebra::poly_quotient(&"x^4-2".parse().unwrap()).unwrap();
        assert_eq!(e4.mult_table()[3][2], v(&[0, 2, 0, 0]));
        assert!(e4.is_commutative());
        assert!(matches!(
            FinDimAlgebra::poly_quotient(&"2x^2-1".parse().unwrap()),
            Err(Error::NotMonic)
        ));
    }

    #[test]
    fn commutant_examples() {
        let m2 = FinDimAlgebra::matrix_algebra(2);
        let center = m2.commutant(&Subspace::full(4)).unwrap();
        assert_eq!(center, Subspace::span(4, vec![m2.unit().clone()]));
        let diag = Subspace::span(4, vec![v(&[1, 0, 0, 0]), v(&[0, 0, 0, 1])]);
        assert_eq!(m2.commutant(&diag).unwrap(), diag);
        let e4 = FinDimAlgebra::poly_quotient(&"x^4-2".parse().unwrap()).unwrap();
        let one = Subspace::span(4, vec![e4.unit().clone()]);
        assert!(e4.commutant(&one).unwrap().is_full());
    }

    #[test]
    fn opposite_and_invert() {
        let m2 = FinDimAlgebra::matrix_algebra(2);
        assert_eq!(m2.opposite().opposite(), m2);
        assert_ne!(m2.opposite(), m2);
        let e2 = FinDimAlgebra::poly_quotient(&"x^2-2".parse().unwrap()).unwrap();
        assert_eq!(e2.opposite(), e2);
        assert_eq!(e2.invert(e2.unit()).unwrap(), *e2.unit());
        assert_eq!(e2.invert(&v(&[0, 1])).unwrap(), vec![qi(0), q(1, 2)]);
        let dual = FinDimAlgebra::poly_quotient(&"x^2".parse().unwrap()).unwrap();
        assert!(matches!(dual.invert(&v(&[0, 1])), Err(Error::NotInvertible)));
        let g = FinDimAlgebra::group_algebra_cyclic(2);
        assert_eq!(g.mul(&v(&[0, 1]), &v(&[0, 1])), v(&[1, 0]));
    }

    #[test]
    fn tensor_mul_agrees_with_tensor_algebra() {
        let a = FinDimAlgebra::group_algebra_cyclic(3);
        let b = FinDimAlgebra::matrix_algebra(2);
        let t = FinDimAlgebra::tensor(&a, &b);
        let x: Vector = (0..12).map(|i| qi((i * 7 % 5) - 2)).collect();
        let y: Vector = (0..12).map(|i| qi((i * 3 % 4) - 1)).collect();
        assert_eq!(tensor_mul(&[&a, &b], &x, &y), t.mul(&x, &y));
    }

    #[test]
    fn subalgebra_tables() {
        let m2 = FinDimAlgebra::matrix_algebra(2);
        let diag = Subspace::span(4, vec![v(&[1, 0, 0, 0]), v(&[0, 0, 0, 1])]);
        let (d, incl) = m2.subalgebra(&diag).unwrap();
        assert_eq!(d.dim(), 2);
        assert!(d.check().passed());
        assert!(AlgebraMap::new(incl).check(&d, &m2).passed());
        assert_eq!(m2.generated_subalgebra(&[v(&[1, 0, 0, 0])]), diag);
    }
}
