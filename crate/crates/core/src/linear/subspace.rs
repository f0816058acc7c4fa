use super::matrix::Matrix;
use super::rational::Rational;
use super::Vector;
use crate::error::{Error, Result};

/// Incremental Gauss-Jordan elimination. Rows are kept fully reduced and
/// sorted by pivot column, so the accumulated rows are always in reduced row
/// echelon form.
#[derive(Clone, Debug)]
pub struct RowReducer {
    cols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after elimination against the current rows; it has
    /// zeros in every pivot column.
    pub fn reduce(&self, mut v: Vector) -> Vector {
        debug_assert_eq!(v.len(), self.cols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip().expect("nonzero pivot");
        if !inv.is_one() {
            for x in v.iter_mut().skip(p) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v).skip(p) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace {
            ambient: self.cols,
            basis: Matrix::from_rows_with_cols(self.rows, self.cols),
            pivots: self.pivots,
        }
    }

    /// Solution space of the homogeneous system whose equations are the rows.
    pub fn null_space(&self) -> Subspace {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = RowReducer::new(self.cols);
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[f] = Rational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                x[p] = -&row[f];
            }
            out.insert(x);
        }
        out.into_subspace()
    }
}

/// A subspace of `Q^n` held by its canonical (reduced row echelon) basis.
/// Two subspaces are equal exactly when their canonical bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut rr = RowReducer::new(ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
            rr.insert(v);
        }
        rr.into_subspace()
    }

    pub fn zero(ambient: usize) -> Self {
        RowReducer::new(ambient).into_subspace()
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, Matrix::identity(ambient).row_list())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_list()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; the quotient by this subspace is
    /// coordinatized by them.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    fn reducer(&self) -> RowReducer {
        RowReducer {
            cols: self.ambient,
            rows: self.basis.row_list(),
            pivots: self.pivots.clone(),
        }
    }

    pub fn reduce(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(self.basis.row(i)).skip(p) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Rational::is_zero)
    }

    /// Coordinates of `v` with respect to the canonical basis. For an RREF
    /// basis these are just the entries of `v` at the pivot columns.
    pub fn coords(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates.
    pub fn vector(&self, coords: &[Rational]) -> Vector {
        assert_eq!(coords.len(), self.dim());
        self.basis.vec_mul(coords)
    }

    /// Ambient-by-dim matrix whose columns are the basis vectors.
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_same_ambient(other)?;
        Ok(self == other)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_same_ambient(other)?;
        Ok(self.dim() <= other.dim() && (0..self.dim()).all(|i| other.contains(self.basis.row(i))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let mut rr = self.reducer();
        for v in other.basis_vectors() {
            rr.insert(v);
        }
        Ok(rr.into_subspace())
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        // x = Σ a_i u_i = Σ b_j w_j  <=>  [U^T | -W^T] (a, b) = 0
        let (k, l) = (self.dim(), other.dim());
        let m = Matrix::from_fn(self.ambient, k + l, |r, c| {
            if c < k {
                self.basis[(c, r)].clone()
            } else {
                -&other.basis[(c - k, r)]
            }
        });
        let sols = m.kernel();
        Ok(Subspace::span(
            self.ambient,
            sols.basis_vectors().into_iter().map(|s| self.vector(&s[..k])),
        ))
    }

    /// Image of this subspace under `f`.
    pub fn map(&self, f: &Matrix) -> Subspace {
        assert_eq!(f.cols(), self.ambient);
        Subspace::span(f.rows(), self.basis_vectors().iter().map(|v| f.mul_vec(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rational::qi;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn equality_examples() {
        let a = Subspace::span(2, vec![v(&[1, 0]), v(&[0, 1])]);
        let b = Subspace::span(2, vec![v(&[1, 1]), v(&[1, -1])]);
        assert!(a.equals(&b).unwrap());
        let c = Subspace::span(2, vec![v(&[1, 0])]);
        let d = Subspace::span(2, vec![v(&[0, 1])]);
        assert!(!c.equals(&d).unwrap());
        assert!(c.equals(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn coords_and_intersection() {
        let s = Subspace::span(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let w = v(&[2, 5, 7]);
        let c = s.coords(&w).unwrap();
        assert_eq!(s.vector(&c), w);
        assert!(s.coords(&v(&[0, 0, 1])).is_none());
        let t = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 1])]);
        let i = s.intersection(&t).unwrap();
        assert_eq!(i, Subspace::span(3, vec![v(&[0, 1, 1])]));
        assert_eq!(s.sum(&t).unwrap(), Subspace::full(3));
    }
}
