use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;
use super::subspace::{RowReducer, Subspace};
use super::Vector;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics when rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    pub fn from_rows_with_cols(rows: Vec<Vector>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    /// Matrix whose j-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn row_vector(v: Vector) -> Self {
        let cols = v.len();
        Matrix { rows: 1, cols, data: v }
    }

    pub fn column_vector(v: Vector) -> Self {
        let rows = v.len();
        Matrix { rows, cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn row_list(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = vec![Rational::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Rational]) -> Vector {
        assert_eq!(self.rows, v.len(), "vector-matrix shape mismatch");
        let mut out = vec![Rational::zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Kronecker product; realizes `A ⊗ B` on first-leg-major flat indices.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (p, q) = other.shape();
        let mut out = Matrix::zeros(self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * p + k, j * q + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Stack matrices with equal column counts vertically.
    pub fn vstack(blocks: &[Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }

    pub fn rank(&self) -> usize {
        let mut rr = RowReducer::new(self.cols);
        for i in 0..self.rows {
            rr.insert(self.row(i).to_vec());
        }
        rr.rank()
    }

    /// Solution space of `M v = 0`, canonical form.
    pub fn kernel(&self) -> Subspace {
        let mut rr = RowReducer::new(self.cols);
        for i in 0..self.rows {
            rr.insert(self.row(i).to_vec());
        }
        rr.null_space()
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, self.columns())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        // Gauss-Jordan on [M | I].
        let mut aug: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !aug[r][c].is_zero())?;
            aug.swap(c, p);
            let inv = aug[c][c].recip().expect("nonzero pivot");
            for x in aug[c].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = aug[c].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == c || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        Some(Matrix::from_rows(aug.into_iter().map(|r| r[n..].to_vec()).collect()))
    }

    /// Some solution of `M x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut rr = RowReducer::new(self.cols + 1);
        for i in 0..self.rows {
            let mut r = self.row(i).to_vec();
            r.push(b[i].clone());
            rr.insert(r);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in rr.rows().iter().zip(rr.pivots()) {
            if p == self.cols {
                return None;
            }
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Serialized as row-major nested arrays of rational strings. A matrix with
/// zero rows loses its column count, so `cols` is recovered as 0.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.row_list().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<Rational>> = Vec::deserialize(deserializer)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(Matrix::from_rows_with_cols(rows, cols))
    }
}

/// The flip `Σ: V⊗W → W⊗V` for `dim V = m`, `dim W = n`: index `i·n+j ↦ j·m+i`.
pub fn flip(m: usize, n: usize) -> Matrix {
    let mut s = Matrix::zeros(m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            s[(j * m + i, i * n + j)] = Rational::one();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rational::{q, qi};

    #[test]
    fn kernel_examples() {
        let k = Matrix::from_i64(&[&[0]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(Matrix::identity(3).kernel().is_zero());
        let k = Matrix::from_i64(&[&[1, 1]]).kernel();
        assert_eq!(k, Subspace::span(2, vec![vec![qi(1), qi(-1)]]));
    }

    #[test]
    fn kron_examples() {
        assert_eq!(Matrix::identity(2).kron(&Matrix::identity(3)), Matrix::identity(6));
        assert_eq!(
            Matrix::from_i64(&[&[2]]).kron(&Matrix::from_i64(&[&[3]])),
            Matrix::from_i64(&[&[6]])
        );
    }

    #[test]
    fn flip_conjugates_kron() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(&[&[0, -1], &[5, 7]]);
        let s = flip(2, 2);
        assert_eq!(s.mul(&a.kron(&b)).mul(&s), b.kron(&a));
        // non-square legs: Σ_{3,2} · (A⊗B) · Σ_{2,3}^{-1} = B⊗A
        let c = Matrix::from_i64(&[&[1, 0, 2], &[0, 1, 0], &[3, 0, 1]]);
        assert_eq!(flip(3, 2).mul(&c.kron(&a)).mul(&flip(2, 3)), a.kron(&c));
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let x = m.solve(&[qi(3), qi(2)]).unwrap();
        assert_eq!(x, vec![qi(1), qi(1)]);
        assert!(Matrix::from_i64(&[&[1, 1], &[1, 1]]).solve(&[qi(1), qi(2)]).is_none());
        assert_eq!(Matrix::from_i64(&[&[2, 0]]).solve(&[qi(1)]).unwrap(), vec![q(1, 2), qi(0)]);
    }

    #[test]
    fn serde_shape() {
        let m = Matrix::from_rows(vec![vec![q(1, 2), qi(0)], vec![qi(-3), q(2, 3)]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","0"],["-3","2/3"]]"#);
        assert_eq!(serde_json::from_str::<Matrix>(&s).unwrap(), m);
    }
}
