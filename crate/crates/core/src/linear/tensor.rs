//! Tensor-leg conventions.
//!
//! Basis vector `e_i ⊗ e_j` of `V ⊗ W` has flat index `i·dim(W) + j`
//! (first leg major); longer tensor powers nest the same way. Every matrix,
//! file format and report in the crate uses this ordering.

use super::matrix::Matrix;
use super::rational::Rational;
use super::Vector;

/// Iterator over the nonzero entries of a coordinate vector.
pub fn nonzeros(v: &[Rational]) -> impl Iterator<Item = (usize, &Rational)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

pub fn outer(x: &[Rational], y: &[Rational]) -> Vector {
    let mut out = vec![Rational::zero(); x.len() * y.len()];
    for (i, a) in nonzeros(x) {
        for (j, b) in nonzeros(y) {
            out[i * y.len() + j] = a * b;
        }
    }
    out
}

pub fn basis_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

pub fn add_scaled(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    debug_assert_eq!(acc.len(), v.len());
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn sub_vec(x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn add_vec(x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn scale_vec(c: &Rational, x: &[Rational]) -> Vector {
    x.iter().map(|a| c * a).collect()
}

pub fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            s += a * b;
        }
    }
    s
}

pub fn is_zero_vec(x: &[Rational]) -> bool {
    x.iter().all(Rational::is_zero)
}

/// Splits a flat index into per-leg indices.
pub fn split_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

pub fn join_index(parts: &[usize], dims: &[usize]) -> usize {
    parts.iter().zip(dims).fold(0, |acc, (&p, &d)| acc * d + p)
}

/// Applies `f` to leg `leg` of a tensor with leg dimensions `dims`; the
/// result has that leg replaced by dimension `f.rows()`.
pub fn apply_on_leg(v: &[Rational], dims: &[usize], leg: usize, f: &Matrix) -> Vector {
    assert_eq!(f.cols(), dims[leg], "leg dimension mismatch");
    let mut out_dims = dims.to_vec();
    out_dims[leg] = f.rows();
    let total: usize = out_dims.iter().product();
    let mut out = vec![Rational::zero(); total];
    let cols = f.columns();
    for (idx, c) in nonzeros(v) {
        let mut parts = split_index(idx, dims);
        let j = parts[leg];
        for (i, a) in nonzeros(&cols[j]) {
            parts[leg] = i;
            out[join_index(&parts, &out_dims)] += c * a;
        }
    }
    out
}

/// `(f ⊗ g) v` for `v ∈ V ⊗ W`, without forming the Kronecker product.
pub fn apply_kron(f: &Matrix, g: &Matrix, v: &[Rational]) -> Vector {
    let w = apply_on_leg(v, &[f.cols(), g.cols()], 0, f);
    apply_on_leg(&w, &[f.rows(), g.cols()], 1, g)
}

/// Reshapes `v ∈ V ⊗ W` into a `dim V × dim W` matrix.
pub fn reshape(v: &[Rational], m: usize, n: usize) -> Matrix {
    assert_eq!(v.len(), m * n);
    Matrix::from_rows_with_cols(v.chunks(n).map(<[Rational]>::to_vec).collect(), n)
}

pub fn flip_vec(v: &[Rational], m: usize, n: usize) -> Vector {
    let mut out = vec![Rational::zero(); m * n];
    for (idx, c) in nonzeros(v) {
        let (i, j) = (idx / n, idx % n);
        out[j * m + i] = c.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rational::qi;

    #[test]
    fn apply_kron_matches_kron_matrix() {
        let f = Matrix::from_i64(&[&[1, 2], &[0, 1], &[3, -1]]);
        let g = Matrix::from_i64(&[&[2, 0], &[1, 1]]);
        let v: Vector = (0..4).map(|i| qi(i * i - 2)).collect();
        assert_eq!(apply_kron(&f, &g, &v), f.kron(&g).mul_vec(&v));
    }

    #[test]
    fn index_round_trip() {
        let dims = [3, 4, 2];
        for idx in 0..24 {
            assert_eq!(join_index(&split_index(idx, &dims), &dims), idx);
        }
        assert_eq!(split_index(1 * 8 + 2 * 2 + 1, &dims), vec![1, 2, 1]);
    }
}
