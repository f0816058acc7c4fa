//! Separable extensions `E = Q[x]/(p)` and the weak Hopf algebra `End(E)`.

pub mod galois;
pub mod gp;
pub mod properties;
pub mod roots;
pub mod smash;

use std::fmt::Write as _;

use crate::algebra::FinDimAlgebra;
use crate::error::{Error, Result};
use crate::linear::tensor::{basis_vector, dot, outer};
use crate::linear::{Matrix, Rational, Vector};
use crate::morphism::ModuleAlgebraAction;
use crate::poly::Polynomial;
use crate::wba::{WeakBialgebra, WeakHopfAlgebra};

/// Trace functional, Gram matrix and dual basis of `E` over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceForm {
    /// `τ(x^k)` for the power basis.
    pub tau: Vector,
    /// `G[k][l] = τ(x^k x^l)`.
    pub gram: Matrix,
    pub gram_inverse: Matrix,
    /// `y_i = Σ_l (G⁻¹)_{il} x^l`; the quasibasis is `(x^i, y_i)`.
    pub dual: Vec<Vector>,
}

impl TraceForm {
    pub fn of(algebra: &FinDimAlgebra) -> Result<Self> {
        let n = algebra.dim();
        let tau: Vector = (0..n)
            .map(|k| {
                let m = algebra.left_mult(&basis_vector(n, k));
                (0..n).map(|i| m[(i, i)].clone()).sum()
            })
            .collect();
        let gram = Matrix::from_fn(n, n, |k, l| dot(&tau, &algebra.mult_table()[k][l]));
        let gram_inverse = gram.inverse().ok_or(Error::DegenerateTrace)?;
        let dual = gram_inverse.row_list();
        Ok(TraceForm {
            tau,
            gram,
            gram_inverse,
            dual,
        })
    }

    pub fn trace(&self, z: &[Rational]) -> Rational {
        dot(&self.tau, z)
    }

    /// `e = Σ x^i ⊗ y_i` in `E ⊗ E`.
    pub fn casimir(&self) -> Vector {
        let n = self.tau.len();
        let mut e = vec![Rational::zero(); n * n];
        for (i, y) in self.dual.iter().enumerate() {
            for (j, c) in y.iter().enumerate() {
                e[i * n + j] += c;
            }
        }
        e
    }
}

/// `E = Q[x]/(p)` for a monic squarefree integer polynomial `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    min_poly: Polynomial,
    algebra: FinDimAlgebra,
    trace_form: TraceForm,
}

impl NumberField {
    pub fn new(min_poly: Polynomial) -> Result<Self> {
        if !min_poly.has_integer_coefficients() {
            return Err(Error::InvalidInput(format!(
                "minimal polynomial {min_poly} must have integer coefficients"
            )));
        }
        let algebra = FinDimAlgebra::poly_quotient(&min_poly)?;
        let trace_form = TraceForm::of(&algebra)?;
        Ok(NumberField {
            min_poly,
            algebra,
            trace_form,
        })
    }

    pub fn parse(poly: &str) -> Result<Self> {
        Self::new(poly.parse()?)
    }

    pub fn min_poly(&self) -> &Polynomial {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn trace_form(&self) -> &TraceForm {
        &self.trace_form
    }

    /// The power `x^k` as an element.
    pub fn power(&self, k: u32) -> Vector {
        let n = self.degree();
        let x = if n == 1 {
            // x ≡ -p(0) in Q[x]/(x + p0)
            vec![-&self.min_poly.coeffs()[0]]
        } else {
            basis_vector(n, 1)
        };
        self.algebra.pow(&x, k)
    }

    /// Names `1, x, x^2, …` for the power basis.
    pub fn basis_names(&self) -> Vec<String> {
        self.algebra.basis_names().map(<[String]>::to_vec).unwrap_or_default()
    }

    /// Human form of an element, e.g. `1/2 + x^3`.
    pub fn format_element(&self, z: &[Rational]) -> String {
        format_combination(z.iter().zip(self.basis_names()).map(|(c, n)| (c.clone(), n)))
    }
}

fn format_combination(terms: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (c, name) in terms.filter(|(c, _)| !c.is_zero()) {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if a.is_one() {
            out.push_str(&name);
        } else if name == "1" {
            let _ = write!(out, "{a}");
        } else {
            let _ = write!(out, "{a}·{name}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The weak Hopf algebra `A = End(E)` with its natural action on `E`.
///
/// Operators are stored row-major in the matrix-unit basis: coordinate
/// `k·n + l` of `a` is the `x^k`-coefficient of `a(x^l)`.
#[derive(Clone, Debug)]
pub struct UniversalWha {
    pub field: NumberField,
    pub wha: WeakHopfAlgebra,
}

impl UniversalWha {
    pub fn new(field: NumberField) -> Self {
        let n = field.degree();
        let d = n * n;
        let alg = FinDimAlgebra::matrix_algebra(n);
        let tf = field.trace_form();
        let lam_x: Vec<Matrix> = (0..n).map(|j| field.algebra().left_mult(&basis_vector(n, j))).collect();
        let lam_y: Vec<Matrix> = tf.dual.iter().map(|y| field.algebra().left_mult(y)).collect();

        // Δ(a) = Σ_{i,j} E_ij ⊗ λ(y_i) a λ(x^j); the first leg z ↦ x^i τ(y_j z)
        // is the matrix unit E_ij because τ(y_j x^m) = δ_jm.
        let coproducts: Vec<Vector> = (0..d)
            .map(|b| {
                let a = Matrix::from_fn(n, n, |r, c| if r * n + c == b { Rational::one() } else { Rational::zero() });
                let mut v = vec![Rational::zero(); d * d];
                for i in 0..n {
                    let left = lam_y[i].mul(&a);
                    for j in 0..n {
                        let second = left.mul(&lam_x[j]);
                        let first = i * n + j;
                        for (k, c) in second.entries().iter().enumerate() {
                            if !c.is_zero() {
                                v[first * d + k] += c;
                            }
                        }
                    }
                }
                v
            })
            .collect();
        // ε(a) = τ(a(1)) and 1 = x^0
        let epsilon: Vector = (0..d)
            .map(|b| if b % n == 0 { tf.tau[b / n].clone() } else { Rational::zero() })
            .collect();
        // S(a) = G⁻¹ aᵀ G, the transpose for the form τ(uv)
        let antipode_cols: Vec<Vector> = (0..d)
            .map(|b| {
                let (k, l) = (b / n, b % n);
                Matrix::from_fn(n, n, |r, c| &tf.gram_inverse[(r, l)] * &tf.gram[(k, c)])
                    .into_entries()
            })
            .collect();
        let antipode = Matrix::from_columns(&antipode_cols, d);
        let wba = WeakBialgebra::from_coproducts(alg, &coproducts, epsilon).expect("consistent shapes");
        let wha = WeakHopfAlgebra::new(wba, antipode).expect("consistent shapes");
        UniversalWha { field, wha }
    }

    pub fn from_poly(poly: &str) -> Result<Self> {
        Ok(Self::new(NumberField::parse(poly)?))
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        self.wha.wba.algebra()
    }

    /// Coordinates of an `n × n` operator matrix.
    pub fn from_operator(&self, m: &Matrix) -> Vector {
        assert_eq!(m.shape(), (self.degree(), self.degree()));
        m.entries().to_vec()
    }

    pub fn operator(&self, a: &[Rational]) -> Matrix {
        let n = self.degree();
        Matrix::from_rows_with_cols(a.chunks(n).map(<[Rational]>::to_vec).collect(), n)
    }

    pub fn apply(&self, a: &[Rational], z: &[Rational]) -> Vector {
        self.operator(a).mul_vec(z)
    }

    /// Multiplication by `z` as an element of `A`.
    pub fn lambda(&self, z: &[Rational]) -> Vector {
        self.field.algebra().left_mult(z).into_entries()
    }

    /// `λ(x^k)` as an element of `A`.
    pub fn lambda_power(&self, k: u32) -> Vector {
        self.lambda(&self.field.power(k))
    }

    /// The evaluation action `a ▷ z = a(z)`.
    pub fn natural_action(&self) -> ModuleAlgebraAction {
        let n = self.degree();
        let d = n * n;
        let action = Matrix::from_fn(n, d * n, |k, idx| {
            let (b, m) = (idx / n, idx % n);
            // E_{b/n, b%n}(x^m) = δ_{b%n, m} x^{b/n}
            if b % n == m && b / n == k {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        ModuleAlgebraAction::new(self.wha.wba.clone(), self.field.algebra().clone(), action)
            .expect("consistent shapes")
    }

    /// Coefficients `c_kl` with `t = Σ c_kl λ(x^k) ⊗ λ(x^l)`, when `t` lies in
    /// that span.
    pub fn multiplication_form(&self, t: &[Rational]) -> Option<Matrix> {
        let n = self.degree();
        let lams: Vec<Vector> = (0..n).map(|k| self.lambda(&basis_vector(n, k))).collect();
        let cols: Vec<Vector> = (0..n * n).map(|i| outer(&lams[i / n], &lams[i % n])).collect();
        let m = Matrix::from_columns(&cols, t.len());
        let c = m.solve(t)?;
        Some(Matrix::from_rows_with_cols(c.chunks(n).map(<[Rational]>::to_vec).collect(), n))
    }

    /// `Σ c_kl x^k⊗x^l` rendered with multiplication operators as legs.
    pub fn format_multiplication_form(&self, c: &Matrix) -> String {
        let names = self.field.basis_names();
        let n = self.degree();
        format_combination(
            (0..n * n).map(|i| (c[(i / n, i % n)].clone(), format!("{}⊗{}", names[i / n], names[i % n]))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{q, qi};

    #[test]
    fn trace_form_of_quadratic_field() {
        let e2 = NumberField::parse("x^2-2").unwrap();
        let tf = e2.trace_form();
        assert_eq!(tf.tau, vec![qi(2), qi(0)]);
        assert_eq!(tf.trace(&e2.power(2)), qi(4));
        assert_eq!(tf.casimir(), vec![q(1, 2), qi(0), qi(0), q(1, 4)]);
        let q1 = NumberField::parse("x-1").unwrap();
        assert_eq!(q1.trace_form().tau, vec![qi(1)]);
        assert_eq!(q1.trace_form().casimir(), vec![qi(1)]);
    }

    #[test]
    fn inseparable_polynomials_are_rejected() {
        assert!(matches!(NumberField::parse("x^2"), Err(Error::DegenerateTrace)));
        assert!(matches!(NumberField::parse("x^2-2x+1"), Err(Error::DegenerateTrace)));
        assert!(matches!(NumberField::parse("x^2-1/2"), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn quasibasis_identities() {
        for p in ["x^2-2", "x^3-2", "x^4-2", "x^2+1"] {
            let e = NumberField::parse(p).unwrap();
            let n = e.degree();
            let tf = e.trace_form();
            let mut sum = vec![Rational::zero(); n];
            for (i, y) in tf.dual.iter().enumerate() {
                let xy = e.algebra().mul(&basis_vector(n, i), y);
                for (s, t) in sum.iter_mut().zip(xy) {
                    *s += t;
                }
            }
            assert_eq!(sum, *e.algebra().unit(), "Σ x_i y_i = 1 for {p}");
            for z in 0..n {
                let zv = basis_vector(n, z);
                let rebuilt: Vector = (0..n)
                    .map(|i| tf.trace(&e.algebra().mul(&tf.dual[i], &zv)))
                    .collect();
                assert_eq!(rebuilt, zv);
            }
        }
    }

    #[test]
    fn universal_wha_of_rationals_is_trivial() {
        let a = UniversalWha::from_poly("x-1").unwrap();
        assert_eq!(a.wha.dim(), 1);
        assert!(a.wha.wba.is_ordinary_bialgebra());
        assert!(a.wha.check().passed());
    }

    #[test]
    fn universal_wha_of_quadratic_field() {
        let a = UniversalWha::from_poly("x^2-2").unwrap();
        let r = a.wha.check();
        assert!(r.passed(), "{r}");
        assert!(!a.wha.wba.is_ordinary_bialgebra());
        let c = a.multiplication_form(&a.wha.wba.delta_one()).unwrap();
        assert_eq!(c, Matrix::from_rows(vec![vec![q(1, 2), qi(0)], vec![qi(0), q(1, 4)]]));
        assert_eq!(a.format_multiplication_form(&c), "1/2·1⊗1 + 1/4·x⊗x");
    }
}
