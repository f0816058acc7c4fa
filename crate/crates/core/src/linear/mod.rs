//! Exact linear algebra over the rationals.

pub mod matrix;
pub mod quotient;
pub mod rational;
pub mod subspace;
pub mod tensor;

pub use matrix::{flip, Matrix};
pub use quotient::QuotientSpace;
pub use rational::{q, qi, Rational};
pub use subspace::{RowReducer, Subspace};

/// Coordinate vector.
pub type Vector = Vec<Rational>;
