//! Exact computations with weak bialgebras, weak Hopf algebras, bialgebroids
//! and the Galois theory of finite separable field extensions of Q.

pub mod algebra;
pub mod bialgebroid;
pub mod cli;
pub mod error;
pub mod field;
pub mod io;
pub mod linear;
pub mod morphism;
pub mod poly;
pub mod report;
pub mod wba;

pub use error::{Error, Result};
