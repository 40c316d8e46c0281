//! Exact arithmetic kernel: rationals, univariate and graded multivariate
//! polynomials, and dense linear algebra over the rationals.
//!
//! Everything here is immutable once built and never touches floating point,
//! except for the explicit `to_f64` conversions used when reporting.

mod matrix;
mod multipoly;
mod rational;
mod unipoly;

pub use matrix::{LinearSolution, RationalMatrix, Rref};
pub use multipoly::{Monomial, MultiPoly, VarSet};
pub use rational::{format_decimal, frac, parse_rational, rat, to_f64, Rational};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("cannot parse polynomial {0:?}")]
    ParsePoly(String),
}
