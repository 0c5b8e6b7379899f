//! Exact scalar arithmetic: arbitrary-precision integers and rationals, and
//! the Gaussian rationals ℚ(i) used when polynomials are evaluated at
//! concrete coefficient points.

mod gaussian;
mod rational;

pub use gaussian::{gauss_arith, gauss_pow, GaussOp, GaussianRational};
pub use rational::{bit_length, parse_rational, rat_normalize, Integer, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("cannot parse {kind} literal {text:?}")]
    Parse { kind: &'static str, text: String },
}
