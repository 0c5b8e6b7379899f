//! Sparse multivariate polynomials over ℚ with pluggable monomial orders.
//!
//! A [`Polynomial`] carries a shared [`Ring`] (variable names plus the
//! monomial order its terms are sorted under). Moving a polynomial to a ring
//! with another order or variable permutation re-sorts it.

mod monomial;
mod order;
mod polynomial;
mod text;
mod vars;

pub use monomial::Monomial;
pub use order::{cmp_monomials, BlockOrder, MonomialOrder};
pub use polynomial::{poly_arith, BinomialShape, PolyOp, Polynomial, Ring, Term};
pub use text::PolynomialRecord;
pub use vars::VariableTable;

use thiserror::Error;

use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("exponent vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("variable {0:?} has no value")]
    UnboundVariable(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("duplicate variable {0:?}")]
    DuplicateVariable(String),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
