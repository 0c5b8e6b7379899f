//! Reversible families: the ideal `H`, the Sibirsky ideal, its monoid and
//! Hilbert basis, and the exact reversibility test for concrete points.

mod family;
mod monoid;
mod point;
mod sibirsky;

pub use family::{build_h, build_h_in, SystemFamily, ZetaVector};
pub use monoid::{
    coefficient_ring, exponents_of, hilbert_oracle, involute, minimal_elements, monoid_member,
    monomial_of, monomial_of_in, MonoidVector,
};
pub use point::{
    act, complexify_quadratic, construct_reversible, gamma_relations, is_time_reversible,
    CoefficientPoint, GammaRelation, Verdict,
};
pub use sibirsky::{
    binomial_pairs, hilbert_basis, sibirsky_ideal, OrderKind, SibirskyConfig, SibirskyIdeal,
};

use thiserror::Error;

use crate::groebner::GroebnerError;
use crate::poly::PolyError;
use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReversibilityError {
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("invalid variable order: {0}")]
    InvalidVariableOrder(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("point is not time-reversible")]
    NotReversible,
    #[error("generator {0} is not of the form [ν] − [ν̂] with ζ·ν = 0")]
    UnexpectedGenerator(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
