//! Command-line front end for the `sibirsky` library.
//!
//! Exit codes: 0 success, 1 I/O or internal error, 2 malformed input,
//! 3 invariant violation (invalid family, wrong point dimension, bad
//! variable order), 4 resource budget exceeded.

pub mod args;
pub mod commands;
pub mod input;
pub mod output;

use sibirsky::groebner::GroebnerError;
use sibirsky::poly::PolyError;
use sibirsky::reversibility::ReversibilityError;
use thiserror::Error;

pub use args::{Cli, Command};
pub use commands::run;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invariant(String),
    #[error("{0}")]
    Budget(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Internal(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Budget(_) => 4,
        }
    }
}

impl From<ReversibilityError> for CliError {
    fn from(e: ReversibilityError) -> Self {
        use ReversibilityError as R;
        match e {
            R::InvalidFamily(_)
            | R::InvalidVariableOrder(_)
            | R::DimensionMismatch { .. }
            | R::InvalidArgument(_)
            | R::NotReversible => CliError::Invariant(e.to_string()),
            R::Groebner(GroebnerError::BudgetExceeded(d)) => CliError::Budget(d.to_string()),
            R::Scalar(_) | R::Poly(PolyError::Parse { .. }) => CliError::Parse(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}
