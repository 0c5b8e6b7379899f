//! Buchberger's algorithm over ℚ, with reduction, reduced bases,
//! elimination and ideal membership/equality.

mod basis;
mod buchberger;
mod ideal;
mod reduce;

pub use basis::{BasisKind, IdealBasis};
pub use buchberger::{groebner_basis, groebner_basis_with, GroebnerConfig, GroebnerStats};
pub use ideal::{buchberger_certificate, eliminate, ideal_equal, ideal_member, Certificate};
pub use reduce::{normal_form, s_polynomial};

use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::poly::PolyError;

/// Resource limits for a Buchberger run. `None` means unlimited.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_time: Option<Duration>,
    /// Ceiling on the total degree of any polynomial added to the basis.
    pub max_degree: Option<u64>,
    /// Ceiling on the number of polynomials ever added to the basis.
    pub max_generators: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BudgetLimit {
    Time,
    Degree,
    Generators,
}

/// State of an aborted run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BudgetDiagnostics {
    pub limit: BudgetLimit,
    pub elapsed: Duration,
    pub generators_added: usize,
    pub active_basis: usize,
    pub pending_pairs: usize,
    pub pairs_reduced: usize,
    pub max_degree_seen: u64,
}

impl fmt::Display for BudgetDiagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.limit {
            BudgetLimit::Time => "time",
            BudgetLimit::Degree => "degree",
            BudgetLimit::Generators => "generator",
        };
        write!(
            f,
            "{what} budget exceeded after {:.3}s: {} generators added, {} active, \
             {} pairs pending, {} pairs reduced, max degree {}",
            self.elapsed.as_secs_f64(),
            self.generators_added,
            self.active_basis,
            self.pending_pairs,
            self.pairs_reduced,
            self.max_degree_seen
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("S-polynomial of a zero polynomial")]
    ZeroInput,
    #[error("no input polynomials")]
    EmptyInput,
    #[error("basis is not a Gröbner basis")]
    NotGroebner,
    #[error("order cannot eliminate the requested variables: {0}")]
    IncompatibleOrder(String),
    #[error("{0}")]
    BudgetExceeded(Box<BudgetDiagnostics>),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
