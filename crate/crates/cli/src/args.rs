use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::input::OrderName;

#[derive(Debug, Parser)]
#[command(
    name = "sibirsky",
    version,
    about = "Sibirsky ideals and time-reversibility of planar polynomial systems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute generators of the Sibirsky ideal of a family.
    Sibirsky {
        family: PathBuf,
        /// Also list the Hilbert basis of the invariant monoid.
        #[arg(long)]
        hilbert: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Decide whether a coefficient point is time-reversible.
    Check {
        family: PathBuf,
        point: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// List the Hilbert basis of the invariant monoid.
    Hilbert {
        family: PathBuf,
        /// Compare against exhaustive enumeration up to this 1-norm.
        #[arg(long, value_name = "BOUND")]
        oracle: Option<u32>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Complexify the real quadratic system with the given coefficients and
    /// check it.
    Complexify {
        #[arg(allow_hyphen_values = true)]
        a1: String,
        #[arg(allow_hyphen_values = true)]
        a2: String,
        #[arg(allow_hyphen_values = true)]
        a3: String,
        #[arg(allow_hyphen_values = true)]
        b1: String,
        #[arg(allow_hyphen_values = true)]
        b2: String,
        #[arg(allow_hyphen_values = true)]
        b3: String,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Monomial order: lex or block (grevlex on each block).
    #[arg(long, value_name = "lex|block")]
    pub order: Option<OrderName>,
    /// Variable order, names separated by spaces or '>', e.g.
    /// "a10 > a01 > a-1,2 > b10 > b01 > b2,-1".
    #[arg(long, value_name = "NAMES")]
    pub var_order: Option<String>,
    /// Print one JSON document instead of text.
    #[arg(long)]
    pub json: bool,
    /// Include timing and engine statistics in the output.
    #[arg(long)]
    pub timing: bool,
    #[arg(long, value_name = "SECONDS")]
    pub budget_seconds: Option<f64>,
    #[arg(long, value_name = "DEGREE")]
    pub budget_degree: Option<u64>,
    #[arg(long, value_name = "COUNT")]
    pub budget_generators: Option<usize>,
    /// Reduce S-pairs of equal degree in parallel.
    #[arg(long)]
    pub parallel: bool,
}
