//! Family and point files. Both are TOML:
//!
//! ```toml
//! pairs = [[1, 0], [0, 1], [-1, 2]]
//! order = "lex"                     # or "block_grevlex"
//! var_order = ["a10", "a01", "a-1,2", "b10", "b01", "b2,-1"]
//! ```
//!
//! ```toml
//! point = ["1", "2", "3", "3", "2", "1/2+i"]
//! ```

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sibirsky::reversibility::{CoefficientPoint, OrderKind, SystemFamily};
use sibirsky::scalars::GaussianRational;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderName {
    Lex,
    #[serde(alias = "block")]
    BlockGrevlex,
}

impl OrderName {
    pub fn kind(self) -> OrderKind {
        match self {
            OrderName::Lex => OrderKind::Lex,
            OrderName::BlockGrevlex => OrderKind::BlockGrevlex,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OrderName::Lex => "lex",
            OrderName::BlockGrevlex => "block_grevlex",
        }
    }
}

impl FromStr for OrderName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(OrderName::Lex),
            "block" | "block_grevlex" => Ok(OrderName::BlockGrevlex),
            other => Err(format!("unknown order {other:?}; expected lex or block")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub pairs: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub var_order: Option<Vec<String>>,
}

impl FamilySpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(format!("family file: {e}")))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("family spec serializes")
    }

    pub fn family(&self) -> Result<SystemFamily, CliError> {
        let pairs = self.pairs.iter().map(|&[p, q]| (p, q)).collect();
        Ok(SystemFamily::new(pairs)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    pub point: Vec<String>,
}

impl PointSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(format!("point file: {e}")))
    }

    pub fn from_point(point: &CoefficientPoint) -> Self {
        PointSpec {
            point: point.0.iter().map(|v| v.to_string()).collect(),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("point spec serializes")
    }

    pub fn point(&self) -> Result<CoefficientPoint, CliError> {
        self.point
            .iter()
            .map(|s| {
                s.parse::<GaussianRational>()
                    .map_err(|e| CliError::Parse(format!("point entry {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(CoefficientPoint)
    }
}

/// Splits a `--var-order` argument on whitespace and `>`; names such as
/// `a-1,2` contain commas.
pub fn split_var_order(text: &str) -> Vec<String> {
    text.split(|c: char| c.is_whitespace() || c == '>')
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}
