use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ScalarError;

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (`0` is `0/1`).
pub type Rational = BigRational;

/// Builds the canonical rational `num/den`.
pub fn rat_normalize(num: Integer, den: Integer) -> Result<Rational, ScalarError> {
    if den.is_zero() {
        return Err(ScalarError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Parses `p`, `p/q`, `-p/q` or `+p`; surrounding whitespace is ignored.
pub fn parse_rational(text: &str) -> Result<Rational, ScalarError> {
    let bad = || ScalarError::Parse {
        kind: "rational",
        text: text.to_string(),
    };
    let s = text.trim();
    let int = |part: &str| -> Result<Integer, ScalarError> {
        let part = part.trim();
        let digits = part.strip_prefix(['+', '-']).unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        part.strip_prefix('+')
            .unwrap_or(part)
            .parse()
            .map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((num, den)) => {
            let den = int(den)?;
            rat_normalize(int(num)?, den)
        }
    }
}

/// Magnitude proxy used by heuristics: the larger bit length of numerator
/// and denominator.
pub fn bit_length(r: &Rational) -> u64 {
    r.numer().bits().max(r.denom().bits())
}
