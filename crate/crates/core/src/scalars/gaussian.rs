use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::rational::{parse_rational, Rational};
use super::ScalarError;

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Rational::one())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// Shorthand for `n/d` with zero imaginary part. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from(Rational::new(n.into(), d.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        if e < 0 {
            if self.is_zero() {
                return Err(ScalarError::ZeroToNegativePower);
            }
            return Ok(self.inv()?.pow_u(e.unsigned_abs()));
        }
        Ok(self.pow_u(e as u64))
    }

    fn pow_u(&self, mut e: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

/// Field arithmetic in ℚ(i); only `Div` can fail.
pub fn gauss_arith(
    a: &GaussianRational,
    b: &GaussianRational,
    op: GaussOp,
) -> Result<GaussianRational, ScalarError> {
    Ok(match op {
        GaussOp::Add => a + b,
        GaussOp::Sub => a - b,
        GaussOp::Mul => a * b,
        GaussOp::Div => a.checked_div(b)?,
    })
}

pub fn gauss_pow(a: &GaussianRational, e: i64) -> Result<GaussianRational, ScalarError> {
    a.pow(e)
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from(Rational::from_integer(n.into()))
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Mul<&'a Rational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &Rational) -> GaussianRational {
        GaussianRational::new(&self.re * rhs, &self.im * rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -self.clone()
    }
}

impl fmt::Display for GaussianRational {
    /// Prints `3/2`, `-i`, `1/2*i`, `1-3/4*i`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if !self.re.is_zero() {
            write!(f, "{}", self.re)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.im.is_one() {
            f.write_str("i")
        } else if (-&self.im).is_one() {
            f.write_str("-i")
        } else {
            write!(f, "{}*i", self.im)
        }
    }
}

impl FromStr for GaussianRational {
    type Err = ScalarError;

    /// Accepts `p/q+r/s*i` with either part optional, `i`, `-i`, `2i`.
    fn from_str(text: &str) -> Result<Self, ScalarError> {
        let bad = || ScalarError::Parse {
            kind: "Gaussian rational",
            text: text.to_string(),
        };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Self::from(parse_rational(&s)?));
        };
        // the imaginary part starts at the last sign that is not the first char
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last()
            .unwrap_or(0);
        let (re_text, im_text) = body.split_at(split);
        let re = if re_text.is_empty() {
            Rational::zero()
        } else {
            parse_rational(re_text).map_err(|_| bad())?
        };
        let (im_text, starred) = match im_text.strip_suffix('*') {
            Some(t) => (t, true),
            None => (im_text, false),
        };
        let im = match im_text {
            "" | "+" | "-" if starred => return Err(bad()),
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            t => parse_rational(t).map_err(|_| bad())?,
        };
        Ok(Self::new(re, im))
    }
}
