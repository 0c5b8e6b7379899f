//! Text form `c*x1^e1*x2^e2 ± ...` and the structured
//! `[coeff, [exponents]]` record.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{Monomial, PolyError, Polynomial, Ring};
use crate::scalars::{parse_rational, Rational};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = self.ring().vars().names();
        for (k, t) in self.terms().iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = t.coeff.abs();
            let factors: Vec<String> = t
                .mono
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| match e {
                    1 => names[i].clone(),
                    _ => format!("{}^{e}", names[i]),
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let rest = self.rest();
        let n = rest.bytes().take_while(u8::is_ascii_digit).count();
        (n > 0).then(|| {
            self.pos += n;
            &rest[..n]
        })
    }

    fn number(&mut self) -> Result<Rational, PolyError> {
        let start = self.pos;
        self.digits().ok_or_else(|| self.err("expected a number"))?;
        if self.rest().starts_with('/') {
            self.pos += 1;
            self.digits()
                .ok_or_else(|| self.err("expected a denominator"))?;
        }
        parse_rational(&self.src[start..self.pos]).map_err(PolyError::from)
    }

    /// One `*`-separated product.
    fn term(&mut self) -> Result<(Rational, Monomial), PolyError> {
        let n = self.ring.nvars();
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; n];
        loop {
            self.skip_ws();
            if self.rest().starts_with(|c: char| c.is_ascii_digit()) {
                coeff *= self.number()?;
            } else if let Some((i, len)) = self.ring.vars().longest_prefix(self.rest()) {
                self.pos += len;
                let mut e = 1u32;
                if self.eat('^') {
                    self.skip_ws();
                    let d = self
                        .digits()
                        .ok_or_else(|| self.err("expected an exponent"))?;
                    e = d.parse().map_err(|_| self.err("exponent too large"))?;
                }
                exps[i] += e;
            } else {
                return Err(self.err("expected a number or a variable"));
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok((coeff, Monomial::from_exponents(exps)))
    }

    fn polynomial(&mut self) -> Result<Vec<(Rational, Monomial)>, PolyError> {
        let mut terms = Vec::new();
        let mut sign = Rational::one();
        if self.eat('-') {
            sign = -sign;
        } else {
            self.eat('+');
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((c * &sign, m));
            self.skip_ws();
            if self.eat('+') {
                sign = Rational::one();
            } else if self.eat('-') {
                sign = -Rational::one();
            } else {
                break;
            }
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(terms)
    }
}

impl Polynomial {
    /// Parses the text form against the variables of `ring`. Variable names
    /// are matched longest-first, so names such as `a-1,2` are allowed.
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Polynomial, PolyError> {
        let mut p = Parser {
            ring,
            src: text,
            pos: 0,
        };
        let terms = p.polynomial()?;
        Polynomial::from_terms(ring, terms)
    }

    pub fn to_record(&self) -> PolynomialRecord {
        PolynomialRecord {
            variables: self.ring().vars().names().to_vec(),
            terms: self
                .terms()
                .iter()
                .map(|t| (t.coeff.to_string(), t.mono.exponents().to_vec()))
                .collect(),
        }
    }

    /// Rebuilds a polynomial from its record; the record's variables must all
    /// be known to `ring` (they may be permuted).
    pub fn from_record(ring: &Arc<Ring>, rec: &PolynomialRecord) -> Result<Polynomial, PolyError> {
        let src = Ring::with_names(rec.variables.iter().cloned(), *ring.order())?;
        let terms = rec
            .terms
            .iter()
            .map(|(c, e)| {
                Ok((
                    parse_rational(c)?,
                    Monomial::from_exponents(e.iter().copied()),
                ))
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Polynomial::from_terms(&src, terms)?.to_ring(ring)
    }
}

/// Machine-readable polynomial: coefficients as `p/q` strings next to dense
/// exponent vectors over `variables`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialRecord {
    pub variables: Vec<String>,
    pub terms: Vec<(String, Vec<u32>)>,
}
