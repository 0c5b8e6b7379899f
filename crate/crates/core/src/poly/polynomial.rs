use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, PolyError, VariableTable};
use crate::scalars::{GaussianRational, Integer, Rational};

/// Variable table plus the order polynomials of this ring are sorted by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    vars: VariableTable,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(vars: VariableTable, order: MonomialOrder) -> Result<Arc<Ring>, PolyError> {
        order.validate(vars.len())?;
        Ok(Arc::new(Ring { vars, order }))
    }

    pub fn with_names<I, S>(names: I, order: MonomialOrder) -> Result<Arc<Ring>, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ring::new(VariableTable::new(names)?, order)
    }

    pub fn vars(&self) -> &VariableTable {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Ring>, PolyError> {
        Ring::new(self.vars.clone(), order)
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Rational, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// Canonical sparse polynomial: terms strictly descending under the ring's
/// order, no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

/// Result of [`Polynomial::is_binomial`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BinomialShape {
    Monomial(Term),
    Binomial(Term, Term),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Ring operation with an explicit ring check.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial, PolyError> {
    if !same_ring(&f.ring, &g.ring) {
        return Err(PolyError::RingMismatch);
    }
    Ok(match op {
        PolyOp::Add => f.merge(g, false),
        PolyOp::Sub => f.merge(g, true),
        PolyOp::Mul => f.mul_unchecked(g),
    })
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn monomial(ring: &Arc<Ring>, coeff: Rational, mono: Monomial) -> Self {
        debug_assert_eq!(mono.len(), ring.nvars());
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term::new(coeff, mono)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable `name` as a polynomial.
    pub fn var(ring: &Arc<Ring>, name: &str) -> Result<Self, PolyError> {
        let i = ring
            .vars()
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::monomial(
            ring,
            Rational::one(),
            Monomial::var(ring.nvars(), i, 1),
        ))
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted,
    /// zero) terms.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (c, m) in terms {
            if m.len() != ring.nvars() {
                return Err(PolyError::LengthMismatch {
                    expected: ring.nvars(),
                    found: m.len(),
                });
            }
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_map(ring, acc))
    }

    fn from_map(ring: &Arc<Ring>, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| Term::new(c, m))
            .collect();
        let ord = *ring.order();
        terms.sort_unstable_by(|a, b| ord.cmp_mono(&b.mono, &a.mono));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Leading term under the ring's own order.
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }

    pub(crate) fn lc(&self) -> &Rational {
        &self.terms[0].coeff
    }

    /// Leading term under an arbitrary order.
    pub fn leading_term_under(&self, ord: &MonomialOrder) -> Result<&Term, PolyError> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp_mono(&a.mono, &b.mono))
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| t.mono.degree())
            .max()
            .unwrap_or(0)
    }

    /// `used[i]` is true when variable `i` occurs in some term.
    pub fn variables_used(&self) -> Vec<bool> {
        let mut used = vec![false; self.ring.nvars()];
        for t in &self.terms {
            for (u, &e) in used.iter_mut().zip(t.mono.exponents()) {
                *u |= e > 0;
            }
        }
        used
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.clone()))
                .collect(),
        }
    }

    /// `c · m · self`; multiplication by a monomial preserves the order.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.mul(m)))
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => self.scale(&t.coeff.recip()),
        }
    }

    /// Integer polynomial with coprime coefficients and positive leading
    /// coefficient, a rational multiple of `self`.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let den_lcm = self
            .terms
            .iter()
            .fold(Integer::one(), |acc, t| acc.lcm(t.coeff.denom()));
        let num_gcd = self.terms.iter().fold(Integer::zero(), |acc, t| {
            acc.gcd(&(t.coeff.numer() * (&den_lcm / t.coeff.denom())))
        });
        let mut factor = Rational::new(den_lcm, num_gcd);
        if self.lc().is_negative() {
            factor = -factor;
        }
        if factor.is_one() {
            self.clone()
        } else {
            self.scale(&factor)
        }
    }

    pub(crate) fn drop_leading(mut self) -> Polynomial {
        self.terms.remove(0);
        self
    }

    /// Wraps terms that are already canonical for `ring`.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp_mono(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// `self - c · m · g`, computed as a single merge.
    pub(crate) fn sub_mul_term(&self, c: &Rational, m: &Monomial, g: &Polynomial) -> Polynomial {
        let ord = *self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|t| (t.mono.mul(m), &t.coeff)).peekable();
        while i < self.terms.len() || gi.peek().is_some() {
            let ordering = match (self.terms.get(i), gi.peek()) {
                (Some(a), Some((bm, _))) => ord.cmp_mono(&a.mono, bm),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match ordering {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (bm, bc) = gi.next().unwrap();
                    out.push(Term::new(-(c * bc), bm));
                }
                Ordering::Equal => {
                    let (bm, bc) = gi.next().unwrap();
                    let coeff = &self.terms[i].coeff - c * bc;
                    if !coeff.is_zero() {
                        out.push(Term::new(coeff, bm));
                    }
                    i += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let sign = if negate {
            -Rational::one()
        } else {
            Rational::one()
        };
        self.sub_mul_term(&-sign, &Monomial::one(self.ring.nvars()), other)
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for a in &self.terms {
            for b in &other.terms {
                *acc.entry(a.mono.mul(&b.mono))
                    .or_insert_with(Rational::zero) += &a.coeff * &b.coeff;
            }
        }
        Self::from_map(&self.ring, acc)
    }

    /// Re-expresses the polynomial in `target`, matching variables by name
    /// and re-sorting under the target order.
    pub fn to_ring(&self, target: &Arc<Ring>) -> Result<Polynomial, PolyError> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let used = self.variables_used();
        let mut map = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.vars().names().iter().enumerate() {
            match target.vars().index_of(name) {
                Some(j) => map.push(Some(j)),
                None if !used[i] => map.push(None),
                None => return Err(PolyError::UnknownVariable(name.clone())),
            }
        }
        let n = target.nvars();
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|t| {
                let mut e = vec![0u32; n];
                for (i, &x) in t.mono.exponents().iter().enumerate() {
                    if let Some(j) = map[i] {
                        e[j] = x;
                    }
                }
                (t.coeff.clone(), Monomial::from_exponents(e))
            }),
        )
    }

    /// Exact value with each variable bound by name.
    pub fn evaluate(
        &self,
        point: &BTreeMap<String, GaussianRational>,
    ) -> Result<GaussianRational, PolyError> {
        let used = self.variables_used();
        let values = self
            .ring
            .vars()
            .names()
            .iter()
            .zip(&used)
            .map(|(name, &u)| match point.get(name) {
                Some(v) => Ok(v.clone()),
                None if !u => Ok(GaussianRational::zero()),
                None => Err(PolyError::UnboundVariable(name.clone())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.evaluate_at(&values)
    }

    /// Exact value with `values[i]` substituted for variable `i`.
    pub fn evaluate_at(&self, values: &[GaussianRational]) -> Result<GaussianRational, PolyError> {
        if values.len() != self.ring.nvars() {
            return Err(PolyError::LengthMismatch {
                expected: self.ring.nvars(),
                found: values.len(),
            });
        }
        let mut total = GaussianRational::zero();
        for t in &self.terms {
            let mut v = GaussianRational::from(t.coeff.clone());
            for (x, &e) in values.iter().zip(t.mono.exponents()) {
                if e > 0 {
                    v = &v * &x.pow(i64::from(e))?;
                }
            }
            total = &total + &v;
        }
        Ok(total)
    }

    /// The one or two terms of a monomial or binomial; `None` otherwise.
    pub fn is_binomial(&self) -> Option<BinomialShape> {
        match self.terms.as_slice() {
            [t] => Some(BinomialShape::Monomial(t.clone())),
            [s, t] => Some(BinomialShape::Binomial(s.clone(), t.clone())),
            _ => None,
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics if the rings differ; see [`poly_arith`] for the checked form.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, PolyOp::Add).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, PolyOp::Sub).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        poly_arith(self, rhs, PolyOp::Mul).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}
