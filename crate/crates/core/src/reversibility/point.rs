use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer as _;

use super::{ReversibilityError, SystemFamily};
use crate::poly::Polynomial;
use crate::scalars::{GaussianRational, Rational};

/// Coefficients `(a_{p_1q_1}, …, a_{p_ℓq_ℓ}, b_{q_ℓp_ℓ}, …, b_{q_1p_1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientPoint(pub Vec<GaussianRational>);

impl CoefficientPoint {
    pub fn zero(family: &SystemFamily) -> Self {
        CoefficientPoint(vec![GaussianRational::zero(); 2 * family.len()])
    }

    /// The point with a single coordinate equal to 1 (0-based position).
    pub fn unit(family: &SystemFamily, position: usize) -> Self {
        let mut p = Self::zero(family);
        p.0[position] = GaussianRational::one();
        p
    }

    pub fn values(&self) -> &[GaussianRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a_{p_kq_k}` and `b_{q_kp_k}` for the 0-based pair index `k`.
    pub fn pair(&self, k: usize) -> (&GaussianRational, &GaussianRational) {
        (&self.0[k], &self.0[self.0.len() - 1 - k])
    }

    fn check(&self, family: &SystemFamily) -> Result<(), ReversibilityError> {
        if self.0.len() != 2 * family.len() {
            return Err(ReversibilityError::DimensionMismatch {
                expected: 2 * family.len(),
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for CoefficientPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of [`is_time_reversible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Reversible,
    /// All generators vanish, but pair `index` (1-based) has exactly one of
    /// `a_{pq}`, `b_{qp}` equal to zero.
    OnVarietyNotReversible {
        index: usize,
    },
    /// Generator number `generator` (0-based in the list passed in) takes
    /// the nonzero `value`.
    OffVariety {
        generator: usize,
        value: GaussianRational,
    },
}

impl Verdict {
    pub fn is_reversible(&self) -> bool {
        matches!(self, Verdict::Reversible)
    }
}

/// Smallest relation `γ^exponent = value` implied by
/// `b_{qp} = γ^{p−q} a_{pq}` over the pairs with `a_{pq} ≠ 0`, `p ≠ q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaRelation {
    pub exponent: u64,
    /// `None` when no pair constrains `γ`; any nonzero `γ` works.
    pub value: Option<GaussianRational>,
}

impl GammaRelation {
    pub fn is_unconstrained(&self) -> bool {
        self.value.is_none()
    }

    /// Whether `γ` satisfies the relation.
    pub fn admits(&self, gamma: &GaussianRational) -> bool {
        match &self.value {
            _ if gamma.is_zero() => false,
            None => true,
            Some(c) => gamma.pow(self.exponent as i64).ok().as_ref() == Some(c),
        }
    }
}

impl fmt::Display for GammaRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.value, self.exponent) {
            (None, _) => write!(f, "unconstrained"),
            (Some(c), 1) => write!(f, "gamma = {c}"),
            (Some(c), d) => write!(f, "gamma^{d} = {c}"),
        }
    }
}

/// `a_k = t_k`, `b_k = γ^{p_k−q_k} t_k`: a reversible point by construction.
pub fn construct_reversible(
    family: &SystemFamily,
    t: &[GaussianRational],
    gamma: &GaussianRational,
) -> Result<CoefficientPoint, ReversibilityError> {
    if gamma.is_zero() {
        return Err(ReversibilityError::InvalidArgument(
            "gamma must be nonzero".into(),
        ));
    }
    if t.len() != family.len() {
        return Err(ReversibilityError::DimensionMismatch {
            expected: family.len(),
            found: t.len(),
        });
    }
    let n = 2 * family.len();
    let mut point = CoefficientPoint::zero(family);
    for (k, (&(p, q), tk)) in family.pairs().iter().zip(t).enumerate() {
        point.0[k] = tk.clone();
        point.0[n - 1 - k] = &gamma.pow(p - q)? * tk;
    }
    Ok(point)
}

/// Decides reversibility of `point` from generators of the Sibirsky ideal
/// (in any ring whose variables are the coefficient names).
pub fn is_time_reversible(
    family: &SystemFamily,
    point: &CoefficientPoint,
    generators: &[Polynomial],
) -> Result<Verdict, ReversibilityError> {
    point.check(family)?;
    let values: BTreeMap<String, GaussianRational> = family
        .coefficient_names()
        .into_iter()
        .zip(point.0.iter().cloned())
        .collect();
    for (i, g) in generators.iter().enumerate() {
        let value = g.evaluate(&values)?;
        if !value.is_zero() {
            return Ok(Verdict::OffVariety {
                generator: i,
                value,
            });
        }
    }
    for k in 0..family.len() {
        let (a, b) = point.pair(k);
        if a.is_zero() != b.is_zero() {
            return Ok(Verdict::OnVarietyNotReversible { index: k + 1 });
        }
    }
    Ok(Verdict::Reversible)
}

/// Solves `b_{qp} = γ^{p−q} a_{pq}` for `γ` directly, reducing the ratio
/// constraints with the extended gcd. Fails on points that admit no `γ`.
pub fn gamma_relations(
    family: &SystemFamily,
    point: &CoefficientPoint,
) -> Result<GammaRelation, ReversibilityError> {
    point.check(family)?;
    let mut constraints: Vec<(i64, GaussianRational)> = Vec::new();
    for (k, &(p, q)) in family.pairs().iter().enumerate() {
        let (a, b) = point.pair(k);
        if a.is_zero() != b.is_zero() {
            return Err(ReversibilityError::NotReversible);
        }
        if a.is_zero() {
            continue;
        }
        if p == q {
            if a != b {
                return Err(ReversibilityError::NotReversible);
            }
            continue;
        }
        constraints.push((p - q, b.checked_div(a)?));
    }
    let Some((first, rest)) = constraints.split_first() else {
        return Ok(GammaRelation {
            exponent: 1,
            value: None,
        });
    };
    let (mut d, mut c) = first.clone();
    for (e, ck) in rest {
        let g = d.extended_gcd(e);
        c = &c.pow(g.x)? * &ck.pow(g.y)?;
        d = g.gcd;
    }
    if d < 0 {
        d = -d;
        c = c.inv()?;
    }
    for (e, ck) in &constraints {
        if &c.pow(e / d)? != ck {
            return Err(ReversibilityError::NotReversible);
        }
    }
    Ok(GammaRelation {
        exponent: d as u64,
        value: Some(c),
    })
}

/// Image of `point` under the scaling `x ↦ ηx, y ↦ η⁻¹y`: `a_{pq}` is
/// multiplied by `η^{q−p}` and `b_{qp}` by `η^{p−q}`.
pub fn act(
    family: &SystemFamily,
    point: &CoefficientPoint,
    eta: &GaussianRational,
) -> Result<CoefficientPoint, ReversibilityError> {
    point.check(family)?;
    if eta.is_zero() {
        return Err(ReversibilityError::InvalidArgument(
            "eta must be nonzero".into(),
        ));
    }
    let zeta = family.zeta();
    point
        .0
        .iter()
        .zip(&zeta.0)
        .map(|(v, &z)| Ok(&eta.pow(-z)? * v))
        .collect::<Result<Vec<_>, ReversibilityError>>()
        .map(CoefficientPoint)
}

/// Complex form of the real quadratic system
/// `ẋ = … + a1 x² + a2 xy + a3 y²`, `ẏ = … + b1 x² + b2 xy + b3 y²`,
/// as a point of [`SystemFamily::quadratic`] with `b_{qp} = conj(a_{pq})`.
pub fn complexify_quadratic(
    a1: &Rational,
    a2: &Rational,
    a3: &Rational,
    b1: &Rational,
    b2: &Rational,
    b3: &Rational,
) -> CoefficientPoint {
    let q = |v: Rational, d: i64| v / Rational::from_integer(d.into());
    let a10 = GaussianRational::new(q(a1 + b2 - a3, 4), q(b1 - a2 - b3, 4));
    let a01 = GaussianRational::new(q(a1 + a3, 2), q(b1 + b3, 2));
    let am12 = GaussianRational::new(q(a1 - a3 - b2, 4), q(b1 + a2 - b3, 4));
    let (b2m1, b10, b01) = (am12.conj(), a01.conj(), a10.conj());
    CoefficientPoint(vec![a10, a01, am12, b2m1, b10, b01])
}
