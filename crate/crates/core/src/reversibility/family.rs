use std::collections::HashSet;
use std::sync::Arc;

use num_traits::One;

use super::ReversibilityError;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::scalars::Rational;

/// The ordered support `S = ((p_1, q_1), …, (p_ℓ, q_ℓ))` of the family
///
/// ```text
/// dx/dt = -Σ a_{p_k q_k} x^(p_k+1) y^(q_k),   dy/dt = Σ b_{q_k p_k} x^(q_k) y^(p_k+1).
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SystemFamily {
    pairs: Vec<(i64, i64)>,
}

/// Weights `ζ = (p_1−q_1, …, p_ℓ−q_ℓ, q_ℓ−p_ℓ, …, q_1−p_1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZetaVector(pub Vec<i64>);

impl ZetaVector {
    pub fn dot(&self, nu: &[u32]) -> i64 {
        self.0.iter().zip(nu).map(|(&z, &n)| z * i64::from(n)).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn index_label(i: i64, j: i64) -> String {
    if (0..=9).contains(&i) && (0..=9).contains(&j) {
        format!("{i}{j}")
    } else {
        format!("{i},{j}")
    }
}

impl SystemFamily {
    pub fn new(pairs: Vec<(i64, i64)>) -> Result<Self, ReversibilityError> {
        if pairs.is_empty() {
            return Err(ReversibilityError::InvalidFamily(
                "the support is empty".into(),
            ));
        }
        let mut seen = HashSet::new();
        for &(p, q) in &pairs {
            if p < -1 || q < 0 || p + q < 0 {
                return Err(ReversibilityError::InvalidFamily(format!(
                    "pair ({p}, {q}) needs p ≥ -1, q ≥ 0 and p + q ≥ 0"
                )));
            }
            if !seen.insert((p, q)) {
                return Err(ReversibilityError::InvalidFamily(format!(
                    "pair ({p}, {q}) appears twice"
                )));
            }
        }
        Ok(SystemFamily { pairs })
    }

    /// `ẋ = x(…) + a10 x² + a01 xy + a-1,2 y²`, the quadratic family.
    pub fn quadratic() -> Self {
        SystemFamily::new(vec![(1, 0), (0, 1), (-1, 2)]).expect("valid support")
    }

    /// ℓ, the number of support pairs.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn zeta(&self) -> ZetaVector {
        let head: Vec<i64> = self.pairs.iter().map(|&(p, q)| p - q).collect();
        let tail = head.iter().rev().map(|z| -z);
        ZetaVector(head.iter().copied().chain(tail).collect())
    }

    /// Name of `a_{p_k q_k}` (0-based `k`), e.g. `a10`, `a-1,2`.
    pub fn a_name(&self, k: usize) -> String {
        let (p, q) = self.pairs[k];
        format!("a{}", index_label(p, q))
    }

    /// Name of `b_{q_k p_k}` (0-based `k`), e.g. `b01`, `b2,-1`.
    pub fn b_name(&self, k: usize) -> String {
        let (p, q) = self.pairs[k];
        format!("b{}", index_label(q, p))
    }

    /// Coefficient names in coefficient-vector order
    /// `(a_1, …, a_ℓ, b_ℓ, …, b_1)`.
    pub fn coefficient_names(&self) -> Vec<String> {
        let l = self.len();
        (0..l)
            .map(|k| self.a_name(k))
            .chain((0..l).rev().map(|k| self.b_name(k)))
            .collect()
    }

    /// Default variable order of the `{a, b}` block: the a's in pair order,
    /// then `b_{q_1 p_1}, …, b_{q_ℓ p_ℓ}`.
    pub fn default_ab_order(&self) -> Vec<String> {
        let l = self.len();
        (0..l)
            .map(|k| self.a_name(k))
            .chain((0..l).map(|k| self.b_name(k)))
            .collect()
    }

    /// `w, gamma, t1, …, tℓ`: the variables eliminated to reach `k[a, b]`.
    pub fn elimination_names(&self) -> Vec<String> {
        ["w".to_string(), "gamma".to_string()]
            .into_iter()
            .chain((1..=self.len()).map(|k| format!("t{k}")))
            .collect()
    }

    /// Position in the coefficient vector of the variable called `name`.
    pub fn coefficient_position(&self, name: &str) -> Option<usize> {
        self.coefficient_names().iter().position(|n| n == name)
    }

    /// Default ring `k[w, γ, t, a, b]` under pure lex.
    pub fn default_ring(&self) -> Arc<Ring> {
        Ring::with_names(
            self.elimination_names()
                .into_iter()
                .chain(self.default_ab_order()),
            MonomialOrder::Lex,
        )
        .expect("generated names are distinct")
    }
}

/// Generators of the ideal `H` of the parametric surface of reversible
/// systems, in the family's default ring:
/// `1 − w·Π γ̃_k`, `a_k − t_k`, `γ̃_k b_k − γ̃̃_k t_k`, where
/// `(γ̃_k, γ̃̃_k) = (γ^(q_k−p_k), 1)` if `p_k ≤ q_k` and `(1, γ^(p_k−q_k))`
/// otherwise.
pub fn build_h(family: &SystemFamily) -> (Vec<Polynomial>, Arc<Ring>) {
    let ring = family.default_ring();
    let gens = build_h_in(family, &ring).expect("default ring has every variable");
    (gens, ring)
}

/// [`build_h`] inside an arbitrary ring containing all the generated names.
pub fn build_h_in(
    family: &SystemFamily,
    ring: &Arc<Ring>,
) -> Result<Vec<Polynomial>, ReversibilityError> {
    let n = ring.nvars();
    let idx = |name: &str| {
        ring.vars()
            .index_of(name)
            .ok_or_else(|| ReversibilityError::InvalidVariableOrder(format!("missing {name}")))
    };
    let one = Rational::one();
    let monomial = |factors: &[(usize, u32)]| {
        let mut m = Monomial::one(n);
        for &(i, e) in factors {
            m = m.mul(&Monomial::var(n, i, e));
        }
        m
    };
    let (w, gamma) = (idx("w")?, idx("gamma")?);
    let gamma_power = |e: i64| (gamma, u32::try_from(e.max(0)).expect("small exponent"));

    let total: i64 = family.pairs().iter().map(|&(p, q)| (q - p).max(0)).sum();
    let mut gens = vec![Polynomial::from_terms(
        ring,
        [
            (one.clone(), Monomial::one(n)),
            (-one.clone(), monomial(&[(w, 1), gamma_power(total)])),
        ],
    )?];
    for (k, &(p, q)) in family.pairs().iter().enumerate() {
        let (a, b, t) = (
            idx(&family.a_name(k))?,
            idx(&family.b_name(k))?,
            idx(&format!("t{}", k + 1))?,
        );
        gens.push(Polynomial::from_terms(
            ring,
            [
                (one.clone(), monomial(&[(a, 1)])),
                (-one.clone(), monomial(&[(t, 1)])),
            ],
        )?);
        gens.push(Polynomial::from_terms(
            ring,
            [
                (one.clone(), monomial(&[gamma_power(q - p), (b, 1)])),
                (-one.clone(), monomial(&[gamma_power(p - q), (t, 1)])),
            ],
        )?);
    }
    Ok(gens)
}
