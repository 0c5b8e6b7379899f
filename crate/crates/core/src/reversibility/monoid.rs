use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::One;

use super::{ReversibilityError, SystemFamily, ZetaVector};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::scalars::Rational;

/// Exponent vector `ν ∈ ℕ₀^{2ℓ}` indexing the monomial
/// `[ν] = a_1^{ν_1} ⋯ a_ℓ^{ν_ℓ} b_ℓ^{ν_{ℓ+1}} ⋯ b_1^{ν_{2ℓ}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidVector(pub Vec<u32>);

impl MonoidVector {
    pub fn norm1(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &MonoidVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn involute(&self) -> MonoidVector {
        MonoidVector(involute(&self.0))
    }
}

/// Reverses a coefficient-ordered vector: entry `i` goes to `2ℓ+1−i`. Swaps
/// the a-block with the reflected b-block.
pub fn involute<T: Clone>(x: &[T]) -> Vec<T> {
    x.iter().rev().cloned().collect()
}

/// `ζ·ν = 0`, i.e. `[ν]` is invariant under the torus action.
pub fn monoid_member(nu: &[u32], family: &SystemFamily) -> Result<bool, ReversibilityError> {
    let zeta = family.zeta();
    if nu.len() != zeta.len() {
        return Err(ReversibilityError::DimensionMismatch {
            expected: zeta.len(),
            found: nu.len(),
        });
    }
    Ok(zeta.dot(nu) == 0)
}

/// Ring `k[a, b]` with the family's default variable order under lex.
pub fn coefficient_ring(family: &SystemFamily) -> Arc<Ring> {
    Ring::with_names(family.default_ab_order(), MonomialOrder::Lex)
        .expect("generated names are distinct")
}

/// The monomial `[ν]` in the default coefficient ring.
pub fn monomial_of(
    nu: &MonoidVector,
    family: &SystemFamily,
) -> Result<Polynomial, ReversibilityError> {
    monomial_of_in(nu, family, &coefficient_ring(family))
}

/// The monomial `[ν]` in any ring containing the coefficient names.
pub fn monomial_of_in(
    nu: &MonoidVector,
    family: &SystemFamily,
    ring: &Arc<Ring>,
) -> Result<Polynomial, ReversibilityError> {
    let names = family.coefficient_names();
    if nu.0.len() != names.len() {
        return Err(ReversibilityError::DimensionMismatch {
            expected: names.len(),
            found: nu.0.len(),
        });
    }
    let mut exps = vec![0u32; ring.nvars()];
    for (name, &e) in names.iter().zip(&nu.0) {
        let i = ring
            .vars()
            .index_of(name)
            .ok_or_else(|| ReversibilityError::InvalidVariableOrder(format!("missing {name}")))?;
        exps[i] = e;
    }
    Ok(Polynomial::monomial(
        ring,
        Rational::one(),
        Monomial::from_exponents(exps),
    ))
}

/// Inverse of [`monomial_of_in`]: reads `ν` off a monomial. Returns `None`
/// if the monomial involves a variable that is not a coefficient.
pub fn exponents_of(mono: &Monomial, family: &SystemFamily, ring: &Ring) -> Option<MonoidVector> {
    let mut nu = vec![0u32; 2 * family.len()];
    for (i, &e) in mono.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        nu[family.coefficient_position(ring.vars().name(i))?] = e;
    }
    Some(MonoidVector(nu))
}

/// Minimal elements of `set` under the componentwise order, sorted.
pub fn minimal_elements<'a, I>(set: I) -> Vec<MonoidVector>
where
    I: IntoIterator<Item = &'a MonoidVector>,
{
    let mut all: Vec<&MonoidVector> = set.into_iter().filter(|v| v.norm1() > 0).collect();
    all.sort_by_key(|v| (v.norm1(), (*v).clone()));
    all.dedup();
    let mut minimal: Vec<MonoidVector> = Vec::new();
    for v in all {
        if !minimal.iter().any(|u| u.le(v)) {
            minimal.push(v.clone());
        }
    }
    minimal.sort();
    minimal
}

/// All minimal nonzero `ν ≥ 0` with `ζ·ν = 0` and `‖ν‖₁ ≤ bound`, by
/// exhaustive enumeration.
pub fn hilbert_oracle(zeta: &ZetaVector, bound: u32) -> Vec<MonoidVector> {
    fn walk(
        zeta: &[i64],
        pos: usize,
        left: u32,
        dot: i64,
        cur: &mut Vec<u32>,
        out: &mut Vec<MonoidVector>,
    ) {
        if pos == zeta.len() {
            if dot == 0 && cur.iter().any(|&e| e > 0) {
                out.push(MonoidVector(cur.clone()));
            }
            return;
        }
        for e in 0..=left {
            cur.push(e);
            walk(
                zeta,
                pos + 1,
                left - e,
                dot + zeta[pos] * i64::from(e),
                cur,
                out,
            );
            cur.pop();
        }
    }
    let mut solutions = Vec::new();
    walk(&zeta.0, 0, bound, 0, &mut Vec::new(), &mut solutions);
    minimal_elements(&solutions)
}

/// Union of the exponent pairs `ν, ν̂` of the given binomials with the
/// forced elements `e_i + e_{2ℓ+1−i}`, sorted and deduplicated.
pub(crate) fn hilbert_union(
    family: &SystemFamily,
    pairs: &[(MonoidVector, MonoidVector)],
) -> Vec<MonoidVector> {
    let n = 2 * family.len();
    let mut set: BTreeSet<MonoidVector> = BTreeSet::new();
    for (nu, nu_hat) in pairs {
        set.insert(nu.clone());
        set.insert(nu_hat.clone());
    }
    for i in 0..family.len() {
        let mut v = vec![0u32; n];
        v[i] = 1;
        v[n - 1 - i] = 1;
        set.insert(MonoidVector(v));
    }
    set.into_iter().collect()
}
