use crate::poly::{MonomialOrder, PolyError, Polynomial};

use super::reduce::{reduce, spoly};
use super::{groebner_basis, BasisKind, GroebnerError, IdealBasis};

/// Generators of `⟨G⟩ ∩ k[keep]`, read off a Gröbner basis whose order
/// eliminates exactly the variables outside `keep`. Those variables must
/// come first in the ring.
pub fn eliminate(g: &IdealBasis, keep: &[&str]) -> Result<Vec<Polynomial>, GroebnerError> {
    if !g.is_groebner() {
        return Err(GroebnerError::NotGroebner);
    }
    let vars = g.ring().vars();
    let mut allowed = vec![false; vars.len()];
    for name in keep {
        let i = vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        allowed[i] = true;
    }
    let k = allowed.iter().filter(|&&a| !a).count();
    if allowed[..k].iter().any(|&a| a) {
        return Err(GroebnerError::IncompatibleOrder(
            "eliminated variables must precede the kept ones".into(),
        ));
    }
    if !g.order().eliminates_prefix(k) {
        return Err(GroebnerError::IncompatibleOrder(format!(
            "{:?} is not an elimination order for the first {k} variables",
            g.order()
        )));
    }
    Ok(g.generators()
        .iter()
        .filter(|p| p.terms().iter().all(|t| t.mono.supported_in(&allowed)))
        .cloned()
        .collect())
}

/// `f ∈ ⟨G⟩`, decided by reduction to zero modulo the Gröbner basis `G`.
pub fn ideal_member(f: &Polynomial, g: &IdealBasis) -> Result<bool, GroebnerError> {
    if !g.is_groebner() {
        return Err(GroebnerError::NotGroebner);
    }
    Ok(super::normal_form(f, g)?.is_zero())
}

/// Whether `⟨f1⟩ = ⟨f2⟩`: each list reduces to zero modulo a Gröbner basis
/// of the other, computed under `ord`.
pub fn ideal_equal(
    f1: &[Polynomial],
    f2: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<bool, GroebnerError> {
    let gb = |f: &[Polynomial]| -> Result<Option<IdealBasis>, GroebnerError> {
        match f.iter().any(|p| !p.is_zero()) {
            true => groebner_basis(f, ord).map(Some),
            false => Ok(None),
        }
    };
    let contained = |f: &[Polynomial], g: &Option<IdealBasis>| -> Result<bool, GroebnerError> {
        for p in f.iter().filter(|p| !p.is_zero()) {
            match g {
                None => return Ok(false),
                Some(g) if !ideal_member(p, g)? => return Ok(false),
                Some(_) => {}
            }
        }
        Ok(true)
    };
    let (g1, g2) = (gb(f1)?, gb(f2)?);
    Ok(contained(f1, &g2)? && contained(f2, &g1)?)
}

/// Outcome of reducing every S-polynomial of a basis, with no criteria.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub pairs_checked: usize,
    /// Index pairs whose S-polynomial has a nonzero remainder.
    pub failures: Vec<(usize, usize)>,
}

impl Certificate {
    pub fn is_complete(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Buchberger's criterion checked exhaustively over all pairs.
pub fn buchberger_certificate(g: &IdealBasis) -> Certificate {
    let gens: Vec<&Polynomial> = g.generators().iter().collect();
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            pairs_checked += 1;
            if !reduce(&spoly(gens[i], gens[j]), &gens).is_zero() {
                failures.push((i, j));
            }
        }
    }
    Certificate {
        pairs_checked,
        failures,
    }
}

impl IdealBasis {
    /// Marks the generators as a Gröbner basis after verifying the
    /// certificate.
    pub fn certify(self) -> Result<IdealBasis, GroebnerError> {
        if !buchberger_certificate(&self).is_complete() {
            return Err(GroebnerError::NotGroebner);
        }
        let (ring, gens) = (self.ring().clone(), self.into_generators());
        Ok(IdealBasis::new_unchecked(ring, gens, BasisKind::Groebner))
    }
}
