use std::sync::Arc;

use num_traits::One;

use crate::poly::{MonomialOrder, PolyError, Polynomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// Arbitrary generators, no Gröbner guarantees.
    Generators,
    Groebner,
    /// Reduced Gröbner basis: monic, inter-reduced, sorted by descending
    /// leading monomial.
    Reduced,
}

/// A list of ideal generators in one ring, tagged with what is known about it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    kind: BasisKind,
}

impl IdealBasis {
    /// Plain generators; each is moved into `ring`.
    pub fn from_generators(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<Self, PolyError> {
        let generators = gens
            .iter()
            .map(|g| g.to_ring(ring))
            .filter(|g| !matches!(g, Ok(p) if p.is_zero()))
            .collect::<Result<_, _>>()?;
        Ok(IdealBasis {
            ring: ring.clone(),
            generators,
            kind: BasisKind::Generators,
        })
    }

    pub(crate) fn new_unchecked(
        ring: Arc<Ring>,
        generators: Vec<Polynomial>,
        kind: BasisKind,
    ) -> Self {
        IdealBasis {
            ring,
            generators,
            kind,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Polynomial> {
        self.generators
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn is_groebner(&self) -> bool {
        matches!(self.kind, BasisKind::Groebner | BasisKind::Reduced)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether this is the unit ideal `⟨1⟩`.
    pub fn is_unit(&self) -> bool {
        self.generators
            .iter()
            .any(|g| g.is_constant() && !g.is_zero())
    }

    /// Checks the reduced-basis invariants directly: monic generators,
    /// pairwise distinct, no term of one divisible by the leading monomial
    /// of another.
    pub fn satisfies_reduced_invariants(&self) -> bool {
        let gens = &self.generators;
        gens.iter().all(|g| !g.is_zero() && g.lc().is_one())
            && gens.iter().enumerate().all(|(i, g)| {
                gens.iter().enumerate().all(|(j, h)| {
                    i == j || (g != h && !h.terms().iter().any(|t| g.lm().divides(&t.mono)))
                })
            })
    }
}
