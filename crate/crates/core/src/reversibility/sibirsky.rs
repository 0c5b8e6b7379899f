use std::collections::HashSet;
use std::sync::Arc;

use num_traits::One;

use super::monoid::{exponents_of, hilbert_union, involute, MonoidVector};
use super::{build_h_in, ReversibilityError, SystemFamily};
use crate::groebner::{eliminate, groebner_basis_with, GroebnerConfig, GroebnerStats, IdealBasis};
use crate::poly::{BinomialShape, MonomialOrder, Polynomial, Ring};
use crate::scalars::Rational;

/// Monomial order used for the elimination.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Pure lex on `w > γ > t > a, b`.
    #[default]
    Lex,
    /// Grevlex on the block `{w, γ, t}` followed by grevlex on `{a, b}`.
    BlockGrevlex,
}

#[derive(Clone, Debug, Default)]
pub struct SibirskyConfig {
    pub kind: OrderKind,
    /// Either a permutation of the `2ℓ` coefficient names, or of all
    /// `3ℓ+2` ring variables with `w, gamma, t1, …` occupying the first
    /// `ℓ+2` places. `None` selects the family's default order.
    pub variable_order: Option<Vec<String>>,
    pub groebner: GroebnerConfig,
}

/// Generators of the Sibirsky ideal of a family together with the Gröbner
/// basis of `H` they were read from.
#[derive(Clone, Debug)]
pub struct SibirskyIdeal {
    pub family: SystemFamily,
    /// `k[a, b]` in the configured variable order.
    pub ring: Arc<Ring>,
    /// Primitive, leading coefficient `+1`, sorted by total degree then by
    /// leading monomial.
    pub generators: Vec<Polynomial>,
    /// Reduced Gröbner basis of `H`.
    pub h_basis: IdealBasis,
    pub stats: GroebnerStats,
}

impl SibirskyIdeal {
    /// Exponent pairs `(ν, ν̂)` of the generators.
    pub fn binomial_pairs(&self) -> Result<Vec<(MonoidVector, MonoidVector)>, ReversibilityError> {
        binomial_pairs(&self.family, &self.generators)
    }

    /// Exponents of the generators together with the `ℓ` vectors
    /// `e_i + e_{2ℓ+1−i}`, sorted.
    pub fn hilbert_basis(&self) -> Result<Vec<MonoidVector>, ReversibilityError> {
        Ok(hilbert_union(&self.family, &self.binomial_pairs()?))
    }
}

fn resolve_variable_order(
    family: &SystemFamily,
    requested: Option<&[String]>,
) -> Result<(Vec<String>, Vec<String>), ReversibilityError> {
    let elim = family.elimination_names();
    let Some(requested) = requested else {
        return Ok((elim, family.default_ab_order()));
    };
    let ab: HashSet<String> = family.coefficient_names().into_iter().collect();
    let distinct: HashSet<&String> = requested.iter().collect();
    if distinct.len() != requested.len() {
        return Err(ReversibilityError::InvalidVariableOrder(
            "a variable is listed twice".into(),
        ));
    }
    if requested.len() == ab.len() {
        if let Some(bad) = requested.iter().find(|n| !ab.contains(*n)) {
            return Err(ReversibilityError::InvalidVariableOrder(format!(
                "{bad} is not a coefficient of this family"
            )));
        }
        return Ok((elim, requested.to_vec()));
    }
    if requested.len() == ab.len() + elim.len() {
        let (head, tail) = requested.split_at(elim.len());
        let elim_set: HashSet<&String> = elim.iter().collect();
        if head.iter().any(|n| !elim_set.contains(n)) || tail.iter().any(|n| !ab.contains(n)) {
            return Err(ReversibilityError::InvalidVariableOrder(format!(
                "the first {} variables must be {}",
                elim.len(),
                elim.join(", ")
            )));
        }
        return Ok((head.to_vec(), tail.to_vec()));
    }
    Err(ReversibilityError::InvalidVariableOrder(format!(
        "expected {} or {} names, found {}",
        ab.len(),
        ab.len() + elim.len(),
        requested.len()
    )))
}

/// Generators of the Sibirsky ideal `I_S = ⟨H⟩ ∩ k[a, b]`, computed by
/// elimination from a Gröbner basis of `H`.
pub fn sibirsky_ideal(
    family: &SystemFamily,
    config: &SibirskyConfig,
) -> Result<SibirskyIdeal, ReversibilityError> {
    let (elim, ab) = resolve_variable_order(family, config.variable_order.as_deref())?;
    let (h_order, ab_order) = match config.kind {
        OrderKind::Lex => (MonomialOrder::Lex, MonomialOrder::Lex),
        OrderKind::BlockGrevlex => (
            MonomialOrder::block_grevlex(elim.len()),
            MonomialOrder::Grevlex,
        ),
    };
    let h_ring = Ring::with_names(elim.iter().chain(&ab), h_order)?;
    let ab_ring = Ring::with_names(&ab, ab_order)?;

    let h = build_h_in(family, &h_ring)?;
    let (h_basis, stats) = groebner_basis_with(&h, &h_order, &config.groebner)?;
    let keep: Vec<&str> = ab.iter().map(String::as_str).collect();
    let mut generators = eliminate(&h_basis, &keep)?
        .iter()
        .map(|g| g.to_ring(&ab_ring).map(|g| g.primitive()))
        .collect::<Result<Vec<_>, _>>()?;
    generators.sort_by(|f, g| {
        f.total_degree()
            .cmp(&g.total_degree())
            .then_with(|| ab_order.cmp_mono(f.lm(), g.lm()))
    });
    Ok(SibirskyIdeal {
        family: family.clone(),
        ring: ab_ring,
        generators,
        h_basis,
        stats,
    })
}

/// Reads each generator as `[ν] − [ν̂]` and checks `ζ·ν = 0`.
pub fn binomial_pairs(
    family: &SystemFamily,
    generators: &[Polynomial],
) -> Result<Vec<(MonoidVector, MonoidVector)>, ReversibilityError> {
    let zeta = family.zeta();
    let one = Rational::one();
    generators
        .iter()
        .map(|g| {
            let unexpected = || ReversibilityError::UnexpectedGenerator(g.to_string());
            let Some(BinomialShape::Binomial(s, t)) = g.is_binomial() else {
                return Err(unexpected());
            };
            if s.coeff != one || t.coeff != -one.clone() {
                return Err(unexpected());
            }
            let nu = exponents_of(&s.mono, family, g.ring()).ok_or_else(unexpected)?;
            let nu_hat = exponents_of(&t.mono, family, g.ring()).ok_or_else(unexpected)?;
            if nu_hat.0 != involute(&nu.0) || zeta.dot(&nu.0) != 0 {
                return Err(unexpected());
            }
            Ok((nu, nu_hat))
        })
        .collect()
}

/// Hilbert basis of the monoid `M`, read off the Sibirsky ideal.
pub fn hilbert_basis(
    family: &SystemFamily,
    config: &SibirskyConfig,
) -> Result<Vec<MonoidVector>, ReversibilityError> {
    sibirsky_ideal(family, config)?.hilbert_basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{ideal_equal, GroebnerError};
    use crate::reversibility::{hilbert_oracle, minimal_elements};

    fn fam(pairs: &[(i64, i64)]) -> SystemFamily {
        SystemFamily::new(pairs.to_vec()).unwrap()
    }

    fn parse_all(r: &Arc<Ring>, texts: &[&str]) -> Vec<Polynomial> {
        texts
            .iter()
            .map(|t| Polynomial::parse(r, t).unwrap())
            .collect()
    }

    const QUADRATIC_BASIS: [&str; 5] = [
        "a01^3*b2,-1 - a-1,2*b10^3",
        "a10*a01 - b01*b10",
        "a10^3*a-1,2 - b2,-1*b01^3",
        "a10*a-1,2*b10^2 - a01^2*b2,-1*b01",
        "a10^2*a-1,2*b10 - a01*b2,-1*b01^2",
    ];

    #[test]
    fn quadratic_family_default_order() {
        let ideal = sibirsky_ideal(&SystemFamily::quadratic(), &SibirskyConfig::default()).unwrap();
        assert_eq!(ideal.generators.len(), 5);
        let expected = parse_all(&ideal.ring, &QUADRATIC_BASIS);
        assert!(ideal_equal(&ideal.generators, &expected, &MonomialOrder::Lex).unwrap());
    }

    #[test]
    fn quadratic_family_in_the_reference_order() {
        let order = ["a10", "a01", "a-1,2", "b10", "b01", "b2,-1"];
        let config = SibirskyConfig {
            variable_order: Some(order.iter().map(|s| s.to_string()).collect()),
            ..SibirskyConfig::default()
        };
        let ideal = sibirsky_ideal(&SystemFamily::quadratic(), &config).unwrap();
        let mut expected = parse_all(&ideal.ring, &QUADRATIC_BASIS);
        let mut got = ideal.generators.clone();
        let key = |p: &Polynomial| p.to_string();
        expected.sort_by_key(key);
        got.sort_by_key(key);
        assert_eq!(got, expected);
        assert_eq!(ideal.generators[0].to_string(), "a10*a01 - b10*b01");
    }

    #[test]
    fn block_order_gives_the_same_ideal() {
        let config = SibirskyConfig {
            kind: OrderKind::BlockGrevlex,
            ..SibirskyConfig::default()
        };
        let s = SystemFamily::quadratic();
        let block = sibirsky_ideal(&s, &config).unwrap();
        let lex = sibirsky_ideal(&s, &SibirskyConfig::default()).unwrap();
        let block_gens: Vec<Polynomial> = block
            .generators
            .iter()
            .map(|g| g.to_ring(&lex.ring).unwrap())
            .collect();
        assert!(ideal_equal(&block_gens, &lex.generators, &MonomialOrder::Lex).unwrap());
        assert!(block.binomial_pairs().is_ok());
    }

    #[test]
    fn small_families() {
        let ideal = sibirsky_ideal(&fam(&[(1, 1)]), &SibirskyConfig::default()).unwrap();
        assert_eq!(ideal.generators, parse_all(&ideal.ring, &["a11 - b11"]));
        assert_eq!(
            ideal.hilbert_basis().unwrap(),
            vec![
                MonoidVector(vec![0, 1]),
                MonoidVector(vec![1, 0]),
                MonoidVector(vec![1, 1])
            ]
        );

        // elimination of {1 − wγ, a01 − t1, γ·b10 − t1} leaves nothing
        let ideal = sibirsky_ideal(&fam(&[(0, 1)]), &SibirskyConfig::default()).unwrap();
        assert!(ideal.generators.is_empty());
        assert_eq!(
            ideal.hilbert_basis().unwrap(),
            vec![MonoidVector(vec![1, 1])]
        );
    }

    #[test]
    fn cubic_family_matches_hand_elimination() {
        let s = fam(&[(2, 0), (1, 1), (0, 2)]);
        let ideal = sibirsky_ideal(&s, &SibirskyConfig::default()).unwrap();
        let expected = parse_all(&ideal.ring, &["a11 - b11", "a20*a02 - b20*b02"]);
        assert!(ideal_equal(&ideal.generators, &expected, &MonomialOrder::Lex).unwrap());
        assert_eq!(ideal.generators.len(), 2);
        let pairs = ideal.binomial_pairs().unwrap();
        assert!(pairs.iter().all(|(nu, _)| s.zeta().dot(&nu.0) == 0));
    }

    #[test]
    fn hilbert_basis_of_the_quadratic_family() {
        let s = SystemFamily::quadratic();
        let basis = hilbert_basis(&s, &SibirskyConfig::default()).unwrap();
        assert_eq!(basis.len(), 13);
        assert_eq!(minimal_elements(&basis), basis);
        assert_eq!(basis, hilbert_oracle(&s.zeta(), 6));
        for v in [[1, 0, 0, 0, 0, 1], [0, 1, 0, 0, 1, 0], [0, 0, 1, 1, 0, 0]] {
            assert!(basis.contains(&MonoidVector(v.to_vec())));
        }
    }

    #[test]
    fn variable_order_validation() {
        let s = SystemFamily::quadratic();
        let run = |names: &[&str]| {
            let config = SibirskyConfig {
                variable_order: Some(names.iter().map(|s| s.to_string()).collect()),
                ..SibirskyConfig::default()
            };
            sibirsky_ideal(&s, &config)
        };
        assert!(matches!(
            run(&["a10", "a01"]),
            Err(ReversibilityError::InvalidVariableOrder(_))
        ));
        assert!(matches!(
            run(&["a10", "a10", "a-1,2", "b10", "b01", "b2,-1"]),
            Err(ReversibilityError::InvalidVariableOrder(_))
        ));
        assert!(matches!(
            run(&["a10", "t1", "a-1,2", "b10", "b01", "b2,-1"]),
            Err(ReversibilityError::InvalidVariableOrder(_))
        ));
        let full = [
            "gamma", "w", "t3", "t2", "t1", "b01", "a10", "a01", "a-1,2", "b10", "b2,-1",
        ];
        let ideal = run(&full).unwrap();
        assert_eq!(ideal.generators.len(), 5);
        let mut misplaced = full;
        misplaced.swap(0, 6);
        assert!(matches!(
            run(&misplaced),
            Err(ReversibilityError::InvalidVariableOrder(_))
        ));
    }

    #[test]
    fn budget_abort_is_reported() {
        let mut config = SibirskyConfig::default();
        config.groebner.budget.max_generators = Some(2);
        assert!(matches!(
            sibirsky_ideal(&SystemFamily::quadratic(), &config),
            Err(ReversibilityError::Groebner(GroebnerError::BudgetExceeded(
                _
            )))
        ));
    }

    #[test]
    fn rejects_non_binomial_generators() {
        let s = fam(&[(1, 1)]);
        let r = Ring::with_names(s.default_ab_order(), MonomialOrder::Lex).unwrap();
        for text in ["a11 + b11", "a11^2 - b11", "a11 - b11 + 1", "a11"] {
            assert!(
                binomial_pairs(&s, &parse_all(&r, &[text])).is_err(),
                "{text}"
            );
        }
    }
}
