use std::cmp::Ordering;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::reduce::{reduce, spoly};
use super::{BasisKind, Budget, BudgetDiagnostics, BudgetLimit, GroebnerError, IdealBasis};
use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial, Ring};

#[derive(Clone, Debug, Default)]
pub struct GroebnerConfig {
    pub budget: Budget,
    /// Reduce batches of same-degree S-pairs on the rayon pool. The reduced
    /// basis is identical to the sequential run.
    pub parallel: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroebnerStats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub generators_added: usize,
    pub max_degree_seen: u64,
    pub elapsed: Duration,
}

/// Reduced Gröbner basis of `⟨polys⟩` under `ord`, without resource limits.
pub fn groebner_basis(
    polys: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<IdealBasis, GroebnerError> {
    groebner_basis_with(polys, ord, &GroebnerConfig::default()).map(|(b, _)| b)
}

/// Reduced Gröbner basis of `⟨polys⟩` under `ord`. The zero ideal yields an
/// empty basis and the unit ideal yields `{1}`.
pub fn groebner_basis_with(
    polys: &[Polynomial],
    ord: &MonomialOrder,
    config: &GroebnerConfig,
) -> Result<(IdealBasis, GroebnerStats), GroebnerError> {
    let first = polys.first().ok_or(GroebnerError::EmptyInput)?;
    let ring = first.ring().with_order(*ord)?;
    let inputs = polys
        .iter()
        .map(|p| {
            if p.ring().vars() != ring.vars() {
                return Err(PolyError::RingMismatch);
            }
            p.to_ring(&ring)
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut engine = Engine::new(ring, config);
    let outcome = engine.run(inputs);
    engine.stats.elapsed = engine.start.elapsed();
    outcome?;
    let basis = engine.reduced_basis();
    Ok((basis, engine.stats))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
    sugar: u64,
}

enum Flow {
    Continue,
    UnitIdeal,
}

struct Engine<'a> {
    ring: Arc<Ring>,
    config: &'a GroebnerConfig,
    start: Instant,
    polys: Vec<Polynomial>,
    sugar: Vec<u64>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    unit: bool,
    stats: GroebnerStats,
}

impl<'a> Engine<'a> {
    fn new(ring: Arc<Ring>, config: &'a GroebnerConfig) -> Self {
        Engine {
            ring,
            config,
            start: Instant::now(),
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            unit: false,
            stats: GroebnerStats::default(),
        }
    }

    fn abort(&self, limit: BudgetLimit) -> GroebnerError {
        GroebnerError::BudgetExceeded(Box::new(BudgetDiagnostics {
            limit,
            elapsed: self.start.elapsed(),
            generators_added: self.stats.generators_added,
            active_basis: self.active.len(),
            pending_pairs: self.pairs.len(),
            pairs_reduced: self.stats.pairs_reduced,
            max_degree_seen: self.stats.max_degree_seen,
        }))
    }

    fn check_time(&self) -> Result<(), GroebnerError> {
        match self.config.budget.max_time {
            Some(t) if self.start.elapsed() > t => Err(self.abort(BudgetLimit::Time)),
            _ => Ok(()),
        }
    }

    fn active_polys(&self) -> Vec<&Polynomial> {
        self.active.iter().map(|&k| &self.polys[k]).collect()
    }

    fn run(&mut self, inputs: Vec<Polynomial>) -> Result<(), GroebnerError> {
        for f in inputs {
            let r = reduce(&f, &self.active_polys());
            if let Flow::UnitIdeal = self.insert(r, f.total_degree())? {
                return Ok(());
            }
        }
        while !self.pairs.is_empty() {
            self.check_time()?;
            let batch = self.select();
            let snapshot = self.active_polys();
            let polys = &self.polys;
            let work = |p: &Pair| reduce(&spoly(&polys[p.i], &polys[p.j]), &snapshot);
            let remainders: Vec<Polynomial> = if self.config.parallel && batch.len() > 1 {
                batch.par_iter().map(work).collect()
            } else {
                batch.iter().map(work).collect()
            };
            drop(snapshot);
            for (pair, r) in batch.iter().zip(remainders) {
                self.stats.pairs_reduced += 1;
                // earlier members of the batch may have extended the basis
                let r = if r.is_zero() {
                    r
                } else {
                    reduce(&r, &self.active_polys())
                };
                if r.is_zero() {
                    self.stats.zero_reductions += 1;
                    continue;
                }
                if let Flow::UnitIdeal = self.insert(r, pair.sugar)? {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    /// Normal strategy: smallest lcm degree, then sugar, then the smaller
    /// lcm under the order. The parallel mode takes every pair at the minimal
    /// lcm degree.
    fn select(&mut self) -> Vec<Pair> {
        let ord = *self.ring.order();
        let key = |a: &Pair, b: &Pair| -> Ordering {
            a.degree
                .cmp(&b.degree)
                .then(a.sugar.cmp(&b.sugar))
                .then_with(|| ord.cmp_mono(&a.lcm, &b.lcm))
                .then((a.i, a.j).cmp(&(b.i, b.j)))
        };
        if self.config.parallel {
            let min_deg = self.pairs.iter().map(|p| p.degree).min().unwrap_or(0);
            let (mut batch, rest): (Vec<Pair>, Vec<Pair>) =
                self.pairs.drain(..).partition(|p| p.degree == min_deg);
            self.pairs = rest;
            batch.sort_by(key);
            return batch;
        }
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| key(&self.pairs[a], &self.pairs[b]))
            .expect("pairs nonempty");
        vec![self.pairs.swap_remove(best)]
    }

    fn insert(&mut self, r: Polynomial, sugar: u64) -> Result<Flow, GroebnerError> {
        if r.is_zero() {
            return Ok(Flow::Continue);
        }
        if r.is_constant() {
            self.unit = true;
            return Ok(Flow::UnitIdeal);
        }
        let h = r.primitive();
        let degree = h.total_degree();
        self.stats.max_degree_seen = self.stats.max_degree_seen.max(degree);
        self.stats.generators_added += 1;
        let budget = &self.config.budget;
        if budget.max_degree.is_some_and(|d| degree > d) {
            return Err(self.abort(BudgetLimit::Degree));
        }
        if budget
            .max_generators
            .is_some_and(|n| self.stats.generators_added > n)
        {
            return Err(self.abort(BudgetLimit::Generators));
        }
        let idx = self.polys.len();
        self.polys.push(h);
        self.sugar.push(sugar.max(degree));
        self.update(idx);
        Ok(Flow::Continue)
    }

    /// Gebauer–Möller update: adds the pairs of the new element `h` that
    /// survive the product and chain criteria, prunes old pairs by the chain
    /// criterion, and retires basis elements whose leading monomial `h`
    /// divides.
    fn update(&mut self, h: usize) {
        let lm_h = self.polys[h].lm().clone();
        let candidates: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, lm_h.lcm(self.polys[g].lm())))
            .collect();

        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g, l)) in candidates.iter().enumerate() {
            let coprime = lm_h.is_coprime(self.polys[*g].lm());
            let dominated = candidates[k + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && lm_h.lcm(polys[p.i].lm()) != p.lcm
                && lm_h.lcm(polys[p.j].lm()) != p.lcm)
        });

        for (g, lcm) in kept {
            if lm_h.is_coprime(self.polys[g].lm()) {
                continue;
            }
            let sugar = self.pair_sugar(g, h, &lcm);
            self.pairs.push(Pair {
                i: g,
                j: h,
                degree: lcm.degree(),
                lcm,
                sugar,
            });
        }

        let polys = &self.polys;
        self.active.retain(|&g| !lm_h.divides(polys[g].lm()));
        self.active.push(h);
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u64 {
        let side = |k: usize| self.sugar[k] + lcm.degree() - self.polys[k].lm().degree();
        side(i).max(side(j))
    }

    fn reduced_basis(&self) -> IdealBasis {
        if self.unit {
            return IdealBasis::new_unchecked(
                self.ring.clone(),
                vec![Polynomial::one(&self.ring)],
                BasisKind::Reduced,
            );
        }
        let active = self.active_polys();
        let mut gens: Vec<Polynomial> = active
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let others: Vec<&Polynomial> = active
                    .iter()
                    .enumerate()
                    .filter(|&(m, _)| m != k)
                    .map(|(_, p)| *p)
                    .collect();
                reduce(g, &others).monic()
            })
            .collect();
        let ord = *self.ring.order();
        gens.sort_by(|a, b| ord.cmp_mono(b.lm(), a.lm()));
        IdealBasis::new_unchecked(self.ring.clone(), gens, BasisKind::Reduced)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger_certificate, ideal_member};

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn textbook_example() {
        let r = Ring::with_names(["x", "y"], MonomialOrder::Lex).unwrap();
        let f = [p(&r, "x^2 - y"), p(&r, "x*y - x")];
        let gb = groebner_basis(&f, &MonomialOrder::Lex).unwrap();
        let expected = [p(&r, "x^2 - y"), p(&r, "x*y - x"), p(&r, "y^2 - y")];
        assert_eq!(gb.generators(), &expected);
        assert!(gb.satisfies_reduced_invariants());
        // cross-check: the ideals contain each other
        for e in &expected {
            assert!(ideal_member(e, &gb).unwrap());
        }
        let gb2 = groebner_basis(&expected, &MonomialOrder::Lex).unwrap();
        for g in &f {
            assert!(ideal_member(g, &gb2).unwrap());
        }
    }

    #[test]
    fn degenerate_ideals() {
        let r = Ring::with_names(["x", "y"], MonomialOrder::Lex).unwrap();
        let gb = groebner_basis(&[p(&r, "x")], &MonomialOrder::Lex).unwrap();
        assert_eq!(gb.generators(), &[p(&r, "x")]);
        let zero = groebner_basis(&[Polynomial::zero(&r)], &MonomialOrder::Lex).unwrap();
        assert!(zero.is_empty());
        let unit = groebner_basis(&[p(&r, "x*y - 1"), p(&r, "x")], &MonomialOrder::Lex).unwrap();
        assert_eq!(unit.generators(), &[Polynomial::one(&r)]);
        assert!(unit.is_unit());
        assert_eq!(
            groebner_basis(&[], &MonomialOrder::Lex).unwrap_err(),
            GroebnerError::EmptyInput
        );
    }

    #[test]
    fn budget_aborts_cleanly() {
        let r = Ring::with_names(["x", "y", "z"], MonomialOrder::Lex).unwrap();
        let f = [
            p(&r, "x^3 - y*z"),
            p(&r, "y^3 - x*z^2"),
            p(&r, "z^3 - x^2*y"),
        ];
        let config = GroebnerConfig {
            budget: Budget {
                max_degree: Some(3),
                ..Budget::default()
            },
            parallel: false,
        };
        match groebner_basis_with(&f, &MonomialOrder::Lex, &config) {
            Err(GroebnerError::BudgetExceeded(d)) => {
                assert_eq!(d.limit, BudgetLimit::Degree);
                assert!(d.max_degree_seen > 3);
            }
            other => panic!("expected abort, got {other:?}"),
        }
        let config = GroebnerConfig {
            budget: Budget {
                max_time: Some(Duration::ZERO),
                ..Budget::default()
            },
            parallel: false,
        };
        assert!(matches!(
            groebner_basis_with(&f, &MonomialOrder::Lex, &config),
            Err(GroebnerError::BudgetExceeded(d)) if d.limit == BudgetLimit::Time
        ));
    }

    #[test]
    fn parallel_matches_sequential() {
        let r = Ring::with_names(["x", "y", "z"], MonomialOrder::Grevlex).unwrap();
        // cyclic-3
        let f = [
            p(&r, "x + y + z"),
            p(&r, "x*y + y*z + z*x"),
            p(&r, "x*y*z - 1"),
        ];
        for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let seq = groebner_basis(&f, &ord).unwrap();
            let config = GroebnerConfig {
                parallel: true,
                ..GroebnerConfig::default()
            };
            let (par, _) = groebner_basis_with(&f, &ord, &config).unwrap();
            assert_eq!(seq, par);
            assert!(buchberger_certificate(&seq).is_complete());
        }
    }

    fn small_poly(r: Arc<Ring>) -> impl proptest::strategy::Strategy<Value = Polynomial> {
        use proptest::prelude::*;
        proptest::collection::vec((-3i64..=3, proptest::collection::vec(0u32..3, 3)), 1..4)
            .prop_map(move |terms| {
                Polynomial::from_terms(
                    &r,
                    terms.into_iter().map(|(c, e)| {
                        (
                            crate::scalars::Rational::from_integer(c.into()),
                            Monomial::from_exponents(e),
                        )
                    }),
                )
                .unwrap()
            })
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]

        #[test]
        fn reduced_basis_ignores_input_order(
            polys in proptest::collection::vec(
                small_poly(Ring::with_names(["x", "y", "z"], MonomialOrder::Grevlex).unwrap()),
                1..4,
            ),
        ) {
            let ord = MonomialOrder::Grevlex;
            let budget = GroebnerConfig {
                budget: Budget { max_degree: Some(12), ..Budget::default() },
                parallel: false,
            };
            let mut reversed = polys.clone();
            reversed.reverse();
            let Ok((a, _)) = groebner_basis_with(&polys, &ord, &budget) else {
                return Ok(());
            };
            let (b, _) = groebner_basis_with(&reversed, &ord, &budget).unwrap();
            proptest::prop_assert_eq!(&a, &b);
            proptest::prop_assert!(a.satisfies_reduced_invariants());
            proptest::prop_assert!(buchberger_certificate(&a).is_complete());
            for f in &polys {
                proptest::prop_assert!(ideal_member(f, &a).unwrap());
            }
        }

        #[test]
        fn normal_form_is_idempotent(
            f in small_poly(Ring::with_names(["x", "y", "z"], MonomialOrder::Grevlex).unwrap()),
            g in small_poly(Ring::with_names(["x", "y", "z"], MonomialOrder::Grevlex).unwrap()),
            h in small_poly(Ring::with_names(["x", "y", "z"], MonomialOrder::Grevlex).unwrap()),
        ) {
            let basis = groebner_basis(&[g, h], &MonomialOrder::Grevlex).unwrap();
            let nf = crate::groebner::normal_form(&f, &basis).unwrap();
            proptest::prop_assert_eq!(crate::groebner::normal_form(&nf, &basis).unwrap(), nf.clone());
            proptest::prop_assert!(ideal_member(&(&f - &nf), &basis).unwrap());
        }
    }
}
