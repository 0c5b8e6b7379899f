use crate::poly::{MonomialOrder, PolyError, Polynomial, Term};

use super::{GroebnerError, IdealBasis};

/// Full reduction of `f` by `divisors` (all nonzero, same ring). The first
/// divisor whose leading monomial divides the current leading term is used.
pub(crate) fn reduce(f: &Polynomial, divisors: &[&Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lt) = p.leading_term() {
        match divisors.iter().find(|g| g.lm().divides(&lt.mono)) {
            Some(g) => {
                let c = &lt.coeff / g.lc();
                let m = lt.mono.checked_div(g.lm()).expect("divisor checked above");
                p = p.sub_mul_term(&c, &m, g);
            }
            None => {
                rem.push(lt.clone());
                p = p.drop_leading();
            }
        }
    }
    Polynomial::from_sorted_terms(f.ring(), rem)
}

/// Remainder of `f` on division by the generators of `g`: no term of the
/// result is divisible by a leading monomial of `g`.
pub fn normal_form(f: &Polynomial, g: &IdealBasis) -> Result<Polynomial, GroebnerError> {
    let f = f.to_ring(g.ring())?;
    let divisors: Vec<&Polynomial> = g.generators().iter().collect();
    Ok(reduce(&f, &divisors))
}

/// `S(f, g) = (L / lt f)·f − (L / lt g)·g` with `L = lcm(lm f, lm g)`,
/// computed under `ord`.
pub fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    ord: &MonomialOrder,
) -> Result<Polynomial, GroebnerError> {
    if f.is_zero() || g.is_zero() {
        return Err(GroebnerError::ZeroInput);
    }
    if f.ring().vars() != g.ring().vars() {
        return Err(PolyError::RingMismatch.into());
    }
    let ring = f.ring().with_order(*ord)?;
    let (f, g) = (f.to_ring(&ring)?, g.to_ring(&ring)?);
    Ok(spoly(&f, &g))
}

pub(crate) fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let l = f.lm().lcm(g.lm());
    let uf = l.checked_div(f.lm()).expect("lcm is a multiple");
    let ug = l.checked_div(g.lm()).expect("lcm is a multiple");
    let a = f.mul_term(&f.lc().recip(), &uf);
    a.sub_mul_term(&g.lc().recip(), &ug, g)
}
