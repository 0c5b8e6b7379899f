use sibirsky::groebner::buchberger_certificate;
use sibirsky::poly::Polynomial;
use sibirsky::reversibility::{
    construct_reversible, hilbert_oracle, is_time_reversible, minimal_elements, monoid_member,
    monomial_of_in, sibirsky_ideal, OrderKind, SibirskyConfig, SystemFamily, Verdict,
};
use sibirsky::scalars::GaussianRational;

fn families() -> Vec<SystemFamily> {
    [
        vec![(1, 0), (0, 1), (-1, 2)],
        vec![(2, 0), (1, 1), (0, 2)],
        vec![(3, 0), (2, 1), (1, 2), (0, 3)],
        vec![(1, 0), (0, 1)],
        vec![(0, 1), (3, 0)],
        vec![(1, 0), (-1, 3)],
        vec![(2, 0), (0, 2)],
        vec![(1, 1), (0, 0), (2, 2)],
    ]
    .into_iter()
    .map(|pairs| SystemFamily::new(pairs).unwrap())
    .collect()
}

#[test]
fn generators_are_invariant_binomial_pairs() {
    for s in families() {
        let ideal = sibirsky_ideal(&s, &SibirskyConfig::default()).unwrap();
        let pairs = ideal.binomial_pairs().unwrap();
        for ((nu, nu_hat), g) in pairs.iter().zip(&ideal.generators) {
            assert!(monoid_member(&nu.0, &s).unwrap());
            let flipped = &monomial_of_in(nu_hat, &s, &ideal.ring).unwrap()
                - &monomial_of_in(nu, &s, &ideal.ring).unwrap();
            assert_eq!(
                flipped,
                g.scale(&(-sibirsky::scalars::Rational::from_integer(1.into())))
            );
        }
        assert!(
            buchberger_certificate(&ideal.h_basis).is_complete(),
            "{s:?}"
        );
    }
}

#[test]
fn hilbert_basis_matches_enumeration() {
    for s in families() {
        let ideal = sibirsky_ideal(&s, &SibirskyConfig::default()).unwrap();
        let basis = ideal.hilbert_basis().unwrap();
        let bound = basis.iter().map(|v| v.norm1()).max().unwrap() as u32;
        assert_eq!(
            minimal_elements(&basis),
            hilbert_oracle(&s.zeta(), bound),
            "{s:?}"
        );
        let n = 2 * s.len();
        for i in 0..s.len() {
            assert!(basis
                .iter()
                .any(|v| v.0[i] == 1 && v.0[n - 1 - i] == 1 && v.norm1() == 2));
        }
    }
}

#[test]
fn orders_agree_on_the_ideal() {
    for s in families() {
        let lex = sibirsky_ideal(&s, &SibirskyConfig::default()).unwrap();
        let config = SibirskyConfig {
            kind: OrderKind::BlockGrevlex,
            ..SibirskyConfig::default()
        };
        let block = sibirsky_ideal(&s, &config).unwrap();
        let moved: Vec<Polynomial> = block
            .generators
            .iter()
            .map(|g| g.to_ring(&lex.ring).unwrap())
            .collect();
        assert!(
            sibirsky::groebner::ideal_equal(&moved, &lex.generators, lex.ring.order()).unwrap(),
            "{s:?}"
        );
    }
}

#[test]
fn constructed_points_pass_for_every_family() {
    let gammas = [
        GaussianRational::ratio(-2, 1),
        GaussianRational::ratio(1, 3),
        "1+i".parse().unwrap(),
    ];
    for s in families() {
        let ideal = sibirsky_ideal(&s, &SibirskyConfig::default()).unwrap();
        for gamma in &gammas {
            let t: Vec<GaussianRational> = (0..s.len())
                .map(|k| GaussianRational::ratio(k as i64 + 2, 3))
                .collect();
            let p = construct_reversible(&s, &t, gamma).unwrap();
            assert_eq!(
                is_time_reversible(&s, &p, &ideal.generators).unwrap(),
                Verdict::Reversible,
                "{s:?} gamma = {gamma}"
            );
        }
    }
}
