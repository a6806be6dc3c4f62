mod support;

use adp_core::chow::{ChowElement, Monomial};
use rand::rngs::StdRng;
use rand::SeedableRng;

use support::specs;

const SAMPLES: usize = 120;

#[test]
fn engine_agrees_with_substitution_oracle() {
    for (i, spec) in specs().into_iter().enumerate() {
        let engine = spec.engine();
        let oracle = spec.oracle();
        assert_eq!(engine.dim(), oracle.dim(), "{spec:?}");
        let mut rng = StdRng::seed_from_u64(0x5eed + i as u64);
        for _ in 0..SAMPLES {
            let m = oracle.random_top_monomial(&mut rng);
            let mono = Monomial { base: [m[0], m[1]], zeta: m[2] };
            let x = ChowElement::from_terms(&engine, engine.dim(), [(mono, 1)]).unwrap();
            let expected = oracle.integrate(m, &mut rng);
            assert_eq!(x.integrate().unwrap(), expected, "{engine}: {m:?}");
        }
    }
}

#[test]
fn oracle_is_confluent() {
    // different random rewrite orders give the same number
    for (i, spec) in specs().into_iter().enumerate() {
        let oracle = spec.oracle();
        let mut pick = StdRng::seed_from_u64(i as u64);
        for _ in 0..20 {
            let m = oracle.random_top_monomial(&mut pick);
            let values: Vec<i64> = (0..5)
                .map(|s| oracle.integrate(m, &mut StdRng::seed_from_u64(1000 + s)))
                .collect();
            assert!(values.windows(2).all(|w| w[0] == w[1]), "{spec:?} {m:?} {values:?}");
        }
    }
}

#[test]
fn fiber_class_has_degree_one() {
    for spec in specs() {
        let a = spec.engine();
        let fiber = a.point().checked_mul(&a.zeta().map_or_else(|_| ChowElement::one(&a), |z| z.pow(a.rank() - 1).unwrap()));
        assert_eq!(fiber.unwrap().integrate().unwrap(), 1, "{a}");
    }
}
