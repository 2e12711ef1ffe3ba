use gamma_certify::grid::GridSpec;
use gamma_certify::monotone::{
    h_of_t, lambda_star, phi_integrand, phi_sign_profile, H_lambda, H_lambda_prime,
};
use gamma_certify::PrecisionConfig;
use proptest::prelude::*;

const STAR: f64 = 0.651_849_890_341_256_6;

proptest! {
    #[test]
    fn phi_sign_matches_level_set(t in 1e-3f64..150.0, lambda in 0.0f64..3.0) {
        let p = phi_integrand(t, lambda).unwrap();
        let h = h_of_t(t).unwrap();
        prop_assume!((lambda - h).abs() > 1e-9);
        if lambda > h {
            prop_assert!(p >= 0.0, "t={} lambda={} h={}", t, lambda, h);
        } else {
            prop_assert!(p <= 0.0, "t={} lambda={} h={}", t, lambda, h);
        }
    }

    #[test]
    fn h_never_exceeds_threshold(t in 1e-4f64..1e4) {
        let h = h_of_t(t).unwrap();
        prop_assert!((0.5 - 1e-12..=STAR + 1e-12).contains(&h), "t={} h={}", t, h);
    }

    #[test]
    fn h_lambda_monotone(x in 1e-3f64..100.0, dx in 1e-3f64..10.0) {
        let cfg = PrecisionConfig::default();
        let lo = H_lambda(x, 0.5, &cfg).unwrap().value;
        let hi = H_lambda(x + dx, 0.5, &cfg).unwrap().value;
        prop_assert!(hi < lo);
        prop_assert!(H_lambda_prime(x, 2.0, &cfg).unwrap().value > 0.0);
    }
}

#[test]
fn phi_profiles_around_threshold() {
    let grid = GridSpec::log(1e-4, 200.0, 2000);
    assert!(phi_sign_profile(0.5, &grid).unwrap().all_nonpositive());
    assert!(phi_sign_profile(0.25, &grid).unwrap().all_nonpositive());
    assert!(phi_sign_profile(0.6, &grid).unwrap().mixed());
    assert!(phi_sign_profile(STAR - 0.01, &grid).unwrap().mixed());
    assert!(phi_sign_profile(STAR + 0.01, &grid)
        .unwrap()
        .all_nonnegative());
    assert!(phi_sign_profile(1.5, &grid).unwrap().all_nonnegative());
}

#[test]
fn threshold_nests_across_tolerances() {
    let cfg = PrecisionConfig::default();
    let a = lambda_star(1e-2, &cfg).unwrap();
    let b = lambda_star(1e-8, &cfg).unwrap();
    assert!(a.bracket.0 <= b.bracket.0 && b.bracket.1 <= a.bracket.1);
    assert!(b.bracket.1 - b.bracket.0 <= 1e-8);
    assert_eq!(lambda_star(1e-8, &cfg).unwrap(), b);
}
