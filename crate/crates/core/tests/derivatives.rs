use gamma_certify::monotone::{laplace_check, H_lambda_deriv};
use gamma_certify::PrecisionConfig;
use proptest::prelude::*;

/// Five-point central difference of `H^(n−1)` with step `h`.
fn central(n: u32, x: f64, lambda: f64, h: f64, cfg: &PrecisionConfig) -> f64 {
    let f = |t: f64| H_lambda_deriv(n - 1, t, lambda, cfg).unwrap().value;
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

/// Step balancing `h⁴` truncation against `ε/h` rounding, scaled by `x`.
fn step(x: f64) -> f64 {
    2e-3 * x.min(1.0).max(x * 0.05)
}

fn rel_err(n: u32, x: f64, lambda: f64, cfg: &PrecisionConfig) -> f64 {
    let exact = H_lambda_deriv(n, x, lambda, cfg).unwrap().value;
    let fd = central(n, x, lambda, step(x), cfg);
    (fd - exact).abs() / exact.abs()
}

#[test]
fn orders_one_to_four_on_fixed_points() {
    let cfg = PrecisionConfig::default();
    for &lambda in &[0.0, 0.5, 0.65, 1.5, 3.0] {
        for &x in &[0.05, 0.3, 1.0, 2.5, 8.5, 9.5, 20.0, 60.0] {
            for n in 1..=4 {
                let e = rel_err(n, x, lambda, &cfg);
                assert!(e < 1e-6, "n={n} x={x} lambda={lambda}: rel {e:e}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn orders_one_to_four_random(x in 0.05f64..80.0, lambda in 0.0f64..4.0, n in 1u32..=4) {
        let cfg = PrecisionConfig::default();
        let e = rel_err(n, x, lambda, &cfg);
        prop_assert!(e < 1e-6, "n={} x={} lambda={}: rel {:e}", n, x, lambda, e);
    }
}

#[test]
fn laplace_two_paths_on_product_set() {
    let cfg = PrecisionConfig::default();
    let mut count = 0;
    for &x in &[0.5, 1.0, 2.0, 5.0, 10.0] {
        for &lambda in &[0.0, 0.25, 0.5, 1.0, 1.5, 2.0] {
            let r = laplace_check(x, lambda, &cfg).unwrap();
            assert!(r.value.abs() < 1e-10, "x={x} lambda={lambda}: {r:?}");
            assert!(
                r.value.abs() <= r.abs_error_bound.max(1e-12),
                "x={x} lambda={lambda}: {r:?}"
            );
            count += 1;
        }
    }
    assert_eq!(count, 30);
}
