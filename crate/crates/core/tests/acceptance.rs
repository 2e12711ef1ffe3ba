//! Acceptance checks at their pinned tolerances, one test per criterion.
//! Each test encodes its statement literally. Where the statement has the
//! wrong sign or ordering, the test fails and its message reports what
//! does hold instead.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use gamma_certify::bounds::{
    best_constant_ratio, bound_margins, compare_families, eval_bound, BoundFamily, FamilyOrdering,
    HarmonicConstant, PrintedSide,
};
use gamma_certify::harness::{check_claim, lookup};
use gamma_certify::monotone::{
    cm_check, default_cm_grid, kth_root_base_exact, lambda_star, laplace_check, necessary_limit,
    phi_sign_profile, pivot_chained_bound, series_coeff_lambda_exact, series_coeff_pivot, CmSign,
    H_lambda_deriv,
};
use gamma_certify::{GridSpec, MarginClass, PrecisionConfig, Verdict};

fn cfg() -> PrecisionConfig {
    PrecisionConfig::default()
}

fn phi_grid() -> GridSpec {
    GridSpec::log(1e-4, 200.0, 2000)
}

#[test]
fn acceptance_01_plus_side_complete_monotonicity() {
    let start = Instant::now();
    let grid = default_cm_grid().nodes();
    for l in [0.0, 0.25, 0.5] {
        let r = cm_check(l, CmSign::Plus, 6, &grid, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Verified, "lambda = {l}");
    }
    for l in [0.6, 1.0] {
        let r = cm_check(l, CmSign::Plus, 6, &grid, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Falsified, "lambda = {l}");
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 30.0, "{secs} s");
}

#[test]
fn acceptance_02_minus_side_and_integrand_sign() {
    let grid = default_cm_grid().nodes();
    for l in [1.5, 2.0, 5.0] {
        let r = cm_check(l, CmSign::Minus, 6, &grid, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Verified, "lambda = {l}");
    }
    let mut diagnostics = Vec::new();
    let mut literal = true;
    for l in [1.5, 2.0, 5.0] {
        let p = phi_sign_profile(l, &phi_grid()).unwrap();
        literal &= p.all_nonpositive();
        diagnostics.push(format!(
            "lambda={l}: {} positive, {} negative, all >= 0: {}",
            p.positive,
            p.negative,
            p.all_nonnegative()
        ));
    }
    assert!(
        literal,
        "phi <= 0 on all 2000 points fails; the opposite sign holds: {}",
        diagnostics.join("; ")
    );
}

#[test]
fn acceptance_03_threshold_and_sign_dichotomy() {
    let start = Instant::now();
    let r = lambda_star(1e-8, &cfg()).unwrap();
    assert!(r.lambda_star > 0.5 && r.lambda_star < 1.5);
    assert!(r.bracket.1 - r.bracket.0 <= 1e-8);
    let below = phi_sign_profile(r.lambda_star - 0.01, &phi_grid()).unwrap();
    let above = phi_sign_profile(r.lambda_star + 0.01, &phi_grid()).unwrap();
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 10.0, "{secs} s");
    assert!(below.mixed(), "mixed signs expected below the threshold");
    assert!(
        above.all_nonpositive(),
        "phi <= 0 above the threshold fails: {} positive, {} negative; all >= 0: {}",
        above.positive,
        above.negative,
        above.all_nonnegative()
    );
}

#[test]
fn acceptance_04_necessary_condition_limit() {
    let v = necessary_limit(1e4, &cfg()).unwrap();
    assert!((v - 0.5).abs() < 1e-3, "{v}");
}

#[test]
fn acceptance_05_gamma_containment() {
    let c = cfg();
    for f in [BoundFamily::QiGammaLow, BoundFamily::QiGammaHigh] {
        for x in GridSpec::log(1e-3, 100.0, 500).nodes() {
            let m = bound_margins(f, x, &c).unwrap();
            assert_eq!(m.lower.classify(&c), MarginClass::Holds, "{f} lower at {x}");
            assert_eq!(m.upper.classify(&c), MarginClass::Holds, "{f} upper at {x}");
        }
    }
}

#[test]
fn acceptance_06_best_constants() {
    let c = cfg();
    let sqrt_2pi = (2.0 * std::f64::consts::PI).sqrt();
    let beta = 2f64.sqrt() * (7.0f64 / 12.0).exp();
    let at_inf = best_constant_ratio(1e4, &c).unwrap().value;
    let at_zero = best_constant_ratio(1e-6, &c).unwrap().value;
    assert!((at_inf - sqrt_2pi).abs() / sqrt_2pi < 1e-3, "{at_inf}");
    assert!((at_zero - beta).abs() / beta < 1e-3, "{at_zero}");
}

#[test]
fn acceptance_07_harmonic_bounds() {
    let start = Instant::now();
    let c = cfg();
    for id in ["thm3.2-ineq1", "thm3.2-ineq2"] {
        let claim = lookup(id).unwrap();
        let out = check_claim(&claim, None, &c).unwrap();
        assert_eq!(out.verdict, Verdict::Verified, "{id}");
        assert_eq!(out.grid, GridSpec::linear(1.0, 1e6, 1_000_000));
    }
    let low = bound_margins(BoundFamily::HarmonicLow, 1.0, &c).unwrap();
    assert_eq!(low.lower.value, 0.0);
    let corrected = HarmonicConstant::Corrected;
    let high = bound_margins(
        BoundFamily::HarmonicHigh {
            constant: corrected,
        },
        1.0,
        &c,
    )
    .unwrap();
    assert_eq!(high.upper.value, 0.0);
    let printed = BoundFamily::HarmonicHigh {
        constant: HarmonicConstant::Printed,
    };
    let p = eval_bound(printed, 1.0, &c).unwrap();
    assert!((p.upper - 0.995_556).abs() < 1e-6 && p.upper < 1.0);
    assert_eq!(
        bound_margins(printed, 1.0, &c).unwrap().upper.classify(&c),
        MarginClass::Violated
    );
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 60.0, "{secs} s");
}

#[test]
fn acceptance_08_factorial_bounds() {
    let c = cfg();
    for f in [BoundFamily::FactorialLow, BoundFamily::FactorialHigh] {
        for n in 1..=170 {
            let m = bound_margins(f, n as f64, &c).unwrap();
            assert_ne!(m.lower.classify(&c), MarginClass::Violated, "{f} at {n}");
            assert_ne!(m.upper.classify(&c), MarginClass::Violated, "{f} at {n}");
        }
    }
    assert_eq!(
        bound_margins(BoundFamily::FactorialLow, 1.0, &c)
            .unwrap()
            .upper
            .value,
        0.0
    );
    assert_eq!(
        bound_margins(BoundFamily::FactorialHigh, 1.0, &c)
            .unwrap()
            .lower
            .value,
        0.0
    );

    let low = BoundFamily::FactorialAsPrinted {
        side: PrintedSide::Low,
    };
    let high = BoundFamily::FactorialAsPrinted {
        side: PrintedSide::High,
    };
    let a = eval_bound(low, 1.0, &c).unwrap().upper;
    let b = eval_bound(high, 1.0, &c).unwrap().lower;
    assert!((a - 0.9908).abs() < 1e-4 && a < 1.0, "{a}");
    assert!((b - 1.0033).abs() < 1e-4 && b > 1.0, "{b}");
}

#[test]
fn acceptance_09_family_comparison() {
    for x in [1.0, 2.0, 10.0] {
        let all = compare_families(x, &cfg()).unwrap();
        let c = all
            .iter()
            .find(|c| {
                c.first == BoundFamily::BukacGamma && c.second == BoundFamily::SevliBatirGamma
            })
            .unwrap();
        assert_eq!(c.lower_tighter, FamilyOrdering::Second, "x = {x}");
        assert_eq!(c.upper_tighter, FamilyOrdering::First, "x = {x}");
    }
}

#[test]
fn acceptance_10_bernoulli_fraction_containment() {
    let c = cfg();
    for f in [
        BoundFamily::BernoulliFraction,
        BoundFamily::BernoulliClassic,
    ] {
        for x in GridSpec::log(1e-3, 50.0, 500).nodes() {
            let m = bound_margins(f, x, &c).unwrap();
            assert_ne!(
                m.lower.classify(&c),
                MarginClass::Violated,
                "{f} lower at {x}"
            );
            assert_ne!(
                m.upper.classify(&c),
                MarginClass::Violated,
                "{f} upper at {x}"
            );
        }
    }
}

#[test]
fn acceptance_11_exact_coefficients() {
    assert_eq!(series_coeff_pivot(4).unwrap().c, BigInt::from(0));
    let c5 = series_coeff_pivot(5).unwrap();
    assert_eq!(c5.c, BigInt::from(112));
    assert_eq!(c5.term, BigRational::new(7.into(), 240.into()));

    let l = BigRational::new(3.into(), 2.into());
    let (lhs, rhs) = series_coeff_lambda_exact(3, &l).unwrap();
    assert_eq!(lhs, rhs);
    for k in 4..=60 {
        let (lhs, rhs) = series_coeff_lambda_exact(k, &l).unwrap();
        assert!(lhs >= rhs, "k = {k}");
    }
    for k in 4..=200 {
        assert!(kth_root_base_exact(k).unwrap().1, "k = {k}");
    }

    let failing: Vec<String> = (5..=60)
        .filter_map(|k| {
            let c = series_coeff_pivot(k).unwrap().c;
            let chained = pivot_chained_bound(k);
            (c < chained || chained <= BigInt::from(0))
                .then(|| format!("k={k}: c_k={c} < {chained}"))
        })
        .collect();
    assert!(
        failing.is_empty(),
        "c_k >= k^3 + 23k - 24 fails: {}",
        failing.join(", ")
    );
}

#[test]
fn acceptance_12_two_path_consistency() {
    let c = cfg();
    for x in [0.5, 1.0, 2.0, 5.0, 10.0] {
        for l in [0.0, 0.25, 0.5, 1.0, 1.5, 2.0] {
            let r = laplace_check(x, l, &c).unwrap();
            assert!(r.value.abs() < 1e-10, "x={x} lambda={l}: {}", r.value);
        }
    }
    for l in [0.0, 0.5, 1.5] {
        for x in [0.1, 1.0, 5.0, 30.0] {
            for n in 1..=4u32 {
                let f = |t: f64| H_lambda_deriv(n - 1, t, l, &c).unwrap().value;
                let h = 2e-3 * f64::min(x, 1.0);
                let fd = (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h))
                    / (12.0 * h);
                let exact = H_lambda_deriv(n, x, l, &c).unwrap().value;
                let rel = (fd - exact).abs() / exact.abs();
                assert!(rel < 1e-6, "n={n} x={x} lambda={l}: {rel:e}");
            }
        }
    }
}
