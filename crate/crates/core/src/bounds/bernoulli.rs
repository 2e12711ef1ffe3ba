use crate::bounds::{wrong_family, BoundFamily, BoundMargins, BoundPair};
use crate::error::{require_positive, Result};
use crate::monotone::integrand::phi_unchecked;
use crate::precision::{Margin, EPS};

const ALPHA: f64 = 1.5;
const BETA: f64 = 0.5;

/// `[e^{−x/2} − x² e^{−x/2}/24, e^{−x/2} − x² e^{−3x/2}/24]` around `x/(e^x − 1)`.
pub fn eval_bernoulli_fraction_bound(x: f64) -> Result<BoundPair> {
    require_positive("eval_bernoulli_fraction_bound", "x", x)?;
    let e = (-0.5 * x).exp();
    Ok(BoundPair {
        lower: e - x * x * (-BETA * x).exp() / 24.0,
        upper: e - x * x * (-ALPHA * x).exp() / 24.0,
        family: BoundFamily::BernoulliFraction,
        x,
    })
}

/// `[e^{−x}, e^{−x/2}]`.
pub fn eval_bernoulli_classic_bound(x: f64) -> Result<BoundPair> {
    require_positive("eval_bernoulli_classic_bound", "x", x)?;
    Ok(BoundPair {
        lower: (-x).exp(),
        upper: (-0.5 * x).exp(),
        family: BoundFamily::BernoulliClassic,
        x,
    })
}

/// `x/(e^x − 1) − (e^{−x/2} − x² e^{−λx}/24) = −x·φ_λ(x)`, so both sides of
/// the refined pair come from the integrand without cancellation.
pub fn bernoulli_margins(family: BoundFamily, x: f64) -> Result<BoundMargins> {
    require_positive("bernoulli_margins", "x", x)?;
    match family {
        BoundFamily::BernoulliFraction => {
            let lo = phi_unchecked(x, BETA);
            let up = phi_unchecked(x, ALPHA);
            Ok(BoundMargins {
                lower: Margin::new(-x * lo.value, x * lo.abs_error_bound, 0.0),
                upper: Margin::new(x * up.value, x * up.abs_error_bound, 0.0),
            })
        }
        BoundFamily::BernoulliClassic => {
            let target = x / x.exp_m1();
            let lo = (-x).exp();
            let up = (-0.5 * x).exp();
            let err = |a: f64| 4.0 * EPS * (a + target);
            Ok(BoundMargins {
                lower: Margin::new(target - lo, err(lo), target + lo),
                upper: Margin::new(up - target, err(up), target + up),
            })
        }
        other => Err(wrong_family("bernoulli_margins", other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{MarginClass, PrecisionConfig};

    #[test]
    fn values_at_one() {
        let t = 1.0 / (1f64.exp() - 1.0);
        let p = eval_bernoulli_fraction_bound(1.0).unwrap();
        assert!((p.lower - 0.581_259).abs() < 1e-6 && (p.upper - 0.597_234).abs() < 1e-6);
        assert!(p.lower < t && t < p.upper);
        let c = eval_bernoulli_classic_bound(1.0).unwrap();
        assert!((c.lower - 0.367_879).abs() < 1e-6 && (c.upper - 0.606_531).abs() < 1e-6);
    }

    #[test]
    fn small_x_limit() {
        let p = eval_bernoulli_fraction_bound(1e-9).unwrap();
        assert!((p.lower - 1.0).abs() < 1e-8 && (p.upper - 1.0).abs() < 1e-8);
    }

    #[test]
    fn margins_match_direct_and_hold() {
        let cfg = PrecisionConfig::default();
        for &x in &[0.01, 0.5, 3.0, 30.0] {
            let t = x / f64::exp_m1(x);
            let p = eval_bernoulli_fraction_bound(x).unwrap();
            let m = bernoulli_margins(BoundFamily::BernoulliFraction, x).unwrap();
            assert!((t - p.lower - m.lower.value).abs() < 1e-15, "{x}");
            assert!((p.upper - t - m.upper.value).abs() < 1e-15, "{x}");
            assert_eq!(m.lower.classify(&cfg), MarginClass::Holds, "{x}");
            assert_eq!(m.upper.classify(&cfg), MarginClass::Holds, "{x}");
        }
    }
}
