use crate::error::{require_positive, Result};
use crate::precision::{PrecisionConfig, SpecialValue, EPS};
use crate::specfun::bernoulli::bernoulli_f64;
use crate::specfun::quadrature::integrate_laplace;

/// Below this `t` the kernel is summed from its Taylor series.
const SERIES_RADIUS: f64 = 1.0;

/// Kernel `(1/(e^t−1) − 1/t + 1/2)/t` of the Binet remainder, with the
/// removable singularity at `t = 0` patched to its limit `1/12`.
///
/// Near zero the series `Σ_{k>=1} B_{2k} t^{2k−2}/(2k)!` is used.
pub fn binet_kernel(t: f64) -> f64 {
    if t == 0.0 {
        return 1.0 / 12.0;
    }
    if t < SERIES_RADIUS {
        let t2 = t * t;
        let mut pow = 1.0;
        let mut fact = 2.0; // (2k)!
        let mut sum = 0.0;
        for k in 1..=20usize {
            let term = bernoulli_f64(2 * k) / fact * pow;
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
            pow *= t2;
            let kk = (2 * k) as f64;
            fact *= (kk + 1.0) * (kk + 2.0);
        }
        sum
    } else {
        (1.0 / t.exp_m1() - 1.0 / t + 0.5) / t
    }
}

/// Remainder `θ(x)` of Binet's first formula, by quadrature of its
/// Laplace representation on `[0, T]`.
///
/// The kernel is positive and at most `1/12`, so the discarded tail is at
/// most `e^{−xT}/(12x)`; it is folded into the error bound.
pub fn binet_theta(x: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    require_positive("binet_theta", "x", x)?;
    let cutoff = cfg.cutoff_for(x);
    let rel = cfg.target_rel();
    let q = integrate_laplace(
        |t| binet_kernel(t) * (-x * t).exp(),
        x,
        cutoff,
        rel,
        cfg.quad_nodes,
    )?;
    let tail = (-x * cutoff).exp() / (12.0 * x);
    Ok(SpecialValue::new(
        q.value,
        q.error + tail + 4.0 * EPS * q.value.abs(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::{ln_gamma, LN_SQRT_2PI};

    #[test]
    fn kernel_is_continuous_at_series_switch() {
        let a = binet_kernel(SERIES_RADIUS * (1.0 - 1e-12));
        let b = binet_kernel(SERIES_RADIUS);
        assert!((a - b).abs() < 1e-14);
        assert!((binet_kernel(1e-9) - 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn theta_at_one() {
        let cfg = PrecisionConfig::default();
        let v = binet_theta(1.0, &cfg).unwrap();
        let expected = 1.0 - LN_SQRT_2PI;
        assert!(
            (v.value - expected).abs() < 1e-13,
            "{} vs {expected}",
            v.value
        );
        assert!(v.contains(expected) || (v.value - expected).abs() < 1e-15);
    }

    #[test]
    fn theta_decreasing() {
        let cfg = PrecisionConfig::default();
        let vals: Vec<f64> = [1.0, 2.0, 5.0, 10.0]
            .iter()
            .map(|&x| binet_theta(x, &cfg).unwrap().value)
            .collect();
        assert!(vals.windows(2).all(|w| w[0] > w[1]));
        assert!(vals.iter().all(|&v| v > 0.0));
    }

    #[test]
    fn binet_formula_residual() {
        let cfg = PrecisionConfig::default();
        for &x in &[0.5, 1.0, 3.0, 10.0] {
            let lg = ln_gamma(x, &cfg).unwrap();
            let th = binet_theta(x, &cfg).unwrap();
            let resid = lg.value - ((x - 0.5) * x.ln() - x + LN_SQRT_2PI + th.value);
            let tol = lg.abs_error_bound + th.abs_error_bound + 1e-14;
            assert!(resid.abs() <= tol, "x={x} resid={resid} tol={tol}");
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(binet_theta(0.0, &PrecisionConfig::default()).is_err());
    }
}
