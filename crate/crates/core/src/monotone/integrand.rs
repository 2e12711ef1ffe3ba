//! Laplace-side objects: `H'_λ(x) = ∫₀^∞ φ_λ(t) e^{−xt} dt` with
//!
//! `φ_λ(t) = e^{−t/2}/t − 1/(e^t − 1) − t e^{−λt}/24`,
//!
//! and the level function `h(t) = −(1/t) ln[(24/t²)(e^{−t/2} − t/(e^t − 1))]`
//! for which `φ_λ(t) ≥ 0 ⟺ λ ≥ h(t)`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{require_nonnegative, require_positive, Result};
use crate::monotone::hfun::deriv_unchecked;
use crate::precision::{PrecisionConfig, SpecialValue, EPS};
use crate::specfun::bernoulli::bernoulli;
use crate::specfun::quadrature::integrate_laplace;

/// Below this `t` both functions use their power series.
pub const SERIES_CUTOFF: f64 = 1.0;

const SERIES_LEN: usize = 48;

/// `c_n = ((−½)^n − B_n)/n!`, so that
/// `e^{−t/2}/t − 1/(e^t − 1) = Σ_{n≥0} c_n t^{n−1}`; `c_0 = c_1 = 0`, `c_2 = 1/24`.
fn series_coeffs() -> &'static [f64; SERIES_LEN] {
    static C: OnceLock<[f64; SERIES_LEN]> = OnceLock::new();
    C.get_or_init(|| {
        let mut out = [0.0; SERIES_LEN];
        let mut fact = BigInt::one();
        let mut half_pow = BigRational::one();
        let minus_half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        for (n, slot) in out.iter_mut().enumerate() {
            if n > 0 {
                fact *= BigInt::from(n);
                half_pow *= &minus_half;
            }
            let c = (&half_pow - bernoulli(n)) / BigRational::from_integer(fact.clone());
            *slot = c.to_f64().unwrap_or(0.0);
        }
        out
    })
}

/// `(24/t²)(e^{−t/2} − t/(e^t−1)) − 1` by its series, `t < 1`.
fn level_arg_m1_series(t: f64) -> f64 {
    let c = series_coeffs();
    let mut acc = 0.0;
    for n in (3..SERIES_LEN).rev() {
        acc = acc * t + c[n];
    }
    24.0 * t * acc
}

fn check(function: &'static str, t: f64, lambda: f64) -> Result<()> {
    require_positive(function, "t", t)?;
    require_nonnegative(function, "lambda", lambda)
}

/// `φ_λ(t)` with a rounding bound.
pub fn phi_value(t: f64, lambda: f64) -> Result<SpecialValue> {
    check("phi_integrand", t, lambda)?;
    Ok(phi_unchecked(t, lambda))
}

pub(crate) fn phi_unchecked(t: f64, lambda: f64) -> SpecialValue {
    if t < SERIES_CUTOFF {
        // c_2 t cancels the leading part of t e^{−λt}/24, leaving
        // t·[(1 − e^{−λt})/24 − t/48 + t² Σ_{n≥4} c_n t^{n−4}].
        let c = series_coeffs();
        let mut acc = 0.0;
        let mut abs_acc = 0.0;
        for n in (4..SERIES_LEN).rev() {
            acc = acc * t + c[n];
            abs_acc = abs_acc * t + c[n].abs();
        }
        let a = -(-lambda * t).exp_m1() / 24.0;
        let b = t / 48.0;
        let v = t * (a - b + t * t * acc);
        let err = 4.0 * EPS * t * (a.abs() + b + t * t * abs_acc);
        SpecialValue::new(v, err)
    } else {
        let a = (-0.5 * t).exp() / t;
        let b = 1.0 / t.exp_m1();
        let c = t * (-lambda * t).exp() / 24.0;
        let v = a - b - c;
        SpecialValue::new(v, 4.0 * EPS * (a + b + c))
    }
}

/// `φ_λ(t)` for `t > 0`, `λ >= 0`.
pub fn phi_integrand(t: f64, lambda: f64) -> Result<f64> {
    Ok(phi_value(t, lambda)?.value)
}

/// `h(t)` with a rounding bound.
pub fn h_value(t: f64) -> Result<SpecialValue> {
    require_positive("h_of_t", "t", t)?;
    Ok(h_unchecked(t))
}

pub(crate) fn h_unchecked(t: f64) -> SpecialValue {
    if t < SERIES_CUTOFF {
        let m1 = level_arg_m1_series(t);
        let ln_b = m1.ln_1p();
        let v = -ln_b / t;
        SpecialValue::new(v, 8.0 * EPS * v.abs() + 4.0 * EPS)
    } else {
        // ln B = ln 24 − 2 ln t − t/2 + ln(1 − t e^{−t/2}/(1 − e^{−t}))
        let q = t * (-0.5 * t).exp() / (-(-t).exp_m1());
        let parts = [24f64.ln(), -2.0 * t.ln(), -0.5 * t, (-q).ln_1p()];
        let ln_b: f64 = parts.iter().sum();
        let mag: f64 = parts.iter().map(|p| p.abs()).sum();
        let v = -ln_b / t;
        SpecialValue::new(v, 6.0 * EPS * mag / t + 2.0 * EPS * v.abs())
    }
}

/// `h(t)` for `t > 0`.
pub fn h_of_t(t: f64) -> Result<f64> {
    Ok(h_value(t)?.value)
}

/// `∫₀^∞ φ_λ(t) e^{−xt} dt − H'_λ(x)`, which should vanish. The error bound
/// combines quadrature, truncation of the range and the closed-form bound.
pub fn laplace_check(x: f64, lambda: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    check("laplace_check", x, lambda)?;
    let cutoff = cfg.cutoff_for(x);
    let rel = cfg.target_rel().max(1e-13);
    let q = integrate_laplace(
        |t| phi_unchecked(t, lambda).value * (-x * t).exp(),
        x,
        cutoff,
        rel,
        cfg.quad_nodes,
    )?;
    let tail = phi_tail_bound(x, lambda, cutoff);
    let closed = deriv_unchecked(1, x, lambda, cfg)?;
    Ok(SpecialValue::new(
        q.value - closed.value,
        q.error + tail + closed.abs_error_bound + 4.0 * EPS * q.value.abs(),
    ))
}

/// `∫_T^∞ |φ_λ(t)| e^{−xt} dt`, bounded term by term.
fn phi_tail_bound(x: f64, lambda: f64, big_t: f64) -> f64 {
    let a = (-(x + 0.5) * big_t).exp() / (big_t * (x + 0.5));
    let b = (-(x + 1.0) * big_t).exp() / ((x + 1.0) * (-(-big_t).exp_m1()));
    let r = x + lambda;
    let c = (-r * big_t).exp() * (r * big_t + 1.0) / (24.0 * r * r);
    a + b + c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_direct(t: f64, lambda: f64) -> f64 {
        (-0.5 * t).exp() / t - 1.0 / t.exp_m1() - t * (-lambda * t).exp() / 24.0
    }

    #[test]
    fn series_coefficients() {
        let c = series_coeffs();
        assert_eq!(&c[..2], &[0.0, 0.0]);
        assert!((c[2] - 1.0 / 24.0).abs() < 1e-18);
        assert!((c[3] + 1.0 / 48.0).abs() < 1e-18);
        // c_4 = 1/384 + 1/720
        assert!((c[4] - (1.0 / 384.0 + 1.0 / 720.0)).abs() < 1e-18);
    }

    #[test]
    fn phi_routes_meet() {
        for &lam in &[0.0, 0.5, 0.65, 1.0] {
            let s = phi_unchecked(1.0 - 1e-15, lam);
            let d = phi_unchecked(1.0, lam);
            assert!(
                (s.value - d.value).abs() < 1e-15,
                "{lam}: {} {}",
                s.value,
                d.value
            );
            let t = 0.7;
            assert!((phi_unchecked(t, lam).value - phi_direct(t, lam)).abs() < 1e-14);
        }
    }

    #[test]
    fn phi_leading_term() {
        // φ_λ(t) ≈ (2λ−1) t²/48 as t → 0
        for &lam in &[0.0, 0.25, 1.0] {
            let t = 1e-4;
            let v = phi_integrand(t, lam).unwrap();
            let lead = (2.0 * lam - 1.0) * t * t / 48.0;
            assert!((v - lead).abs() < 1e-3 * lead.abs(), "{lam}: {v} vs {lead}");
        }
        // at λ = ½ the t² term cancels
        let v = phi_integrand(1e-3, 0.5).unwrap();
        assert!(v.abs() < 1e-10 && v < 0.0);
    }

    #[test]
    fn h_limits_and_routes() {
        assert!((h_of_t(1e-6).unwrap() - 0.5).abs() < 1e-6);
        let a = h_unchecked(1.0 - 1e-15).value;
        let b = h_unchecked(1.0).value;
        assert!((a - b).abs() < 1e-14, "{a} {b}");
        // slow decay: h(t) ≈ (2 ln t − ln 24 + t/2)/t for large t
        let big: f64 = 1e4;
        let approx = (2.0 * big.ln() - 24f64.ln() + 0.5 * big) / big;
        assert!((h_of_t(big).unwrap() - approx).abs() < 1e-12);
    }

    #[test]
    fn level_set_equivalence() {
        for &t in &[0.01, 0.5, 2.0, 12.0, 40.0] {
            let h = h_of_t(t).unwrap();
            assert!(phi_integrand(t, h + 1e-3).unwrap() > 0.0, "t={t}");
            assert!(
                phi_integrand(t, (h - 1e-3).max(0.0)).unwrap() < 0.0,
                "t={t}"
            );
        }
    }

    #[test]
    fn laplace_matches_closed_form() {
        let cfg = PrecisionConfig::default();
        for &x in &[0.5, 1.0, 10.0] {
            for &lam in &[0.0, 0.5, 1.5] {
                let r = laplace_check(x, lam, &cfg).unwrap();
                assert!(r.value.abs() <= r.abs_error_bound, "x={x} lam={lam}: {r:?}");
                assert!(r.abs_error_bound < 1e-10, "x={x} lam={lam}: {r:?}");
            }
        }
    }
}
