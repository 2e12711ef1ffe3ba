//! `ln Γ`, `ψ` and `ψ^(m)` on the positive real axis.
//!
//! Every routine shifts its argument upward with the functional recurrence
//! and then sums the Stirling-type asymptotic series. For real `z > 0` these
//! series are enveloping, so the first omitted term bounds the truncation
//! error; rounding is bounded by a small multiple of `EPS` times the sum of
//! absolute values of the terms involved.

use crate::error::{require_positive, Error, Result};
use crate::precision::{PrecisionConfig, SpecialValue, EPS};
use crate::specfun::bernoulli::{bernoulli_f64, MAX_INDEX};

/// `ln √(2π)`.
pub const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Arguments are shifted to at least this value before the series is used.
pub const SHIFT_THRESHOLD: f64 = 10.0;

const MAX_TERMS: usize = MAX_INDEX / 2;

/// Stirling remainder `θ(z) = ln Γ(z) − (z−½)ln z + z − ln√(2π)` by its
/// asymptotic series `Σ B_{2k} / (2k(2k−1) z^{2k−1})`. Requires `z >= 10`.
pub(crate) fn stirling_remainder(z: f64, rel: f64) -> SpecialValue {
    debug_assert!(z >= SHIFT_THRESHOLD);
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut sum: f64 = 0.0;
    let mut abs_sum = 0.0;
    let mut next = 0.0;
    for k in 1..=MAX_TERMS {
        let kk = (2 * k) as f64;
        let term = bernoulli_f64(2 * k) / (kk * (kk - 1.0)) * pow;
        if k > 1 && term.abs() <= rel * sum.abs() * 0.01 {
            next = term.abs();
            break;
        }
        sum += term;
        abs_sum += term.abs();
        pow *= inv2;
        next = term.abs();
    }
    SpecialValue::new(sum, next + 4.0 * EPS * abs_sum)
}

/// Natural logarithm of the gamma function for `x > 0`.
pub fn ln_gamma(x: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    require_positive("ln_gamma", "x", x)?;
    let rel = cfg.target_rel();
    let mut z = x;
    let mut prod = 1.0;
    let mut shifts = 0u32;
    while z < SHIFT_THRESHOLD {
        prod *= z;
        z += 1.0;
        shifts += 1;
    }
    let lnz = z.ln();
    let main = (z - 0.5) * lnz - z + LN_SQRT_2PI;
    let rem = stirling_remainder(z, rel);
    let ln_prod = prod.ln();
    let value = main + rem.value - ln_prod;
    let rounding =
        4.0 * EPS * ((z - 0.5).abs() * lnz.abs() + z + LN_SQRT_2PI + ln_prod.abs() + value.abs())
            + (shifts as f64 + 1.0) * EPS;
    Ok(SpecialValue::new(value, rem.abs_error_bound + rounding))
}

/// Digamma `ψ(x) = Γ'(x)/Γ(x)` for `x > 0`.
pub fn digamma(x: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    require_positive("digamma", "x", x)?;
    let rel = cfg.target_rel();
    let mut z = x;
    let mut shift_sum = 0.0;
    let mut shifts = 0u32;
    while z < SHIFT_THRESHOLD {
        shift_sum += 1.0 / z;
        z += 1.0;
        shifts += 1;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let lnz = z.ln();
    let mut series = 0.0;
    let mut abs_series = 0.0;
    let mut pow = inv2;
    let mut next = 0.0;
    for k in 1..=MAX_TERMS {
        let kk = (2 * k) as f64;
        let term = bernoulli_f64(2 * k) / kk * pow;
        if k > 1 && term.abs() <= rel * 1e-3 * inv {
            next = term.abs();
            break;
        }
        series += term;
        abs_series += term.abs();
        pow *= inv2;
        next = term.abs();
    }
    let value = lnz - 0.5 * inv - series - shift_sum;
    let rounding = 4.0 * EPS * (lnz.abs() + inv + abs_series + shift_sum + value.abs())
        + shifts as f64 * EPS * shift_sum;
    Ok(SpecialValue::new(value, next + rounding))
}

/// `(n)!` as binary64 for `n <= 170`.
pub(crate) fn factorial_f64(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Largest polygamma order accepted.
pub const MAX_POLYGAMMA_ORDER: u32 = 150;

/// Polygamma `ψ^(m)(x)` for `m >= 1`, `x > 0`.
///
/// Computed as `(−1)^{m+1} P` with `P > 0` a sum of positive terms, so the
/// sign law `(−1)^{m+1} ψ^(m)(x) > 0` holds by construction.
pub fn polygamma(m: u32, x: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    if m == 0 {
        return digamma(x, cfg);
    }
    if m > MAX_POLYGAMMA_ORDER {
        return Err(Error::parameter(
            "polygamma",
            format!("order {m} exceeds {MAX_POLYGAMMA_ORDER}"),
        ));
    }
    require_positive("polygamma", "x", x)?;
    let rel = cfg.target_rel();
    let mf = m as f64;
    let m_fact = factorial_f64(m);
    let threshold = 12.0 + mf;

    let mut z = x;
    let mut shift_sum = 0.0;
    let mut shifts = 0u32;
    while z < threshold {
        shift_sum += z.powi(-(m as i32) - 1);
        z += 1.0;
        shifts += 1;
    }
    shift_sum *= m_fact;

    let inv = 1.0 / z;
    let inv2 = inv * inv;
    // (m−1)!/z^m + m!/(2 z^{m+1})
    let lead = m_fact / mf * inv.powi(m as i32);
    let mut asym = lead + 0.5 * m_fact * inv.powi(m as i32 + 1);
    let mut abs_asym = asym;
    // coefficient (2k+m−1)!/(2k)! starting at k = 1: (m+1)!/2
    let mut coef = m_fact * (mf + 1.0) / 2.0;
    let mut pow = inv.powi(m as i32 + 2);
    let mut next = 0.0;
    for k in 1..=MAX_TERMS {
        let term = bernoulli_f64(2 * k) * coef * pow;
        if k > 1 && term.abs() <= rel * 1e-3 * lead {
            next = term.abs();
            break;
        }
        asym += term;
        abs_asym += term.abs();
        next = term.abs();
        let kk = k as f64;
        coef *= (2.0 * kk + mf) * (2.0 * kk + mf + 1.0) / ((2.0 * kk + 1.0) * (2.0 * kk + 2.0));
        pow *= inv2;
    }
    let magnitude = shift_sum + asym;
    if !magnitude.is_finite() {
        return Err(Error::numerical(
            "polygamma",
            format!("psi^({m})({x}) overflows binary64"),
        ));
    }
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let rounding = EPS * ((shifts as f64 + 4.0) * shift_sum + (MAX_TERMS as f64 + 4.0) * abs_asym);
    Ok(SpecialValue::new(sign * magnitude, next + rounding))
}

/// Smallest `y` accepted by [`half_shift_series`].
pub(crate) const HALF_SHIFT_MIN_Y: f64 = 9.0;

/// j-th derivative in `y` of `ψ(y+½) − ln y − Σ_{k<from_k} a_k y^{−2k}`,
/// from the expansion `ψ(y+½) − ln y ~ Σ_{k>=1} a_k y^{−2k}` with
/// `a_k = (1 − 2^{1−2k}) B_{2k} / (2k)`.
///
/// Used where the direct difference would cancel: the result is formed from
/// terms that are each far smaller than `ψ` and `ln`. Truncation is charged
/// twice the first omitted term.
pub(crate) fn half_shift_series(j: u32, y: f64, from_k: usize, rel: f64) -> SpecialValue {
    debug_assert!(y >= HALF_SHIFT_MIN_Y && from_k >= 1);
    let inv = 1.0 / y;
    let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut sum: f64 = 0.0;
    let mut abs_sum = 0.0;
    let mut next = 0.0;
    let mut first = None;
    for k in from_k..=MAX_TERMS {
        let kk = 2 * k;
        let a_k = (1.0 - 2f64.powi(1 - kk as i32)) * bernoulli_f64(kk) / kk as f64;
        let rising: f64 = (0..j).map(|i| (kk as u32 + i) as f64).product();
        let term = sign * a_k * rising * inv.powi(kk as i32 + j as i32);
        let lead = *first.get_or_insert(term.abs());
        if k > from_k && term.abs() <= rel * 1e-3 * lead {
            next = term.abs();
            break;
        }
        sum += term;
        abs_sum += term.abs();
        next = term.abs();
    }
    SpecialValue::new(sum, 2.0 * next + 4.0 * EPS * abs_sum)
}

/// Euler–Mascheroni constant, produced as `−ψ(1)`.
pub fn euler_gamma(cfg: &PrecisionConfig) -> SpecialValue {
    -digamma(1.0, cfg).expect("digamma(1) is in domain")
}

#[cfg(test)]
mod tests {
    use super::*;

    const GAMMA_CHECK: f64 = 0.577_215_664_901_532_9;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    #[test]
    fn ln_gamma_trivial_values() {
        let c = cfg();
        let v = ln_gamma(1.0, &c).unwrap();
        assert!(v.value.abs() <= v.abs_error_bound.max(1e-15));
        let v = ln_gamma(5.0, &c).unwrap();
        assert!((v.value - 24f64.ln()).abs() < 1e-13);
        let v = ln_gamma(0.5, &c).unwrap();
        assert!((v.value - 0.572_364_942_924_700_1).abs() < 1e-14);
    }

    #[test]
    fn ln_gamma_error_bound_meets_target() {
        let c = cfg();
        for &x in &[1e-8, 0.3, 1.0, 2.5, 9.99, 10.0, 57.0, 1e4] {
            let v = ln_gamma(x, &c).unwrap();
            assert!(
                v.abs_error_bound <= 1e-13 * v.value.abs().max(1.0),
                "x={x} bound={}",
                v.abs_error_bound
            );
        }
    }

    #[test]
    fn ln_gamma_rejects_nonpositive() {
        assert!(matches!(ln_gamma(0.0, &cfg()), Err(Error::Domain { .. })));
        assert!(ln_gamma(-1.5, &cfg()).is_err());
        assert!(ln_gamma(f64::NAN, &cfg()).is_err());
    }

    #[test]
    fn digamma_values() {
        let c = cfg();
        let g = -digamma(1.0, &c).unwrap().value;
        assert!((g - GAMMA_CHECK).abs() < 1e-15);
        let d2 = digamma(2.0, &c).unwrap().value;
        assert!((d2 - (1.0 - GAMMA_CHECK)).abs() < 1e-15);
        let d3 = digamma(3.0, &c).unwrap().value;
        assert!((d3 - d2 - 0.5).abs() < 1e-15);
        assert!(digamma(0.0, &c).is_err());
    }

    #[test]
    fn polygamma_against_zeta_sums() {
        let c = cfg();
        let v = polygamma(1, 1.0, &c).unwrap();
        // π²/6 from direct summation with integral tail bracket
        let terms = 100_000u64;
        let s: f64 = (1..=terms).rev().map(|k| 1.0 / (k as f64 * k as f64)).sum();
        let oracle = s + 1.0 / (terms as f64 + 0.5);
        assert!((v.value - oracle).abs() < 1e-12);
        assert!((v.value - 1.644_934_066_848_226_4).abs() < 1e-14);

        let v = polygamma(2, 1.0, &c).unwrap();
        let s: f64 = (1..=terms).rev().map(|k| (k as f64).powi(-3)).sum();
        let oracle = -2.0 * (s + 0.5 / ((terms as f64 + 0.5) * (terms as f64 + 0.5)));
        assert!((v.value - oracle).abs() < 1e-12);
        assert!((v.value + 2.404_113_806_319_188_5).abs() < 1e-13);
    }

    #[test]
    fn polygamma_sign_law() {
        let c = cfg();
        for m in 1..=6 {
            let v = polygamma(m, 2.5, &c).unwrap().value;
            let expect_pos = m % 2 == 1;
            assert_eq!(v > 0.0, expect_pos, "m={m}");
        }
    }

    #[test]
    fn polygamma_recurrence() {
        let c = cfg();
        for m in 1..=8u32 {
            for &x in &[0.2, 1.3, 7.0, 31.0] {
                let a = polygamma(m, x + 1.0, &c).unwrap();
                let b = polygamma(m, x, &c).unwrap();
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let step = sign * factorial_f64(m) / x.powi(m as i32 + 1);
                let resid = a.value - b.value - step;
                let tol = a.abs_error_bound + b.abs_error_bound + 8.0 * EPS * step.abs();
                assert!(resid.abs() <= tol, "m={m} x={x} resid={resid} tol={tol}");
            }
        }
    }

    #[test]
    fn half_shift_series_matches_direct_route() {
        let c = cfg();
        for &y in &[9.5, 12.0, 40.0] {
            let direct = digamma(y + 0.5, &c).unwrap().value - y.ln();
            let s = half_shift_series(0, y, 1, c.target_rel());
            assert!((direct - s.value).abs() < 1e-15, "y={y}");
            for j in 1..=5u32 {
                let pg = polygamma(j, y + 0.5, &c).unwrap();
                let direct = pg.value
                    - if j % 2 == 1 { 1.0 } else { -1.0 } * factorial_f64(j - 1) / y.powi(j as i32);
                let s = half_shift_series(j, y, 1, c.target_rel());
                // the direct difference cancels; its noise scales with |ψ^(j)|
                assert!(
                    (direct - s.value).abs() <= pg.abs_error_bound + 64.0 * EPS * pg.value.abs(),
                    "j={j} y={y} {direct} {}",
                    s.value
                );
            }
        }
    }

    #[test]
    fn high_order_polygamma_is_finite() {
        let v = polygamma(40, 0.5, &cfg()).unwrap();
        assert!(v.value.is_finite() && v.value < 0.0);
        assert!(v.abs_error_bound < 1e-12 * v.value.abs());
    }
}
