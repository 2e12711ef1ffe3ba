//! Exact coefficient facts behind the two sufficiency arguments.
//!
//! The `λ = ½` side reduces to positivity of
//! `(t²−24)e^t + 24t e^{t/2} − t² + 24 = Σ_{k≥5} c_k t^k/(k! 2^k)`,
//! `c_k = [k(k−1)−24]2^k + 48k`. The `λ ≥ 3/2` side compares
//! `24[(λ+1)^k − λ^k − k(λ+½)^{k−1}]` with `k(k−1)[(3/2)^{k−2} − (½)^{k−2}]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::precision::{PrecisionConfig, SpecialValue, EPS};
use crate::specfun::quadrature::integrate;

#[derive(Debug, Clone, PartialEq)]
pub struct PivotCoeff {
    pub k: u32,
    pub c: BigInt,
    /// `c_k / (k! 2^k)`.
    pub term: BigRational,
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn series_coeff_pivot(k: u32) -> Result<PivotCoeff> {
    if k < 4 {
        return Err(Error::parameter(
            "series_coeff_pivot",
            format!("k must be >= 4, got {k}"),
        ));
    }
    let kk = BigInt::from(k);
    let two_k: BigInt = BigInt::from(2).pow(k);
    let c: BigInt = (&kk * (&kk - 1) - 24) * &two_k + BigInt::from(48) * &kk;
    let term = BigRational::new(c.clone(), factorial(k) * two_k);
    Ok(PivotCoeff { k, c, term })
}

/// `k³ + 23k − 24`, the chained lower estimate for `c_k`.
pub fn pivot_chained_bound(k: u32) -> BigInt {
    let kk = BigInt::from(k);
    &kk * &kk * &kk + BigInt::from(23) * &kk - 24
}

/// `[k(k−1) − 24](1+k) + 48k`, which must equal [`pivot_chained_bound`].
pub fn pivot_chained_expanded(k: u32) -> BigInt {
    let kk = BigInt::from(k);
    (&kk * (&kk - 1) - 24) * (&kk + 1) + BigInt::from(48) * &kk
}

/// Exact `(lhs, rhs)` of the per-`k` comparison for rational `λ`.
pub fn series_coeff_lambda_exact(
    k: u32,
    lambda: &BigRational,
) -> Result<(BigRational, BigRational)> {
    if k < 3 {
        return Err(Error::parameter(
            "series_coeff_lambda",
            format!("k must be >= 3, got {k}"),
        ));
    }
    if lambda.is_negative() {
        return Err(Error::domain("series_coeff_lambda", "lambda must be >= 0"));
    }
    let one = BigRational::one();
    let half = rat(1, 2);
    let kr = BigRational::from_integer(BigInt::from(k));
    let lhs = BigRational::from_integer(BigInt::from(24))
        * ((lambda + &one).pow(k as i32)
            - lambda.pow(k as i32)
            - &kr * (lambda + &half).pow(k as i32 - 1));
    let rhs = &kr * (&kr - &one) * (rat(3, 2).pow(k as i32 - 2) - half.pow(k as i32 - 2));
    Ok((lhs, rhs))
}

/// Floating counterpart of [`series_coeff_lambda_exact`].
pub fn series_coeff_lambda(k: u32, lambda: f64) -> Result<(f64, f64)> {
    if !(lambda.is_finite() && lambda >= 0.0) {
        return Err(Error::domain("series_coeff_lambda", "lambda must be >= 0"));
    }
    if k < 3 {
        return Err(Error::parameter(
            "series_coeff_lambda",
            format!("k must be >= 3, got {k}"),
        ));
    }
    let k_i = k as i32;
    let kf = k as f64;
    let lhs =
        24.0 * ((lambda + 1.0).powi(k_i) - lambda.powi(k_i) - kf * (lambda + 0.5).powi(k_i - 1));
    let rhs = kf * (kf - 1.0) * (1.5f64.powi(k_i - 2) - 0.5f64.powi(k_i - 2));
    Ok((lhs, rhs))
}

/// `(λ+1)^k − λ^k − k(λ+½)^{k−1}` and its lower estimate
/// `k(k−1)(k−2)λ^{k−3}/24`, exactly.
pub fn midpoint_lower_exact(k: u32, lambda: &BigRational) -> Result<(BigRational, BigRational)> {
    let (lhs, _) = series_coeff_lambda_exact(k, lambda)?;
    let defect = lhs / BigRational::from_integer(BigInt::from(24));
    let kk = BigInt::from(k);
    let bound = BigRational::from_integer(&kk * (&kk - 1) * (&kk - 2)) * lambda.pow(k as i32 - 3)
        / BigRational::from_integer(BigInt::from(24));
    Ok((defect, bound))
}

/// `[((3/2)^{k−2} − (½)^{k−2})/(k−2)]^{1/(k−3)}`, evaluated in log form.
pub fn kth_root_bound(k: u32) -> Result<f64> {
    if k < 4 {
        return Err(Error::parameter(
            "kth_root_bound",
            format!("k must be >= 4, got {k}"),
        ));
    }
    let m = (k - 2) as f64;
    let ln = m * 1.5f64.ln() + (-(1.0f64 / 3.0).powf(m)).ln_1p() - m.ln();
    Ok((ln / (k - 3) as f64).exp())
}

/// Exact base of [`kth_root_bound`], `((3/2)^{k−2} − (½)^{k−2})/(k−2)`,
/// together with a check that its `(k−3)`-th root is at most `3/2`.
pub fn kth_root_base_exact(k: u32) -> Result<(BigRational, bool)> {
    if k < 4 {
        return Err(Error::parameter(
            "kth_root_bound",
            format!("k must be >= 4, got {k}"),
        ));
    }
    let base = (rat(3, 2).pow(k as i32 - 2) - rat(1, 2).pow(k as i32 - 2))
        / BigRational::from_integer(BigInt::from(k - 2));
    let cap = rat(3, 2).pow(k as i32 - 3);
    let ok = base <= cap;
    Ok((base, ok))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MidpointDefect {
    pub defect: SpecialValue,
    pub lower: f64,
    pub upper: f64,
    pub holds: bool,
}

/// `mean_{[a,b]} f − f((a+b)/2)` against `(b−a)² m/24` and `(b−a)² M/24`.
pub fn midpoint_defect<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    m: f64,
    big_m: f64,
    cfg: &PrecisionConfig,
) -> Result<MidpointDefect> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::parameter("midpoint_defect", "need a < b"));
    }
    if m.is_nan() || big_m.is_nan() || m > big_m {
        return Err(Error::parameter("midpoint_defect", "need m <= M"));
    }
    let rel = cfg.target_rel().max(1e-14);
    let q = integrate(&f, a, b, 0.0, rel, cfg.quad_nodes)?;
    let w = b - a;
    let mid = f(0.5 * (a + b));
    let mean = q.value / w;
    let value = mean - mid;
    let err = q.error / w + 4.0 * EPS * (mean.abs() + mid.abs());
    let defect = SpecialValue::new(value, err);
    let lower = w * w * m / 24.0;
    let upper = w * w * big_m / 24.0;
    let slack = err + 4.0 * EPS * lower.abs().max(upper.abs());
    let holds = value >= lower - slack && value <= upper + slack;
    Ok(MidpointDefect {
        defect,
        lower,
        upper,
        holds,
    })
}

/// Nearest `f64` to an exact term.
pub fn term_to_f64(term: &BigRational) -> f64 {
    term.to_f64().unwrap_or(f64::NAN)
}

/// Reduced fraction `p/q` as a display string.
pub fn fraction_string(r: &BigRational) -> String {
    let g = r.numer().gcd(r.denom());
    let (p, q) = if g.is_zero() {
        (r.numer().clone(), r.denom().clone())
    } else {
        (r.numer() / &g, r.denom() / &g)
    };
    if q.is_one() {
        p.to_string()
    } else {
        format!("{p}/{q}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pivot_low_orders() {
        assert!(series_coeff_pivot(4).unwrap().c.is_zero());
        let c5 = series_coeff_pivot(5).unwrap();
        assert_eq!(c5.c, BigInt::from(112));
        assert_eq!(c5.term, rat(7, 240));
        assert_eq!(fraction_string(&c5.term), "7/240");
        assert!(series_coeff_pivot(3).is_err());
    }

    #[test]
    fn pivot_matches_taylor_oracle() {
        // (t²−24)e^t + 24t e^{t/2} − t² + 24 at t = 1/2, summed exactly to k = 40
        let mut s = BigRational::zero();
        for k in 5..=40 {
            let p = series_coeff_pivot(k).unwrap();
            s += p.term * rat(1, 2).pow(k as i32);
        }
        let t: f64 = 0.5;
        let direct = (t * t - 24.0) * t.exp() + 24.0 * t * (t / 2.0).exp() - t * t + 24.0;
        assert!(
            (term_to_f64(&s) - direct).abs() < 1e-14,
            "{} {direct}",
            term_to_f64(&s)
        );
    }

    #[test]
    fn chained_identity() {
        for k in 3..=100 {
            assert_eq!(pivot_chained_bound(k), pivot_chained_expanded(k));
        }
    }

    #[test]
    fn lambda_coefficients() {
        let l = rat(3, 2);
        let (lhs, rhs) = series_coeff_lambda_exact(3, &l).unwrap();
        assert_eq!(lhs, BigRational::from_integer(BigInt::from(6)));
        assert_eq!(rhs, lhs);
        let (lhs, rhs) = series_coeff_lambda_exact(4, &l).unwrap();
        assert!(lhs >= rhs);
        let (a, b) = series_coeff_lambda(3, 1.5).unwrap();
        assert_eq!((a, b), (6.0, 6.0));
    }

    #[test]
    fn kth_root_values() {
        assert!((kth_root_bound(4).unwrap() - 1.0).abs() < 1e-15);
        assert!((kth_root_bound(5).unwrap() - (26.0f64 / 24.0).sqrt()).abs() < 1e-15);
        for k in 4..=200 {
            assert!(kth_root_bound(k).unwrap() <= 1.5);
            assert!(kth_root_base_exact(k).unwrap().1);
        }
    }

    #[test]
    fn midpoint_examples() {
        let cfg = PrecisionConfig::default();
        let r = midpoint_defect(|u| u * u, 0.0, 1.0, 2.0, 2.0, &cfg).unwrap();
        assert!((r.defect.value - 1.0 / 12.0).abs() < 1e-15 && r.holds);
        let r = midpoint_defect(|u| u * u * u, 0.0, 1.0, 0.0, 6.0, &cfg).unwrap();
        assert!((r.defect.value - 0.125).abs() < 1e-15 && r.holds);
        let r = midpoint_defect(|u| (1.5 + u) * (1.5 + u), 0.0, 1.0, 2.0, 2.0, &cfg).unwrap();
        assert!((r.defect.value - 1.0 / 12.0).abs() < 1e-14 && r.holds);
        let r = midpoint_defect(|u| u * u, 0.0, 1.0, 2.5, 3.0, &cfg).unwrap();
        assert!(!r.holds);
        assert!(midpoint_defect(|u| u, 1.0, 0.0, 0.0, 0.0, &cfg).is_err());
    }
}
