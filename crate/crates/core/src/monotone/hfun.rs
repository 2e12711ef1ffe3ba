//! The defect `H_λ` and its relatives.
//!
//! `H_λ(x) = ln Γ(x+1) − (x+½)ln(x+½) + x + ½ − ln√(2π) + 1/(24(x+λ))`.
//!
//! For `x >= 9` every quantity is assembled from asymptotic pieces that are
//! individually small, so the `O(1/x³)` size of `H_{1/2}` is resolved to full
//! relative precision. Below that the closed forms are used directly.

use crate::error::{require_nonnegative, require_positive, Error, Result};
use crate::precision::{PrecisionConfig, SpecialValue, EPS};
use crate::specfun::{
    digamma, factorial_f64, half_shift_series, ln_gamma, polygamma, stirling_remainder,
    HALF_SHIFT_MIN_Y, LN_SQRT_2PI,
};

/// Switch point between the direct and the asymptotic route.
const LARGE_X: f64 = 9.0;

/// `y·ln(1 + 1/(2y)) − ½` for `y >= 9.5`, by `Σ_{k>=1} (−u)^k / (2(k+1))`,
/// `u = 1/(2y)`.
fn half_log_defect(y: f64) -> SpecialValue {
    let u = 0.5 / y;
    let mut term = 1.0;
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut k = 1;
    loop {
        term *= -u;
        let t = term / (2.0 * (k as f64 + 1.0));
        sum += t;
        abs_sum += t.abs();
        if t.abs() < 1e-20 * abs_sum || k > 60 {
            break;
        }
        k += 1;
    }
    SpecialValue::new(sum, 4.0 * EPS * abs_sum + u.powi(k + 1))
}

/// `f(x) = ln Γ(x+1) − (x+½)ln(x+½) + x + ½ − ½ln(2π)`, i.e. `H_λ` without
/// its rational correction.
pub fn stirling_defect(x: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    require_positive("stirling_defect", "x", x)?;
    let y = x + 0.5;
    if x >= LARGE_X {
        let g = half_log_defect(y);
        let th = stirling_remainder(x + 1.0, cfg.target_rel());
        Ok(g + th)
    } else {
        let lg = ln_gamma(x + 1.0, cfg)?;
        let ylny = y * y.ln();
        let v = lg.value - ylny + y - LN_SQRT_2PI;
        let err = lg.abs_error_bound + 4.0 * EPS * (lg.value.abs() + ylny.abs() + y + LN_SQRT_2PI);
        Ok(SpecialValue::new(v, err))
    }
}

fn check_args(function: &'static str, x: f64, lambda: f64) -> Result<()> {
    require_positive(function, "x", x)?;
    require_nonnegative(function, "lambda", lambda)
}

/// `1/(24(x+λ))`
fn correction(x: f64, lambda: f64) -> SpecialValue {
    SpecialValue::exact(1.0 / (24.0 * (x + lambda)))
}

pub(crate) fn h_unchecked(x: f64, lambda: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    Ok(stirling_defect(x, cfg)? + correction(x, lambda))
}

/// `H_λ(x)` for `x > 0`, `λ >= 0`.
#[allow(non_snake_case)]
pub fn H_lambda(x: f64, lambda: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    check_args("H_lambda", x, lambda)?;
    h_unchecked(x, lambda, cfg)
}

/// `H'_λ(x) = ψ(x+1) − ln(x+½) − 1/(24(x+λ)²)`.
#[allow(non_snake_case)]
pub fn H_lambda_prime(x: f64, lambda: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    H_lambda_deriv(1, x, lambda, cfg)
}

/// `n`-th derivative of `H_λ`; `n = 0` is `H_λ` itself. For `n >= 2`,
///
/// `H^(n)(x) = ψ^(n−1)(x+1) − (−1)^n (n−2)!/(x+½)^{n−1} + (−1)^n n!/(24(x+λ)^{n+1})`.
#[allow(non_snake_case)]
pub fn H_lambda_deriv(n: u32, x: f64, lambda: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    check_args("H_lambda_deriv", x, lambda)?;
    deriv_unchecked(n, x, lambda, cfg)
}

pub(crate) fn deriv_unchecked(
    n: u32,
    x: f64,
    lambda: f64,
    cfg: &PrecisionConfig,
) -> Result<SpecialValue> {
    if n == 0 {
        return h_unchecked(x, lambda, cfg);
    }
    if n > 150 {
        return Err(Error::parameter("H_lambda_deriv", "order above 150"));
    }
    let y = x + 0.5;
    if x >= LARGE_X && y >= HALF_SHIFT_MIN_Y {
        large_x_deriv(n, x, lambda, cfg)
    } else {
        direct_deriv(n, x, lambda, cfg)
    }
}

fn direct_deriv(n: u32, x: f64, lambda: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    let y = x + 0.5;
    let xl = x + lambda;
    if n == 1 {
        let psi = digamma(x + 1.0, cfg)?;
        let lny = y.ln();
        let c = 1.0 / (24.0 * xl * xl);
        let v = psi.value - lny - c;
        let err = psi.abs_error_bound + 4.0 * EPS * (psi.value.abs() + lny.abs() + c);
        return Ok(SpecialValue::new(v, err));
    }
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let pg = polygamma(n - 1, x + 1.0, cfg)?;
    let t2 = -sign * factorial_f64(n - 2) / y.powi(n as i32 - 1);
    let t3 = sign * factorial_f64(n) / (24.0 * xl.powi(n as i32 + 1));
    let v = pg.value + t2 + t3;
    let err = pg.abs_error_bound + 4.0 * EPS * (n as f64) * (pg.value.abs() + t2.abs() + t3.abs());
    Ok(SpecialValue::new(v, err))
}

/// For `x >= 9`: `D^{n−1}[ψ(y+½) − ln y]` from the `y^{−2k}` series with
/// its first term merged into the rational correction, which is then
/// `(−1)^{n−1} n!/24 · [y^{−(n+1)} − (y+d)^{−(n+1)}]`, `d = λ − ½`.
fn large_x_deriv(n: u32, x: f64, lambda: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    let y = x + 0.5;
    let d = lambda - 0.5;
    let rest = half_shift_series(n - 1, y, 2, cfg.target_rel());
    let np1 = (n + 1) as f64;
    let sign = if (n - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let bracket = -(-np1 * (d / y).ln_1p()).exp_m1() * y.powf(-np1);
    let lead = sign * factorial_f64(n) / 24.0 * bracket;
    let lead = SpecialValue::new(lead, 8.0 * EPS * (n as f64 + 2.0) * lead.abs());
    Ok(rest + lead)
}

/// `−x − 1/(24 f(x))`, which tends to `½` as `x → ∞`.
pub fn necessary_limit(x: f64, cfg: &PrecisionConfig) -> Result<f64> {
    Ok(necessary_limit_value(x, cfg)?.value)
}

pub fn necessary_limit_value(x: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    let f = stirling_defect(x, cfg)?;
    if f.value.abs() <= f.abs_error_bound {
        return Err(Error::Indeterminate {
            function: "necessary_limit",
            detail: format!("f({x}) = {:e} is within its error bound", f.value),
        });
    }
    let inv = 1.0 / (24.0 * f.value);
    let rel = f.abs_error_bound / (f.value.abs() - f.abs_error_bound);
    let v = -x - inv;
    Ok(SpecialValue::new(
        v,
        inv.abs() * rel + 4.0 * EPS * (x + inv.abs()),
    ))
}

/// `ln G_{λ,μ}(x) = x + ln Γ(x+1) − (x+μ)ln(x+μ) + 1/(24(x+λ))`.
pub fn ln_g_lambda_mu(x: f64, lambda: f64, mu: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    require_positive("G_lambda_mu", "x", x)?;
    if !(x + lambda > 0.0 && x + mu > 0.0) || !lambda.is_finite() || !mu.is_finite() {
        return Err(Error::domain(
            "G_lambda_mu",
            format!("x={x} must exceed max(0, -lambda, -mu) with lambda={lambda}, mu={mu}"),
        ));
    }
    let lg = ln_gamma(x + 1.0, cfg)?;
    let xm = x + mu;
    let p = xm * xm.ln();
    let c = 1.0 / (24.0 * (x + lambda));
    let v = x + lg.value - p + c;
    let err = lg.abs_error_bound + 4.0 * EPS * (x + lg.value.abs() + p.abs() + c.abs());
    Ok(SpecialValue::new(v, err))
}

#[allow(non_snake_case)]
pub fn G_lambda_mu(x: f64, lambda: f64, mu: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    Ok(ln_g_lambda_mu(x, lambda, mu, cfg)?.exp())
}

/// `G_λ(x) = e^x Γ(x+1) (x+½)^{−(x+½)} exp(1/(24(x+λ)))`.
#[allow(non_snake_case)]
pub fn G_lambda(x: f64, lambda: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    check_args("G_lambda", x, lambda)?;
    G_lambda_mu(x, lambda, 0.5, cfg)
}

pub fn ln_g_lambda(x: f64, lambda: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    check_args("G_lambda", x, lambda)?;
    ln_g_lambda_mu(x, lambda, 0.5, cfg)
}

/// `ln g_β(x) = x + ln Γ(x+1) − (x+β)ln(x+β)` on `x > max(0, −β)`.
pub fn ln_g_beta(x: f64, beta: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    require_positive("g_beta", "x", x)?;
    if !(beta.is_finite() && x + beta > 0.0) {
        return Err(Error::domain(
            "g_beta",
            format!("x={x} must exceed max(0, -beta) with beta={beta}"),
        ));
    }
    let lg = ln_gamma(x + 1.0, cfg)?;
    let xb = x + beta;
    let p = xb * xb.ln();
    let v = x + lg.value - p;
    Ok(SpecialValue::new(
        v,
        lg.abs_error_bound + 4.0 * EPS * (x + lg.value.abs() + p.abs()),
    ))
}

pub fn g_beta(x: f64, beta: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    Ok(ln_g_beta(x, beta, cfg)?.exp())
}

/// `k`-th derivative (`k >= 1`) of `ln g_β`:
/// `ψ(x+1) − ln(x+β)` for `k = 1`, else
/// `ψ^(k−1)(x+1) − (−1)^k (k−2)!/(x+β)^{k−1}`.
pub fn ln_g_beta_deriv(k: u32, x: f64, beta: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    if k == 0 {
        return ln_g_beta(x, beta, cfg);
    }
    require_positive("g_beta", "x", x)?;
    let xb = x + beta;
    if !(beta.is_finite() && xb > 0.0) {
        return Err(Error::domain("g_beta", "x must exceed max(0, -beta)"));
    }
    let pg = polygamma(k - 1, x + 1.0, cfg)?;
    let t = if k == 1 {
        -xb.ln()
    } else {
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        -sign * factorial_f64(k - 2) / xb.powi(k as i32 - 1)
    };
    let v = pg.value + t;
    Ok(SpecialValue::new(
        v,
        pg.abs_error_bound + 4.0 * EPS * (k as f64 + 1.0) * (pg.value.abs() + t.abs()),
    ))
}
