use crate::bounds::{wrong_family, BoundFamily, BoundMargins, BoundPair};
use crate::error::{Error, Result};
use crate::monotone::hfun::deriv_unchecked;
use crate::precision::{Margin, PrecisionConfig, SpecialValue, EPS};
use crate::specfun::{digamma, euler_gamma, HarmonicExact, HarmonicFloat};

/// `H_n` is tracked exactly up to this index, then by compensated summation.
pub const EXACT_HARMONIC_LIMIT: u64 = 10_000;

/// `(λ, K_lo, K_up)` with the bounds `ln(n+½) + 1/(24(n+λ)²) + K`.
fn harmonic_constants(family: BoundFamily, cfg: &PrecisionConfig) -> Result<(f64, f64, f64)> {
    let gamma = euler_gamma(cfg).value;
    let k1 = 1.0 - 1.5f64.ln();
    match family {
        BoundFamily::HarmonicLow => Ok((0.5, k1 - 1.0 / 54.0, gamma)),
        BoundFamily::HarmonicHigh { constant } => Ok((1.5, gamma, k1 - constant.value())),
        other => Err(wrong_family("eval_harmonic_bound", other)),
    }
}

fn check_n(function: &'static str, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain(function, "n must be >= 1"));
    }
    Ok(n as f64)
}

pub fn eval_harmonic_bound(
    family: BoundFamily,
    n: u64,
    cfg: &PrecisionConfig,
) -> Result<BoundPair> {
    let x = check_n("eval_harmonic_bound", n)?;
    let (lambda, lo, up) = harmonic_constants(family, cfg)?;
    let z = x + lambda;
    let base = (x + 0.5).ln() + 1.0 / (24.0 * z * z);
    Ok(BoundPair {
        lower: base + lo,
        upper: base + up,
        family,
        x,
    })
}

/// Margins through `H_n = ψ(n+1) + γ`: each side reduces to a difference of
/// `H'_λ` values, with `K = γ + H'_λ(1) + (1/(24(1+λ)²) − C)` for the
/// constants involving `1 − ln(3/2)`.
pub fn harmonic_margins(
    family: BoundFamily,
    n: u64,
    cfg: &PrecisionConfig,
) -> Result<BoundMargins> {
    let x = check_n("harmonic_margins", n)?;
    let (lambda, inner_c) = match family {
        BoundFamily::HarmonicLow => (0.5, 1.0 / 54.0),
        BoundFamily::HarmonicHigh { constant } => (1.5, constant.value()),
        other => return Err(wrong_family("harmonic_margins", other)),
    };
    let hn = deriv_unchecked(1, x, lambda, cfg)?;
    let h1 = deriv_unchecked(1, 1.0, lambda, cfg)?;
    let off = 1.0 / (24.0 * (1.0 + lambda) * (1.0 + lambda)) - inner_c;
    let scale = hn.value.abs() + h1.value.abs() + off.abs();
    let err = hn.abs_error_bound + h1.abs_error_bound + 2.0 * EPS * scale;
    let from_one = |v: f64| Margin::new(v, err, scale);
    let alone = |v: f64| Margin::new(v, hn.abs_error_bound, hn.value.abs());
    Ok(match family {
        BoundFamily::HarmonicLow => BoundMargins {
            lower: from_one(hn.value - h1.value - off),
            upper: alone(-hn.value),
        },
        _ => BoundMargins {
            lower: alone(hn.value),
            upper: from_one(h1.value + off - hn.value),
        },
    })
}

/// Reference `H_n` stream: exact rationals for `n <= EXACT_HARMONIC_LIMIT`,
/// compensated binary64 beyond.
#[derive(Debug, Clone)]
pub struct HarmonicReference {
    exact: Option<HarmonicExact>,
    float: HarmonicFloat,
}

impl Default for HarmonicReference {
    fn default() -> Self {
        Self::new()
    }
}

impl HarmonicReference {
    pub fn new() -> Self {
        HarmonicReference {
            exact: Some(HarmonicExact::new()),
            float: HarmonicFloat::new(),
        }
    }

    /// Advances to the next `n` and returns `(n, H_n)`.
    pub fn next_value(&mut self) -> (u64, SpecialValue) {
        let n = self.float.advance();
        if let Some(e) = self.exact.as_mut() {
            e.advance();
            let (v, err) = e.to_f64();
            if n >= EXACT_HARMONIC_LIMIT {
                self.exact = None;
            }
            return (n, SpecialValue::new(v, err));
        }
        let (v, err) = self.float.value();
        (n, SpecialValue::new(v, err))
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }
}

/// Confirms that a reference `H_n` agrees with `ψ(n+1) + γ`, which the
/// margins are built on. Returns the discrepancy and its allowance.
pub fn harmonic_route_check(
    n: u64,
    reference: SpecialValue,
    cfg: &PrecisionConfig,
) -> Result<(f64, f64)> {
    let x = check_n("harmonic_route_check", n)?;
    let psi = digamma(x + 1.0, cfg)?;
    let g = euler_gamma(cfg);
    let via_psi = psi.value + g.value;
    let diff = reference.value - via_psi;
    let allow = reference.abs_error_bound
        + psi.abs_error_bound
        + g.abs_error_bound
        + 2.0 * EPS * via_psi.abs();
    if diff.abs() > allow {
        return Err(Error::numerical(
            "harmonic_route_check",
            format!("H_{n}: summation and digamma routes differ by {diff:e} > {allow:e}"),
        ));
    }
    Ok((diff, allow))
}
