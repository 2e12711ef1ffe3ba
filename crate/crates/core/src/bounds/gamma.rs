use std::f64::consts::PI;

use crate::bounds::{wrong_family, BoundFamily, BoundMargins, BoundPair, PrintedSide};
use crate::error::{require_positive, Error, Result};
use crate::monotone::hfun::h_unchecked;
use crate::monotone::stirling_defect;
use crate::precision::{Margin, PrecisionConfig, SpecialValue, EPS};
use crate::specfun::LN_SQRT_2PI;

/// `√2·e^{7/12}`, the best upper constant of the Sevli–Batir pair.
pub const SEVLI_BATIR_BETA: f64 = 2.534_273_285_639_716;

/// Largest `n` with `n!` representable in binary64.
pub const MAX_FACTORIAL_N: u64 = 170;

/// Natural-log bounds on `ln Γ(x+1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaLogPair {
    pub ln_lower: f64,
    pub ln_upper: f64,
}

/// `(x+½)ln(x+½) − (x+½) + ln√(2π)`, the common Stirling prefactor.
fn ln_prefactor(x: f64) -> f64 {
    let y = x + 0.5;
    y * y.ln() - y + LN_SQRT_2PI
}

/// Exponent corrections `(c_lo, c_up)` relative to the prefactor.
pub(super) fn gamma_corrections(family: BoundFamily, x: f64) -> Result<(f64, f64)> {
    use BoundFamily::*;
    let y = x + 0.5;
    Ok(match family {
        BukacGamma => {
            let s = (x * x + 3.0 * x + 2.5).sqrt() - 0.5;
            (-1.0 / (24.0 * x), -1.0 / (24.0 * s))
        }
        SevliBatirGamma => {
            let c = -1.0 / (24.0 * y);
            (c, SEVLI_BATIR_BETA.ln() - LN_SQRT_2PI + c)
        }
        QiGammaLow => (
            -1.0 / (24.0 * y),
            (2.0 * x / y - 12.0 * (PI.ln() - 1.0)) / 24.0,
        ),
        QiGammaHigh => {
            let z = x + 1.5;
            (
                (2.0 * x / (3.0 * z) - 12.0 * (PI.ln() - 1.0)) / 24.0,
                -1.0 / (24.0 * z),
            )
        }
        QiGammaGeneric { lambda } => {
            if !(0.0..=0.5).contains(&lambda) {
                return Err(Error::parameter(
                    "eval_gamma_bound",
                    format!("generic family needs 0 <= lambda <= 1/2, got {lambda}"),
                ));
            }
            let z = x + lambda;
            let up = if lambda == 0.0 {
                f64::INFINITY
            } else {
                (1.0 / lambda + 12.0 - 12.0 * PI.ln() - 1.0 / z) / 24.0
            };
            (-1.0 / (24.0 * z), up)
        }
        other => return Err(wrong_family("eval_gamma_bound", other)),
    })
}

pub fn eval_gamma_log_bound(
    family: BoundFamily,
    x: f64,
    cfg: &PrecisionConfig,
) -> Result<GammaLogPair> {
    let _ = cfg;
    require_positive("eval_gamma_bound", "x", x)?;
    let (lo, up) = gamma_corrections(family, x)?;
    let p = ln_prefactor(x);
    Ok(GammaLogPair {
        ln_lower: p + lo,
        ln_upper: p + up,
    })
}

pub fn eval_gamma_bound(family: BoundFamily, x: f64, cfg: &PrecisionConfig) -> Result<BoundPair> {
    let l = eval_gamma_log_bound(family, x, cfg)?;
    Ok(BoundPair {
        lower: l.ln_lower.exp(),
        upper: l.ln_upper.exp(),
        family,
        x,
    })
}

fn side_margin(value: f64, f: &SpecialValue, c: f64) -> Margin {
    let scale = f.value.abs() + c.abs();
    Margin::new(value, f.abs_error_bound + 4.0 * EPS * scale, scale)
}

/// Margins of `ln Γ(x+1)` against both sides, from `f(x) = ln Γ(x+1) − prefactor`.
pub fn gamma_margins(family: BoundFamily, x: f64, cfg: &PrecisionConfig) -> Result<BoundMargins> {
    require_positive("gamma_margins", "x", x)?;
    let (lo, up) = gamma_corrections(family, x)?;
    let f = stirling_defect(x, cfg)?;
    Ok(BoundMargins {
        lower: side_margin(f.value - lo, &f, lo),
        upper: side_margin(up - f.value, &f, up),
    })
}

/// `Γ(x+1) / [((x+½)/e)^{x+½} e^{−1/(24(x+½))}] = √(2π)·e^{H_{1/2}(x)}`.
pub fn best_constant_ratio(x: f64, cfg: &PrecisionConfig) -> Result<SpecialValue> {
    let h = crate::monotone::H_lambda(x, 0.5, cfg)?;
    Ok((h + LN_SQRT_2PI).exp())
}

fn check_n(function: &'static str, n: u64) -> Result<f64> {
    if n == 0 || n > MAX_FACTORIAL_N {
        return Err(Error::domain(
            function,
            format!("n must lie in 1..={MAX_FACTORIAL_N}, got {n}"),
        ));
    }
    Ok(n as f64)
}

/// `12(3 − ln π + ln(4/27))`, the printed constant of both factorial pairs.
fn printed_factorial_constant() -> f64 {
    12.0 * (3.0 - PI.ln() + (4.0f64 / 27.0).ln())
}

fn factorial_corrections(family: BoundFamily, x: f64, cfg: &PrecisionConfig) -> Result<(f64, f64)> {
    use BoundFamily::*;
    let y = x + 0.5;
    let z = x + 1.5;
    Ok(match family {
        FactorialLow => {
            let h1 = h_unchecked(1.0, 0.5, cfg)?.value;
            (-1.0 / (24.0 * y), h1 - 1.0 / (24.0 * y))
        }
        FactorialHigh => {
            let h1 = h_unchecked(1.0, 1.5, cfg)?.value;
            (h1 - 1.0 / (24.0 * z), -1.0 / (24.0 * z))
        }
        FactorialAsPrinted {
            side: PrintedSide::Low,
        } => (
            -1.0 / (24.0 * y),
            (printed_factorial_constant() - 1.0 / (3.0 * y)) / 24.0,
        ),
        FactorialAsPrinted {
            side: PrintedSide::High,
        } => (
            (printed_factorial_constant() + 1.0 / (5.0 * z)) / 24.0,
            -1.0 / (24.0 * z),
        ),
        other => return Err(wrong_family("eval_factorial_bound", other)),
    })
}

/// Bounds on `n!`. The corrected pairs are `prefactor·exp(H_λ(1) − 1/(24(n+λ)))`
/// on the side where `H_λ` is monotone toward `H_λ(1)`.
pub fn eval_factorial_bound(
    family: BoundFamily,
    n: u64,
    cfg: &PrecisionConfig,
) -> Result<BoundPair> {
    let x = check_n("eval_factorial_bound", n)?;
    let (lo, up) = factorial_corrections(family, x, cfg)?;
    let p = ln_prefactor(x);
    Ok(BoundPair {
        lower: (p + lo).exp(),
        upper: (p + up).exp(),
        family,
        x,
    })
}

/// Log-scale margins of `n!`. The corrected sides use `H_λ(1) − H_λ(n)`
/// directly, so the equality at `n = 1` is exact.
pub fn factorial_margins(
    family: BoundFamily,
    n: u64,
    cfg: &PrecisionConfig,
) -> Result<BoundMargins> {
    use BoundFamily::*;
    let x = check_n("factorial_margins", n)?;
    let diff = |a: SpecialValue, b: SpecialValue| {
        let scale = a.value.abs() + b.value.abs();
        Margin::new(
            a.value - b.value,
            a.abs_error_bound + b.abs_error_bound + 2.0 * EPS * scale,
            scale,
        )
    };
    let neg = |a: SpecialValue| Margin::new(-a.value, a.abs_error_bound, a.value.abs());
    let pos = |a: SpecialValue| Margin::new(a.value, a.abs_error_bound, a.value.abs());
    match family {
        FactorialLow => {
            let hn = h_unchecked(x, 0.5, cfg)?;
            let h1 = h_unchecked(1.0, 0.5, cfg)?;
            Ok(BoundMargins {
                lower: pos(hn),
                upper: diff(h1, hn),
            })
        }
        FactorialHigh => {
            let hn = h_unchecked(x, 1.5, cfg)?;
            let h1 = h_unchecked(1.0, 1.5, cfg)?;
            Ok(BoundMargins {
                lower: diff(hn, h1),
                upper: neg(hn),
            })
        }
        FactorialAsPrinted { .. } => {
            let (lo, up) = factorial_corrections(family, x, cfg)?;
            let f = stirling_defect(x, cfg)?;
            Ok(BoundMargins {
                lower: side_margin(f.value - lo, &f, lo),
                upper: side_margin(up - f.value, &f, up),
            })
        }
        other => Err(wrong_family("factorial_margins", other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::MarginClass;
    use crate::specfun::ln_gamma;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    #[test]
    fn beta_constant() {
        assert!((SEVLI_BATIR_BETA - 2f64.sqrt() * (7.0f64 / 12.0).exp()).abs() < 1e-15);
    }

    #[test]
    fn qi_low_at_one() {
        let p = eval_gamma_bound(BoundFamily::QiGammaLow, 1.0, &cfg()).unwrap();
        assert!((p.lower - (-6.415_824_108_584_63e-4f64).exp()).abs() < 1e-13);
        assert!(p.lower < 1.0 && 1.0 < p.upper);
        assert!(p.upper - p.lower < 0.06);
    }

    #[test]
    fn generic_matches_dedicated_at_half() {
        for &x in &[0.5, 1.0, 7.0] {
            let a = eval_gamma_log_bound(BoundFamily::QiGammaLow, x, &cfg()).unwrap();
            let b = eval_gamma_log_bound(BoundFamily::QiGammaGeneric { lambda: 0.5 }, x, &cfg())
                .unwrap();
            assert_eq!(a.ln_lower, b.ln_lower);
            assert!((a.ln_upper - b.ln_upper).abs() < 1e-14);
        }
        assert!(
            eval_gamma_bound(BoundFamily::QiGammaGeneric { lambda: 0.6 }, 1.0, &cfg()).is_err()
        );
    }

    #[test]
    fn margins_agree_with_log_pair() {
        let c = cfg();
        for fam in [
            BoundFamily::BukacGamma,
            BoundFamily::SevliBatirGamma,
            BoundFamily::QiGammaLow,
            BoundFamily::QiGammaHigh,
        ] {
            for &x in &[0.3, 2.0, 20.0] {
                let l = eval_gamma_log_bound(fam, x, &c).unwrap();
                let m = gamma_margins(fam, x, &c).unwrap();
                let lg = ln_gamma(x + 1.0, &c).unwrap().value;
                assert!((lg - l.ln_lower - m.lower.value).abs() < 1e-12, "{fam} {x}");
                assert!((l.ln_upper - lg - m.upper.value).abs() < 1e-12, "{fam} {x}");
            }
        }
    }

    #[test]
    fn factorial_equalities_at_one() {
        let c = cfg();
        let lo = factorial_margins(BoundFamily::FactorialLow, 1, &c).unwrap();
        assert_eq!(lo.upper.value, 0.0);
        assert_eq!(lo.upper.classify(&c), MarginClass::Tie);
        let hi = factorial_margins(BoundFamily::FactorialHigh, 1, &c).unwrap();
        assert_eq!(hi.lower.value, 0.0);
        let p = eval_factorial_bound(BoundFamily::FactorialLow, 1, &c).unwrap();
        assert!((p.upper - 1.0).abs() < 1e-14);
    }

    #[test]
    fn printed_factorial_values_at_one() {
        let c = cfg();
        let lo = eval_factorial_bound(
            BoundFamily::FactorialAsPrinted {
                side: PrintedSide::Low,
            },
            1,
            &c,
        )
        .unwrap();
        assert!((lo.upper - 0.9908).abs() < 1e-4, "{}", lo.upper);
        let hi = eval_factorial_bound(
            BoundFamily::FactorialAsPrinted {
                side: PrintedSide::High,
            },
            1,
            &c,
        )
        .unwrap();
        assert!((hi.lower - 1.0033).abs() < 1e-4, "{}", hi.lower);
    }

    #[test]
    fn corrected_factorial_at_three() {
        let c = cfg();
        for fam in [BoundFamily::FactorialLow, BoundFamily::FactorialHigh] {
            let p = eval_factorial_bound(fam, 3, &c).unwrap();
            assert!(p.lower < 6.0 && 6.0 < p.upper, "{fam}: {p:?}");
        }
        assert!(eval_factorial_bound(BoundFamily::FactorialLow, 0, &c).is_err());
        assert!(eval_factorial_bound(BoundFamily::FactorialLow, 171, &c).is_err());
    }
}
