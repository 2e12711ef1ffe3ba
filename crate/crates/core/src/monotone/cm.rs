use serde::{Deserialize, Serialize};

use crate::error::{require_nonnegative, Error, Result};
use crate::grid::GridSpec;
use crate::monotone::hfun::{deriv_unchecked, ln_g_beta_deriv};
use crate::monotone::integrand::phi_unchecked;
use crate::precision::{Margin, PrecisionConfig};
use crate::verdict::{Location, Strictness, Sweep, Verdict};

/// Which function is tested: `H_λ` (`Plus`) or `−H_λ` (`Minus`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CmSign {
    Plus,
    Minus,
}

impl CmSign {
    pub fn factor(&self) -> f64 {
        match self {
            CmSign::Plus => 1.0,
            CmSign::Minus => -1.0,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CmSign::Plus => "plus",
            CmSign::Minus => "minus",
        }
    }
}

impl std::str::FromStr for CmSign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(CmSign::Plus),
            "minus" | "-" => Ok(CmSign::Minus),
            other => Err(Error::Usage(format!("unknown sign {other:?}"))),
        }
    }
}

pub const DEFAULT_MAX_ORDER: u32 = 6;

/// Default `x` grid for derivative sweeps.
pub fn default_cm_grid() -> GridSpec {
    GridSpec::log(1e-3, 100.0, 500)
}

/// Default `t` grid for the integrand certificate.
pub fn default_phi_grid() -> GridSpec {
    GridSpec::log(1e-4, 200.0, 2000)
}

/// Sign of `s·(−φ_λ)` over a `t` grid. `H'_λ` is the Laplace transform of
/// `φ_λ`, so `±H_λ` is completely monotonic exactly when `∓φ_λ ≥ 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegrandCertificate {
    pub grid: GridSpec,
    pub min_margin: f64,
    pub argmin_t: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CMReport {
    pub lambda: f64,
    pub sign: CmSign,
    pub max_order: u32,
    pub grid: Vec<f64>,
    /// Smallest `s·(−1)ⁿ·H^(n)(x)` over orders `0..=max_order` and the grid.
    pub min_margin: f64,
    pub argmin: (u32, f64),
    /// Error band at the minimising point.
    pub band_at_min: f64,
    pub integrand: IntegrandCertificate,
    /// Combined verdict of the derivative sweep and the integrand certificate.
    pub verdict: Verdict,
    pub derivative_verdict: Verdict,
    /// Whether an indeterminate first pass was rerun at doubled precision.
    pub retried: bool,
}

fn combine(a: Verdict, b: Verdict) -> Verdict {
    use Verdict::*;
    match (a, b) {
        (Falsified, _) | (_, Falsified) => Falsified,
        (Indeterminate, _) | (_, Indeterminate) => Indeterminate,
        _ => Verified,
    }
}

/// Checks `s·(−1)ⁿ H^(n)_λ(x) > 0` for `n = 0..=max_order` on `grid`, and the
/// matching sign of `φ_λ` on the default `t` grid.
pub fn cm_check(
    lambda: f64,
    sign: CmSign,
    max_order: u32,
    grid: &[f64],
    cfg: &PrecisionConfig,
) -> Result<CMReport> {
    require_nonnegative("cm_check", "lambda", lambda)?;
    if max_order < 1 {
        return Err(Error::parameter("cm_check", "max_order must be >= 1"));
    }
    if grid.is_empty() {
        return Err(Error::parameter("cm_check", "grid is empty"));
    }
    if let Some(bad) = grid.iter().find(|x| !(x.is_finite() && **x > 0.0)) {
        return Err(Error::domain(
            "cm_check",
            format!("grid point {bad} is not positive"),
        ));
    }
    cfg.validate()?;
    let first = cm_pass(lambda, sign, max_order, grid, cfg)?;
    if first.verdict != Verdict::Indeterminate {
        return Ok(first);
    }
    let mut second = cm_pass(lambda, sign, max_order, grid, &cfg.doubled())?;
    second.retried = true;
    Ok(second)
}

fn cm_pass(
    lambda: f64,
    sign: CmSign,
    max_order: u32,
    grid: &[f64],
    cfg: &PrecisionConfig,
) -> Result<CMReport> {
    let s = sign.factor();
    let mut sweep = Sweep::new(Strictness::Strict, cfg);
    for &x in grid {
        for n in 0..=max_order {
            let d = deriv_unchecked(n, x, lambda, cfg)?;
            let alt = if n % 2 == 0 { s } else { -s };
            sweep.push(
                Location { order: n, x },
                Margin::new(alt * d.value, d.abs_error_bound, 0.0),
            );
        }
    }
    let integrand = integrand_certificate(lambda, sign, &default_phi_grid(), cfg);
    let argmin = sweep
        .argmin()
        .map(|l| (l.order, l.x))
        .unwrap_or((0, f64::NAN));
    let dv = sweep.verdict();
    Ok(CMReport {
        lambda,
        sign,
        max_order,
        grid: grid.to_vec(),
        min_margin: sweep.min_margin(),
        argmin,
        band_at_min: sweep.band_at_min(),
        verdict: combine(dv, integrand.verdict),
        derivative_verdict: dv,
        integrand,
        retried: false,
    })
}

/// `−s·φ_λ(t) > 0` on every node of `grid`.
pub fn integrand_certificate(
    lambda: f64,
    sign: CmSign,
    grid: &GridSpec,
    cfg: &PrecisionConfig,
) -> IntegrandCertificate {
    let s = -sign.factor();
    let mut sweep = Sweep::new(Strictness::Strict, cfg);
    for t in grid.nodes() {
        let p = phi_unchecked(t, lambda);
        sweep.push(
            Location { order: 0, x: t },
            Margin::new(s * p.value, p.abs_error_bound, 0.0),
        );
    }
    IntegrandCertificate {
        grid: *grid,
        min_margin: sweep.min_margin(),
        argmin_t: sweep.argmin().map(|l| l.x).unwrap_or(f64::NAN),
        verdict: sweep.verdict(),
    }
}

/// Counts of grid nodes where `φ_λ` is certainly positive or negative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhiSignProfile {
    pub points: usize,
    pub positive: usize,
    pub negative: usize,
    pub undecided: usize,
    pub min: (f64, f64),
    pub max: (f64, f64),
}

impl PhiSignProfile {
    pub fn all_nonpositive(&self) -> bool {
        self.positive == 0
    }

    pub fn all_nonnegative(&self) -> bool {
        self.negative == 0
    }

    pub fn mixed(&self) -> bool {
        self.positive > 0 && self.negative > 0
    }
}

pub fn phi_sign_profile(lambda: f64, grid: &GridSpec) -> Result<PhiSignProfile> {
    require_nonnegative("phi_sign_profile", "lambda", lambda)?;
    let mut out = PhiSignProfile {
        points: 0,
        positive: 0,
        negative: 0,
        undecided: 0,
        min: (f64::NAN, f64::INFINITY),
        max: (f64::NAN, f64::NEG_INFINITY),
    };
    for t in grid.nodes() {
        let p = phi_unchecked(t, lambda);
        out.points += 1;
        if p.value > p.abs_error_bound {
            out.positive += 1;
        } else if p.value < -p.abs_error_bound {
            out.negative += 1;
        } else {
            out.undecided += 1;
        }
        if p.value < out.min.1 {
            out.min = (t, p.value);
        }
        if p.value > out.max.1 {
            out.max = (t, p.value);
        }
    }
    Ok(out)
}

/// Finite probe of logarithmic complete monotonicity of `g_β`:
/// `(−1)^k [ln g_β]^(k)(x) ≥ 0` for `k = 1..=max_order` on `grid`.
/// Exploration only; a pass is not a proof.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LcmProbe {
    pub beta: f64,
    pub max_order: u32,
    pub min_margin: f64,
    pub argmin: (u32, f64),
    /// Lowest order with a certain violation and the first grid point there.
    pub first_violation: Option<(u32, f64)>,
    pub verdict: Verdict,
}

pub fn lcm_probe(
    beta: f64,
    max_order: u32,
    grid: &[f64],
    cfg: &PrecisionConfig,
) -> Result<LcmProbe> {
    if max_order < 1 || grid.is_empty() {
        return Err(Error::parameter(
            "lcm_probe",
            "need max_order >= 1 and a nonempty grid",
        ));
    }
    let mut sweep = Sweep::new(Strictness::NonStrict, cfg);
    let mut first_violation = None;
    for k in 1..=max_order {
        for &x in grid {
            let d = ln_g_beta_deriv(k, x, beta, cfg)?;
            let alt = if k % 2 == 0 { 1.0 } else { -1.0 };
            let m = Margin::new(alt * d.value, d.abs_error_bound, 0.0);
            if first_violation.is_none() && m.value < -m.err {
                first_violation = Some((k, x));
            }
            sweep.push(Location { order: k, x }, m);
        }
    }
    Ok(LcmProbe {
        beta,
        max_order,
        min_margin: sweep.min_margin(),
        argmin: sweep
            .argmin()
            .map(|l| (l.order, l.x))
            .unwrap_or((0, f64::NAN)),
        first_violation,
        verdict: sweep.verdict(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(lambda: f64, sign: CmSign, order: u32) -> CMReport {
        let grid = GridSpec::log(1e-3, 100.0, 60).nodes();
        cm_check(lambda, sign, order, &grid, &PrecisionConfig::default()).unwrap()
    }

    #[test]
    fn plus_side() {
        assert_eq!(run(0.5, CmSign::Plus, 6).verdict, Verdict::Verified);
        assert_eq!(run(0.0, CmSign::Plus, 6).verdict, Verdict::Verified);
        let r = run(1.0, CmSign::Plus, 2);
        assert_eq!(r.verdict, Verdict::Falsified);
        assert_eq!(r.derivative_verdict, Verdict::Falsified);
    }

    #[test]
    fn minus_side() {
        assert_eq!(run(2.0, CmSign::Minus, 6).verdict, Verdict::Verified);
        assert_eq!(run(0.5, CmSign::Minus, 6).verdict, Verdict::Falsified);
    }

    #[test]
    fn integrand_decides_just_below_threshold() {
        let r = run(0.6418, CmSign::Minus, 6);
        assert_eq!(r.integrand.verdict, Verdict::Falsified);
        assert_eq!(r.verdict, Verdict::Falsified);
        assert_eq!(run(0.6618, CmSign::Minus, 6).verdict, Verdict::Verified);
    }

    #[test]
    fn phi_profiles() {
        let g = default_phi_grid();
        assert!(phi_sign_profile(0.5, &g).unwrap().all_nonpositive());
        assert!(phi_sign_profile(1.5, &g).unwrap().all_nonnegative());
        assert!(phi_sign_profile(0.6, &g).unwrap().mixed());
    }

    #[test]
    fn lcm_probe_orders() {
        let cfg = PrecisionConfig::default();
        let grid = default_cm_grid().nodes();
        let ok = lcm_probe(1.2, 2, &grid, &cfg).unwrap();
        assert_eq!(ok.verdict, Verdict::Verified);
        // β = 0.9 survives the first two orders on this grid
        let low = lcm_probe(0.9, 2, &grid, &cfg).unwrap();
        assert_eq!(low.verdict, Verdict::Verified);
        let deep = lcm_probe(0.9, 40, &grid, &cfg).unwrap();
        assert_eq!(deep.verdict, Verdict::Falsified);
        assert_eq!(deep.first_violation.map(|v| v.0), Some(35));
    }

    #[test]
    fn argument_checks() {
        let cfg = PrecisionConfig::default();
        assert!(cm_check(0.5, CmSign::Plus, 0, &[1.0], &cfg).is_err());
        assert!(cm_check(0.5, CmSign::Plus, 2, &[], &cfg).is_err());
        assert!(cm_check(0.5, CmSign::Plus, 2, &[1.0, -1.0], &cfg).is_err());
        assert!(cm_check(-0.1, CmSign::Plus, 2, &[1.0], &cfg).is_err());
    }
}
