//! Precision policy and error-carrying values.
//!
//! All arithmetic is IEEE-754 binary64. `working_digits` sets the *target*
//! accuracy of truncated series and quadrature; requests beyond what binary64
//! can deliver are accepted and clamped to [`MAX_EFFECTIVE_DIGITS`].

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// Unit roundoff of binary64.
pub const EPS: f64 = f64::EPSILON * 0.5;

/// Most decimal digits a binary64 evaluation can honour.
pub const MAX_EFFECTIVE_DIGITS: u32 = 15;

/// Environment variable that overrides the default working precision.
pub const DIGITS_ENV: &str = "GAMMA_CERTIFY_DIGITS";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionConfig {
    /// Requested decimal digits of working precision (>= 15).
    pub working_digits: u32,
    /// Budget of integrand evaluations for one adaptive quadrature.
    pub quad_nodes: usize,
    /// Floor of the truncation point `T` for improper integrals. The
    /// integrators use `max(quad_cutoff, 60 / x)` for a decay rate `x`.
    pub quad_cutoff: f64,
    /// Relative band below which a margin counts as equality within precision.
    pub eq_tolerance: f64,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            working_digits: 15,
            quad_nodes: 200_000,
            quad_cutoff: 50.0,
            eq_tolerance: 1e-14,
        }
    }
}

impl PrecisionConfig {
    pub fn new(working_digits: u32) -> Result<Self> {
        let cfg = PrecisionConfig {
            working_digits,
            ..Default::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Default configuration, with `GAMMA_CERTIFY_DIGITS` applied when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(DIGITS_ENV) {
            Ok(s) => {
                let d: u32 = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::Config(format!("{DIGITS_ENV}={s:?} is not an integer")))?;
                PrecisionConfig::new(d)
            }
            Err(_) => Ok(PrecisionConfig::default()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.working_digits < 15 {
            return Err(Error::Config(format!(
                "working_digits must be >= 15, got {}",
                self.working_digits
            )));
        }
        if self.quad_nodes < 15 {
            return Err(Error::Config("quad_nodes must be >= 15".into()));
        }
        if !(self.quad_cutoff.is_finite() && self.quad_cutoff > 0.0) {
            return Err(Error::Config("quad_cutoff must be a positive real".into()));
        }
        if !(self.eq_tolerance > 0.0 && self.eq_tolerance <= 1e-8) {
            return Err(Error::Config("eq_tolerance must lie in (0, 1e-8]".into()));
        }
        Ok(())
    }

    /// Digits actually delivered by the binary64 backend.
    pub fn effective_digits(&self) -> u32 {
        self.working_digits.min(MAX_EFFECTIVE_DIGITS)
    }

    /// Relative accuracy goal `10^-digits`, floored at a few ulps.
    pub fn target_rel(&self) -> f64 {
        10f64.powi(-(self.effective_digits() as i32)).max(8.0 * EPS)
    }

    /// Copy with the working precision doubled, used for tie-break retries.
    pub fn doubled(&self) -> Self {
        PrecisionConfig {
            working_digits: self.working_digits.saturating_mul(2),
            ..*self
        }
    }

    /// Truncation point for a Laplace-type integral with decay rate `x`.
    pub fn cutoff_for(&self, x: f64) -> f64 {
        self.quad_cutoff.max(60.0 / x)
    }
}

/// A computed value together with a bound on its absolute error.
///
/// Comparisons are meant to treat `value ± abs_error_bound` as the truth
/// interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialValue {
    pub value: f64,
    pub abs_error_bound: f64,
}

impl SpecialValue {
    pub fn new(value: f64, abs_error_bound: f64) -> Self {
        debug_assert!(abs_error_bound.is_finite() && abs_error_bound >= 0.0);
        SpecialValue {
            value,
            abs_error_bound,
        }
    }

    /// A value known up to its own rounding.
    pub fn exact(value: f64) -> Self {
        SpecialValue::new(value, EPS * value.abs())
    }

    pub fn lo(&self) -> f64 {
        self.value - self.abs_error_bound
    }

    pub fn hi(&self) -> f64 {
        self.value + self.abs_error_bound
    }

    pub fn contains(&self, v: f64) -> bool {
        v >= self.lo() && v <= self.hi()
    }

    pub fn scale(self, k: f64) -> Self {
        let v = self.value * k;
        SpecialValue::new(v, self.abs_error_bound * k.abs() + EPS * v.abs())
    }

    /// `exp` with first-order propagation of the error bound.
    pub fn exp(self) -> Self {
        let v = self.value.exp();
        SpecialValue::new(v, v * (self.abs_error_bound.exp_m1()) + 2.0 * EPS * v)
    }
}

impl Add for SpecialValue {
    type Output = SpecialValue;
    fn add(self, rhs: SpecialValue) -> SpecialValue {
        let v = self.value + rhs.value;
        SpecialValue::new(
            v,
            self.abs_error_bound + rhs.abs_error_bound + EPS * v.abs(),
        )
    }
}

impl Sub for SpecialValue {
    type Output = SpecialValue;
    fn sub(self, rhs: SpecialValue) -> SpecialValue {
        self + (-rhs)
    }
}

impl Neg for SpecialValue {
    type Output = SpecialValue;
    fn neg(self) -> SpecialValue {
        SpecialValue::new(-self.value, self.abs_error_bound)
    }
}

impl Add<f64> for SpecialValue {
    type Output = SpecialValue;
    fn add(self, rhs: f64) -> SpecialValue {
        self + SpecialValue::exact(rhs)
    }
}

/// Signed amount by which a claimed inequality holds at one test point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Margin {
    pub value: f64,
    /// Certified bound on the error in `value`.
    pub err: f64,
    /// Magnitude of the quantities that were differenced to produce `value`.
    pub scale: f64,
}

/// Classification of one margin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarginClass {
    Holds,
    Tie,
    Violated,
}

impl Margin {
    pub fn new(value: f64, err: f64, scale: f64) -> Self {
        Margin { value, err, scale }
    }

    pub fn from_value(v: SpecialValue, scale: f64) -> Self {
        Margin::new(v.value, v.abs_error_bound, scale)
    }

    /// Width of the band treated as equality within precision.
    pub fn band(&self, cfg: &PrecisionConfig) -> f64 {
        self.err.max(cfg.eq_tolerance * self.scale.abs())
    }

    pub fn classify(&self, cfg: &PrecisionConfig) -> MarginClass {
        let band = self.band(cfg);
        if self.value == f64::INFINITY {
            MarginClass::Holds
        } else if !self.value.is_finite() {
            MarginClass::Violated
        } else if self.value > band {
            MarginClass::Holds
        } else if self.value < -band {
            MarginClass::Violated
        } else {
            MarginClass::Tie
        }
    }
}
