//! Reference evaluation of Γ-related special functions.
//!
//! Everything else in the crate treats these as ground truth and consumes
//! them as [`SpecialValue`](crate::precision::SpecialValue) intervals.

pub mod bernoulli;
mod binet;
mod gamma;
mod harmonic;
mod mathieu;
pub mod quadrature;

pub use binet::{binet_kernel, binet_theta};
pub use gamma::{
    digamma, euler_gamma, ln_gamma, polygamma, LN_SQRT_2PI, MAX_POLYGAMMA_ORDER, SHIFT_THRESHOLD,
};
pub(crate) use gamma::{factorial_f64, half_shift_series, stirling_remainder, HALF_SHIFT_MIN_Y};
pub use harmonic::{harmonic_exact, HarmonicExact, HarmonicFloat};
pub use mathieu::mathieu_partial;
