//! Certified numerics for a one-parameter family of Stirling-type defects
//! of `ln Γ`, the gamma/harmonic/factorial bounds they induce, and a
//! harness that verifies or falsifies each claimed inequality.

pub mod bounds;
pub mod error;
pub mod grid;
pub mod harness;
pub mod monotone;
pub mod precision;
pub mod specfun;
pub mod verdict;

pub use error::{Error, Result};
pub use grid::{GridSpec, Spacing};
pub use precision::{Margin, MarginClass, PrecisionConfig, SpecialValue};
pub use verdict::{Location, Strictness, Sweep, Verdict};
