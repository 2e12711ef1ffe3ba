//! Verification suites over the claim registry, and report emission.
//!
//! A suite run yields one [`VerificationReport`] per claim. The process exit
//! status is [`EXIT_OK`] when every verdict matches the registered
//! expectation (printed formulas are expected to be falsified),
//! [`EXIT_UNEXPECTED`] otherwise, and [`EXIT_USAGE`] for usage errors.

mod checks;
mod registry;
mod report;
mod suite;

pub use checks::{check_claim, run_claim, Outcome};
pub use registry::{
    default_grid, lookup, refinement_grid, registry, suite_claims, Claim, ClaimKind, Domain,
    LambdaSet, Polarity, SUITES,
};
pub use report::{
    emit_report, format_float, from_csv, from_json, parse, render, to_csv, to_json, ReportFormat,
    VerificationReport, CSV_HEADER,
};
pub use suite::{
    exit_code, run_suite, run_suite_on, unexpected, EXIT_OK, EXIT_UNEXPECTED, EXIT_USAGE,
};
