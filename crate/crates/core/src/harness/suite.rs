use crate::error::Result;
use crate::grid::GridSpec;
use crate::harness::checks::run_claim;
use crate::harness::registry::{lookup, suite_claims};
use crate::harness::report::VerificationReport;
use crate::precision::PrecisionConfig;

/// Exit status when every verdict matches its registered expectation.
pub const EXIT_OK: i32 = 0;
/// Exit status when at least one verdict is unexpected.
pub const EXIT_UNEXPECTED: i32 = 1;
/// Exit status for usage, configuration and I/O errors.
pub const EXIT_USAGE: i32 = 2;

/// Runs a suite with the default grids.
pub fn run_suite(suite_id: &str, cfg: &PrecisionConfig) -> Result<Vec<VerificationReport>> {
    run_suite_on(suite_id, None, cfg)
}

/// Runs a suite, replacing the default real grid with `grid` where a claim
/// uses it. Claims run on separate threads; reports come back in registry order.
pub fn run_suite_on(
    suite_id: &str,
    grid: Option<GridSpec>,
    cfg: &PrecisionConfig,
) -> Result<Vec<VerificationReport>> {
    cfg.validate()?;
    if let Some(g) = grid {
        g.validate()?;
    }
    let claims = suite_claims(suite_id)?;
    Ok(std::thread::scope(|s| {
        let handles: Vec<_> = claims
            .iter()
            .map(|c| s.spawn(move || run_claim(c, grid, cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("claim thread panicked"))
            .collect()
    }))
}

/// Reports whose verdict differs from the registry's expectation. Unknown
/// claim ids count as unexpected.
pub fn unexpected(reports: &[VerificationReport]) -> Vec<&VerificationReport> {
    reports
        .iter()
        .filter(|r| lookup(&r.claim_id).is_none_or(|c| c.expected != r.verdict))
        .collect()
}

pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if unexpected(reports).is_empty() {
        EXIT_OK
    } else {
        EXIT_UNEXPECTED
    }
}
