use serde::{Deserialize, Serialize};

use crate::bounds::gamma::gamma_corrections;
use crate::bounds::BoundFamily;
use crate::error::{require_positive, Result};
use crate::precision::{PrecisionConfig, EPS};

/// The four fixed-parameter gamma families, in report order.
pub const GAMMA_FAMILIES: [BoundFamily; 4] = [
    BoundFamily::BukacGamma,
    BoundFamily::SevliBatirGamma,
    BoundFamily::QiGammaLow,
    BoundFamily::QiGammaHigh,
];

/// Which member of a pair is tighter on one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyOrdering {
    First,
    Second,
    /// The gap is inside the rounding allowance.
    Tie,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilyComparison {
    pub first: BoundFamily,
    pub second: BoundFamily,
    pub x: f64,
    /// `ln lower_first − ln lower_second`; positive means `first` is tighter.
    pub lower_gap: f64,
    pub lower_tighter: FamilyOrdering,
    /// `ln upper_first − ln upper_second`; negative means `first` is tighter.
    pub upper_gap: f64,
    pub upper_tighter: FamilyOrdering,
}

fn order(gap: f64, allow: f64, first_if_positive: bool) -> FamilyOrdering {
    if gap.abs() <= allow {
        FamilyOrdering::Tie
    } else if (gap > 0.0) == first_if_positive {
        FamilyOrdering::First
    } else {
        FamilyOrdering::Second
    }
}

/// Every unordered pair of [`GAMMA_FAMILIES`] at `x`, in lexicographic order.
/// The common Stirling prefactor cancels, so gaps are differences of the
/// exponent corrections alone.
pub fn compare_families(x: f64, cfg: &PrecisionConfig) -> Result<Vec<FamilyComparison>> {
    require_positive("compare_families", "x", x)?;
    let corr = GAMMA_FAMILIES
        .iter()
        .map(|&f| gamma_corrections(f, x))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(6);
    for i in 0..GAMMA_FAMILIES.len() {
        for j in i + 1..GAMMA_FAMILIES.len() {
            let (la, ua) = corr[i];
            let (lb, ub) = corr[j];
            let lower_gap = la - lb;
            let upper_gap = ua - ub;
            let allow = |a: f64, b: f64| {
                (8.0 * EPS * (a.abs() + b.abs())).max(cfg.eq_tolerance * (a.abs() + b.abs()))
            };
            out.push(FamilyComparison {
                first: GAMMA_FAMILIES[i],
                second: GAMMA_FAMILIES[j],
                x,
                lower_gap,
                lower_tighter: order(lower_gap, allow(la, lb), true),
                upper_gap,
                upper_tighter: order(upper_gap, allow(ua, ub), false),
            });
        }
    }
    Ok(out)
}
