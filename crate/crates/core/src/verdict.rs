//! Reduction of per-point margins to a single verdict.

use serde::{Deserialize, Serialize};

use crate::precision::{Margin, MarginClass, PrecisionConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Falsified,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Falsified => "falsified",
            Verdict::Indeterminate => "indeterminate",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Verdict {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "verified" => Ok(Verdict::Verified),
            "falsified" => Ok(Verdict::Falsified),
            "indeterminate" => Ok(Verdict::Indeterminate),
            other => Err(format!("unknown verdict {other:?}")),
        }
    }
}

/// Whether the claimed inequality is strict (`<`) or admits equality (`≤`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strictness {
    Strict,
    NonStrict,
}

/// Where a margin was measured: a derivative order (0 for the function
/// itself) and an abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Location {
    pub order: u32,
    pub x: f64,
}

/// Folds margins in input order. The first minimum wins, so the reduction
/// is deterministic for a fixed evaluation order.
#[derive(Debug, Clone)]
pub struct Sweep {
    strictness: Strictness,
    cfg: PrecisionConfig,
    points: usize,
    violated: usize,
    ties: usize,
    min_margin: f64,
    argmin: Option<Location>,
    worst_band: f64,
}

impl Sweep {
    pub fn new(strictness: Strictness, cfg: &PrecisionConfig) -> Self {
        Sweep {
            strictness,
            cfg: *cfg,
            points: 0,
            violated: 0,
            ties: 0,
            min_margin: f64::INFINITY,
            argmin: None,
            worst_band: 0.0,
        }
    }

    pub fn push(&mut self, at: Location, m: Margin) {
        self.points += 1;
        let class = m.classify(&self.cfg);
        let shown = match class {
            MarginClass::Holds => m.value,
            MarginClass::Tie => {
                self.ties += 1;
                0.0
            }
            MarginClass::Violated => {
                self.violated += 1;
                if m.value.is_finite() {
                    m.value
                } else {
                    f64::NEG_INFINITY
                }
            }
        };
        if shown < self.min_margin || self.argmin.is_none() {
            self.min_margin = shown;
            self.argmin = Some(at);
            self.worst_band = m.band(&self.cfg);
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.points == 0 {
            Verdict::Indeterminate
        } else if self.violated > 0 {
            Verdict::Falsified
        } else if self.ties > 0 && self.strictness == Strictness::Strict {
            Verdict::Indeterminate
        } else {
            Verdict::Verified
        }
    }

    /// Smallest margin seen; ties in the precision band are reported as 0.
    pub fn min_margin(&self) -> f64 {
        self.min_margin
    }

    pub fn argmin(&self) -> Option<Location> {
        self.argmin
    }

    /// Error band attached to the minimising point.
    pub fn band_at_min(&self) -> f64 {
        self.worst_band
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn ties(&self) -> usize {
        self.ties
    }

    pub fn violations(&self) -> usize {
        self.violated
    }

    pub fn merge(&mut self, other: &Sweep) {
        self.points += other.points;
        self.violated += other.violated;
        self.ties += other.ties;
        if other.argmin.is_some() && (self.argmin.is_none() || other.min_margin < self.min_margin) {
            self.min_margin = other.min_margin;
            self.argmin = other.argmin;
            self.worst_band = other.worst_band;
        }
    }
}
