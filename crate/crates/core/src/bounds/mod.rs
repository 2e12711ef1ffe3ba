//! Closed-form two-sided bounds for `Γ(x+1)`, `H_n`, `n!` and `x/(e^x − 1)`.
//!
//! Every evaluator comes in two flavours: a [`BoundPair`] on the natural
//! scale for display, and [`BoundMargins`] (target minus lower, upper minus
//! target) assembled from cancellation-free pieces for certification.

mod bernoulli;
mod compare;
mod gamma;
mod harmonic;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::precision::{Margin, PrecisionConfig};
use crate::verdict::Strictness;

pub use bernoulli::{
    bernoulli_margins, eval_bernoulli_classic_bound, eval_bernoulli_fraction_bound,
};
pub use compare::{compare_families, FamilyComparison, FamilyOrdering, GAMMA_FAMILIES};
pub use gamma::{
    best_constant_ratio, eval_factorial_bound, eval_gamma_bound, eval_gamma_log_bound,
    factorial_margins, gamma_margins, GammaLogPair, MAX_FACTORIAL_N, SEVLI_BATIR_BETA,
};
pub use harmonic::{
    eval_harmonic_bound, harmonic_margins, harmonic_route_check, HarmonicReference,
    EXACT_HARMONIC_LIMIT,
};

/// Constant subtracted in the upper harmonic bound of the `λ = 3/2` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HarmonicConstant {
    /// `1/150 = 1/(24(1 + 3/2)²)`, which makes the bound exact at `n = 1`.
    Corrected,
    /// `1/90`.
    Printed,
}

impl HarmonicConstant {
    pub fn value(&self) -> f64 {
        match self {
            HarmonicConstant::Corrected => 1.0 / 150.0,
            HarmonicConstant::Printed => 1.0 / 90.0,
        }
    }
}

/// Which printed factorial pair: the `λ = ½` one or the `λ = 3/2` one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrintedSide {
    Low,
    High,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "id", rename_all = "kebab-case")]
pub enum BoundFamily {
    BukacGamma,
    SevliBatirGamma,
    QiGammaLow,
    QiGammaHigh,
    QiGammaGeneric { lambda: f64 },
    HarmonicLow,
    HarmonicHigh { constant: HarmonicConstant },
    FactorialLow,
    FactorialHigh,
    FactorialAsPrinted { side: PrintedSide },
    BernoulliFraction,
    BernoulliClassic,
}

/// What a family bounds, which fixes its argument domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// `Γ(x+1)`, `x > 0`.
    Gamma,
    /// `H_n`, `n ∈ ℕ`.
    Harmonic,
    /// `n!`, `1 ≤ n ≤ 170`.
    Factorial,
    /// `x/(e^x − 1)`, `x > 0`.
    BernoulliFraction,
}

impl BoundFamily {
    pub fn target(&self) -> Target {
        use BoundFamily::*;
        match self {
            BukacGamma | SevliBatirGamma | QiGammaLow | QiGammaHigh | QiGammaGeneric { .. } => {
                Target::Gamma
            }
            HarmonicLow | HarmonicHigh { .. } => Target::Harmonic,
            FactorialLow | FactorialHigh | FactorialAsPrinted { .. } => Target::Factorial,
            BernoulliFraction | BernoulliClassic => Target::BernoulliFraction,
        }
    }

    /// Strictness of the (lower, upper) inequalities as claimed.
    pub fn strictness(&self) -> (Strictness, Strictness) {
        use BoundFamily::*;
        use Strictness::*;
        match self {
            BukacGamma | SevliBatirGamma => (Strict, NonStrict),
            QiGammaLow | QiGammaHigh | QiGammaGeneric { .. } | BernoulliClassic => (Strict, Strict),
            HarmonicLow => (NonStrict, Strict),
            HarmonicHigh { .. } => (Strict, NonStrict),
            FactorialLow
            | FactorialAsPrinted {
                side: PrintedSide::Low,
            } => (Strict, NonStrict),
            FactorialHigh
            | FactorialAsPrinted {
                side: PrintedSide::High,
            } => (NonStrict, Strict),
            BernoulliFraction => (NonStrict, NonStrict),
        }
    }

    /// Stable textual id, accepted back by `FromStr`.
    pub fn id(&self) -> String {
        use BoundFamily::*;
        match self {
            BukacGamma => "bukac".into(),
            SevliBatirGamma => "sevli-batir".into(),
            QiGammaLow => "qi-low".into(),
            QiGammaHigh => "qi-high".into(),
            QiGammaGeneric { lambda } => format!("qi-generic:{lambda}"),
            HarmonicLow => "harmonic-low".into(),
            HarmonicHigh {
                constant: HarmonicConstant::Corrected,
            } => "harmonic-high".into(),
            HarmonicHigh {
                constant: HarmonicConstant::Printed,
            } => "harmonic-high-printed".into(),
            FactorialLow => "factorial-low".into(),
            FactorialHigh => "factorial-high".into(),
            FactorialAsPrinted {
                side: PrintedSide::Low,
            } => "factorial-low-printed".into(),
            FactorialAsPrinted {
                side: PrintedSide::High,
            } => "factorial-high-printed".into(),
            BernoulliFraction => "bernoulli-fraction".into(),
            BernoulliClassic => "bernoulli-classic".into(),
        }
    }
}

impl std::fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.id())
    }
}

impl std::str::FromStr for BoundFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        use BoundFamily::*;
        if let Some(l) = s.strip_prefix("qi-generic:") {
            let lambda = l
                .parse::<f64>()
                .map_err(|_| Error::Usage(format!("bad lambda in {s:?}")))?;
            return Ok(QiGammaGeneric { lambda });
        }
        Ok(match s {
            "bukac" => BukacGamma,
            "sevli-batir" => SevliBatirGamma,
            "qi-low" => QiGammaLow,
            "qi-high" => QiGammaHigh,
            "harmonic-low" => HarmonicLow,
            "harmonic-high" => HarmonicHigh {
                constant: HarmonicConstant::Corrected,
            },
            "harmonic-high-printed" => HarmonicHigh {
                constant: HarmonicConstant::Printed,
            },
            "factorial-low" => FactorialLow,
            "factorial-high" => FactorialHigh,
            "factorial-low-printed" => FactorialAsPrinted {
                side: PrintedSide::Low,
            },
            "factorial-high-printed" => FactorialAsPrinted {
                side: PrintedSide::High,
            },
            "bernoulli-fraction" => BernoulliFraction,
            "bernoulli-classic" => BernoulliClassic,
            other => return Err(Error::Usage(format!("unknown bound family {other:?}"))),
        })
    }
}

/// All family ids with a fixed parameter, in a stable order.
pub fn all_families() -> Vec<BoundFamily> {
    use BoundFamily::*;
    vec![
        BukacGamma,
        SevliBatirGamma,
        QiGammaLow,
        QiGammaHigh,
        QiGammaGeneric { lambda: 0.25 },
        HarmonicLow,
        HarmonicHigh {
            constant: HarmonicConstant::Corrected,
        },
        HarmonicHigh {
            constant: HarmonicConstant::Printed,
        },
        FactorialLow,
        FactorialHigh,
        FactorialAsPrinted {
            side: PrintedSide::Low,
        },
        FactorialAsPrinted {
            side: PrintedSide::High,
        },
        BernoulliFraction,
        BernoulliClassic,
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundPair {
    pub lower: f64,
    pub upper: f64,
    pub family: BoundFamily,
    pub x: f64,
}

/// Signed distances of the target from each side; positive means the side
/// holds. `lower.value = target − lower`, `upper.value = upper − target`,
/// on the log scale for gamma and factorial families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundMargins {
    pub lower: Margin,
    pub upper: Margin,
}

/// Dispatches on the family's target.
pub fn eval_bound(family: BoundFamily, x: f64, cfg: &PrecisionConfig) -> Result<BoundPair> {
    match family.target() {
        Target::Gamma => eval_gamma_bound(family, x, cfg),
        Target::Harmonic => {
            eval_harmonic_bound(family, integer_arg("eval_harmonic_bound", x)?, cfg)
        }
        Target::Factorial => {
            eval_factorial_bound(family, integer_arg("eval_factorial_bound", x)?, cfg)
        }
        Target::BernoulliFraction => match family {
            BoundFamily::BernoulliClassic => eval_bernoulli_classic_bound(x),
            _ => eval_bernoulli_fraction_bound(x),
        },
    }
}

pub fn bound_margins(family: BoundFamily, x: f64, cfg: &PrecisionConfig) -> Result<BoundMargins> {
    match family.target() {
        Target::Gamma => gamma_margins(family, x, cfg),
        Target::Harmonic => harmonic_margins(family, integer_arg("harmonic_margins", x)?, cfg),
        Target::Factorial => factorial_margins(family, integer_arg("factorial_margins", x)?, cfg),
        Target::BernoulliFraction => bernoulli_margins(family, x),
    }
}

fn integer_arg(function: &'static str, x: f64) -> Result<u64> {
    if x.is_finite() && x >= 1.0 && x.fract() == 0.0 && x <= u64::MAX as f64 {
        Ok(x as u64)
    } else {
        Err(Error::domain(
            function,
            format!("n must be a positive integer, got {x}"),
        ))
    }
}

pub(crate) fn wrong_family(function: &'static str, family: BoundFamily) -> Error {
    Error::parameter(function, format!("family {family} does not apply here"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for f in all_families() {
            let back: BoundFamily = f.id().parse().unwrap();
            assert_eq!(back, f);
        }
        assert!("nope".parse::<BoundFamily>().is_err());
    }

    #[test]
    fn integer_domain() {
        assert_eq!(integer_arg("t", 3.0).unwrap(), 3);
        assert!(integer_arg("t", 0.0).is_err());
        assert!(integer_arg("t", 2.5).is_err());
    }
}
