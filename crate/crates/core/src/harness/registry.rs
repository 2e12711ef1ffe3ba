//! The published claim registry. Claims are data; `checks` interprets them.

use crate::bounds::{BoundFamily, FamilyOrdering, HarmonicConstant, PrintedSide};
use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::monotone::CmSign;
use crate::verdict::Verdict;

pub const SUITES: [&str; 8] = [
    "all",
    "thm2.1",
    "thm3.1",
    "thm3.2",
    "thm3.3",
    "thm3.4",
    "remark1",
    "falsify-printed",
];

/// Which values of `λ` a monotonicity claim is checked at.
#[derive(Debug, Clone, PartialEq)]
pub enum LambdaSet {
    Fixed(Vec<f64>),
    /// `λ* + offset`, with `λ*` solved at run time.
    StarOffset(f64),
}

/// Where a bound family is tested.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// The default real grid, replaceable with `--grid`.
    Real,
    /// A fixed real grid that `--grid` does not replace.
    RealOn(GridSpec),
    /// `n = 1..=n_max`.
    Integers(u64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ClaimKind {
    /// `s·(−1)^k D^k H_λ ≥ 0` for `k = from..=max_order`. With `from = 0` this
    /// is complete monotonicity of `±H_λ`; with `from = 1` it is logarithmic
    /// complete monotonicity of `G_λ^{±1}`.
    Monotone {
        lambdas: LambdaSet,
        sign: CmSign,
        from: u32,
        max_order: u32,
    },
    Threshold {
        tol: f64,
    },
    Containment {
        families: Vec<BoundFamily>,
        domain: Domain,
    },
    BestConstants,
    NecessaryLimit {
        tol: f64,
    },
    Ordering {
        first: BoundFamily,
        second: BoundFamily,
        lower: Option<FamilyOrdering>,
        upper: Option<FamilyOrdering>,
        grid: GridSpec,
    },
    PivotPositive {
        k_lo: u32,
        k_hi: u32,
    },
    PivotChained {
        k_lo: u32,
        k_hi: u32,
    },
    LambdaCoefficients {
        lambda: (i64, i64),
        k_lo: u32,
        k_hi: u32,
    },
    KthRoot {
        k_lo: u32,
        k_hi: u32,
    },
    /// The pivot expansion with its leading coefficient replaced by `printed`.
    PrintedExpansion {
        printed: (i64, i64),
        grid: GridSpec,
    },
}

/// Whether the report certifies the statement or its negation. A
/// necessity claim ("not CM for λ = 0.6") is established by a falsified sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Holds,
    Fails,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Claim {
    pub id: &'static str,
    pub suite: &'static str,
    pub statement: &'static str,
    pub kind: ClaimKind,
    pub polarity: Polarity,
    pub expected: Verdict,
}

/// Default real grid for gamma and monotonicity claims: `(1e−3, 100]`, 500 log nodes.
pub fn default_grid() -> GridSpec {
    GridSpec::log(1e-3, 100.0, 500)
}

/// Linear refinement around `x = 1`, appended to the default grid.
pub fn refinement_grid() -> GridSpec {
    GridSpec::linear(0.5, 2.0, 151)
}

fn claim(id: &'static str, suite: &'static str, statement: &'static str, kind: ClaimKind) -> Claim {
    Claim {
        id,
        suite,
        statement,
        kind,
        polarity: Polarity::Holds,
        expected: Verdict::Verified,
    }
}

fn negated(mut c: Claim) -> Claim {
    c.polarity = Polarity::Fails;
    c
}

fn printed(mut c: Claim) -> Claim {
    c.expected = Verdict::Falsified;
    c
}

fn monotone(lambdas: LambdaSet, sign: CmSign, from: u32) -> ClaimKind {
    ClaimKind::Monotone {
        lambdas,
        sign,
        from,
        max_order: 6,
    }
}

/// Every registered claim in report order.
pub fn registry() -> Vec<Claim> {
    use BoundFamily::*;
    use CmSign::{Minus, Plus};
    use LambdaSet::{Fixed, StarOffset};
    let high_corrected = HarmonicHigh {
        constant: HarmonicConstant::Corrected,
    };
    vec![
        claim(
            "thm2.1-item1",
            "thm2.1",
            "H_lambda is completely monotonic for lambda in {0, 1/4, 1/2}",
            monotone(Fixed(vec![0.0, 0.25, 0.5]), Plus, 0),
        ),
        negated(claim(
            "thm2.1-item1-necessity",
            "thm2.1",
            "H_lambda is not completely monotonic for lambda in {0.6, 1}",
            monotone(Fixed(vec![0.6, 1.0]), Plus, 0),
        )),
        claim(
            "thm2.1-item1-limit",
            "thm2.1",
            "-x - 1/(24 f(x)) tends to 1/2 (checked to 1e-3 on [1e3, 1e4])",
            ClaimKind::NecessaryLimit { tol: 1e-3 },
        ),
        claim(
            "thm2.1-item1-pivot",
            "thm2.1",
            "pivot coefficients c_k = [k(k-1)-24]2^k + 48k are positive for k = 5..60",
            ClaimKind::PivotPositive { k_lo: 5, k_hi: 60 },
        ),
        claim(
            "thm2.1-item1-pivot-chained",
            "thm2.1",
            "c_k >= k^3 + 23k - 24 for k = 6..60",
            ClaimKind::PivotChained { k_lo: 6, k_hi: 60 },
        ),
        claim(
            "thm2.1-item2-threshold",
            "thm2.1",
            "lambda* = sup h lies in (1/2, 3/2), enclosed to width 1e-8",
            ClaimKind::Threshold { tol: 1e-8 },
        ),
        claim(
            "thm2.1-item2",
            "thm2.1",
            "-H_lambda is completely monotonic at lambda = lambda* + 0.01",
            monotone(StarOffset(0.01), Minus, 0),
        ),
        negated(claim(
            "thm2.1-item2-sharpness",
            "thm2.1",
            "the integrand criterion fails at lambda = lambda* - 0.01",
            monotone(StarOffset(-0.01), Minus, 0),
        )),
        claim(
            "thm2.1-item3",
            "thm2.1",
            "-H_lambda is completely monotonic for lambda in {3/2, 2, 5}",
            monotone(Fixed(vec![1.5, 2.0, 5.0]), Minus, 0),
        ),
        claim(
            "thm2.1-item3-coefficients",
            "thm2.1",
            "24[(l+1)^k - l^k - k(l+1/2)^(k-1)] >= k(k-1)[(3/2)^(k-2) - (1/2)^(k-2)] at l = 3/2, k = 3..60",
            ClaimKind::LambdaCoefficients {
                lambda: (3, 2),
                k_lo: 3,
                k_hi: 60,
            },
        ),
        claim(
            "thm2.1-item3-kth-root",
            "thm2.1",
            "[((3/2)^(k-2) - (1/2)^(k-2))/(k-2)]^(1/(k-3)) <= 3/2 for k = 4..200",
            ClaimKind::KthRoot { k_lo: 4, k_hi: 200 },
        ),
        claim(
            "thm3.1-ineq1",
            "thm3.1",
            "Gamma(x+1) lies between the lambda in [0, 1/2] bounds (lambda = 1/2 and 1/4)",
            ClaimKind::Containment {
                families: vec![QiGammaLow, QiGammaGeneric { lambda: 0.25 }],
                domain: Domain::Real,
            },
        ),
        claim(
            "thm3.1-ineq2",
            "thm3.1",
            "Gamma(x+1) lies between the reversed lambda = 3/2 bounds",
            ClaimKind::Containment {
                families: vec![QiGammaHigh],
                domain: Domain::Real,
            },
        ),
        claim(
            "eq1.2-containment",
            "thm3.1",
            "Gamma(x+1) lies between the square-root-corrected bounds",
            ClaimKind::Containment {
                families: vec![BukacGamma],
                domain: Domain::Real,
            },
        ),
        claim(
            "eq1.3-containment",
            "thm3.1",
            "Gamma(x+1) lies between the best-constant bounds",
            ClaimKind::Containment {
                families: vec![SevliBatirGamma],
                domain: Domain::Real,
            },
        ),
        claim(
            "eq1.3-best-constants",
            "thm3.1",
            "the normalised ratio tends to sqrt(2 pi) at infinity and sqrt(2) e^(7/12) at 0",
            ClaimKind::BestConstants,
        ),
        claim(
            "intro-lower-stronger",
            "thm3.1",
            "the best-constant lower bound exceeds the square-root-corrected lower bound",
            ClaimKind::Ordering {
                first: BukacGamma,
                second: SevliBatirGamma,
                lower: Some(FamilyOrdering::Second),
                upper: None,
                grid: default_grid(),
            },
        ),
        claim(
            "intro-upper-weaker",
            "thm3.1",
            "for x >= 1 the best-constant upper bound exceeds the square-root-corrected one",
            ClaimKind::Ordering {
                first: BukacGamma,
                second: SevliBatirGamma,
                lower: None,
                upper: Some(FamilyOrdering::First),
                grid: GridSpec::log(1.0, 100.0, 500),
            },
        ),
        claim(
            "thm3.2-ineq1",
            "thm3.2",
            "harmonic bounds with lambda = 1/2 hold for n = 1..10^6",
            ClaimKind::Containment {
                families: vec![HarmonicLow],
                domain: Domain::Integers(1_000_000),
            },
        ),
        claim(
            "thm3.2-ineq2",
            "thm3.2",
            "harmonic bounds with lambda = 3/2 and constant 1/150 hold for n = 1..10^6",
            ClaimKind::Containment {
                families: vec![high_corrected],
                domain: Domain::Integers(1_000_000),
            },
        ),
        claim(
            "thm3.3-item1",
            "thm3.3",
            "G_lambda is logarithmically completely monotonic for lambda in {0, 1/4, 1/2}",
            monotone(Fixed(vec![0.0, 0.25, 0.5]), Plus, 1),
        ),
        claim(
            "thm3.3-item2",
            "thm3.3",
            "1/G_lambda is logarithmically completely monotonic at lambda = lambda* + 0.01",
            monotone(StarOffset(0.01), Minus, 1),
        ),
        claim(
            "thm3.3-item3",
            "thm3.3",
            "1/G_lambda is logarithmically completely monotonic for lambda in {3/2, 2, 5}",
            monotone(Fixed(vec![1.5, 2.0, 5.0]), Minus, 1),
        ),
        claim(
            "thm3.4-ineq1",
            "thm3.4",
            "n! lies between the corrected lambda = 1/2 bounds for n = 1..170",
            ClaimKind::Containment {
                families: vec![FactorialLow],
                domain: Domain::Integers(170),
            },
        ),
        claim(
            "thm3.4-ineq2",
            "thm3.4",
            "n! lies between the corrected lambda = 3/2 bounds for n = 1..170",
            ClaimKind::Containment {
                families: vec![FactorialHigh],
                domain: Domain::Integers(170),
            },
        ),
        claim(
            "remark1-eq4.1",
            "remark1",
            "x/(e^x - 1) lies between the refined exponential bounds on (0, 50]",
            ClaimKind::Containment {
                families: vec![BernoulliFraction],
                domain: Domain::RealOn(GridSpec::log(1e-3, 50.0, 500)),
            },
        ),
        claim(
            "remark1-eq4.2",
            "remark1",
            "e^-x < x/(e^x - 1) < e^(-x/2) on (0, 50]",
            ClaimKind::Containment {
                families: vec![BernoulliClassic],
                domain: Domain::RealOn(GridSpec::log(1e-3, 50.0, 500)),
            },
        ),
        claim(
            "remark1-lambda-one",
            "remark1",
            "-H_1 is completely monotonic",
            monotone(Fixed(vec![1.0]), Minus, 0),
        ),
        printed(claim(
            "eq3.8-as-printed",
            "falsify-printed",
            "harmonic upper bound with constant 1/90 holds for n = 1..1000",
            ClaimKind::Containment {
                families: vec![HarmonicHigh {
                    constant: HarmonicConstant::Printed,
                }],
                domain: Domain::Integers(1000),
            },
        )),
        printed(claim(
            "eq3.12-as-printed",
            "falsify-printed",
            "printed lambda = 1/2 factorial bounds hold for n = 1..170",
            ClaimKind::Containment {
                families: vec![FactorialAsPrinted {
                    side: PrintedSide::Low,
                }],
                domain: Domain::Integers(170),
            },
        )),
        printed(claim(
            "eq3.13-as-printed",
            "falsify-printed",
            "printed lambda = 3/2 factorial bounds hold for n = 1..170",
            ClaimKind::Containment {
                families: vec![FactorialAsPrinted {
                    side: PrintedSide::High,
                }],
                domain: Domain::Integers(170),
            },
        )),
        printed(claim(
            "t5-coefficient-as-printed",
            "falsify-printed",
            "the pivot expansion starts with (7/24) t^5",
            ClaimKind::PrintedExpansion {
                printed: (7, 24),
                grid: GridSpec::linear(0.5, 4.0, 36),
            },
        )),
    ]
}

pub fn lookup(id: &str) -> Option<Claim> {
    registry().into_iter().find(|c| c.id == id)
}

/// Claims of `suite` in registry order.
pub fn suite_claims(suite: &str) -> Result<Vec<Claim>> {
    if !SUITES.contains(&suite) {
        return Err(Error::Usage(format!(
            "unknown suite {suite:?}; expected one of {}",
            SUITES.join(", ")
        )));
    }
    Ok(registry()
        .into_iter()
        .filter(|c| suite == "all" || c.suite == suite)
        .collect())
}
