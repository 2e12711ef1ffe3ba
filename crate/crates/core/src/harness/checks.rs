//! Interpretation of registry claims as numerical checks.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::bounds::{
    bound_margins, compare_families, harmonic_route_check, BoundFamily, FamilyOrdering,
    HarmonicReference, Target, EXACT_HARMONIC_LIMIT,
};
use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::harness::registry::{
    default_grid, refinement_grid, Claim, ClaimKind, Domain, LambdaSet, Polarity,
};
use crate::harness::report::VerificationReport;
use crate::monotone::hfun::deriv_unchecked;
use crate::monotone::{
    cm_check, default_phi_grid, integrand_certificate, kth_root_base_exact, kth_root_bound,
    lambda_star, ln_g_lambda, necessary_limit_value, pivot_chained_bound,
    series_coeff_lambda_exact, series_coeff_pivot, term_to_f64, CmSign, H_lambda,
};
use crate::precision::{Margin, PrecisionConfig, EPS};
use crate::verdict::{Location, Strictness, Sweep, Verdict};

/// Result of one claim before timing and metadata are attached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Outcome {
    pub grid: GridSpec,
    pub min_margin: f64,
    pub argmin_x: f64,
    pub verdict: Verdict,
}

/// Worst-first fold of partial results.
#[derive(Debug, Clone, Copy)]
struct Acc {
    min_margin: f64,
    argmin_x: f64,
    verdict: Verdict,
}

impl Acc {
    fn new() -> Self {
        Acc {
            min_margin: f64::INFINITY,
            argmin_x: f64::NAN,
            verdict: Verdict::Verified,
        }
    }

    fn add(&mut self, margin: f64, x: f64, verdict: Verdict) {
        if margin < self.min_margin || self.argmin_x.is_nan() {
            self.min_margin = margin;
            self.argmin_x = x;
        }
        self.verdict = worst(self.verdict, verdict);
    }

    fn add_sweep(&mut self, s: &Sweep) {
        let x = s.argmin().map(|l| l.x).unwrap_or(f64::NAN);
        self.add(s.min_margin(), x, s.verdict());
    }

    fn outcome(self, grid: GridSpec) -> Outcome {
        Outcome {
            grid,
            min_margin: self.min_margin,
            argmin_x: self.argmin_x,
            verdict: self.verdict,
        }
    }
}

fn worst(a: Verdict, b: Verdict) -> Verdict {
    use Verdict::*;
    match (a, b) {
        (Falsified, _) | (_, Falsified) => Falsified,
        (Indeterminate, _) | (_, Indeterminate) => Indeterminate,
        _ => Verified,
    }
}

fn exact_verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Verified
    } else {
        Verdict::Falsified
    }
}

/// Runs one claim. `grid` replaces the default real grid where the claim uses it.
pub fn check_claim(
    claim: &Claim,
    grid: Option<GridSpec>,
    cfg: &PrecisionConfig,
) -> Result<Outcome> {
    cfg.validate()?;
    let out = match &claim.kind {
        ClaimKind::Monotone {
            lambdas,
            sign,
            from,
            max_order,
        } => monotone(lambdas, *sign, *from, *max_order, grid, cfg)?,
        ClaimKind::Threshold { tol } => threshold(*tol, cfg)?,
        ClaimKind::Containment { families, domain } => containment(families, *domain, grid, cfg)?,
        ClaimKind::BestConstants => best_constants(cfg)?,
        ClaimKind::NecessaryLimit { tol } => limit(*tol, cfg)?,
        ClaimKind::Ordering {
            first,
            second,
            lower,
            upper,
            grid,
        } => ordering(*first, *second, *lower, *upper, *grid, cfg)?,
        ClaimKind::PivotPositive { k_lo, k_hi } => pivot_positive(*k_lo, *k_hi)?,
        ClaimKind::PivotChained { k_lo, k_hi } => pivot_chained(*k_lo, *k_hi)?,
        ClaimKind::LambdaCoefficients { lambda, k_lo, k_hi } => {
            lambda_coefficients(*lambda, *k_lo, *k_hi)?
        }
        ClaimKind::KthRoot { k_lo, k_hi } => kth_root(*k_lo, *k_hi)?,
        ClaimKind::PrintedExpansion { printed, grid } => printed_expansion(*printed, *grid, cfg)?,
    };
    Ok(match claim.polarity {
        Polarity::Holds => out,
        Polarity::Fails => Outcome {
            min_margin: -out.min_margin,
            verdict: match out.verdict {
                Verdict::Verified => Verdict::Falsified,
                Verdict::Falsified => Verdict::Verified,
                Verdict::Indeterminate => Verdict::Indeterminate,
            },
            ..out
        },
    })
}

/// [`check_claim`] with timing; failures of the machinery itself become
/// indeterminate reports with NaN margins.
pub fn run_claim(
    claim: &Claim,
    grid: Option<GridSpec>,
    cfg: &PrecisionConfig,
) -> VerificationReport {
    let start = Instant::now();
    let out = check_claim(claim, grid, cfg).unwrap_or_else(|_| Outcome {
        grid: grid.unwrap_or_else(default_grid),
        min_margin: f64::NAN,
        argmin_x: f64::NAN,
        verdict: Verdict::Indeterminate,
    });
    VerificationReport {
        claim_id: claim.id.to_owned(),
        grid: out.grid,
        min_margin: out.min_margin,
        argmin_x: out.argmin_x,
        verdict: out.verdict,
        precision_digits: cfg.working_digits,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

fn star_lambda(cfg: &PrecisionConfig) -> Result<f64> {
    Ok(lambda_star(1e-10, cfg)?.lambda_star)
}

fn monotone(
    lambdas: &LambdaSet,
    sign: CmSign,
    from: u32,
    max_order: u32,
    grid: Option<GridSpec>,
    cfg: &PrecisionConfig,
) -> Result<Outcome> {
    let spec = grid.unwrap_or_else(default_grid);
    let nodes = spec.nodes();
    let values = match lambdas {
        LambdaSet::Fixed(v) => v.clone(),
        LambdaSet::StarOffset(d) => vec![star_lambda(cfg)? + d],
    };
    let mut acc = Acc::new();
    for lambda in values {
        if from == 0 {
            let r = cm_check(lambda, sign, max_order, &nodes, cfg)?;
            let (m, x) = decisive(r.min_margin, r.argmin.1, r.derivative_verdict, &r.integrand);
            acc.add(m, x, r.verdict);
        } else {
            let (sweep, cert) = log_monotone(lambda, sign, from, max_order, &nodes, cfg)?;
            let x = sweep.argmin().map(|l| l.x).unwrap_or(f64::NAN);
            let (m, x) = decisive(sweep.min_margin(), x, sweep.verdict(), &cert);
            acc.add(m, x, worst(sweep.verdict(), cert.verdict));
        }
    }
    Ok(acc.outcome(spec))
}

/// Margin and location to report for a monotonicity check: the derivative
/// sweep's, unless the integrand certificate alone decides the verdict, in
/// which case its `t` abscissa is reported.
fn decisive(
    margin: f64,
    x: f64,
    derivative: Verdict,
    cert: &crate::monotone::IntegrandCertificate,
) -> (f64, f64) {
    if worst(derivative, cert.verdict) != derivative {
        (cert.min_margin, cert.argmin_t)
    } else {
        (margin, x)
    }
}

/// Sweep of `s·(−1)^k [ln G_λ]^(k)` for `k = from..=max_order`. The
/// derivatives of `ln G_λ` and `H_λ` agree for `k ≥ 1`; the offset between
/// the two functions is confirmed at each node first.
fn log_monotone(
    lambda: f64,
    sign: CmSign,
    from: u32,
    max_order: u32,
    nodes: &[f64],
    cfg: &PrecisionConfig,
) -> Result<(Sweep, crate::monotone::IntegrandCertificate)> {
    let offset = 0.5 * ((2.0 * std::f64::consts::PI).ln() - 1.0);
    let s = sign.factor();
    let mut sweep = Sweep::new(Strictness::Strict, cfg);
    for &x in nodes {
        let g = ln_g_lambda(x, lambda, cfg)?;
        let h = H_lambda(x, lambda, cfg)?;
        let d = g.value - h.value - offset;
        let allow = g.abs_error_bound
            + h.abs_error_bound
            + 8.0 * EPS * (g.value.abs() + h.value.abs() + offset);
        if d.abs() > allow {
            return Err(Error::numerical(
                "log_monotone",
                format!("ln G - H offset off by {d:e} at x = {x}"),
            ));
        }
        for k in from.max(1)..=max_order {
            let v = deriv_unchecked(k, x, lambda, cfg)?;
            let alt = if k % 2 == 0 { s } else { -s };
            sweep.push(
                Location { order: k, x },
                Margin::new(alt * v.value, v.abs_error_bound, 0.0),
            );
        }
    }
    let cert = integrand_certificate(lambda, sign, &default_phi_grid(), cfg);
    Ok((sweep, cert))
}

fn threshold(tol: f64, cfg: &PrecisionConfig) -> Result<Outcome> {
    let r = lambda_star(tol, cfg)?;
    let width = r.bracket.1 - r.bracket.0;
    let margin = (r.bracket.0 - 0.5).min(1.5 - r.bracket.1).min(tol - width);
    let verdict = if margin > 0.0 {
        Verdict::Verified
    } else {
        Verdict::Falsified
    };
    Ok(Outcome {
        grid: GridSpec::log(1e-3, 200.0, 4000),
        min_margin: margin,
        argmin_x: r.t_star,
        verdict,
    })
}

fn real_nodes(domain: Domain, grid: Option<GridSpec>) -> (GridSpec, Vec<f64>) {
    match domain {
        Domain::RealOn(g) => (g, g.nodes()),
        Domain::Real => match grid {
            Some(g) => (g, g.nodes()),
            None => {
                let g = default_grid();
                let mut nodes = g.nodes();
                nodes.extend(refinement_grid().nodes());
                nodes.sort_by(f64::total_cmp);
                nodes.dedup();
                (g, nodes)
            }
        },
        Domain::Integers(n) => (
            GridSpec::linear(1.0, n as f64, n as usize),
            (1..=n).map(|k| k as f64).collect(),
        ),
    }
}

fn containment(
    families: &[BoundFamily],
    domain: Domain,
    grid: Option<GridSpec>,
    cfg: &PrecisionConfig,
) -> Result<Outcome> {
    let (spec, nodes) = real_nodes(domain, grid);
    let mut acc = Acc::new();
    for &family in families {
        let (sl, su) = family.strictness();
        let mut lower = Sweep::new(sl, cfg);
        let mut upper = Sweep::new(su, cfg);
        for &x in &nodes {
            let m = bound_margins(family, x, cfg)?;
            let at = Location { order: 0, x };
            lower.push(at, m.lower);
            upper.push(at, m.upper);
        }
        acc.add_sweep(&lower);
        acc.add_sweep(&upper);
        if family.target() == Target::Harmonic {
            if let Domain::Integers(n_max) = domain {
                harmonic_routes(n_max, cfg)?;
            }
        }
    }
    Ok(acc.outcome(spec))
}

/// Confirms `H_n = ψ(n+1) + γ`, which the margins rely on, against the
/// exact reference for every `n ≤ EXACT_HARMONIC_LIMIT` and at a sparse
/// subset beyond.
fn harmonic_routes(n_max: u64, cfg: &PrecisionConfig) -> Result<()> {
    let mut r = HarmonicReference::new();
    for _ in 0..n_max {
        let (n, h) = r.next_value();
        if n <= EXACT_HARMONIC_LIMIT || n % 1000 == 0 || n == n_max {
            harmonic_route_check(n, h, cfg)?;
        }
    }
    Ok(())
}

fn best_constants(cfg: &PrecisionConfig) -> Result<Outcome> {
    let targets = [
        (1e-6, 2f64.sqrt() * (7.0f64 / 12.0).exp()),
        (1e4, (2.0 * std::f64::consts::PI).sqrt()),
    ];
    let mut acc = Acc::new();
    for (x, want) in targets {
        let got = crate::bounds::best_constant_ratio(x, cfg)?;
        let rel = (got.value - want).abs() / want;
        let m = 1e-3 - rel;
        acc.add(m, x, exact_verdict(m - got.abs_error_bound / want > 0.0));
    }
    Ok(acc.outcome(GridSpec::log(1e-6, 1e4, 2)))
}

fn limit(tol: f64, cfg: &PrecisionConfig) -> Result<Outcome> {
    let spec = GridSpec::log(1e3, 1e4, 2);
    let mut acc = Acc::new();
    for x in spec.nodes() {
        let v = necessary_limit_value(x, cfg)?;
        let m = tol - (v.value - 0.5).abs();
        acc.add(m, x, exact_verdict(m > v.abs_error_bound));
    }
    Ok(acc.outcome(spec))
}

fn ordering(
    first: BoundFamily,
    second: BoundFamily,
    lower: Option<FamilyOrdering>,
    upper: Option<FamilyOrdering>,
    spec: GridSpec,
    cfg: &PrecisionConfig,
) -> Result<Outcome> {
    let mut acc = Acc::new();
    let side = |want: FamilyOrdering, got: FamilyOrdering, gap: f64, first_if_positive: bool| {
        let toward_first = if first_if_positive { gap } else { -gap };
        let margin = match want {
            FamilyOrdering::Second => -toward_first,
            _ => toward_first,
        };
        let verdict = if got == want {
            Verdict::Verified
        } else if got == FamilyOrdering::Tie {
            Verdict::Indeterminate
        } else {
            Verdict::Falsified
        };
        (margin, verdict)
    };
    for x in spec.nodes() {
        let all = compare_families(x, cfg)?;
        let c = all
            .iter()
            .find(|c| c.first == first && c.second == second)
            .ok_or_else(|| {
                Error::parameter(
                    "ordering",
                    format!("no comparison of {first} with {second}"),
                )
            })?;
        if let Some(w) = lower {
            let (m, v) = side(w, c.lower_tighter, c.lower_gap, true);
            acc.add(m, x, v);
        }
        if let Some(w) = upper {
            let (m, v) = side(w, c.upper_tighter, c.upper_gap, false);
            acc.add(m, x, v);
        }
    }
    Ok(acc.outcome(spec))
}

fn k_grid(k_lo: u32, k_hi: u32) -> GridSpec {
    GridSpec::linear(k_lo as f64, k_hi as f64, (k_hi - k_lo + 1) as usize)
}

fn big_to_f64(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

fn pivot_positive(k_lo: u32, k_hi: u32) -> Result<Outcome> {
    let mut acc = Acc::new();
    for k in k_lo..=k_hi {
        let c = series_coeff_pivot(k)?.c;
        acc.add(big_to_f64(&c), k as f64, exact_verdict(c.is_positive()));
    }
    Ok(acc.outcome(k_grid(k_lo, k_hi)))
}

fn pivot_chained(k_lo: u32, k_hi: u32) -> Result<Outcome> {
    let mut acc = Acc::new();
    for k in k_lo..=k_hi {
        let chained = pivot_chained_bound(k);
        let d = series_coeff_pivot(k)?.c - &chained;
        acc.add(
            big_to_f64(&d),
            k as f64,
            exact_verdict(!d.is_negative() && chained.is_positive()),
        );
    }
    Ok(acc.outcome(k_grid(k_lo, k_hi)))
}

fn lambda_coefficients(lambda: (i64, i64), k_lo: u32, k_hi: u32) -> Result<Outcome> {
    let l = BigRational::new(BigInt::from(lambda.0), BigInt::from(lambda.1));
    let mut acc = Acc::new();
    for k in k_lo..=k_hi {
        let (lhs, rhs) = series_coeff_lambda_exact(k, &l)?;
        let d = lhs - rhs;
        acc.add(term_to_f64(&d), k as f64, exact_verdict(!d.is_negative()));
    }
    Ok(acc.outcome(k_grid(k_lo, k_hi)))
}

fn kth_root(k_lo: u32, k_hi: u32) -> Result<Outcome> {
    let mut acc = Acc::new();
    for k in k_lo..=k_hi {
        let (_, ok) = kth_root_base_exact(k)?;
        acc.add(1.5 - kth_root_bound(k)?, k as f64, exact_verdict(ok));
    }
    Ok(acc.outcome(k_grid(k_lo, k_hi)))
}

/// `(t²−24)e^t + 24t e^{t/2} − t² + 24` against the expansion with its first
/// coefficient replaced by `printed`, as an identity in `t`.
fn printed_expansion(
    printed: (i64, i64),
    spec: GridSpec,
    cfg: &PrecisionConfig,
) -> Result<Outcome> {
    let lead = printed.0 as f64 / printed.1 as f64;
    let tail: Vec<f64> = (6..=80)
        .map(|k| series_coeff_pivot(k).map(|p| term_to_f64(&p.term)))
        .collect::<Result<_>>()?;
    let mut sweep = Sweep::new(Strictness::NonStrict, cfg);
    for t in spec.nodes() {
        let a = (t * t - 24.0) * t.exp();
        let b = 24.0 * t * (0.5 * t).exp();
        let direct = a + b - t * t + 24.0;
        let direct_err = 8.0 * EPS * (a.abs() + b.abs() + t * t + 24.0);
        let mut series = lead * t.powi(5);
        let mut mag = series.abs();
        for (i, c) in tail.iter().enumerate() {
            let term = c * t.powi(6 + i as i32);
            series += term;
            mag += term.abs();
        }
        let err = direct_err + 8.0 * EPS * mag + tail_remainder(t);
        let d = direct - series;
        sweep.push(Location { order: 0, x: t }, Margin::new(-d.abs(), err, 0.0));
    }
    let mut acc = Acc::new();
    acc.add_sweep(&sweep);
    Ok(acc.outcome(spec))
}

/// Crude bound on the omitted terms `k > 80`, using `c_k/(k! 2^k) ≤ k²/k!`.
fn tail_remainder(t: f64) -> f64 {
    let mut term = 1.0f64;
    for k in 1..=81u32 {
        term *= t / k as f64;
    }
    let mut s = 0.0;
    for k in 81..200u32 {
        s += (k * k) as f64 * term;
        term *= t / (k + 1) as f64;
    }
    2.0 * s
}
