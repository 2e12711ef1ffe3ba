use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gamma_certify::bounds::{
    bound_margins, compare_families, eval_bound, BoundFamily, FamilyOrdering,
};
use gamma_certify::harness::{
    emit_report, exit_code, format_float, render, run_suite_on, unexpected, ReportFormat,
    EXIT_USAGE,
};
use gamma_certify::monotone::lambda_star;
use gamma_certify::{Error, GridSpec, PrecisionConfig};

#[derive(Parser)]
#[command(
    name = "gamma-certify",
    version,
    about = "Certify gamma-function bounds and monotonicity claims"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and report one verdict per claim.
    Verify {
        /// Suite name, e.g. `all`, `thm2.1`, `falsify-printed`
        #[arg(long)]
        suite: String,
        /// Working precision in decimal digits (>= 15).
        #[arg(long)]
        digits: Option<u32>,
        /// Replacement real grid, `lo:hi:points:log|lin`.
        #[arg(long)]
        grid: Option<String>,
        /// Write reports to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// `json` (one object per line) or `csv`
        #[arg(long, default_value = "json")]
        format: String,
        /// Write runtime_ms as 0 so that repeated runs are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Solve for the critical value λ*.
    LambdaStar {
        /// Target width of the enclosure
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long)]
        digits: Option<u32>,
    },
    /// Compare the gamma bound families at one point.
    Compare {
        #[arg(long)]
        x: f64,
    },
    /// Evaluate one bound family at one point.
    Eval {
        /// Family id, e.g. `qi-low`, `harmonic-high`, `qi-generic:0.25`
        #[arg(long)]
        family: String,
        #[arg(long)]
        x: f64,
    },
}

fn config(digits: Option<u32>) -> Result<PrecisionConfig, Error> {
    match digits {
        Some(d) => PrecisionConfig::new(d),
        None => PrecisionConfig::from_env(),
    }
}

fn status(e: &Error) -> u8 {
    match e {
        Error::Numerical { .. } | Error::Indeterminate { .. } => 1,
        _ => EXIT_USAGE as u8,
    }
}

fn ordering_str(o: FamilyOrdering, first: BoundFamily, second: BoundFamily) -> String {
    match o {
        FamilyOrdering::First => first.to_string(),
        FamilyOrdering::Second => second.to_string(),
        FamilyOrdering::Tie => "tie".into(),
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Verify {
            suite,
            digits,
            grid,
            out,
            format,
            no_timing,
        } => {
            let cfg = config(digits)?;
            let format: ReportFormat = format.parse()?;
            let grid = grid.as_deref().map(GridSpec::parse).transpose()?;
            let mut reports = run_suite_on(&suite, grid, &cfg)?;
            if no_timing {
                reports.iter_mut().for_each(|r| r.runtime_ms = 0);
            }
            match out {
                Some(path) => {
                    emit_report(&reports, format, &path)?;
                    for r in &reports {
                        println!(
                            "{:<28} {:<13} min_margin={}",
                            r.claim_id,
                            r.verdict,
                            format_float(r.min_margin)
                        );
                    }
                }
                None => print!("{}", render(&reports, format)?),
            }
            for r in unexpected(&reports) {
                eprintln!("unexpected verdict: {} is {}", r.claim_id, r.verdict);
            }
            Ok(exit_code(&reports) as u8)
        }
        Command::LambdaStar { tol, digits } => {
            let cfg = config(digits)?;
            let r = lambda_star(tol, &cfg)?;
            println!(
                "lambda* = {} in [{}, {}] at t* = {}",
                format_float(r.lambda_star),
                format_float(r.bracket.0),
                format_float(r.bracket.1),
                format_float(r.t_star)
            );
            println!(
                "{{\"lambda_star\":{},\"bracket\":[{},{}],\"t_star\":{},\"tolerance\":{}}}",
                format_float(r.lambda_star),
                format_float(r.bracket.0),
                format_float(r.bracket.1),
                format_float(r.t_star),
                format_float(r.tolerance)
            );
            Ok(0)
        }
        Command::Compare { x } => {
            let cfg = PrecisionConfig::from_env()?;
            println!(
                "{:<12} {:<12} {:<12} {:<12}",
                "first", "second", "lower", "upper"
            );
            for c in compare_families(x, &cfg)? {
                println!(
                    "{:<12} {:<12} {:<12} {:<12}",
                    c.first.to_string(),
                    c.second.to_string(),
                    ordering_str(c.lower_tighter, c.first, c.second),
                    ordering_str(c.upper_tighter, c.first, c.second)
                );
            }
            Ok(0)
        }
        Command::Eval { family, x } => {
            let cfg = PrecisionConfig::from_env()?;
            let family: BoundFamily = family.parse()?;
            let p = eval_bound(family, x, &cfg)?;
            let m = bound_margins(family, x, &cfg)?;
            println!("family       {family}");
            println!("x            {}", format_float(x));
            println!("lower        {}", format_float(p.lower));
            println!("upper        {}", format_float(p.upper));
            println!("lower_margin {}", format_float(m.lower.value));
            println!("upper_margin {}", format_float(m.upper.value));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("gamma-certify: {e}");
            ExitCode::from(status(&e))
        }
    }
}
