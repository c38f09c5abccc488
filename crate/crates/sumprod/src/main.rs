//! Thin command-line front end over the library: set generation, counting,
//! the check registry, sweeps, coverage runs, and exponent reports.
//!
//! stdout carries machine-readable output only; diagnostics go to stderr.
//! Exit codes: 0 success, 1 exact-check failure, 2 usage/config error,
//! 3 budget exceeded.

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use sumprod::experiments::{self, ExperimentSpec, Format};
use sumprod::sets::{self, FamilySpec};
use sumprod::triples::CountMethod;
use sumprod::verify::{self, Instance, Suite};
use sumprod::{repfn, DEFAULT_BUDGET};
use sumprod::{crossratio, incidence, symplectic, triples};
use sumprod::{Error, FpSet, Prime, Result};
use std::io::Write as _;

#[derive(Parser)]
#[command(name = "sumprod", about = "Counting and growth experiments over prime fields")]
struct Cli {
    /// Worker threads (default: all cores). Outputs are identical at any
    /// worker count.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a set file from a family description.
    Gen(GenArgs),
    /// Compute one quantity of a set file and print it to stdout.
    Count(CountArgs),
    /// Run the verification registry over configured instances.
    Check(CheckArgs),
    /// Run a declarative sweep and write its rows.
    Sweep(SweepArgs),
    /// Four-fold product-of-differences coverage trials.
    Coverage(CoverageArgs),
    /// Exponent fit over a sweep CSV.
    Report(ReportArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    p: u64,
    /// random | ap | geometric | subgroup | interval | explicit
    #[arg(long)]
    family: String,
    #[arg(long)]
    size: Option<u32>,
    #[arg(long)]
    order: Option<u32>,
    #[arg(long)]
    start: Option<u32>,
    #[arg(long)]
    step: Option<u32>,
    #[arg(long)]
    ratio: Option<u32>,
    #[arg(long)]
    len: Option<u32>,
    /// Comma-separated residues for the explicit family.
    #[arg(long)]
    elements: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: std::path::PathBuf,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    set: std::path::PathBuf,
    /// T | Q | R | C | omega | energy:<add|mult>:<2|3|3/2>
    #[arg(long)]
    quantity: String,
    /// brute | ratio | shifted_energy | line (T and Q only)
    #[arg(long)]
    method: Option<String>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct CheckArgs {
    /// exact | monitors | all
    #[arg(long)]
    suite: String,
    #[arg(long)]
    config: std::path::PathBuf,
    /// JSONL output path (stdout when omitted).
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    spec: std::path::PathBuf,
    #[arg(long)]
    out: std::path::PathBuf,
    /// csv | json (default from the output extension, falling back to csv)
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct CoverageArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value = "random")]
    family: String,
    #[arg(long)]
    size: Option<u32>,
    #[arg(long)]
    order: Option<u32>,
    #[arg(long)]
    start: Option<u32>,
    #[arg(long)]
    step: Option<u32>,
    #[arg(long)]
    ratio: Option<u32>,
    #[arg(long)]
    len: Option<u32>,
    #[arg(long)]
    elements: Option<String>,
    #[arg(long, default_value_t = 1)]
    trials: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long = "in")]
    input: std::path::PathBuf,
    /// Quantity name to fit.
    #[arg(long)]
    fit: String,
}

/// Instance list for `check`; budgets and seeds are optional per instance.
#[derive(Deserialize)]
struct SuiteConfig {
    instances: Vec<InstanceSpec>,
    #[serde(default)]
    default_budget: Option<u64>,
}

#[derive(Deserialize)]
struct InstanceSpec {
    p: u64,
    family: FamilySpec,
    #[serde(default)]
    seed: u64,
    #[serde(default)]
    budget: Option<u64>,
}

fn family_from_args(
    kind: &str,
    size: Option<u32>,
    order: Option<u32>,
    start: Option<u32>,
    step: Option<u32>,
    ratio: Option<u32>,
    len: Option<u32>,
    elements: Option<&str>,
    seed: u64,
) -> Result<FamilySpec> {
    let need = |v: Option<u32>, what: &str| {
        v.ok_or_else(|| Error::Parse(format!("family {kind} needs --{what}")))
    };
    match kind {
        "random" => Ok(FamilySpec::Random { size: need(size, "size")?, seed }),
        "ap" => Ok(FamilySpec::Ap {
            start: need(start, "start")?,
            step: need(step, "step")?,
            len: need(len, "len")?,
        }),
        "geometric" => Ok(FamilySpec::Geometric {
            start: need(start, "start")?,
            ratio: need(ratio, "ratio")?,
            len: need(len, "len")?,
        }),
        "subgroup" => Ok(FamilySpec::Subgroup { order: need(order, "order")? }),
        "interval" => Ok(FamilySpec::Interval { start: need(start, "start")?, len: need(len, "len")? }),
        "explicit" => {
            let raw = elements.ok_or_else(|| Error::Parse("explicit family needs --elements".into()))?;
            let parsed: Result<Vec<u32>> = raw
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad element `{t}`"))))
                .collect();
            Ok(FamilySpec::Explicit { elements: parsed? })
        }
        other => Err(Error::Parse(format!("unknown family kind {other}"))),
    }
}

fn count_quantity(a: &FpSet, quantity: &str, method: Option<&str>, budget: u64) -> Result<String> {
    match quantity {
        "T" | "Q" => {
            let v = match method {
                Some(m) => {
                    let m: CountMethod = m.parse()?;
                    if quantity == "T" {
                        triples::t_count(a, m, budget)?
                    } else {
                        triples::q_count(a, m, budget)?
                    }
                }
                None => {
                    if quantity == "T" {
                        triples::t_count_auto(a, budget)?
                    } else {
                        triples::q_count_auto(a, budget)?
                    }
                }
            };
            Ok(v.to_string())
        }
        "R" => Ok(crossratio::pinned_ratios(a, crossratio::RatioVariant::Inclusive)?
            .len()
            .to_string()),
        "R_strict" => Ok(crossratio::pinned_ratios(a, crossratio::RatioVariant::Strict)?
            .len()
            .to_string()),
        "C" => Ok(crossratio::cross_ratio_set(a)?.len().to_string()),
        "omega" => {
            let pts = incidence::PointSet2D::grid(a, a).without_origin();
            Ok(symplectic::omega_set(&pts).len().to_string())
        }
        q if q.starts_with("energy:") => {
            let parts: Vec<&str> = q.split(':').collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!("bad energy quantity `{q}`")));
            }
            let kind = match parts[1] {
                "add" | "additive" => repfn::EnergyKind::Additive,
                "mult" | "multiplicative" => repfn::EnergyKind::Multiplicative,
                other => return Err(Error::Parse(format!("unknown energy kind `{other}`"))),
            };
            let order = match parts[2] {
                "2" => repfn::EnergyOrder::Two,
                "3" => repfn::EnergyOrder::Three,
                "3/2" | "1.5" => repfn::EnergyOrder::ThreeHalves,
                other => return Err(Error::Parse(format!("unknown energy order `{other}`"))),
            };
            Ok(repfn::energy(a, a, kind, order).to_string())
        }
        other => Err(Error::UnknownQuantity(other.to_string())),
    }
}

fn run(cli: Cli) -> Result<i32> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Gen(a) => {
            let p = Prime::new(a.p)?;
            let family = family_from_args(
                &a.family,
                a.size,
                a.order,
                a.start,
                a.step,
                a.ratio,
                a.len,
                a.elements.as_deref(),
                a.seed,
            )?;
            let set = sets::make_family(&family, p)?;
            sets::save(&set, &a.out)?;
            eprintln!("wrote {} elements to {}", set.len(), a.out.display());
            Ok(0)
        }
        Command::Count(a) => {
            let set = sets::load(&a.set)?;
            let out = count_quantity(&set, &a.quantity, a.method.as_deref(), a.budget)?;
            println!("{out}");
            Ok(0)
        }
        Command::Check(a) => {
            let suite: Suite = a.suite.parse()?;
            let cfg: SuiteConfig = serde_json::from_str(&std::fs::read_to_string(&a.config)?)?;
            let default_budget = cfg.default_budget.unwrap_or(DEFAULT_BUDGET);
            let mut instances = Vec::new();
            for spec in &cfg.instances {
                let p = Prime::new(spec.p)?;
                instances.push(Instance::from_family(
                    p,
                    &spec.family,
                    spec.seed,
                    spec.budget.unwrap_or(default_budget),
                )?);
            }
            let results = verify::run_suite(suite, &instances);
            let mut text = String::new();
            for r in &results {
                text.push_str(&r.to_jsonl());
                text.push('\n');
            }
            match &a.out {
                Some(path) => std::fs::write(path, &text)?,
                None => print!("{text}"),
            }
            let failures = results.iter().filter(|r| r.failed()).count();
            let skipped = results.iter().filter(|r| !r.failed() && !r.passed()).count();
            eprintln!(
                "{} checks: {} passed, {failures} failed, {skipped} skipped",
                results.len(),
                results.len() - failures - skipped
            );
            Ok(if failures > 0 { 1 } else { 0 })
        }
        Command::Sweep(a) => {
            let spec: ExperimentSpec = serde_json::from_str(&std::fs::read_to_string(&a.spec)?)?;
            let result = experiments::run_sweep(&spec)?;
            let format = match a.format.as_deref() {
                Some(f) => f.parse()?,
                None => match a.out.extension().and_then(|e| e.to_str()) {
                    Some("json") => Format::Json,
                    _ => Format::Csv,
                },
            };
            experiments::persist(&result, &a.out, format)?;
            eprintln!("wrote {} rows to {}", result.rows.len(), a.out.display());
            Ok(0)
        }
        Command::Coverage(a) => {
            let p = Prime::new(a.p)?;
            let family = family_from_args(
                &a.family,
                a.size,
                a.order,
                a.start,
                a.step,
                a.ratio,
                a.len,
                a.elements.as_deref(),
                a.seed,
            )?;
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            for trial in 0..a.trials {
                let seed = sumprod::rng::combine_seed(a.seed, 0, trial as u64);
                let mut f = family.clone();
                if let FamilySpec::Random { size, .. } = f {
                    f = FamilySpec::Random { size, seed };
                }
                let cov = experiments::fourfold_coverage(p, &f)?;
                writeln!(lock, "{}", cov.fraction)?;
            }
            Ok(0)
        }
        Command::Report(a) => {
            let rows = experiments::rows_from_csv(&std::fs::read_to_string(&a.input)?)?;
            let fit = experiments::fit_exponent(&rows, &a.fit)?;
            println!(
                "{}",
                serde_json::json!({
                    "quantity": a.fit,
                    "slope": fit.slope,
                    "intercept": fit.intercept,
                    "stderr": fit.stderr,
                    "r2": fit.r2,
                    "points": fit.points,
                })
            );
            Ok(0)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::Io(_) => 1,
        _ => 2,
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}
