//! Declarative sweeps over `(p, family, size)`, growth-exponent regression,
//! four-fold coverage experiments, and CSV/JSON persistence.
//!
//! Determinism contract: for a fixed master seed, every output row — values
//! and all — is identical across runs and worker counts. The per-trial seed
//! is derived as `combine_seed(master, cell_index, trial_index)`, and the
//! `runtime_ms` column is a deterministic cost-model estimate (abstract
//! ops / 10⁶, i.e. the runtime of a nominal 10⁹ op/s core), not wall
//! clock, which would break byte-reproducibility.

use crate::crossratio::{self, RatioVariant};
use crate::field::{Elem, Prime};
use crate::incidence::PointSet2D;
use crate::repfn::{additive_energy, additive_energy3, mult_energy, mult_energy3};
use crate::rng::combine_seed;
use crate::sets::{combine, make_family, FamilySpec, FpSet, SetOp};
use crate::symplectic::omega_set;
use crate::triples;
use crate::verify::{self, Instance};
use crate::{Error, Result, DEFAULT_BUDGET};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Cell size: an absolute count or a power of p (e.g. `"p^0.4"`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SizeExpr {
    Absolute(u32),
    Expr(String),
}

impl SizeExpr {
    /// Resolve against a prime; results are clamped to `[2, p]`.
    pub fn resolve(&self, p: Prime) -> Result<u32> {
        let n = match self {
            SizeExpr::Absolute(n) => *n as f64,
            SizeExpr::Expr(s) => {
                let rest = s
                    .strip_prefix("p^")
                    .ok_or_else(|| Error::Parse(format!("size expression `{s}` is not p^<e>")))?;
                let e: f64 = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
                (p.get() as f64).powf(e).round()
            }
        };
        Ok((n.max(2.0) as u32).min(p.get()))
    }
}

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

fn default_trials() -> u32 {
    1
}

/// Declarative sweep configuration.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub primes: Vec<u64>,
    pub families: Vec<FamilySpec>,
    pub sizes: Vec<SizeExpr>,
    /// Named outputs; see [`quantity_names`] and `check:<id>` for registry
    /// constants.
    pub quantities: Vec<String>,
    #[serde(default = "default_trials")]
    pub trials: u32,
    #[serde(default)]
    pub master_seed: u64,
    #[serde(default = "default_budget")]
    pub budget: u64,
}

/// One output row of a sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub p: u64,
    pub family: String,
    pub size: u32,
    pub seed: u64,
    pub quantity: String,
    pub value: f64,
    pub runtime_ms: u64,
    pub status: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepResult {
    pub spec: ExperimentSpec,
    pub rows: Vec<Row>,
}

/// Least-squares fit of `ln(value)` against `ln(size)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ExponentFit {
    pub slope: f64,
    pub intercept: f64,
    pub stderr: f64,
    pub r2: f64,
    pub points: usize,
}

/// Built-in quantity names (checks are addressed as `check:<id>`).
pub fn quantity_names() -> &'static [&'static str] {
    &["C", "DD", "E3+", "E3x", "E+", "Ex", "Q", "R", "R_strict", "T", "coverage", "omega"]
}

/// Evaluate one named quantity on a set. Returns the value, the abstract
/// op cost, and a status of `ok` or `saturated`.
///
/// Saturation marks the `min{p, ·}` regime where a size quantity is capped
/// by the field and a growth fit through it would corrupt the slope.
fn quantity_value(name: &str, a: &FpSet, seed: u64, budget: u64) -> Result<(f64, u64, String)> {
    let p = a.prime();
    let pf = p.get() as f64;
    let n = a.len() as u64;
    let nf = n as f64;
    let ok = "ok".to_string();
    match name {
        "R" | "R_strict" => {
            let variant = if name == "R" { RatioVariant::Inclusive } else { RatioVariant::Strict };
            let r = crossratio::pinned_ratios(a, variant)?;
            // saturated in the min{p,·} regime of the growth bounds, or at
            // the absolute cap |R| <= p - 1
            let saturated = nf.powf(2.5) / pf.sqrt() >= pf || r.len() as u32 >= p.get() - 1;
            let status = if saturated { "saturated".to_string() } else { ok };
            Ok((r.len() as f64, n.pow(3), status))
        }
        "C" => {
            let cost = n.saturating_pow(4);
            if cost > budget {
                return Err(Error::BudgetExceeded { cost, budget });
            }
            let c = crossratio::cross_ratio_set(a)?;
            let status = if c.len() as u64 >= (p.get() - 2) as u64 { "saturated".into() } else { ok };
            Ok((c.len() as f64, cost, status))
        }
        "T" => Ok((triples::t_count_auto(a, budget)? as f64, n.pow(3), ok)),
        "Q" => Ok((triples::q_count_auto(a, budget)? as f64, n.saturating_pow(4), ok)),
        "omega" => {
            let pts = PointSet2D::grid(a, a).without_origin();
            let cost = (pts.len() as u64).saturating_mul(pts.len() as u64);
            if cost > budget {
                return Err(Error::BudgetExceeded { cost, budget });
            }
            let w = omega_set(&pts);
            let status = if w.len() as u64 >= (p.get() - 1) as u64 { "saturated".into() } else { ok };
            Ok((w.len() as f64, cost, status))
        }
        "DD" => {
            let d = combine(a, a, SetOp::Diff)?;
            let cost = (d.len() as u64).saturating_mul(d.len() as u64);
            if cost > budget {
                return Err(Error::BudgetExceeded { cost, budget });
            }
            let dd = combine(&d, &d, SetOp::Prod)?;
            let status = if dd.len() as u32 == p.get() { "saturated".into() } else { ok };
            Ok((dd.len() as f64, cost, status))
        }
        "coverage" => {
            let cov = fourfold_coverage_of(a)?;
            let status = if cov.covered { "saturated".into() } else { ok };
            Ok((cov.fraction, (p.get() as u64).pow(2), status))
        }
        "E+" => Ok((additive_energy(a, a) as f64, n * n, ok)),
        "E3+" => Ok((additive_energy3(a, a) as f64, n * n, ok)),
        "Ex" => Ok((mult_energy(a, a) as f64, n * n, ok)),
        "E3x" => Ok((mult_energy3(a, a) as f64, n * n, ok)),
        _ => {
            if let Some(id) = name.strip_prefix("check:") {
                let inst = Instance::from_set(a.clone(), seed, budget);
                let r = verify::run_check(id, &inst)?;
                let value = r.implied_constant.unwrap_or(if r.passed() { 1.0 } else { 0.0 });
                let status = match r.status {
                    verify::Status::Skipped { .. } => "skipped".to_string(),
                    verify::Status::Fail => "check_failed".to_string(),
                    verify::Status::Pass => ok,
                };
                Ok((value, n * n, status))
            } else {
                Err(Error::UnknownQuantity(name.to_string()))
            }
        }
    }
}

/// Run a sweep. Cells are the cartesian product primes × families × sizes;
/// each cell runs `trials` times with seeds derived from the master seed.
/// Cells execute in parallel; rows are ordered by (cell, trial, quantity)
/// regardless of scheduling.
pub fn run_sweep(spec: &ExperimentSpec) -> Result<SweepResult> {
    for q in &spec.quantities {
        if !quantity_names().contains(&q.as_str()) && !q.starts_with("check:") {
            return Err(Error::UnknownQuantity(q.clone()));
        }
    }
    let mut cells = Vec::new();
    for &pv in &spec.primes {
        let p = Prime::new(pv)?;
        for family in &spec.families {
            for size in &spec.sizes {
                let n = size.resolve(p)?;
                cells.push((p, family.clone(), n));
            }
        }
    }

    let jobs: Vec<(usize, u32)> = (0..cells.len())
        .flat_map(|ci| (0..spec.trials).map(move |t| (ci, t)))
        .collect();

    let mut keyed: Vec<((usize, u32), Vec<Row>)> = jobs
        .into_par_iter()
        .map(|(ci, trial)| {
            let (p, family, n) = &cells[ci];
            let seed = combine_seed(spec.master_seed, ci as u64, trial as u64);
            let mut instance_family = family.with_size(*n, *p);
            if let FamilySpec::Random { size, .. } = instance_family {
                instance_family = FamilySpec::Random { size, seed };
            }
            let label = instance_family.label();
            let rows = match make_family(&instance_family, *p) {
                Ok(a) => spec
                    .quantities
                    .iter()
                    .map(|q| match quantity_value(q, &a, seed, spec.budget) {
                        Ok((value, cost, status)) => Row {
                            p: p.get() as u64,
                            family: label.clone(),
                            size: a.len() as u32,
                            seed,
                            quantity: q.clone(),
                            value,
                            runtime_ms: cost / 1_000_000,
                            status,
                        },
                        Err(e) => Row {
                            p: p.get() as u64,
                            family: label.clone(),
                            size: a.len() as u32,
                            seed,
                            quantity: q.clone(),
                            value: 0.0,
                            runtime_ms: 0,
                            status: match e {
                                Error::BudgetExceeded { .. } => "budget".to_string(),
                                other => format!("error: {other}"),
                            },
                        },
                    })
                    .collect(),
                Err(e) => vec![Row {
                    p: p.get() as u64,
                    family: label,
                    size: *n,
                    seed,
                    quantity: "family".to_string(),
                    value: 0.0,
                    runtime_ms: 0,
                    status: format!("error: {e}"),
                }],
            };
            ((ci, trial), rows)
        })
        .collect();
    keyed.sort_by_key(|&(k, _)| k);
    Ok(SweepResult { spec: spec.clone(), rows: keyed.into_iter().flat_map(|(_, r)| r).collect() })
}

pub const CSV_HEADER: &str = "p,family,size,seed,quantity,value,runtime_ms,status";

pub fn to_csv(result: &SweepResult) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &result.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.p, r.family, r.size, r.seed, r.quantity, r.value, r.runtime_ms, r.status
        ));
    }
    out
}

pub fn rows_from_csv(text: &str) -> Result<Vec<Row>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => {
            return Err(Error::Parse(format!(
                "bad CSV header: expected `{CSV_HEADER}`, got `{}`",
                other.unwrap_or("")
            )))
        }
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 8 {
            return Err(Error::Parse(format!("row {}: expected 8 fields", i + 2)));
        }
        let num = |s: &str| -> Result<f64> {
            s.parse().map_err(|_| Error::Parse(format!("row {}: bad number `{s}`", i + 2)))
        };
        rows.push(Row {
            p: num(f[0])? as u64,
            family: f[1].to_string(),
            size: num(f[2])? as u32,
            seed: f[3]
                .parse()
                .map_err(|_| Error::Parse(format!("row {}: bad seed", i + 2)))?,
            quantity: f[4].to_string(),
            value: num(f[5])?,
            runtime_ms: num(f[6])? as u64,
            status: f[7].to_string(),
        });
    }
    Ok(rows)
}

/// Output format for [`persist`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Format> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format {other}"))),
        }
    }
}

/// Write a sweep result to disk. CSV carries the rows; JSON additionally
/// echoes the spec. Persist → load → persist is byte-identical.
pub fn persist(result: &SweepResult, path: impl AsRef<Path>, format: Format) -> Result<()> {
    let text = match format {
        Format::Csv => to_csv(result),
        Format::Json => serde_json::to_string_pretty(result)? + "\n",
    };
    Ok(std::fs::write(path, text)?)
}

/// Fit `ln(value) = slope·ln(size) + intercept` over the rows of one
/// quantity, excluding saturated and failed cells and non-positive values.
pub fn fit_exponent(rows: &[Row], quantity: &str) -> Result<ExponentFit> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.quantity == quantity && r.status == "ok" && r.value > 0.0 && r.size >= 2)
        .map(|r| ((r.size as f64).ln(), r.value.ln()))
        .collect();
    let distinct_sizes: std::collections::BTreeSet<u64> = rows
        .iter()
        .filter(|r| r.quantity == quantity && r.status == "ok" && r.value > 0.0)
        .map(|r| r.size as u64)
        .collect();
    if distinct_sizes.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "need >= 3 distinct sizes for {quantity}, got {}",
            distinct_sizes.len()
        )));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = pts
        .iter()
        .map(|p| {
            let e = p.1 - (slope * p.0 + intercept);
            e * e
        })
        .sum();
    let dof = (pts.len().max(3) - 2) as f64;
    let stderr = (ss_res / dof / sxx).sqrt();
    let r2 = if syy > 0.0 { 1.0 - ss_res / syy } else { 1.0 };
    Ok(ExponentFit { slope, intercept, stderr, r2, points: pts.len() })
}

/// Result of a four-fold product-of-differences coverage run.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CoverageResult {
    pub set_size: u32,
    pub covered: bool,
    pub fraction: f64,
    /// `min_{λ≠0} r(λ)` where `r(λ)` counts the 8-tuples representing λ.
    pub r_min: u128,
    /// Mean of `r(λ)` over λ ≠ 0.
    pub r_mean: f64,
    /// Representation statistics are computed exactly by multiplicative
    /// convolution; kept for schema stability.
    pub sampled: bool,
}

/// `(A−A)(A−A)(A−A)(A−A)` coverage with early exit, plus exact
/// representation counts.
pub fn fourfold_coverage(p: Prime, family: &FamilySpec) -> Result<CoverageResult> {
    fourfold_coverage_of(&make_family(family, p)?)
}

pub fn fourfold_coverage_of(a: &FpSet) -> Result<CoverageResult> {
    if a.len() < 2 {
        return Err(Error::TooSmall { need: 2, got: a.len() });
    }
    let p = a.prime();
    let pv = p.get() as usize;

    let d = combine(a, a, SetOp::Diff)?;
    let dd = combine(&d, &d, SetOp::Prod)?;

    // early-exit union of pairwise products of DD
    let mut hit = vec![false; pv];
    let mut covered_count = 0usize;
    'outer: for x in dd.iter() {
        for y in dd.iter() {
            let v = p.mul(x, y) as usize;
            if !hit[v] {
                hit[v] = true;
                covered_count += 1;
                if covered_count == pv {
                    break 'outer;
                }
            }
        }
    }

    // exact representation counts by convolution:
    // f(x) = #{(a1,b1,a2,b2) : (a1-b1)(a2-b2) = x}, r(λ) = Σ_{xy=λ} f(x)f(y)
    let rd = crate::repfn::rep_fn(a, a, SetOp::Diff);
    let mut f = vec![0u64; pv];
    let support: Vec<(Elem, u64)> = rd.iter().collect();
    for &(d1, c1) in &support {
        for &(d2, c2) in &support {
            f[p.mul(d1, d2) as usize] += c1 * c2;
        }
    }
    let inv = p.inverse_table();
    let mut r_min = u128::MAX;
    let mass_nonzero: u128 = f[1..].iter().map(|&x| x as u128).sum();
    for lambda in 1..pv {
        let mut r = 0u128;
        for x in 1..pv {
            let y = p.mul(lambda as Elem, inv[x]) as usize;
            r += f[x] as u128 * f[y] as u128;
        }
        r_min = r_min.min(r);
    }
    let r_mean = (mass_nonzero * mass_nonzero) as f64 / (pv as f64 - 1.0);

    Ok(CoverageResult {
        set_size: a.len() as u32,
        covered: covered_count == pv,
        fraction: covered_count as f64 / pv as f64,
        r_min,
        r_mean,
        sampled: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{eval_expr, SetExpr};

    fn tiny_spec() -> ExperimentSpec {
        ExperimentSpec {
            primes: vec![7],
            families: vec![FamilySpec::Subgroup { order: 3 }],
            sizes: vec![SizeExpr::Absolute(3)],
            quantities: vec!["R".into()],
            trials: 1,
            master_seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }

    #[test]
    fn single_cell_sweep() {
        let result = run_sweep(&tiny_spec()).unwrap();
        assert_eq!(result.rows.len(), 1);
        let row = &result.rows[0];
        assert_eq!(row.value, 3.0); // |R[{1,2,4}]| = 3
        assert_eq!(row.quantity, "R");
    }

    #[test]
    fn sweep_is_deterministic_and_byte_identical() {
        let spec = ExperimentSpec {
            primes: vec![31, 101],
            families: vec![
                FamilySpec::Random { size: 0, seed: 0 },
                FamilySpec::Ap { start: 1, step: 2, len: 0 },
            ],
            sizes: vec![SizeExpr::Absolute(8), SizeExpr::Expr("p^0.5".into())],
            quantities: vec!["T".into(), "E+".into(), "DD".into()],
            trials: 2,
            master_seed: 99,
            budget: DEFAULT_BUDGET,
        };
        let a = run_sweep(&spec).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| run_sweep(&spec).unwrap());
        assert_eq!(to_csv(&a), to_csv(&b));
    }

    #[test]
    fn size_expr_parsing() {
        let p = Prime::new(10007).unwrap();
        assert_eq!(SizeExpr::Absolute(40).resolve(p).unwrap(), 40);
        // 10007^0.4 = 40.2...
        assert_eq!(SizeExpr::Expr("p^0.4".into()).resolve(p).unwrap(), 40);
        assert!(SizeExpr::Expr("q^2".into()).resolve(p).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let result = run_sweep(&tiny_spec()).unwrap();
        let text = to_csv(&result);
        let rows = rows_from_csv(&text).unwrap();
        assert_eq!(rows, result.rows);
        // header-only for an empty result
        let empty = SweepResult { spec: tiny_spec(), rows: vec![] };
        assert_eq!(to_csv(&empty), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn exponent_fit_synthetic() {
        let mk = |size: u32, value: f64| Row {
            p: 101,
            family: "synthetic".into(),
            size,
            seed: 0,
            quantity: "T".into(),
            value,
            runtime_ms: 0,
            status: "ok".into(),
        };
        // value = size^2 exactly
        let rows: Vec<Row> = [4u32, 8, 16, 32].iter().map(|&s| mk(s, (s as f64).powi(2))).collect();
        let fit = fit_exponent(&rows, "T").unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-12);
        assert!(fit.stderr < 1e-12);
        // value = 3 * size^1.5
        let rows: Vec<Row> =
            [4u32, 8, 16, 32].iter().map(|&s| mk(s, 3.0 * (s as f64).powf(1.5))).collect();
        let fit = fit_exponent(&rows, "T").unwrap();
        assert!((fit.slope - 1.5).abs() < 1e-9);

        let rows: Vec<Row> = [4u32, 8].iter().map(|&s| mk(s, 1.0)).collect();
        assert!(matches!(fit_exponent(&rows, "T"), Err(Error::InsufficientData(_))));
    }

    #[test]
    fn coverage_full_field() {
        let p = Prime::new(11).unwrap();
        let cov = fourfold_coverage_of(&FpSet::full(p)).unwrap();
        assert!(cov.covered);
        assert_eq!(cov.fraction, 1.0);
    }

    #[test]
    fn coverage_tiny_generator() {
        let p = Prime::new(11).unwrap();
        let a = FpSet::new(p, [0, 1]);
        let cov = fourfold_coverage_of(&a).unwrap();
        assert!(cov.fraction < 1.0);
        assert!(!cov.covered);
    }

    #[test]
    fn coverage_matches_expression_oracle() {
        // incremental early-exit closure equals the direct 4-fold product
        let d = SetExpr::Diff(Box::new(SetExpr::base("A")), Box::new(SetExpr::base("A")));
        let dd = SetExpr::Prod(Box::new(d.clone()), Box::new(d));
        let d4 = SetExpr::Prod(Box::new(dd.clone()), Box::new(dd));
        let mut g = crate::rng::SplitMix64::new(13);
        for &q in &[5u64, 7, 11, 31, 101] {
            let p = Prime::new(q).unwrap();
            for _ in 0..4 {
                let n = 2 + g.below(q.min(12) - 1) as usize;
                let a = FpSet::new(p, g.sample_distinct(q, n).iter().map(|&x| x as Elem));
                let cov = fourfold_coverage_of(&a).unwrap();
                let direct = eval_expr(&d4, &[("A", &a)]).unwrap();
                assert_eq!(cov.covered, direct.len() == q as usize);
                assert!((cov.fraction - direct.len() as f64 / q as f64).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn coverage_r_stats_match_brute_force() {
        // r(λ) oracle by direct 8-tuple enumeration at tiny size
        let p = Prime::new(7).unwrap();
        let a = FpSet::new(p, [1, 3]);
        let cov = fourfold_coverage_of(&a).unwrap();
        let av: Vec<Elem> = a.iter().collect();
        let mut r = vec![0u128; 7];
        for &a1 in &av {
            for &b1 in &av {
                for &a2 in &av {
                    for &b2 in &av {
                        for &a3 in &av {
                            for &b3 in &av {
                                for &a4 in &av {
                                    for &b4 in &av {
                                        let v = p.mul(
                                            p.mul(p.sub(a1, b1), p.sub(a2, b2)),
                                            p.mul(p.sub(a3, b3), p.sub(a4, b4)),
                                        );
                                        r[v as usize] += 1;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let brute_min = *r[1..].iter().min().unwrap();
        let brute_mean = r[1..].iter().sum::<u128>() as f64 / 6.0;
        assert_eq!(cov.r_min, brute_min);
        assert!((cov.r_mean - brute_mean).abs() < 1e-9);
    }

    #[test]
    fn check_quantities_run() {
        let spec = ExperimentSpec {
            primes: vec![31],
            families: vec![FamilySpec::Random { size: 0, seed: 0 }],
            sizes: vec![SizeExpr::Absolute(8)],
            quantities: vec!["check:csest".into(), "check:T_asymp".into()],
            trials: 1,
            master_seed: 5,
            budget: DEFAULT_BUDGET,
        };
        let result = run_sweep(&spec).unwrap();
        assert_eq!(result.rows.len(), 2);
        assert!(result.rows.iter().all(|r| r.status == "ok"));
    }

    #[test]
    fn unknown_quantity_is_rejected() {
        let mut spec = tiny_spec();
        spec.quantities = vec!["nope".into()];
        assert!(matches!(run_sweep(&spec), Err(Error::UnknownQuantity(_))));
    }
}
