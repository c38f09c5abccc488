//! Run the verification registry: the exact tier (assertions) and the
//! monitor tier (recorded implied constants) over a few instances.
//!
//! ```bash
//! cargo run --example check_registry
//! ```

use sumprod::sets::FamilySpec;
use sumprod::verify::{run_suite, Instance, Status, Suite};
use sumprod::{Prime, Result, DEFAULT_BUDGET};

fn main() -> Result<()> {
    let instances = vec![
        Instance::from_family(
            Prime::new(101)?,
            &FamilySpec::Random { size: 16, seed: 2 },
            2,
            DEFAULT_BUDGET,
        )?,
        Instance::from_family(Prime::new(31)?, &FamilySpec::Ap { start: 1, step: 3, len: 9 }, 3, DEFAULT_BUDGET)?,
        Instance::from_family(Prime::new(1009)?, &FamilySpec::Subgroup { order: 144 }, 4, DEFAULT_BUDGET)?,
    ];

    println!("== exact tier (asserted) ==");
    for r in run_suite(Suite::Exact, &instances) {
        let status = match &r.status {
            Status::Pass => "pass".to_string(),
            Status::Fail => "FAIL".to_string(),
            Status::Skipped { reason } => format!("skip ({reason})"),
        };
        println!("{:<22} {:<34} {status}", r.check_id, r.instance);
    }

    println!("\n== monitor tier (implied constants, never asserted) ==");
    for r in run_suite(Suite::Monitors, &instances) {
        let c = r
            .implied_constant
            .map(|c| format!("{c:.4}"))
            .unwrap_or_else(|| "-".to_string());
        let status = match &r.status {
            Status::Pass => String::new(),
            Status::Fail => " FAIL".to_string(),
            Status::Skipped { reason } => format!(" [skip: {reason}]"),
        };
        println!("{:<22} {:<34} c = {c}{status}", r.check_id, r.instance);
    }
    Ok(())
}
