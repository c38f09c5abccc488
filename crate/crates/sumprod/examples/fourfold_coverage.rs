//! Four-fold products of differences: how big must A be before
//! (A−A)(A−A)(A−A)(A−A) covers all of F_p?
//!
//! ```bash
//! cargo run --example fourfold_coverage
//! ```

use sumprod::experiments::fourfold_coverage;
use sumprod::sets::FamilySpec;
use sumprod::{Prime, Result};

fn main() -> Result<()> {
    let p = Prime::new(2003)?;
    // the interesting scale sits around p^(3/5) ~ 96
    println!("p = 2003, random A, 5 seeds per size");
    println!("|A|    covered  min fraction  min r(lambda)  mean r(lambda)");
    for size in [48u32, 96, 144, 192] {
        let mut covered = 0;
        let mut min_fraction = 1.0f64;
        let mut min_r = u128::MAX;
        let mut mean_r = 0.0;
        for seed in 0..5 {
            let cov = fourfold_coverage(p, &FamilySpec::Random { size, seed })?;
            covered += cov.covered as u32;
            min_fraction = min_fraction.min(cov.fraction);
            min_r = min_r.min(cov.r_min);
            mean_r = cov.r_mean;
        }
        println!("{size:<6} {covered}/5      {min_fraction:<13.5} {min_r:<14} {mean_r:.1}");
    }

    println!("\nstructured families at |A| = 192:");
    for family in [
        FamilySpec::Ap { start: 1, step: 1, len: 192 },
        FamilySpec::Subgroup { order: 182 },
    ] {
        let cov = fourfold_coverage(p, &family)?;
        println!("{:<14} fraction {:.5}", family.label(), cov.fraction);
    }
    Ok(())
}
