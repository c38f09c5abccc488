//! The incidence function i(ℓ) = |ℓ ∩ (A×A)| across all p² + p lines:
//! histogram, exact moment identities, and rich-line counts.
//!
//! ```bash
//! cargo run --example incidence_histogram
//! ```

use sumprod::incidence::incidence_histogram;
use sumprod::sets::{make_family, FamilySpec};
use sumprod::{Prime, Result, DEFAULT_BUDGET};

fn main() -> Result<()> {
    let p = Prime::new(1009)?;
    let a = make_family(&FamilySpec::Random { size: 60, seed: 11 }, p)?;
    let h = incidence_histogram(&a, DEFAULT_BUDGET)?;

    println!("p = {p}, |A| = {}, grid of {} points", a.len(), a.len() * a.len());
    println!("lines meeting the grid: {} of {}", h.incident_lines(), 1009 * 1009 + 1009);
    println!("\nrichness  lines");
    for (k, c) in h.iter() {
        println!("{k:>8}  {c}");
    }

    let n = a.len() as u128;
    let pv = 1009u128;
    println!("\nfirst moment  {} = (p+1)|A|^2 = {}", h.moment(1), (pv + 1) * n * n);
    println!("second moment {} = |A|^4 + p|A|^2 = {}", h.moment(2), n.pow(4) + pv * n * n);
    println!("third moment  {}", h.moment(3));

    // rich lines M < i <= 2M, with the hard bound 4p|A|^2/M^2 above the
    // 2|A|^2/p threshold
    println!("\nM  |L_M|  4p|A|^2/M^2");
    for m in [2u32, 4, 8, 16, 32] {
        let lm = h.rich_lines(m);
        let bound = 4.0 * 1009.0 * (n * n) as f64 / (m as f64 * m as f64);
        println!("{m:<3} {lm:<6} {bound:.0}");
    }
    Ok(())
}
