//! The pinned-ratio expander R[A] = {(b−a)/(c−a)}, the cross-ratio set
//! C[A], their involution symmetries, and the energy decomposition that
//! links them.
//!
//! ```bash
//! cargo run --example ratio_expanders
//! ```

use sumprod::crossratio::{
    cross_ratio_energy, cross_ratio_set, inverted_shift, pinned_ratios, ratio_energy,
    ratio_growth_monitor, RatioVariant,
};
use sumprod::sets::{make_family, FamilySpec, FpSet};
use sumprod::{Prime, Result, DEFAULT_BUDGET};

fn main() -> Result<()> {
    let p = Prime::new(10007)?;

    println!("growth of |R[A]| for random A (against |A|^(3/2) and |A|^(8/5)):");
    println!("|A|   |R[A]|   |A|^1.5   |A|^1.6  regime");
    for n in [20u32, 30, 45, 67, 100] {
        let a = make_family(&FamilySpec::Random { size: n, seed: n as u64 }, p)?;
        let rec = ratio_growth_monitor(&a)?;
        let nf = n as f64;
        println!(
            "{n:<5} {:<8} {:<9.0} {:<8.0} {}",
            rec.ratio_set_size,
            nf.powf(1.5),
            nf.powf(1.6),
            rec.regime
        );
    }

    // the two variants differ exactly at the element 1
    let p7 = Prime::new(7)?;
    let small = FpSet::new(p7, [1, 2, 4]);
    let inclusive = pinned_ratios(&small, RatioVariant::Inclusive)?;
    let strict = pinned_ratios(&small, RatioVariant::Strict)?;
    println!("\nA = {{1,2,4}} mod 7: R = {:?}, strict R = {:?}", inclusive.elements(), strict.elements());
    let one_minus = FpSet::new(p7, strict.iter().map(|x| p7.sub(1, x)));
    println!("strict variant satisfies R = 1 - R exactly: {}", strict == one_minus);

    // C[A] and its symmetries
    let p13 = Prime::new(13)?;
    let b = FpSet::new(p13, [0, 1, 3, 9, 11]);
    let c = cross_ratio_set(&b)?;
    let c_inv = c.invert_elements();
    let c_one_minus = FpSet::new(p13, c.iter().map(|x| p13.sub(1, x)));
    println!("\nC[A] over F_13: {:?}", c.elements());
    println!("C = C^-1: {}, C = 1 - C: {}", c == c_inv, c == c_one_minus);

    // E_C decomposes exactly into pinned-ratio energies of inverted shifts
    let ec = cross_ratio_energy(&b, DEFAULT_BUDGET)?;
    let mut sum = 0u128;
    for x in b.iter() {
        for y in b.iter() {
            sum += ratio_energy(&inverted_shift(&b, x), &inverted_shift(&b, y));
        }
    }
    println!("\nE_C(A) = {ec} = sum of E_R over inverted shifts = {sum}");
    Ok(())
}
