//! Representation functions and the energy zoo: E, E₃, E_{3/2}, their
//! multiplicative counterparts, and the inequalities tying them together.
//!
//! ```bash
//! cargo run --example energies
//! ```

use sumprod::repfn::{
    additive_energy, additive_energy3, additive_energy_three_halves, mult_energy, mult_energy3,
    rep_fn, shifted_mult_energy,
};
use sumprod::sets::{combine, make_family, FamilySpec, SetOp};
use sumprod::{Prime, Result};

fn main() -> Result<()> {
    let p = Prime::new(1009)?;
    let a = make_family(&FamilySpec::Random { size: 40, seed: 7 }, p)?;
    println!("random A, |A| = {}, p = {p}", a.len());

    let r = rep_fn(&a, &a, SetOp::Sum);
    println!("r_(A+A): support {}, total mass {}", r.support_len(), r.total());

    let e = additive_energy(&a, &a);
    let e3 = additive_energy3(&a, &a);
    let e32 = additive_energy_three_halves(&a, &a);
    println!("\nE(A)     = {e}");
    println!("E3(A)    = {e3}");
    println!("E3/2(A)  = {e32:.3}");

    // Cauchy-Schwarz: |A+A| >= |A|^4 / E(A)
    let sum = combine(&a, &a, SetOp::Sum)?;
    let n4 = (a.len() as f64).powi(4);
    println!("\n|A+A| = {} >= |A|^4/E = {:.1}", sum.len(), n4 / e as f64);

    // Hoelder: E <= E3^(1/3) E3/2^(2/3)
    let bound = (e3 as f64).powf(1.0 / 3.0) * e32.powf(2.0 / 3.0);
    println!("Hoelder: E = {e} <= {bound:.1}");

    // multiplicative energies are cross-multiplied, so 0 is no obstacle
    let with_zero = make_family(&FamilySpec::Interval { start: 0, len: 30 }, p)?;
    println!(
        "\ninterval [0,30): Ex = {}, E3x = {} (0 included, cross-multiplied)",
        mult_energy(&with_zero, &with_zero),
        mult_energy3(&with_zero, &with_zero),
    );

    // the pivot sum of shifted multiplicative energies counts collinear
    // triples of A x A exactly
    let small = make_family(&FamilySpec::Random { size: 8, seed: 3 }, Prime::new(31)?)?;
    let mut pivot_sum = 0u128;
    for x in small.iter() {
        for y in small.iter() {
            pivot_sum += shifted_mult_energy(&small, x, y, 2);
        }
    }
    let t = sumprod::triples::t_count(&small, sumprod::triples::CountMethod::Brute, u64::MAX)?;
    println!("\npivot sum of Ex(A-a, A-b) = {pivot_sum} = T(A) = {t}");
    Ok(())
}
