//! The symplectic form ω, its value sets ω(P), the six-term Φ identity,
//! the cross-ratio of slopes, and the t₁t₂ = t₃t₄ − t₅t₆ solution counts.
//!
//! ```bash
//! cargo run --example symplectic_forms
//! ```

use sumprod::field::ProjPoint;
use sumprod::incidence::PointSet2D;
use sumprod::rng::SplitMix64;
use sumprod::symplectic::{
    count_teq_solutions, fiber_sizes, omega_set, phi_fibers, quad_identity,
    slope_cross_ratio_check, split_by_line_richness, Quad,
};
use sumprod::{Prime, Result, DEFAULT_BUDGET};

fn main() -> Result<()> {
    let p = Prime::new(1009)?;
    let mut g = SplitMix64::new(1);
    let mut pt = |q: u64| (g.below(q) as u32, g.below(q) as u32);

    // omega(P) for a random point set
    let pts = PointSet2D::new(p, (0..120).map(|_| pt(1009)).filter(|&x| x != (0, 0)));
    let w = omega_set(&pts);
    println!("|P| = {}, |omega(P)| = {} (bound target |P|^(108/161) = {:.0})",
        pts.len(), w.len(), (pts.len() as f64).powf(108.0 / 161.0));

    // the six-term identity holds on every quadruple
    let mut all = true;
    for _ in 0..50_000 {
        all &= quad_identity(p, [pt(1009), pt(1009), pt(1009), pt(1009)]);
    }
    println!("t_ad t_bc = t_ac t_bd - t_ab t_cd on 50000 random quadruples: {all}");

    // cross-ratio of slopes equals the omega ratio
    let quad = Quad::new(p, [(1, 0), (0, 1), (3, 3), (2, 10)])?;
    println!("slope cross-ratio check on axes/diagonal quadruple: {}",
        slope_cross_ratio_check(p, &quad));

    // fibers of the Phi map on full punctured lines have size exactly 2
    let p7 = Prime::new(7)?;
    let dirs = [ProjPoint::Finite(0), ProjPoint::Infinity, ProjPoint::Finite(1), ProjPoint::Finite(3)];
    let full = PointSet2D::new(
        p7,
        (1..7u32).flat_map(|t| [(t, 0), (0, t), (t, t), (t, p7.mul(3, t))]),
    );
    let fibers = phi_fibers(p7, dirs, &full)?;
    let sizes = fiber_sizes(&fibers);
    println!("\nPhi fibers over full lines mod 7: {} fibers, sizes {:?}..{:?}",
        fibers.len(), sizes.first(), sizes.last());

    // solution counts of t1 t2 = t3 t4 - t5 t6 over T = omega(P)
    let counts = count_teq_solutions(&w, DEFAULT_BUDGET)?;
    println!("\nT = omega(P), |T| = {}:", w.len());
    println!("  six-variable solutions N6 = {}", counts.solutions);
    println!("  second moment of r_TT-TT  = {} ({:.4} x |T|^6.5)",
        counts.second_moment, counts.second_moment_constant);
    println!("  max r_TT-TT(s), s != 0    = {} ({:.4} x |T|^2.75)",
        counts.max_pointwise, counts.pointwise_constant);

    // richness split: sparse part keeps many omega values
    let (sparse, rich) = split_by_line_richness(&pts, 2);
    println!("\nrichness split at w = 2: |P1| = {}, |P2| = {}", sparse.len(), rich.len());
    if !sparse.is_empty() {
        println!("|omega(P1)| = {} >= |P1|/sqrt(w) = {:.0} x constant",
            omega_set(&sparse).len(), sparse.len() as f64 / 2f64.sqrt());
    }
    Ok(())
}
