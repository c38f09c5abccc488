//! Set families and exact set arithmetic: sums, differences, products,
//! ratios, dilates, and iterated expressions.
//!
//! ```bash
//! cargo run --example set_arithmetic
//! ```

use sumprod::sets::{combine, eval_expr, make_family, FamilySpec, SetExpr, SetOp};
use sumprod::{Prime, Result};

fn main() -> Result<()> {
    let p = Prime::new(101)?;

    let gamma = make_family(&FamilySpec::Subgroup { order: 20 }, p)?;
    println!("subgroup of order 20 mod 101: {:?}", gamma.elements());
    println!("closed under products: {}", combine(&gamma, &gamma, SetOp::Prod)? == gamma);

    let a = make_family(&FamilySpec::Random { size: 12, seed: 42 }, p)?;
    println!("\nrandom A (seed 42): {:?}", a.elements());
    for op in [SetOp::Sum, SetOp::Diff, SetOp::Prod, SetOp::Ratio] {
        let s = combine(&a, &a, op)?;
        println!("  |A {op:?} A| = {}", s.len());
    }

    // (A-A)(A-A) as an expression tree over the base set
    let d = SetExpr::Diff(Box::new(SetExpr::base("A")), Box::new(SetExpr::base("A")));
    let dd = SetExpr::Prod(Box::new(d.clone()), Box::new(d));
    let prod_diff = eval_expr(&dd, &[("A", &a)])?;
    println!("\n|(A-A)(A-A)| = {} of p = {}", prod_diff.len(), p);

    // set files round-trip bit-exactly
    let json = sumprod::sets::to_json(&gamma);
    let back = sumprod::sets::from_json(&json)?;
    println!("\nset file: {json}");
    println!("round trip exact: {}", back == gamma && sumprod::sets::to_json(&back) == json);
    Ok(())
}
