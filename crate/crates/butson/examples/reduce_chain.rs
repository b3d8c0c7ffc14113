//! Iterated reduction: remove a whole divisor m from the root order, one
//! prime at a time.
//!
//! Run with: cargo run --example reduce_chain

use butson::{fourier, plan_reduction, reduce_full};

fn main() -> butson::Result<()> {
    // BH(36,36) with m = 6: every prime of 36 divides t = 6, so the plan
    // [2, 3] is legal and lands in BH(216,6).
    let plan = plan_reduction(36, 6)?;
    println!(
        "plan for k={} m={}: primes {:?}, target root order {}",
        plan.source_order(),
        plan.factor(),
        plan.primes(),
        plan.target_order()
    );

    let h = reduce_full(&fourier(36)?, 6)?;
    println!("result: {}", h);
    assert!(h.verify()?.valid);
    println!("verified exactly: every Gram entry checked in Z[zeta_6]");

    // An illegal factor is named precisely: k=12, m=6 leaves t=2, losing the
    // prime 3 entirely.
    let err = plan_reduction(12, 6).unwrap_err();
    println!("plan for k=12 m=6: {err}");
    Ok(())
}
