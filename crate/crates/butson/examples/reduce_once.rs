//! One order-reduction step: trade a factor of p in the root order for a
//! factor of p in the matrix order.
//!
//! Run with: cargo run --example reduce_once

use butson::{fourier, matrix_to_string, reduce_once};

fn main() -> butson::Result<()> {
    // BH(4,4) -> BH(8,2): fourth roots out, a real Hadamard matrix of order
    // 8 in. Legal because 2^2 divides 4.
    let f4 = fourier(4)?;
    let h8 = reduce_once(&f4, 2, None)?;
    println!("{} reduced by p=2 gives {}", f4, h8);
    print!("{}", matrix_to_string(&h8));
    assert!(h8.verify()?.valid);
    println!("verify: valid");

    // The precondition is sharp: 2 divides 6 but 4 does not, so removing a
    // single factor of 2 from BH(6,6) is rejected.
    let err = reduce_once(&fourier(6)?, 2, None).unwrap_err();
    println!("reducing BH(6,6) by p=2: {err}");
    Ok(())
}
