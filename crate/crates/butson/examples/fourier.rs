//! Generate a Fourier matrix and verify it exactly.
//!
//! Run with: cargo run --example fourier

use butson::{fourier, matrix_to_string};

fn main() -> butson::Result<()> {
    // The character table of the cyclic group of order 6: entry (i, j) is
    // zeta_6^{ij}, stored as the exponent table (i * j) mod 6.
    let f6 = fourier(6)?;
    print!("{}", matrix_to_string(&f6));

    let report = f6.verify()?;
    println!("verify: {}", if report.valid { "valid" } else { "invalid" });
    Ok(())
}
