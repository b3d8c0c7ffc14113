//! Build larger matrices with the Kronecker product.
//!
//! Run with: cargo run --example kronecker

use butson::{fourier, kronecker, matrix_to_string};

fn main() -> butson::Result<()> {
    let f2 = fourier(2)?;
    let f3 = fourier(3)?;

    // Orders multiply, root orders merge through their lcm: BH(2,2) (x)
    // BH(3,3) lands in BH(6,6).
    let h = kronecker(&f2, &f3)?;
    println!("{} (x) {} = {}", f2, f3, h);
    print!("{}", matrix_to_string(&h));

    assert!(h.verify()?.valid);
    println!("verify: valid");
    Ok(())
}
