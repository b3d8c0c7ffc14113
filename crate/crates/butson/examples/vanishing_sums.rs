//! The exact cyclotomic layer: deciding whether a sum of roots of unity
//! vanishes, with no floating point involved.
//!
//! Run with: cargo run --example vanishing_sums

use butson::{cyclotomic_poly, CycloElement};

fn main() -> butson::Result<()> {
    // Phi_12 = x^4 - x^2 + 1, computed by exact division of x^12 - 1.
    println!("Phi_12 coefficients: {:?}", cyclotomic_poly(12)?);

    // A full coset of 3rd roots inside the 12th roots sums to zero:
    // zeta_12^1 + zeta_12^5 + zeta_12^9 = zeta_12 (1 + zeta_3 + zeta_3^2) = 0.
    let mut sum = CycloElement::zero(12)?;
    for a in [1, 5, 9] {
        sum = sum.add(&CycloElement::from_root(12, a)?)?;
    }
    println!(
        "zeta^1 + zeta^5 + zeta^9 over k=12: zero = {}",
        sum.is_zero()?
    );

    // Dropping one term breaks it.
    let partial = CycloElement::from_root(12, 1)?.add(&CycloElement::from_root(12, 5)?)?;
    println!("zeta^1 + zeta^5 over k=12: zero = {}", partial.is_zero()?);

    // Ring identities are decided the same way: (1 + zeta_3)(1 + zeta_3^2) = 1.
    let x = CycloElement::from_counts(3, vec![1, 1, 0])?;
    let y = CycloElement::from_counts(3, vec![1, 0, 1])?;
    let one = CycloElement::from_integer(3, 1)?;
    println!(
        "(1 + zeta_3)(1 + zeta_3^2) = 1: {}",
        x.mul(&y)?.equiv(&one)?
    );
    Ok(())
}
