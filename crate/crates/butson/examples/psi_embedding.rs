//! The root-to-matrix embedding behind the order reduction: zeta_k maps to
//! the companion matrix M of x^p - zeta_t, and every power of M is a
//! monomial matrix coded by two integers.
//!
//! Run with: cargo run --example psi_embedding

use butson::{psi_scalar, MorphismParams};

fn print_table(label: &str, table: &[Vec<Option<u32>>]) {
    println!("{label}:");
    for row in table {
        let cells: Vec<String> = row
            .iter()
            .map(|e| match e {
                Some(exp) => format!("z^{exp}"),
                None => ".".to_string(),
            })
            .collect();
        println!("  [{}]", cells.join(" "));
    }
}

fn main() -> butson::Result<()> {
    // k = 4, p = 2: the image of zeta_4 is [[0, z], [1, 0]] with z = zeta_2,
    // squaring to zeta_2 * I.
    let params = MorphismParams::new(4, 2)?;
    for a in 0..4 {
        let image = psi_scalar(params, a);
        println!(
            "psi(zeta_4^{a}) = zeta_2^{} * M^{}",
            image.scalar_exp(),
            image.shift()
        );
    }
    print_table("dense M = psi(zeta_4)", &psi_scalar(params, 1).to_table());

    // The embedding is a homomorphism: images compose by adding exponents.
    let params = MorphismParams::new(9, 3)?;
    let lhs = psi_scalar(params, 4).compose(&psi_scalar(params, 7))?;
    let rhs = psi_scalar(params, 11);
    println!("psi(z^4) psi(z^7) == psi(z^11) over k=9: {}", lhs == rhs);

    // Conjugate transpose matches the inverse root.
    let star_ok = psi_scalar(params, 5).star() == psi_scalar(params, -5);
    println!("psi(z^5)^* == psi(z^-5) over k=9: {star_ok}");
    print_table("dense psi(zeta_9)", &psi_scalar(params, 1).to_table());
    Ok(())
}
