//! Exact verification and witness reporting.
//!
//! Run with: cargo run --example verify_matrix

use butson::{fourier, BhMatrix};

fn main() -> butson::Result<()> {
    let f4 = fourier(4)?;
    println!("{}: valid = {}", f4, f4.verify()?.valid);

    // Tamper with one entry; the verifier pinpoints the first failing row pair.
    let mut rows: Vec<Vec<i64>> = (0..4)
        .map(|i| f4.row(i).iter().map(|&e| e as i64).collect())
        .collect();
    rows[2][3] = (rows[2][3] + 1) % 4;
    let broken = BhMatrix::new(4, &rows)?;

    let report = broken.verify()?;
    println!("tampered copy: valid = {}", report.valid);
    if let Some(w) = report.witness {
        println!(
            "first failing Gram entry: rows ({}, {}), reduced counts {:?}",
            w.i,
            w.j,
            w.entry.counts()
        );
    }
    Ok(())
}
