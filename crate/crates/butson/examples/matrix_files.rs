//! The text format: writing is canonical, reading is forgiving.
//!
//! Run with: cargo run --example matrix_files

use butson::{fourier, matrix_to_string, parse_matrix};

fn main() -> butson::Result<()> {
    let f3 = fourier(3)?;
    let text = matrix_to_string(&f3);
    println!("canonical form:\n{text}");

    // Comments, blank lines, and out-of-range exponents are accepted on
    // read; exponents normalize into [0, k).
    let annotated = "# the Fourier matrix of order 3\n\nBH 3 3\n0 0 0\n0 1 -1\n0 2 4\n";
    let parsed = parse_matrix(annotated)?;
    assert_eq!(parsed, f3);
    println!("annotated variant parses to the same matrix: true");

    // Malformed input is rejected with a line number.
    let err = parse_matrix("BH 2 2\n0 0\n0 x\n").unwrap_err();
    println!("bad file: {err}");
    Ok(())
}
