//! The text format for matrices on disk.
//!
//! Line 1 is `BH <n> <k>`, followed by n lines of n space-separated base-10
//! exponents. Lines whose first non-blank character is `#` are comments and
//! are skipped; blank lines are skipped too. Writing is canonical: single
//! spaces, no comments, trailing newline. Reading accepts any integers and
//! normalizes them into [0, k).

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::matrix::BhMatrix;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Reads a matrix from a line-oriented reader.
pub fn read_matrix<R: BufRead>(reader: R) -> Result<BhMatrix> {
    let mut header: Option<(usize, u32, usize)> = None; // (n, k, header line)
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let mut tokens = trimmed.split_whitespace();
                if tokens.next() != Some("BH") {
                    return Err(parse_err(lineno, "expected header `BH <n> <k>`"));
                }
                let n: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "invalid matrix order in header"))?;
                let k: u32 = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "invalid root order in header"))?;
                if tokens.next().is_some() {
                    return Err(parse_err(lineno, "trailing tokens after header"));
                }
                if n == 0 {
                    return Err(parse_err(lineno, "matrix order must be positive"));
                }
                if k == 0 {
                    return Err(parse_err(lineno, "root order must be positive"));
                }
                header = Some((n, k, lineno));
            }
            Some((n, _, _)) => {
                if rows.len() == n {
                    return Err(parse_err(lineno, format!("expected {n} rows, found more")));
                }
                let mut row = Vec::with_capacity(n);
                for token in trimmed.split_whitespace() {
                    let e: i64 = token.parse().map_err(|_| {
                        parse_err(lineno, format!("exponent `{token}` is not an integer"))
                    })?;
                    row.push(e);
                }
                if row.len() != n {
                    return Err(parse_err(
                        lineno,
                        format!("row has {} entries, expected {n}", row.len()),
                    ));
                }
                rows.push(row);
            }
        }
    }
    let (n, k, header_line) = header.ok_or_else(|| parse_err(1, "missing header `BH <n> <k>`"))?;
    if rows.len() != n {
        return Err(parse_err(
            header_line,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    BhMatrix::new(k, &rows)
}

/// Parses a matrix from in-memory text.
pub fn parse_matrix(text: &str) -> Result<BhMatrix> {
    read_matrix(text.as_bytes())
}

/// Writes the canonical form, trailing newline included.
pub fn write_matrix<W: Write>(mut writer: W, m: &BhMatrix) -> Result<()> {
    writer.write_all(matrix_to_string(m).as_bytes())?;
    Ok(())
}

/// The canonical text form of a matrix.
pub fn matrix_to_string(m: &BhMatrix) -> String {
    let n = m.order();
    let mut out = format!("BH {} {}\n", n, m.root_order());
    for i in 0..n {
        let row: Vec<String> = m.row(i).iter().map(|e| e.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
