//! Helpers shared by the integration suites. The float evaluator lives here,
//! in test code only: the library itself never touches floating point.

#![allow(dead_code)]

use butson::{BhMatrix, CycloElement};

/// Evaluates an element numerically: sum of counts[a] * e^{2 pi i a / k}.
pub fn eval_complex(e: &CycloElement) -> (f64, f64) {
    let k = e.order() as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (a, &c) in e.counts().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let theta = 2.0 * std::f64::consts::PI * a as f64 / k;
        re += c as f64 * theta.cos();
        im += c as f64 * theta.sin();
    }
    (re, im)
}

/// Double-precision zero test at the 1e-9 threshold.
pub fn float_is_zero(e: &CycloElement) -> bool {
    let (re, im) = eval_complex(e);
    (re * re + im * im).sqrt() < 1e-9
}

/// Numeric Gram check, independent of the exact verifier: every off-diagonal
/// entry of H H^* below `tol` in magnitude, every diagonal entry within `tol`
/// of n.
pub fn numeric_gram_ok(m: &BhMatrix, tol: f64) -> bool {
    let n = m.order();
    let k = m.root_order() as f64;
    for i in 0..n {
        for j in i..n {
            let mut re = 0.0;
            let mut im = 0.0;
            for l in 0..n {
                let d = (m.exp(i, l) + m.root_order() - m.exp(j, l)) % m.root_order();
                let theta = 2.0 * std::f64::consts::PI * d as f64 / k;
                re += theta.cos();
                im += theta.sin();
            }
            let target = if i == j { n as f64 } else { 0.0 };
            if ((re - target).powi(2) + im * im).sqrt() > tol {
                return false;
            }
        }
    }
    true
}

/// Applies row and column permutations; test utility, deliberately not API.
pub fn permuted(m: &BhMatrix, row_perm: &[usize], col_perm: &[usize]) -> BhMatrix {
    let n = m.order();
    assert_eq!(row_perm.len(), n);
    assert_eq!(col_perm.len(), n);
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m.exp(row_perm[i], col_perm[j]) as i64)
                .collect()
        })
        .collect();
    BhMatrix::new(m.root_order(), &rows).unwrap()
}
