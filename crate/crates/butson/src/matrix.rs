//! The Butson matrix data model: exponent tables, generators, and exact
//! Gram verification.
//!
//! A candidate matrix is stored as an n x n table of exponents modulo the
//! root order k; the (i, j) entry of the complex matrix it denotes is
//! zeta_k^{exps[i][j]}. Keeping exponents instead of complex values makes
//! entry products exponent additions and keeps the whole verification path
//! in exact integer arithmetic.

use std::fmt;

use crate::cyclotomic::{CycloContext, CycloElement, MAX_ORDER};
use crate::error::{Error, Result};

/// Largest matrix order the generators and morphisms will produce.
pub const MAX_MATRIX_ORDER: usize = 4096;

/// A candidate Butson-Hadamard matrix: order n, root order k, and an n x n
/// exponent table with every entry normalized into [0, k).
///
/// Being Butson-Hadamard is *not* an invariant of this type — intermediate
/// products and deliberately broken candidates are representable — it is
/// established only by [`BhMatrix::verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BhMatrix {
    n: usize,
    k: u32,
    exps: Vec<u32>, // row-major, length n * n
}

impl BhMatrix {
    /// Builds a matrix from rows of raw exponents, normalizing each mod k.
    pub fn new(k: u32, rows: &[Vec<i64>]) -> Result<Self> {
        if k == 0 || k > MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                order: k as u64,
                max: MAX_ORDER,
            });
        }
        let n = rows.len();
        if n == 0 || n > MAX_MATRIX_ORDER {
            return Err(Error::MatrixTooLarge {
                order: n,
                max: MAX_MATRIX_ORDER,
            });
        }
        let mut exps = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            for &e in row {
                exps.push(e.rem_euclid(k as i64) as u32);
            }
        }
        Ok(BhMatrix { n, k, exps })
    }

    pub(crate) fn from_raw(n: usize, k: u32, exps: Vec<u32>) -> Self {
        debug_assert_eq!(exps.len(), n * n);
        debug_assert!(exps.iter().all(|&e| e < k));
        BhMatrix { n, k, exps }
    }

    /// Matrix order n.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Root order k: entries are k-th roots of unity.
    pub fn root_order(&self) -> u32 {
        self.k
    }

    /// Exponent at (i, j); the complex entry is zeta_k to this power.
    pub fn exp(&self, i: usize, j: usize) -> u32 {
        assert!(i < self.n && j < self.n, "index out of range");
        self.exps[i * self.n + j]
    }

    /// Row i as a slice of exponents.
    pub fn row(&self, i: usize) -> &[u32] {
        assert!(i < self.n, "row out of range");
        &self.exps[i * self.n..(i + 1) * self.n]
    }

    /// Entry (i, j) of H H^*: the exact sum over l of
    /// zeta_k^{exps[i][l] - exps[j][l]}.
    pub fn gram_entry(&self, i: usize, j: usize) -> CycloElement {
        assert!(i < self.n && j < self.n, "index out of range");
        let k = self.k;
        let mut counts = vec![0i64; k as usize];
        for l in 0..self.n {
            let d = (self.exp(i, l) + k - self.exp(j, l)) % k;
            counts[d as usize] += 1;
        }
        CycloElement::from_raw(k, counts)
    }

    /// Exact Gram verification: valid iff every diagonal entry of H H^*
    /// equals n and every off-diagonal entry vanishes in Z[zeta_k].
    ///
    /// Conjugate symmetry of the Gram matrix means only pairs i <= j are
    /// checked; the witness is the lexicographically first failing pair.
    pub fn verify(&self) -> Result<VerifyReport> {
        let ctx = CycloContext::new(self.k)?;
        let order = CycloElement::from_integer(self.k, self.n as i64)?;
        for i in 0..self.n {
            for j in i..self.n {
                let gram = self.gram_entry(i, j);
                let ok = if i == j {
                    ctx.is_zero(&gram.sub(&order)?)?
                } else {
                    ctx.is_zero(&gram)?
                };
                if !ok {
                    return Ok(VerifyReport {
                        valid: false,
                        witness: Some(GramWitness {
                            i,
                            j,
                            entry: ctx.reduce(&gram)?,
                        }),
                    });
                }
            }
        }
        Ok(VerifyReport {
            valid: true,
            witness: None,
        })
    }
}

impl fmt::Display for BhMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BH({},{})", self.n, self.k)
    }
}

/// Outcome of exact Gram verification.
///
/// `valid` is true exactly when `witness` is absent.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub valid: bool,
    pub witness: Option<GramWitness>,
}

/// First failing Gram entry, rows (i, j) with i <= j, reduced mod Phi_k.
#[derive(Debug, Clone)]
pub struct GramWitness {
    pub i: usize,
    pub j: usize,
    pub entry: CycloElement,
}

/// The Fourier matrix of order m: exponent table (i * j) mod m, the character
/// table of the cyclic group of order m. Defined for every m >= 1, not only
/// primes; [`BhMatrix::verify`] guards the construction.
pub fn fourier(m: u32) -> Result<BhMatrix> {
    if m == 0 || m > MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: m as u64,
            max: MAX_ORDER,
        });
    }
    let n = m as usize;
    if n > MAX_MATRIX_ORDER {
        return Err(Error::MatrixTooLarge {
            order: n,
            max: MAX_MATRIX_ORDER,
        });
    }
    let mut exps = Vec::with_capacity(n * n);
    for i in 0..m {
        for j in 0..m {
            exps.push(i * j % m);
        }
    }
    Ok(BhMatrix::from_raw(n, m, exps))
}

/// Kronecker product A (x) B: order n_A * n_B, root order lcm(k_A, k_B),
/// exponents merged through the common root order.
pub fn kronecker(a: &BhMatrix, b: &BhMatrix) -> Result<BhMatrix> {
    let n =
        a.n.checked_mul(b.n)
            .filter(|&n| n <= MAX_MATRIX_ORDER)
            .ok_or(Error::MatrixTooLarge {
                order: a.n.saturating_mul(b.n),
                max: MAX_MATRIX_ORDER,
            })?;
    let l = lcm(a.k as u64, b.k as u64);
    if l > MAX_ORDER as u64 {
        return Err(Error::UnsupportedOrder {
            order: l,
            max: MAX_ORDER,
        });
    }
    let l = l as u32;
    let (sa, sb) = (l / a.k, l / b.k);
    let mut exps = vec![0u32; n * n];
    for i in 0..a.n {
        for j in 0..a.n {
            let base = a.exp(i, j) * sa % l;
            for r in 0..b.n {
                for s in 0..b.n {
                    let row = i * b.n + r;
                    let col = j * b.n + s;
                    exps[row * n + col] = (base + b.exp(r, s) * sb) % l;
                }
            }
        }
    }
    Ok(BhMatrix::from_raw(n, l, exps))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
