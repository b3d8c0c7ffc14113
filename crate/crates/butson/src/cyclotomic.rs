//! Exact arithmetic in the ring of cyclotomic integers Z[zeta_k].
//!
//! An element is kept as a dense length-k vector of integer counts: `counts[a]`
//! is the multiplicity of zeta_k^a. Sums of roots of unity are therefore built
//! by incrementing counts, and the single expensive step — deciding whether a
//! sum vanishes — is deferred to [`CycloElement::is_zero`], which reduces the
//! count polynomial modulo the k-th cyclotomic polynomial by exact integer
//! division. No floating point is involved anywhere in this module.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

/// Largest root order k the cyclotomic layer accepts.
pub const MAX_ORDER: u32 = 10_000;

/// Largest coefficient magnitude accepted at API boundaries.
pub const MAX_COUNT: i64 = 1 << 20;

fn check_order(k: u32) -> Result<()> {
    if k == 0 || k > MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: k as u64,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// Divisors of `n` in ascending order.
pub(crate) fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1u32;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Remainder and quotient of `num` by a monic divisor, ascending-degree
/// coefficients, all arithmetic checked.
fn poly_divmod(num: &[i64], den: &[i64]) -> Result<(Vec<i64>, Vec<i64>)> {
    debug_assert!(den.last() == Some(&1), "divisor must be monic");
    let d = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= d {
        return Ok((Vec::new(), rem));
    }
    let mut quot = vec![0i64; rem.len() - d];
    for i in (d..rem.len()).rev() {
        let coef = rem[i];
        if coef == 0 {
            continue;
        }
        quot[i - d] = coef;
        for (j, &den_j) in den.iter().enumerate() {
            let sub = coef.checked_mul(den_j).ok_or(Error::Overflow)?;
            rem[i - d + j] = rem[i - d + j].checked_sub(sub).ok_or(Error::Overflow)?;
        }
    }
    rem.truncate(d);
    Ok((quot, rem))
}

/// Exact division: errors if the remainder is nonzero.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Result<Vec<i64>> {
    let (quot, rem) = poly_divmod(num, den)?;
    if rem.iter().any(|&c| c != 0) {
        return Err(Error::Overflow); // unreachable for cyclotomic inputs
    }
    Ok(quot)
}

fn phi_memo() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static MEMO: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn phi_arc(k: u32) -> Result<Arc<Vec<i64>>> {
    check_order(k)?;
    if let Some(found) = phi_memo().read().unwrap().get(&k) {
        return Ok(Arc::clone(found));
    }
    // Phi_k = (x^k - 1) / prod of Phi_d over proper divisors d.
    let mut poly = vec![0i64; k as usize + 1];
    poly[0] = -1;
    poly[k as usize] = 1;
    for d in divisors(k) {
        if d == k {
            continue;
        }
        let phi_d = phi_arc(d)?;
        poly = poly_div_exact(&poly, &phi_d)?;
    }
    let arc = Arc::new(poly);
    phi_memo()
        .write()
        .unwrap()
        .entry(k)
        .or_insert_with(|| Arc::clone(&arc));
    Ok(arc)
}

/// The k-th cyclotomic polynomial Phi_k, ascending-degree coefficients,
/// leading coefficient 1 and degree phi(k).
///
/// Computed by exact integer division of x^k - 1 by the product of Phi_d over
/// proper divisors d of k; results are memoized process-wide.
pub fn cyclotomic_poly(k: u32) -> Result<Vec<i64>> {
    Ok(phi_arc(k)?.as_ref().clone())
}

/// Reduction context for a fixed root order: the order k together with Phi_k.
#[derive(Debug, Clone)]
pub struct CycloContext {
    order: u32,
    phi: Arc<Vec<i64>>,
}

impl CycloContext {
    pub fn new(order: u32) -> Result<Self> {
        Ok(CycloContext {
            order,
            phi: phi_arc(order)?,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of Phi_k, ascending degree.
    pub fn phi_coeffs(&self) -> &[i64] {
        &self.phi
    }

    fn check_elem(&self, elem: &CycloElement) -> Result<()> {
        if elem.order != self.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: elem.order,
            });
        }
        Ok(())
    }

    /// Remainder of the count polynomial modulo Phi_k, returned as an element
    /// of the same order (coefficients above degree phi(k) are zero).
    pub fn reduce(&self, elem: &CycloElement) -> Result<CycloElement> {
        self.check_elem(elem)?;
        let (_, rem) = poly_divmod(&elem.counts, &self.phi)?;
        let mut counts = vec![0i64; self.order as usize];
        counts[..rem.len()].copy_from_slice(&rem);
        Ok(CycloElement {
            order: self.order,
            counts,
        })
    }

    /// Decides whether the element is zero in Z[zeta_k]: true iff Phi_k
    /// divides the count polynomial exactly.
    pub fn is_zero(&self, elem: &CycloElement) -> Result<bool> {
        self.check_elem(elem)?;
        let (_, rem) = poly_divmod(&elem.counts, &self.phi)?;
        Ok(rem.iter().all(|&c| c == 0))
    }
}

/// An element of Z[zeta_k]: `counts[a]` copies of zeta_k^a for a in [0, k).
///
/// Derived equality compares count vectors literally; two representations of
/// the same ring element can differ, so semantic comparisons go through
/// [`CycloElement::equiv`] or [`CycloElement::is_zero`] of a difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloElement {
    order: u32,
    counts: Vec<i64>,
}

impl CycloElement {
    /// The zero element of Z[zeta_k].
    pub fn zero(order: u32) -> Result<Self> {
        check_order(order)?;
        Ok(CycloElement {
            order,
            counts: vec![0; order as usize],
        })
    }

    /// The single root zeta_k^a; `a` may be any integer and is folded mod k.
    pub fn from_root(order: u32, a: i64) -> Result<Self> {
        let mut elem = Self::zero(order)?;
        elem.counts[a.rem_euclid(order as i64) as usize] = 1;
        Ok(elem)
    }

    /// The rational integer n, i.e. n * zeta_k^0.
    pub fn from_integer(order: u32, n: i64) -> Result<Self> {
        check_count(n)?;
        let mut elem = Self::zero(order)?;
        elem.counts[0] = n;
        Ok(elem)
    }

    /// Builds an element from an explicit count vector of length k.
    pub fn from_counts(order: u32, counts: Vec<i64>) -> Result<Self> {
        check_order(order)?;
        if counts.len() != order as usize {
            return Err(Error::OrderMismatch {
                left: order,
                right: counts.len() as u32,
            });
        }
        for &c in &counts {
            check_count(c)?;
        }
        Ok(CycloElement { order, counts })
    }

    /// Internal constructor for counts produced by trusted accumulation loops.
    pub(crate) fn from_raw(order: u32, counts: Vec<i64>) -> Self {
        debug_assert_eq!(counts.len(), order as usize);
        CycloElement { order, counts }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    fn check_pair(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Pointwise sum of counts.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_pair(other)?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<i64>>>()?;
        Ok(CycloElement {
            order: self.order,
            counts,
        })
    }

    /// Pointwise difference of counts.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_pair(other)?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a.checked_sub(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<i64>>>()?;
        Ok(CycloElement {
            order: self.order,
            counts,
        })
    }

    /// Ring product: cyclic convolution of counts, exponents adding mod k.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_pair(other)?;
        let k = self.order as usize;
        let mut counts = vec![0i64; k];
        for (i, &a) in self.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.counts.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let idx = (i + j) % k;
                let prod = a.checked_mul(b).ok_or(Error::Overflow)?;
                counts[idx] = counts[idx].checked_add(prod).ok_or(Error::Overflow)?;
            }
        }
        Ok(CycloElement {
            order: self.order,
            counts,
        })
    }

    /// Complex conjugation: zeta^a -> zeta^{-a}, so counts[a] moves to (k - a) mod k.
    pub fn conj(&self) -> Self {
        let k = self.order as usize;
        let mut counts = vec![0i64; k];
        for (a, &c) in self.counts.iter().enumerate() {
            counts[(k - a) % k] = c;
        }
        CycloElement {
            order: self.order,
            counts,
        }
    }

    /// True iff the element is zero in Z[zeta_k]. The counts are already
    /// folded mod x^k - 1 by construction; what remains is one exact division
    /// by Phi_k.
    pub fn is_zero(&self) -> Result<bool> {
        CycloContext::new(self.order)?.is_zero(self)
    }

    /// Semantic equality: the difference reduces to zero mod Phi_k.
    pub fn equiv(&self, other: &Self) -> Result<bool> {
        self.sub(other)?.is_zero()
    }
}

fn check_count(c: i64) -> Result<()> {
    if c.abs() > MAX_COUNT {
        return Err(Error::CountTooLarge {
            value: c,
            max: MAX_COUNT,
        });
    }
    Ok(())
}
