//! Order reduction for Butson-Hadamard matrices.
//!
//! The construction trades root order for matrix order: from H in BH(n, k)
//! and a prime p with p^2 | k it produces a member of BH(np, k/p), and by
//! iteration a member of BH(mn, t) whenever k = mt and every prime of k
//! divides t.
//!
//! The engine is the p x p companion matrix M of x^p - zeta_t (ones on the
//! subdiagonal, zeta_t in the top-right corner). The map zeta_k |-> M extends
//! to a ring embedding of Q[zeta_k] into p x p matrices over Q[zeta_t] and is
//! applied entrywise to H; multiplying the blown-up matrix by I_n (x) C for
//! any C in BH(p, p) then yields the reduced-order matrix. Powers of M are
//! monomial, so the whole pipeline stays in exponent arithmetic: M^a is coded
//! as a scalar exponent u and a cyclic shift v with M^a = zeta_t^u M^v.

use crate::error::{Error, Result};
use crate::matrix::{fourier, BhMatrix, MAX_MATRIX_ORDER};

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factors of n with multiplicity, ascending.
pub(crate) fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2u32;
    while p * p <= n {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Parameters of one reduction step: source root order k, prime p, target
/// root order t = k/p. Construction enforces the p^2 | k precondition: it is
/// what keeps x^p - zeta_t irreducible over Q[zeta_t]. With p coprime to t
/// the polynomial picks up a root among the t-th roots of unity and the
/// entrywise image stops being a ring embedding, so such steps are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorphismParams {
    k: u32,
    p: u32,
    t: u32,
}

impl MorphismParams {
    pub fn new(k: u32, p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        let pp = p
            .checked_mul(p)
            .ok_or(Error::PSquareDoesNotDivide { p, k })?;
        if k % pp != 0 {
            return Err(Error::PSquareDoesNotDivide { p, k });
        }
        Ok(MorphismParams { k, p, t: k / p })
    }

    pub fn source_order(&self) -> u32 {
        self.k
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn target_order(&self) -> u32 {
        self.t
    }
}

/// The image of zeta_k^a under the embedding, in closed form: the monomial
/// matrix zeta_t^u M^v. Entry (r, c) is zeta_t^{u + wrap(c, v)} when
/// r = (c + v) mod p and zero otherwise, where wrap(c, v) is 1 if c + v >= p
/// and 0 otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialImage {
    params: MorphismParams,
    u: u32,
    v: u32,
}

impl MonomialImage {
    pub fn params(&self) -> MorphismParams {
        self.params
    }

    /// Scalar exponent u, modulo t.
    pub fn scalar_exp(&self) -> u32 {
        self.u
    }

    /// Cyclic shift v, in [0, p).
    pub fn shift(&self) -> u32 {
        self.v
    }

    /// True when the image is a scalar multiple of the identity (v = 0).
    pub fn is_scalar(&self) -> bool {
        self.v == 0
    }

    /// Product of two images. Since M^p = zeta_t I, shifts add mod p and a
    /// wrap past p feeds one factor of zeta_t into the scalar part.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.params != other.params {
            return Err(Error::OrderMismatch {
                left: self.params.k,
                right: other.params.k,
            });
        }
        let p = self.params.p;
        let t = self.params.t;
        let wrap = u32::from(self.v + other.v >= p);
        Ok(MonomialImage {
            params: self.params,
            u: (self.u + other.u + wrap) % t,
            v: (self.v + other.v) % p,
        })
    }

    /// Conjugate transpose, which is also the image of the inverse root:
    /// star(psi(zeta_k^a)) = psi(zeta_k^{-a}).
    pub fn star(&self) -> Self {
        let p = self.params.p;
        let t = self.params.t;
        let wrap = u32::from(self.v > 0);
        MonomialImage {
            params: self.params,
            u: (t - (self.u + wrap) % t) % t,
            v: (p - self.v) % p,
        }
    }

    /// Dense p x p table of the monomial matrix: `Some(e)` for an entry
    /// zeta_t^e, `None` for a zero entry. Diagnostic expansion; the library
    /// itself always works in (u, v) closed form.
    pub fn to_table(&self) -> Vec<Vec<Option<u32>>> {
        let p = self.params.p as usize;
        let t = self.params.t;
        let v = self.v as usize;
        let mut table = vec![vec![None; p]; p];
        for c in 0..p {
            let r = (c + v) % p;
            let wrap = u32::from(c + v >= p);
            table[r][c] = Some((self.u + wrap) % t);
        }
        table
    }
}

/// The embedding on scalars: zeta_k^a |-> zeta_t^u M^v with u = floor(a/p)
/// mod t and v = a mod p, for a normalized into [0, k).
pub fn psi_scalar(params: MorphismParams, a: i64) -> MonomialImage {
    let a = a.rem_euclid(params.k as i64) as u32;
    MonomialImage {
        params,
        u: (a / params.p) % params.t,
        v: a % params.p,
    }
}

/// The embedding applied entrywise to a matrix: an n x n table of monomial
/// blocks, semantically an (np) x (np) matrix over Q[zeta_t].
#[derive(Debug, Clone)]
pub struct PsiMatrix {
    params: MorphismParams,
    n: usize,
    blocks: Vec<MonomialImage>,
}

impl PsiMatrix {
    pub fn params(&self) -> MorphismParams {
        self.params
    }

    /// Number of block rows (the order of the source matrix).
    pub fn block_order(&self) -> usize {
        self.n
    }

    pub fn block(&self, i: usize, j: usize) -> &MonomialImage {
        assert!(i < self.n && j < self.n, "block index out of range");
        &self.blocks[i * self.n + j]
    }
}

/// Applies the embedding to every entry of H. Requires H's root order to
/// match the parameters.
pub fn psi_matrix(h: &BhMatrix, params: MorphismParams) -> Result<PsiMatrix> {
    if h.root_order() != params.k {
        return Err(Error::OrderMismatch {
            left: h.root_order(),
            right: params.k,
        });
    }
    let n = h.order();
    let mut blocks = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            blocks.push(psi_scalar(params, h.exp(i, j) as i64));
        }
    }
    Ok(PsiMatrix { params, n, blocks })
}

/// The block construction: the (np) x (np) matrix H^psi (I_n (x) C), written
/// directly in exponents of zeta_t.
///
/// Block (i, j) is M^{a_ij} C. With (u, v) = psi of a_ij, the entry at
/// (r, s) inside the block picks row c = (r - v) mod p of C and reads
/// zeta_t^{u + wrap(c, v)} * zeta_p^{C[c][s]}; the p-th root embeds as
/// zeta_p = zeta_t^{t/p}, so every entry lands on a t-th root of unity.
///
/// C must be a verified member of BH(p, p) (entries that are p-th roots of
/// unity; root orders dividing p are accepted and rescaled).
pub fn expand(h: &BhMatrix, c: &BhMatrix, params: MorphismParams) -> Result<BhMatrix> {
    if h.root_order() != params.k {
        return Err(Error::OrderMismatch {
            left: h.root_order(),
            right: params.k,
        });
    }
    let p = params.p;
    let t = params.t;
    if c.order() != p as usize {
        return Err(Error::WitnessOrder {
            expected: p,
            found: c.order(),
        });
    }
    if p % c.root_order() != 0 {
        return Err(Error::WitnessRootOrder {
            found: c.root_order(),
            p,
        });
    }
    let report = c.verify()?;
    if !report.valid {
        let w = report.witness.expect("invalid report carries a witness");
        return Err(Error::WitnessNotHadamard { i: w.i, j: w.j });
    }

    let n = h.order();
    let np = n
        .checked_mul(p as usize)
        .filter(|&np| np <= MAX_MATRIX_ORDER)
        .ok_or(Error::MatrixTooLarge {
            order: n.saturating_mul(p as usize),
            max: MAX_MATRIX_ORDER,
        })?;
    // zeta_{c.k} = zeta_t^{t / c.k}; equals t/p for a witness with entries
    // written to the full order p.
    let scale = t / c.root_order();
    let p = p as usize;
    let mut exps = vec![0u32; np * np];
    for i in 0..n {
        for j in 0..n {
            let image = psi_scalar(params, h.exp(i, j) as i64);
            let v = image.shift() as usize;
            for r in 0..p {
                let cr = (r + p - v) % p;
                let wrap = u32::from(cr + v >= p);
                let base = (image.scalar_exp() + wrap) % t;
                let row = i * p + r;
                for s in 0..p {
                    exps[row * np + j * p + s] = (base + c.exp(cr, s) * scale) % t;
                }
            }
        }
    }
    Ok(BhMatrix::from_raw(np, t, exps))
}

/// One reduction step: BH(n, k) -> BH(np, k/p) for a prime p with p^2 | k.
///
/// `witness` supplies the BH(p, p) factor; omitted, it defaults to the
/// Fourier matrix of order p. Validity of the output is guaranteed whenever
/// the input is valid (and double-checked in debug builds); an invalid input
/// is not rejected, but then nothing is promised about the output.
pub fn reduce_once(h: &BhMatrix, p: u32, witness: Option<&BhMatrix>) -> Result<BhMatrix> {
    let params = MorphismParams::new(h.root_order(), p)?;
    let default_c;
    let c = match witness {
        Some(c) => c,
        None => {
            default_c = fourier(p)?;
            &default_c
        }
    };
    let out = expand(h, c, params)?;
    #[cfg(debug_assertions)]
    {
        let input_valid = h.verify().map(|r| r.valid).unwrap_or(false);
        if input_valid {
            debug_assert!(
                out.verify().map(|r| r.valid).unwrap_or(false),
                "reduction of a valid matrix must stay valid"
            );
        }
    }
    Ok(out)
}

/// An ordered sequence of reduction steps taking BH(n, k) to BH(mn, k/m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPlan {
    k: u32,
    m: u32,
    t: u32,
    primes: Vec<u32>,
}

impl ReductionPlan {
    /// Source root order.
    pub fn source_order(&self) -> u32 {
        self.k
    }

    /// The divisor removed from k.
    pub fn factor(&self) -> u32 {
        self.m
    }

    /// Target root order t = k/m.
    pub fn target_order(&self) -> u32 {
        self.t
    }

    /// Primes of m with multiplicity, ascending; one reduction step each.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }
}

/// Schedules the removal of a divisor m from the root order k.
///
/// Requires m | k and, with t = k/m, that every prime of k divides t. Under
/// that hypothesis each step is individually legal: when p is next in line,
/// p divides both t and the remaining part of m, so p^2 divides the current
/// root order. Ascending prime order makes the output reproducible; any
/// order would produce a valid matrix.
pub fn plan_reduction(k: u32, m: u32) -> Result<ReductionPlan> {
    if m == 0 || k % m != 0 {
        return Err(Error::FactorDoesNotDivide { m, k });
    }
    let t = k / m;
    for p in prime_factors(k) {
        if t % p != 0 {
            return Err(Error::PrimeMissingFromTarget { p, k, t });
        }
    }
    Ok(ReductionPlan {
        k,
        m,
        t,
        primes: prime_factors(m),
    })
}

/// Iterated reduction: BH(n, k) -> BH(mn, k/m), folding [`reduce_once`] over
/// the plan for m with the default Fourier witness at every step.
pub fn reduce_full(h: &BhMatrix, m: u32) -> Result<BhMatrix> {
    let plan = plan_reduction(h.root_order(), m)?;
    let mut current = h.clone();
    for &p in plan.primes() {
        current = reduce_once(&current, p, None)?;
    }
    Ok(current)
}
