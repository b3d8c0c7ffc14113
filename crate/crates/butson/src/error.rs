//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Root order outside the supported envelope.
    #[error("unsupported root order {order}: must be between 1 and {max}")]
    UnsupportedOrder { order: u64, max: u32 },

    /// A coefficient handed to the cyclotomic layer exceeds the envelope.
    #[error("coefficient magnitude {value} exceeds the supported bound {max}")]
    CountTooLarge { value: i64, max: i64 },

    /// Checked integer arithmetic overflowed; the result was discarded.
    #[error("integer overflow during cyclotomic reduction")]
    Overflow,

    /// Two elements with different root orders were combined.
    #[error("root order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    /// Matrix order outside the supported envelope.
    #[error("matrix order {order} exceeds the supported bound {max}")]
    MatrixTooLarge { order: usize, max: usize },

    /// Exponent table is not square.
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("precondition failed: {p} is not prime")]
    NotPrime { p: u32 },

    /// Removing a prime p from the root order requires p^2 | k.
    #[error("precondition failed: p^2 does not divide k (p = {p}, k = {k})")]
    PSquareDoesNotDivide { p: u32, k: u32 },

    #[error("precondition failed: factor {m} does not divide k = {k}")]
    FactorDoesNotDivide { m: u32, k: u32 },

    /// A prime of k survives in no valid reduction: it must divide the target order.
    #[error("precondition failed: prime {p} of k = {k} does not divide t = {t}")]
    PrimeMissingFromTarget { p: u32, k: u32, t: u32 },

    #[error("precondition failed: witness matrix has order {found}, expected {expected}")]
    WitnessOrder { expected: u32, found: usize },

    #[error("precondition failed: witness root order {found} does not divide p = {p}")]
    WitnessRootOrder { found: u32, p: u32 },

    #[error("precondition failed: witness matrix is not Butson-Hadamard (rows {i}, {j})")]
    WitnessNotHadamard { i: usize, j: usize },

    /// Malformed matrix file; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
