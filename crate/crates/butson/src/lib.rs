//! Construction, order reduction, and exact verification of Butson-Hadamard
//! matrices.
//!
//! A Butson-Hadamard matrix H in BH(n, k) is an n x n matrix of k-th roots of
//! unity with H H^* = n I. This crate builds such matrices (Fourier and
//! Kronecker generators), reduces their root order — BH(n, k) to BH(np, k/p)
//! for any prime p with p^2 | k, iterated to BH(mn, t) whenever k = mt and
//! every prime of k divides t — and verifies every result exactly over the
//! cyclotomic integers. The trusted path never touches floating point:
//! matrices live as exponent tables, Gram entries as integer count vectors,
//! and "this sum of roots of unity is zero" is decided by exact polynomial
//! division by the cyclotomic polynomial.
//!
//! Start with [`fourier`], push matrices through [`reduce_once`] or
//! [`reduce_full`], and check anything with [`BhMatrix::verify`]. The
//! `examples/` directory has one runnable program per capability, and the
//! `butson` binary exposes the same operations on files.

pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod format;
pub mod matrix;
pub mod morphism;

pub use cyclotomic::{cyclotomic_poly, CycloContext, CycloElement, MAX_COUNT, MAX_ORDER};
pub use error::{Error, Result};
pub use format::{matrix_to_string, parse_matrix, read_matrix, write_matrix};
pub use matrix::{fourier, kronecker, BhMatrix, GramWitness, VerifyReport, MAX_MATRIX_ORDER};
pub use morphism::{
    expand, plan_reduction, psi_matrix, psi_scalar, reduce_full, reduce_once, MonomialImage,
    MorphismParams, PsiMatrix, ReductionPlan,
};
