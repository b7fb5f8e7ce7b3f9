//! Error type shared across the crate.
//!
//! Mathematical *failures* (an inexact junction, a failed certificate, a
//! non-quasi-isomorphism) are report values, never errors. `CoreError` is
//! reserved for requests the library refuses to compute: invalid inputs,
//! carriers over the size cap, and a structurally bad prime in the modular
//! fast path.

use alloc::string::String;
use core::fmt;

/// Errors produced by the core library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreError {
    /// A requested tensor carrier exceeds the configured column cap.
    SizeLimit {
        /// Columns the computation would need.
        required: usize,
        /// The configured cap.
        cap: usize,
    },
    /// The prime divides a denominator of the matrix, so reduction mod p is
    /// undefined.
    BadPrime {
        /// The offending prime.
        prime: u64,
    },
    /// An operation requiring a commutative algebra was given a
    /// non-commutative one; carries a witness pair of basis indices.
    NotCommutative {
        /// Basis indices `(i, j)` with `e_i·e_j ≠ e_j·e_i`.
        witness: (usize, usize),
    },
    /// A triple of chain maps failed the degreewise conflation rank
    /// conditions required for a snake-lemma long exact sequence.
    NotAConflation {
        /// First degree where the conditions fail.
        degree: i64,
        /// Which condition failed.
        reason: String,
    },
    /// A model-zoo name that matches no known constructor or violates a
    /// constructor's preconditions.
    UnknownModel(String),
    /// An algebra, bimodule, morphism, or extension violated its invariants.
    Invalid(String),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::SizeLimit { required, cap } => {
                write!(f, "size limit exceeded: carrier needs {required} columns, cap is {cap}")
            }
            CoreError::BadPrime { prime } => {
                write!(f, "prime {prime} divides a denominator; modular rank undefined")
            }
            CoreError::NotCommutative { witness: (i, j) } => {
                write!(f, "algebra is not commutative: basis products at ({i}, {j}) differ")
            }
            CoreError::NotAConflation { degree, reason } => {
                write!(f, "not a degreewise conflation at degree {degree}: {reason}")
            }
            CoreError::UnknownModel(name) => write!(f, "unknown model: {name}"),
            CoreError::Invalid(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl core::error::Error for CoreError {}
