//! Command-line driver for the exact homology library: JSON file formats
//! for algebras, bimodules, and ideal extensions, a thread-fanning rank
//! engine, plain-text and JSON report rendering, and the `hochex` binary's
//! argument surface.
//!
//! Exit-code contract: a run that completes and *reports* a failed
//! mathematical check (a broken junction, a missing certificate) exits 0 —
//! the verdict is the output, not an error. Exit 2 means the inputs were
//! unusable (unreadable files, malformed JSON or rationals, tables that
//! fail validation, contradictory flags). Exit 3 means a computation was
//! refused because a carrier dimension exceeded the size cap.

pub mod cli;
pub mod engine;
pub mod render;
pub mod schema;

use std::fmt;

/// Driver-level error with the exit code baked into the variant.
#[derive(Debug)]
pub enum CliError {
    /// Unusable input (exit 2): file IO, parsing, validation, bad flags.
    Usage(String),
    /// A carrier exceeded the size cap (exit 3).
    Size {
        /// Carrier dimension the computation needed.
        required: usize,
        /// The configured cap it crossed.
        cap: usize,
    },
}

impl CliError {
    /// The process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Size { .. } => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Size { required, cap } => write!(
                f,
                "size cap exceeded: a carrier needs dimension {required} but the cap is {cap} \
                 (raise it with --size-cap or HOCHEX_SIZE_CAP)"
            ),
        }
    }
}

impl std::error::Error for CliError {}

impl From<hochex_core::CoreError> for CliError {
    fn from(e: hochex_core::CoreError) -> Self {
        match e {
            hochex_core::CoreError::SizeLimit { required, cap } => {
                CliError::Size { required, cap }
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}
