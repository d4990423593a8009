//! Batch verification of semigroup primes of finite commutative rings.
//!
//! Inputs (rings, homomorphisms, posets, class-group profiles and UFD
//! models) are read from JSON, every applicable named check is run against
//! them, and the results are written as JSON reports with optional Graphviz
//! diagrams of `Spec(R)`, `S(R)` and `X(R)`.

use std::path::PathBuf;

pub mod checks;
pub mod corpus;
pub mod dot;
pub mod input;
pub mod job;
pub mod labels;

pub use checks::{run_check, run_checks, Report, RunConfig, Status};
pub use input::{parse_input, Input, InputKind, InputSpec};
pub use job::{run_job, JobOutcome, JobSpec};

/// Environment variable holding the seed for sampled checks.
pub const SEED_VAR: &str = "SPECPRIME_SEED";

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] specprime_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

/// Seed from [`SEED_VAR`], or 0 when unset.
pub fn seed_from_env() -> Result<u64, Error> {
    match std::env::var(SEED_VAR) {
        Ok(v) => {
            v.trim().parse().map_err(|_| Error::Usage(format!("{SEED_VAR} must be an unsigned integer, got {v:?}")))
        }
        Err(_) => Ok(0),
    }
}
