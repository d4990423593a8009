//! Failed invariant assertions.
//!
//! Every verifier in the crate returns `Result<(), Violation>`. A violation
//! names the check, says what went wrong, and carries index arrays (element
//! indices, point indices) that reproduce the failure.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
    pub witness: Vec<Vec<usize>>,
}

impl Violation {
    pub fn new(check: &'static str, detail: impl Into<String>) -> Self {
        Violation { check, detail: detail.into(), witness: Vec::new() }
    }

    pub fn with_witness(mut self, indices: impl IntoIterator<Item = usize>) -> Self {
        self.witness.push(indices.into_iter().collect());
        self
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)?;
        for w in &self.witness {
            write!(f, " {w:?}")?;
        }
        Ok(())
    }
}

impl core::error::Error for Violation {}

pub type CheckResult = Result<(), Violation>;

/// Fails with `violation()` unless `cond` holds.
pub(crate) fn ensure(cond: bool, violation: impl FnOnce() -> Violation) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(violation())
    }
}
