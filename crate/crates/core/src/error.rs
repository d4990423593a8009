use alloc::string::String;

use crate::check::Violation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("tables do not define a commutative unital ring: {0}")]
    InvalidRing(String),
    #[error("not a ring homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("relation is not a partial order: {a} and {b} lie on a cycle")]
    NotAPartialOrder { a: usize, b: usize },
    #[error("map is not spectral: {x} <= {y} but f({x}) is not <= f({y})")]
    NotSpectral { x: usize, y: usize },
    #[error("{what} has size {size}, above the cap of {cap}")]
    TooLarge { what: &'static str, size: usize, cap: usize },
    #[error("table is not a commutative semigroup: {0}")]
    InvalidSemigroup(String),
    #[error("invariant violated: {0}")]
    CheckFailed(Violation),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
