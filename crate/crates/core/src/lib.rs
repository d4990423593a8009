//! Semigroup primes of finite commutative rings and the finite spectral
//! spaces around them.
//!
//! The crate builds, for a finite commutative ring `R`:
//!
//! * the prime spectrum `Spec(R)` with its specialization order ([`ring`]);
//! * the space `S(R)` of semigroup primes under the hull-kernel topology
//!   ([`sprime`]);
//! * the space `X(R)` of nonempty inverse-closed subsets of `Spec(R)`
//!   ([`poset::XSpace`]);
//! * the maps `i`, `j`, `P`, `phi` between them, and checkers for every
//!   identity those maps are supposed to satisfy ([`correspondence`]).
//!
//! Everything is exhaustive and finite. Finite spectral spaces are handled as
//! posets with the Alexandrov topology whose opens are the down-sets, under
//! the convention `x <= y` iff `y` lies in the closure of `{x}`.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod bitset;
pub mod check;
pub mod correspondence;
pub mod error;
pub mod poset;
pub mod ring;
pub mod sprime;

pub use bitset::BitSet;
pub use check::{CheckResult, Violation};
pub use correspondence::{
    dedekind_verdict, diagram_check, ClassGroupProfile, Correspondence, DedekindVerdict, DiagramReport,
    SurjectivityReport,
};
pub use error::{Error, Result};
pub use poset::{ClosureMode, DownSet, FinitePoset, MonotoneMap, SpectralReport, TopologyPresentation, XSpace};
pub use ring::{CarrierId, FiniteRing, Ideal, RingHom, Spectrum};
pub use sprime::{CommutativeSemigroup, Infimum, SPrimeSpace, SemigroupPrime, UfdModel};
