//! Finite commutative unital rings given by full operation tables.

mod construct;
mod hom;
mod ideal;
mod spectrum;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicUsize, Ordering};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::sprime::CommutativeSemigroup;

pub use construct::DEFAULT_SIZE_CAP;
pub use hom::RingHom;
pub use ideal::{Ideal, IdealViolation};
pub use spectrum::Spectrum;

/// Identity of a ring or semigroup. Subsets remember which carrier they live
/// in, so sets taken from different rings are never confused even when the
/// rings have the same size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CarrierId(usize);

impl CarrierId {
    pub(crate) fn fresh() -> Self {
        static NEXT: AtomicUsize = AtomicUsize::new(1);
        CarrierId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

/// A finite commutative ring with `1 != 0`.
///
/// Elements are the indices `0..len()`. Clones share the identity of the
/// original.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    id: CarrierId,
    label: String,
    names: Vec<String>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
}

impl FiniteRing {
    /// Validates the tables exhaustively and builds the ring.
    ///
    /// `add` and `mul` are row-major `n x n` tables of element indices.
    pub fn from_tables(
        label: impl Into<String>,
        names: Vec<String>,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidRing("no elements".into()));
        }
        if add.len() != n * n || mul.len() != n * n {
            return Err(Error::InvalidRing(format!("tables must have {} entries", n * n)));
        }
        if add.iter().chain(&mul).any(|&v| v as usize >= n) {
            return Err(Error::InvalidRing("table entry out of range".into()));
        }
        if zero >= n || one >= n {
            return Err(Error::InvalidRing("zero or one out of range".into()));
        }
        if zero == one {
            return Err(Error::InvalidRing("one equals zero (the zero ring is excluded)".into()));
        }
        let a = |x: usize, y: usize| add[x * n + y] as usize;
        let m = |x: usize, y: usize| mul[x * n + y] as usize;

        let mut neg = alloc::vec![u32::MAX; n];
        for (x, slot) in neg.iter_mut().enumerate() {
            if a(zero, x) != x {
                return Err(Error::InvalidRing(format!("0 + {x} != {x}")));
            }
            if m(one, x) != x {
                return Err(Error::InvalidRing(format!("1 * {x} != {x}")));
            }
            match (0..n).find(|&y| a(x, y) == zero) {
                Some(y) => *slot = y as u32,
                None => return Err(Error::InvalidRing(format!("{x} has no additive inverse"))),
            }
            for y in 0..n {
                if a(x, y) != a(y, x) {
                    return Err(Error::InvalidRing(format!("addition not commutative at ({x}, {y})")));
                }
                if m(x, y) != m(y, x) {
                    return Err(Error::InvalidRing(format!("multiplication not commutative at ({x}, {y})")));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let (sxy, pxy) = (a(x, y), m(x, y));
                for z in 0..n {
                    if a(sxy, z) != a(x, a(y, z)) {
                        return Err(Error::InvalidRing(format!("addition not associative at ({x}, {y}, {z})")));
                    }
                    if m(pxy, z) != m(x, m(y, z)) {
                        return Err(Error::InvalidRing(format!("multiplication not associative at ({x}, {y}, {z})")));
                    }
                    if m(x, a(y, z)) != a(pxy, m(x, z)) {
                        return Err(Error::InvalidRing(format!("distributivity fails at ({x}, {y}, {z})")));
                    }
                }
            }
        }

        Ok(FiniteRing { id: CarrierId::fresh(), label: label.into(), names, add, mul, neg, zero, one })
    }

    pub fn id(&self) -> CarrierId {
        self.id
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn element_name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.len() + y] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.len() + y] as usize
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.one, |acc, _| self.mul(acc, x))
    }

    pub fn is_unit(&self, x: usize) -> bool {
        (0..self.len()).any(|y| self.mul(x, y) == self.one)
    }

    pub fn units(&self) -> BitSet {
        BitSet::from_indices(self.len(), (0..self.len()).filter(|&x| self.is_unit(x)))
    }

    /// `x` is nilpotent iff `x^k = 0` for some `k <= |R|`.
    pub fn is_nilpotent(&self, x: usize) -> bool {
        let mut p = x;
        for _ in 0..self.len() {
            if p == self.zero {
                return true;
            }
            p = self.mul(p, x);
        }
        p == self.zero
    }

    /// Additive order of `1`.
    pub fn characteristic(&self) -> usize {
        let mut k = 1;
        let mut acc = self.one;
        while acc != self.zero {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    /// `(R, *)` as a commutative semigroup sharing this ring's identity.
    pub fn multiplicative_semigroup(&self) -> CommutativeSemigroup {
        CommutativeSemigroup::from_ring(self)
    }

    pub(crate) fn full_set(&self) -> BitSet {
        BitSet::full(self.len())
    }
}
