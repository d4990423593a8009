use alloc::vec::Vec;

use super::{SPrimeSpace, SemigroupPrime};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Outcome of the infimum construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infimum {
    Prime(SemigroupPrime),
    /// No prime ideal lies inside every member of the family.
    NoInfimum,
}

impl SPrimeSpace<'_> {
    fn family_indices(&self, family: &[SemigroupPrime]) -> Result<Vec<usize>> {
        if family.is_empty() {
            return Err(Error::InvalidParameter("empty family of semigroup primes".into()));
        }
        family
            .iter()
            .map(|q| {
                if q.carrier() != self.ring().id() {
                    return Err(Error::InvalidParameter("semigroup primes over different rings".into()));
                }
                self.index_of(q.members())
                    .ok_or_else(|| Error::InvalidParameter("set is not a point of this space".into()))
            })
            .collect()
    }

    /// The union of the family, a semigroup prime again.
    pub fn sup(&self, family: &[SemigroupPrime]) -> Result<SemigroupPrime> {
        self.family_indices(family)?;
        let mut union = BitSet::empty(self.ring().len());
        for q in family {
            union.union_with(q.members());
        }
        let i = self.index_of(&union).ok_or_else(|| {
            Error::CheckFailed(
                crate::Violation::new("sup", "union is not a semigroup prime").with_witness(union.iter()),
            )
        })?;
        Ok(self.prime(i).clone())
    }

    /// `C_T`: the primes of `Spec(R)` contained in every member of the family.
    pub fn common_primes(&self, family: &[SemigroupPrime]) -> Result<BitSet> {
        self.family_indices(family)?;
        let mut out = self.spectrum().all();
        for q in family {
            out.intersect_with(&self.spectrum().primes_inside(q.members()));
        }
        Ok(out)
    }

    /// `∪ C_T` when `C_T` is nonempty.
    pub fn inf(&self, family: &[SemigroupPrime]) -> Result<Infimum> {
        let c_t = self.common_primes(family)?;
        if c_t.is_empty() {
            return Ok(Infimum::NoInfimum);
        }
        let members = self.spectrum().union_of(&c_t);
        let i = self.index_of(&members).expect("a nonempty union of primes is a semigroup prime");
        Ok(Infimum::Prime(self.prime(i).clone()))
    }

    /// Greatest lower bound in `(S(R), ⊆)`, found by comparing against every
    /// point; `None` when the family has no lower bound or no greatest one.
    pub fn glb_exhaustive(&self, family: &[SemigroupPrime]) -> Result<Option<SemigroupPrime>> {
        let idx = self.family_indices(family)?;
        let lower: Vec<usize> = (0..self.len()).filter(|&q| idx.iter().all(|&a| self.order().leq(q, a))).collect();
        let greatest = lower.iter().copied().find(|&g| lower.iter().all(|&q| self.order().leq(q, g)));
        Ok(greatest.map(|g| self.prime(g).clone()))
    }

    /// Least upper bound by the same exhaustive comparison.
    pub fn lub_exhaustive(&self, family: &[SemigroupPrime]) -> Result<Option<SemigroupPrime>> {
        let idx = self.family_indices(family)?;
        let upper: Vec<usize> = (0..self.len()).filter(|&q| idx.iter().all(|&a| self.order().leq(a, q))).collect();
        let least = upper.iter().copied().find(|&l| upper.iter().all(|&q| self.order().leq(l, q)));
        Ok(least.map(|l| self.prime(l).clone()))
    }
}
