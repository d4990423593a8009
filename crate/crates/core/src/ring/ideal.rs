use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{CarrierId, FiniteRing};
use crate::bitset::BitSet;

/// An ideal of a specific [`FiniteRing`], stored as a bit vector over the
/// ring's element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    carrier: CarrierId,
    members: BitSet,
}

/// First failing clause of the ideal invariant suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealViolation {
    WrongUniverse,
    MissingZero,
    NotAdditive { a: usize, b: usize },
    NotAbsorbing { r: usize, a: usize },
}

impl Ideal {
    pub fn carrier(&self) -> CarrierId {
        self.carrier
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn into_members(self) -> BitSet {
        self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper(&self) -> bool {
        !self.members.is_full()
    }
}

impl FiniteRing {
    /// Checks the ideal axioms on an arbitrary subset.
    pub fn check_ideal(&self, set: &BitSet) -> Result<(), IdealViolation> {
        if set.universe() != self.len() {
            return Err(IdealViolation::WrongUniverse);
        }
        if !set.contains(self.zero()) {
            return Err(IdealViolation::MissingZero);
        }
        for a in set {
            for b in set {
                if !set.contains(self.add(a, b)) {
                    return Err(IdealViolation::NotAdditive { a, b });
                }
            }
            for r in 0..self.len() {
                if !set.contains(self.mul(r, a)) {
                    return Err(IdealViolation::NotAbsorbing { r, a });
                }
            }
        }
        Ok(())
    }

    /// Wraps a subset as an ideal after checking the axioms.
    pub fn ideal(&self, set: BitSet) -> Result<Ideal, IdealViolation> {
        self.check_ideal(&set)?;
        Ok(Ideal { carrier: self.id(), members: set })
    }

    pub(crate) fn ideal_unchecked(&self, members: BitSet) -> Ideal {
        debug_assert_eq!(self.check_ideal(&members), Ok(()));
        Ideal { carrier: self.id(), members }
    }

    /// Smallest ideal containing `gens`.
    ///
    /// The ideal generated by `G` is the additive subgroup generated by the
    /// products `r*g`; in a finite group that is the set of finite sums, which
    /// a breadth-first walk from `0` reaches.
    pub fn ideal_generated<I: IntoIterator<Item = usize>>(&self, gens: I) -> Ideal {
        let n = self.len();
        let mut products = BitSet::empty(n);
        for g in gens {
            for r in 0..n {
                products.insert(self.mul(r, g));
            }
        }
        let steps = products.to_vec();
        let mut members = BitSet::singleton(n, self.zero());
        let mut frontier = alloc::vec![self.zero()];
        while let Some(m) = frontier.pop() {
            for &h in &steps {
                let s = self.add(m, h);
                if members.insert(s) {
                    frontier.push(s);
                }
            }
        }
        self.ideal_unchecked(members)
    }

    pub fn principal_ideal(&self, x: usize) -> Ideal {
        self.ideal_generated([x])
    }

    pub fn zero_ideal(&self) -> Ideal {
        self.ideal_unchecked(BitSet::singleton(self.len(), self.zero()))
    }

    pub fn unit_ideal(&self) -> Ideal {
        self.ideal_unchecked(self.full_set())
    }

    /// `I + J`.
    pub fn ideal_sum(&self, a: &Ideal, b: &Ideal) -> Ideal {
        let mut members = BitSet::empty(self.len());
        for x in a.members() {
            for y in b.members() {
                members.insert(self.add(x, y));
            }
        }
        self.ideal_unchecked(members)
    }

    /// All ideals, each once, in canonical order.
    ///
    /// Every ideal of a finite ring is a finite sum of principal ideals, so
    /// closing the zero ideal under `I -> I + (x)` reaches all of them.
    pub fn enumerate_ideals(&self) -> Vec<Ideal> {
        let principals: BTreeSet<Ideal> = (0..self.len()).map(|x| self.principal_ideal(x)).collect();
        let mut seen: BTreeSet<Ideal> = BTreeSet::new();
        let mut queue = alloc::vec![self.zero_ideal()];
        seen.insert(self.zero_ideal());
        while let Some(current) = queue.pop() {
            for p in principals.iter().filter(|p| !p.is_subset(&current)) {
                let next = self.ideal_sum(&current, p);
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `{x : x^k in I for some 1 <= k <= |R|}`.
    pub fn radical(&self, ideal: &Ideal) -> Ideal {
        assert_eq!(ideal.carrier(), self.id(), "ideal from a different ring");
        let n = self.len();
        let members = BitSet::from_indices(
            n,
            (0..n).filter(|&x| {
                let mut p = x;
                for _ in 0..n {
                    if ideal.contains(p) {
                        return true;
                    }
                    p = self.mul(p, x);
                }
                false
            }),
        );
        self.ideal_unchecked(members)
    }

    pub fn nilradical(&self) -> Ideal {
        self.radical(&self.zero_ideal())
    }

    /// `I` is prime iff it is proper and `ab in I` forces `a in I` or `b in I`.
    pub fn is_prime_ideal(&self, ideal: &Ideal) -> bool {
        if !ideal.is_proper() {
            return false;
        }
        let outside = ideal.members().complement();
        outside.iter().all(|a| outside.iter().all(|b| !ideal.contains(self.mul(a, b))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn members(i: &Ideal) -> Vec<usize> {
        i.members().to_vec()
    }

    #[test]
    fn generated_ideals_in_z12() {
        let r = FiniteRing::zmod(12).unwrap();
        assert_eq!(members(&r.ideal_generated([4])), vec![0, 4, 8]);
        assert_eq!(members(&r.ideal_generated([4, 6])), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(r.ideal_generated([1]), r.unit_ideal());
        assert_eq!(r.ideal_generated([]), r.zero_ideal());
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(FiniteRing::zmod(12).unwrap().enumerate_ideals().len(), 6);
        assert_eq!(FiniteRing::zmod(2).unwrap().enumerate_ideals().len(), 2);
        let f2 = FiniteRing::zmod(2).unwrap();
        let v4 = FiniteRing::product(&[f2.clone(), f2]).unwrap();
        assert_eq!(v4.enumerate_ideals().len(), 4);
    }

    #[test]
    fn radicals() {
        let r = FiniteRing::zmod(12).unwrap();
        let rad = r.radical(&r.principal_ideal(4));
        assert_eq!(members(&rad), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(r.radical(&r.unit_ideal()), r.unit_ideal());
        let z6 = FiniteRing::zmod(6).unwrap();
        assert_eq!(z6.nilradical(), z6.zero_ideal());
    }

    #[test]
    fn invariant_suite_reports_first_failure() {
        let r = FiniteRing::zmod(6).unwrap();
        assert_eq!(r.check_ideal(&BitSet::from_indices(6, [2])), Err(IdealViolation::MissingZero));
        assert_eq!(r.check_ideal(&BitSet::from_indices(6, [0, 2, 3])), Err(IdealViolation::NotAdditive { a: 2, b: 2 }));
        assert!(r.ideal(BitSet::from_indices(6, [0, 3])).is_ok());
    }

    #[test]
    fn primality() {
        let r = FiniteRing::zmod(4).unwrap();
        assert!(!r.is_prime_ideal(&r.zero_ideal()));
        assert!(r.is_prime_ideal(&r.principal_ideal(2)));
        assert!(!r.is_prime_ideal(&r.unit_ideal()));
    }
}
