use alloc::format;
use alloc::vec::Vec;

use super::{CarrierId, FiniteRing, Ideal};
use crate::bitset::BitSet;
use crate::check::{ensure, CheckResult, Violation};
use crate::poset::FinitePoset;

/// `Spec(R)`: the prime ideals in canonical order, with the specialization
/// order `P <= Q` iff `P` is contained in `Q`.
#[derive(Debug, Clone)]
pub struct Spectrum {
    carrier: CarrierId,
    ring_len: usize,
    primes: Vec<Ideal>,
    order: FinitePoset,
}

impl FiniteRing {
    pub fn spectrum(&self) -> Spectrum {
        let primes: Vec<Ideal> = self.enumerate_ideals().into_iter().filter(|i| self.is_prime_ideal(i)).collect();
        let order = FinitePoset::from_leq_fn(primes.len(), |a, b| primes[a].is_subset(&primes[b]))
            .expect("inclusion among distinct sets is a partial order");
        Spectrum { carrier: self.id(), ring_len: self.len(), primes, order }
    }
}

impl Spectrum {
    pub fn carrier(&self) -> CarrierId {
        self.carrier
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn primes(&self) -> &[Ideal] {
        &self.primes
    }

    pub fn prime(&self, i: usize) -> &Ideal {
        &self.primes[i]
    }

    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    pub fn index_of(&self, set: &BitSet) -> Option<usize> {
        self.primes.binary_search_by(|p| p.members().cmp(set)).ok()
    }

    pub fn all(&self) -> BitSet {
        BitSet::full(self.len())
    }

    /// `D(x)`: primes not containing `x`.
    pub fn basic_open(&self, x: usize) -> BitSet {
        BitSet::from_indices(self.len(), (0..self.len()).filter(|&i| !self.primes[i].contains(x)))
    }

    /// `V(J)`: primes containing `J`.
    pub fn zero_locus(&self, j: &BitSet) -> BitSet {
        BitSet::from_indices(self.len(), (0..self.len()).filter(|&i| j.is_subset(self.primes[i].members())))
    }

    /// `D(J) = Spec(R) \ V(J)`.
    pub fn open_of(&self, j: &BitSet) -> BitSet {
        self.zero_locus(j).complement()
    }

    /// Union of the primes indexed by `points`, as a subset of the ring.
    pub fn union_of(&self, points: &BitSet) -> BitSet {
        let mut out = BitSet::empty(self.ring_len);
        for i in points {
            out.union_with(self.primes[i].members());
        }
        out
    }

    /// Primes contained in `set`.
    pub fn primes_inside(&self, set: &BitSet) -> BitSet {
        BitSet::from_indices(self.len(), (0..self.len()).filter(|&i| self.primes[i].members().is_subset(set)))
    }

    /// Intersection of the primes containing `ideal` (the whole ring when
    /// there are none). Independent second route to the radical.
    pub fn radical_by_primes(&self, ideal: &Ideal) -> BitSet {
        let mut out = BitSet::full(self.ring_len);
        for p in &self.primes {
            if ideal.is_subset(p) {
                out.intersect_with(p.members());
            }
        }
        out
    }

    /// The spectrum of a finite (hence zero-dimensional) ring has no strict
    /// inclusions between primes.
    pub fn check_antichain(&self) -> CheckResult {
        for a in 0..self.len() {
            for b in 0..self.len() {
                ensure(a == b || !self.order.leq(a, b), || {
                    Violation::new("spec_antichain", format!("prime {a} is strictly inside prime {b}"))
                        .with_witness(self.primes[a].members().iter())
                        .with_witness(self.primes[b].members().iter())
                })?;
            }
        }
        Ok(())
    }

    /// Both routes to the radical agree on every ideal of the ring.
    pub fn check_radicals(&self, ring: &FiniteRing) -> CheckResult {
        for ideal in ring.enumerate_ideals() {
            let rad = ring.radical(&ideal);
            ensure(rad.members() == &self.radical_by_primes(&ideal), || {
                Violation::new("radical_two_routes", "power radical differs from intersection of primes")
                    .with_witness(ideal.members().iter())
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn prime_sets(r: &FiniteRing) -> Vec<Vec<usize>> {
        r.spectrum().primes().iter().map(|p| p.members().to_vec()).collect()
    }

    #[test]
    fn spec_z6() {
        let r = FiniteRing::zmod(6).unwrap();
        assert_eq!(prime_sets(&r), vec![vec![0, 3], vec![0, 2, 4]]);
        assert!(r.spectrum().order().is_antichain());
    }

    #[test]
    fn spec_of_field_and_local_ring() {
        assert_eq!(prime_sets(&FiniteRing::zmod(2).unwrap()), vec![vec![0]]);
        assert_eq!(prime_sets(&FiniteRing::zmod(4).unwrap()), vec![vec![0, 2]]);
    }

    #[test]
    fn product_spectrum_adds_up() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let z2 = FiniteRing::zmod(2).unwrap();
        assert_eq!(FiniteRing::product(&[z4, z2]).unwrap().spectrum().len(), 2);
    }

    #[test]
    fn radicals_agree() {
        for n in [8, 12, 18, 30, 36] {
            let r = FiniteRing::zmod(n).unwrap();
            r.spectrum().check_radicals(&r).unwrap();
        }
    }

    #[test]
    fn basic_opens_z6() {
        let r = FiniteRing::zmod(6).unwrap();
        let s = r.spectrum();
        // primes: 0 = (3), 1 = (2)
        assert_eq!(s.basic_open(2).to_vec(), vec![0]);
        assert_eq!(s.basic_open(3).to_vec(), vec![1]);
        assert_eq!(s.basic_open(1), s.all());
        assert!(s.basic_open(0).is_empty());
    }
}
