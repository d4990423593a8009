use alloc::collections::BTreeSet;

use super::SPrimeSpace;
use crate::bitset::BitSet;

/// How `i(Spec(R))` sits inside `S(R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    /// The closure of `i(Spec(R))` is all of `S(R)`.
    pub dense: bool,
    /// Distinct opens of `S(R)` have distinct traces on `i(Spec(R))`.
    pub very_dense: bool,
    pub spec_closure: BitSet,
    /// Two distinct opens with the same trace.
    pub witness: Option<(BitSet, BitSet)>,
}

impl SPrimeSpace<'_> {
    /// In a finite T0 space the opens `O(q)` and `O(q) \ {q}` differ only at
    /// `q`, so a subset is very dense iff it contains every point; the
    /// witness is that pair for the first point outside `i(Spec(R))`.
    pub fn density_report(&self) -> DensityReport {
        let image = self.spec_image();
        let spec_closure = self.presentation().closure(&image);
        let witness = image.complement().first().map(|q| {
            let open = self.order().below(q).clone();
            let mut smaller = open.clone();
            smaller.remove(q);
            (smaller, open)
        });
        DensityReport { dense: spec_closure.is_full(), very_dense: witness.is_none(), spec_closure, witness }
    }

    /// Very density decided by listing every open of `S(R)` and comparing
    /// traces.
    pub fn very_dense_by_enumeration(&self) -> bool {
        let image = self.spec_image();
        let mut traces = BTreeSet::new();
        self.order().down_sets().into_iter().all(|open| traces.insert(open.intersection(&image)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;
    use alloc::vec;

    #[test]
    fn z6_is_dense_but_not_very_dense() {
        let r = FiniteRing::zmod(6).unwrap();
        let s = SPrimeSpace::new(&r);
        let d = s.density_report();
        assert!(d.dense);
        assert!(!d.very_dense);
        assert!(!s.very_dense_by_enumeration());
        let (a, b) = d.witness.unwrap();
        let top = s.index_of(&BitSet::from_indices(6, [0, 2, 3, 4])).unwrap();
        assert!(b.is_full());
        assert_eq!(a.to_vec(), (0..3).filter(|&i| i != top).collect::<vec::Vec<_>>());
        assert!(s.presentation().is_open(&a) && a.intersection(&s.spec_image()) == b.intersection(&s.spec_image()));
    }

    #[test]
    fn field_is_very_dense() {
        let r = FiniteRing::zmod(7).unwrap();
        let s = SPrimeSpace::new(&r);
        let d = s.density_report();
        assert!(d.dense && d.very_dense && d.witness.is_none());
        assert!(s.very_dense_by_enumeration());
    }
}
