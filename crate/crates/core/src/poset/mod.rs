//! Finite spectral spaces as finite posets.
//!
//! A finite T0 space is the same thing as a finite poset: the order is
//! `x <= y` iff `y` is in the closure of `{x}`, the open sets are the
//! down-sets (sets closed under generization) and the closed sets are the
//! up-sets. Every finite T0 space is spectral.

mod monotone;
mod presentation;
mod xspace;

use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub use monotone::{check_x_functorial, MonotoneMap};
pub use presentation::{SpectralReport, TopologyPresentation};
pub use xspace::XSpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    /// `below[x] = {y : y <= x}`, the generization closure of `x`.
    below: Vec<BitSet>,
    /// `above[x] = {y : x <= y}`, the closure of `{x}`.
    above: Vec<BitSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ClosureMode {
    /// Closure in the given topology: the up-closure.
    Specialization,
    /// Closure under generizations: the down-closure.
    Generization,
    /// Closure in the inverse topology.
    Inverse,
    /// Closure in the constructible (patch) topology.
    Constructible,
}

impl ClosureMode {
    pub const ALL: [ClosureMode; 4] =
        [ClosureMode::Specialization, ClosureMode::Generization, ClosureMode::Inverse, ClosureMode::Constructible];
}

impl FinitePoset {
    /// Reflexive-transitive closure of `pairs`, where `(a, b)` means `a <= b`.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut above: Vec<BitSet> = (0..n).map(|i| BitSet::singleton(n, i)).collect();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidParameter(alloc::format!("pair ({a}, {b}) outside {n} points")));
            }
            above[a].insert(b);
        }
        for k in 0..n {
            let via = above[k].clone();
            for row in above.iter_mut() {
                if row.contains(k) {
                    row.union_with(&via);
                }
            }
        }
        for a in 0..n {
            for b in above[a].iter() {
                if a != b && above[b].contains(a) {
                    return Err(Error::NotAPartialOrder { a, b });
                }
            }
        }
        Ok(Self::from_above(above))
    }

    /// Builds the poset from a `leq` predicate, checking the partial-order laws.
    pub fn from_leq_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let above: Vec<BitSet> = (0..n).map(|a| BitSet::from_indices(n, (0..n).filter(|&b| leq(a, b)))).collect();
        for a in 0..n {
            if !above[a].contains(a) {
                return Err(Error::InvalidParameter(alloc::format!("relation is not reflexive at {a}")));
            }
            for b in above[a].iter() {
                if a != b && above[b].contains(a) {
                    return Err(Error::NotAPartialOrder { a, b });
                }
                if !above[b].is_subset(&above[a]) {
                    return Err(Error::InvalidParameter(alloc::format!("relation is not transitive through {b}")));
                }
            }
        }
        Ok(Self::from_above(above))
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_above((0..n).map(|i| BitSet::singleton(n, i)).collect())
    }

    pub fn chain(n: usize) -> Self {
        Self::from_leq_fn(n, |a, b| a <= b).expect("a chain is a partial order")
    }

    fn from_above(above: Vec<BitSet>) -> Self {
        let n = above.len();
        let below = (0..n).map(|b| BitSet::from_indices(n, (0..n).filter(|&a| above[a].contains(b)))).collect();
        FinitePoset { below, above }
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a].contains(b)
    }

    pub fn below(&self, x: usize) -> &BitSet {
        &self.below[x]
    }

    pub fn above(&self, x: usize) -> &BitSet {
        &self.above[x]
    }

    pub fn all(&self) -> BitSet {
        BitSet::full(self.len())
    }

    pub fn is_antichain(&self) -> bool {
        self.above.iter().all(|row| row.count() == 1)
    }

    /// All `(a, b)` with `a <= b`.
    pub fn relation(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|a| self.above[a].iter().map(move |b| (a, b))).collect()
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.above[a].iter().filter(|&b| b != a) {
                let between = self.above[a].intersection(&self.below[b]);
                if between.count() == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn down_closure(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::empty(self.len());
        for x in set {
            out.union_with(&self.below[x]);
        }
        out
    }

    pub fn up_closure(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::empty(self.len());
        for x in set {
            out.union_with(&self.above[x]);
        }
        out
    }

    pub fn is_down_set(&self, set: &BitSet) -> bool {
        set.iter().all(|x| self.below[x].is_subset(set))
    }

    pub fn is_up_set(&self, set: &BitSet) -> bool {
        set.iter().all(|x| self.above[x].is_subset(set))
    }

    /// Points ordered so that `a < b` implies `a` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut pts: Vec<usize> = (0..self.len()).collect();
        pts.sort_by_key(|&x| (self.below[x].count(), x));
        pts
    }

    /// Every down-set (every open set), the empty one included, in canonical
    /// order.
    pub fn down_sets(&self) -> Vec<BitSet> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        let mut current = BitSet::empty(self.len());
        self.extend_down_sets(&order, 0, &mut current, &mut out);
        out.sort();
        out
    }

    fn extend_down_sets(&self, order: &[usize], pos: usize, current: &mut BitSet, out: &mut Vec<BitSet>) {
        let Some(&x) = order.get(pos) else {
            out.push(current.clone());
            return;
        };
        self.extend_down_sets(order, pos + 1, current, out);
        // Everything strictly below x precedes it in `order`, so the check is final.
        let mut strict = self.below[x].clone();
        strict.remove(x);
        if strict.is_subset(current) {
            current.insert(x);
            self.extend_down_sets(order, pos + 1, current, out);
            current.remove(x);
        }
    }

    /// `{x}^gen`, the point's image under the canonical embedding into `X(X)`.
    pub fn phi(&self, x: usize) -> DownSet {
        DownSet(self.below[x].clone())
    }

    /// Closure of `set` in the requested topology.
    ///
    /// The inverse mode enumerates every open set; callers doing many
    /// closures on one poset should go through [`closure_operator`].
    ///
    /// [`closure_operator`]: FinitePoset::closure_operator
    pub fn closure(&self, set: &BitSet, mode: ClosureMode) -> BitSet {
        match mode {
            ClosureMode::Inverse => self.closure_operator().closure(set, mode),
            _ => ClosureOperator { poset: self, opens: Vec::new() }.closure(set, mode),
        }
    }

    pub fn closure_operator(&self) -> ClosureOperator<'_> {
        ClosureOperator { poset: self, opens: self.down_sets() }
    }
}

/// A poset together with its list of open sets.
#[derive(Debug, Clone)]
pub struct ClosureOperator<'a> {
    poset: &'a FinitePoset,
    opens: Vec<BitSet>,
}

impl ClosureOperator<'_> {
    pub fn opens(&self) -> &[BitSet] {
        &self.opens
    }

    pub fn closure(&self, set: &BitSet, mode: ClosureMode) -> BitSet {
        let p = self.poset;
        match mode {
            ClosureMode::Specialization => p.up_closure(set),
            ClosureMode::Generization => p.down_closure(set),
            ClosureMode::Inverse => {
                // Intersection of all (quasi-compact) opens containing the set.
                let mut out = p.all();
                for open in self.opens.iter().filter(|o| set.is_subset(o)) {
                    out.intersect_with(open);
                }
                out
            }
            ClosureMode::Constructible => {
                // Intersection of all U ∪ (X \ V), U and V open, containing the
                // set. The sets of that shape avoiding a point z are exactly
                // those with U inside X \ ↑z and V containing ↓z, so their
                // union (X \ ↑z) ∪ (X \ ↓z) is itself of that shape, and z
                // survives iff this largest z-avoiding member misses the set.
                let n = p.len();
                BitSet::from_indices(
                    n,
                    (0..n).filter(|&z| {
                        let avoid = p.above(z).complement().union(&p.below(z).complement());
                        !set.is_subset(&avoid)
                    }),
                )
            }
        }
    }
}

/// A nonempty generization-closed subset of a finite spectral space: a point
/// of `X(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DownSet(BitSet);

impl DownSet {
    pub fn new(poset: &FinitePoset, set: BitSet) -> Result<Self> {
        if set.universe() != poset.len() {
            return Err(Error::InvalidParameter("subset of a different space".into()));
        }
        if set.is_empty() {
            return Err(Error::InvalidParameter("down-set must be nonempty".into()));
        }
        if !poset.is_down_set(&set) {
            return Err(Error::InvalidParameter("subset is not closed under generizations".into()));
        }
        Ok(DownSet(set))
    }

    pub fn members(&self) -> &BitSet {
        &self.0
    }

    pub fn into_members(self) -> BitSet {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn relation_closure() {
        let p = FinitePoset::from_relation(2, &[]).unwrap();
        assert!(p.is_antichain());
        let c = FinitePoset::from_relation(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(c.leq(0, 2));
        assert_eq!(c.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(
            FinitePoset::from_relation(2, &[(0, 1), (1, 0)]).unwrap_err(),
            Error::NotAPartialOrder { a: 0, b: 1 }
        );
        assert!(matches!(FinitePoset::from_relation(2, &[(0, 5)]), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn closures_on_a_chain() {
        let c = FinitePoset::chain(2);
        let b = BitSet::singleton(2, 1);
        assert_eq!(c.closure(&b, ClosureMode::Generization).to_vec(), vec![0, 1]);
        assert_eq!(c.closure(&b, ClosureMode::Specialization).to_vec(), vec![1]);
        assert_eq!(c.closure(&b, ClosureMode::Inverse).to_vec(), vec![0, 1]);
        assert_eq!(c.closure(&b, ClosureMode::Constructible), b);
        for mode in ClosureMode::ALL {
            assert!(c.closure(&BitSet::empty(2), mode).is_empty());
        }
    }

    #[test]
    fn down_set_counts() {
        assert_eq!(FinitePoset::antichain(3).down_sets().len(), 8);
        assert_eq!(FinitePoset::chain(4).down_sets().len(), 5);
        assert_eq!(FinitePoset::antichain(0).down_sets().len(), 1);
    }

    #[test]
    fn phi_is_down_closure() {
        assert_eq!(FinitePoset::antichain(2).phi(1).members().to_vec(), vec![1]);
        assert_eq!(FinitePoset::chain(2).phi(1).members().to_vec(), vec![0, 1]);
        assert_eq!(FinitePoset::chain(3).phi(1).members().to_vec(), vec![0, 1]);
    }

    #[test]
    fn down_set_validation() {
        let c = FinitePoset::chain(2);
        assert!(DownSet::new(&c, BitSet::singleton(2, 1)).is_err());
        assert!(DownSet::new(&c, BitSet::empty(2)).is_err());
        assert!(DownSet::new(&c, BitSet::singleton(2, 0)).is_ok());
    }
}
