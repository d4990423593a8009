use alloc::vec::Vec;

use super::{FinitePoset, XSpace};
use crate::bitset::BitSet;
use crate::check::{ensure, CheckResult, Violation};
use crate::error::{Error, Result};

/// An order-preserving map between finite posets, i.e. a spectral map
/// between the corresponding finite spectral spaces.
#[derive(Debug, Clone)]
pub struct MonotoneMap<'a> {
    source: &'a FinitePoset,
    target: &'a FinitePoset,
    map: Vec<usize>,
}

impl<'a> MonotoneMap<'a> {
    pub fn new(source: &'a FinitePoset, target: &'a FinitePoset, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&y| y >= target.len()) {
            return Err(Error::InvalidParameter("map does not fit the two posets".into()));
        }
        for x in 0..source.len() {
            for y in source.above(x).iter() {
                if !target.leq(map[x], map[y]) {
                    return Err(Error::NotSpectral { x, y });
                }
            }
        }
        Ok(MonotoneMap { source, target, map })
    }

    pub fn identity(poset: &'a FinitePoset) -> Self {
        MonotoneMap { source: poset, target: poset, map: (0..poset.len()).collect() }
    }

    pub fn source(&self) -> &'a FinitePoset {
        self.source
    }

    pub fn target(&self) -> &'a FinitePoset {
        self.target
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image(&self, set: &BitSet) -> BitSet {
        BitSet::from_indices(self.target.len(), set.iter().map(|x| self.map[x]))
    }

    pub fn preimage(&self, set: &BitSet) -> BitSet {
        BitSet::from_indices(self.source.len(), (0..self.source.len()).filter(|&x| set.contains(self.map[x])))
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &MonotoneMap<'a>) -> Result<MonotoneMap<'a>> {
        if self.target != then.source {
            return Err(Error::InvalidParameter("maps are not composable".into()));
        }
        let map = self.map.iter().map(|&y| then.map[y]).collect();
        Ok(MonotoneMap { source: self.source, target: then.target, map })
    }

    /// The induced map on down-sets, `C -> f(C)^gen`.
    pub fn on_down_set(&self, set: &BitSet) -> BitSet {
        self.target.down_closure(&self.image(set))
    }

    /// `X(f)` as an index map between the two `X` spaces.
    pub fn on_xspace(&self, source_x: &XSpace, target_x: &XSpace) -> Vec<usize> {
        source_x
            .points()
            .iter()
            .map(|c| target_x.index_of(&self.on_down_set(c)).expect("image of a nonempty down-set is a point of X"))
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = BitSet::empty(self.target.len());
        self.map.iter().all(|&y| seen.insert(y))
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&self.source.all()).is_full()
    }

    /// `x <= y` iff `f(x) <= f(y)`: a topological embedding of finite T0
    /// spaces.
    pub fn is_order_embedding(&self) -> bool {
        (0..self.source.len())
            .all(|x| (0..self.source.len()).all(|y| self.source.leq(x, y) == self.target.leq(self.map[x], self.map[y])))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_order_embedding() && self.is_surjective()
    }
}

/// `X(g ∘ f) = X(g) ∘ X(f)` on every point of `X(source)`.
pub fn check_x_functorial(f: &MonotoneMap<'_>, g: &MonotoneMap<'_>, xs: [&XSpace; 3]) -> CheckResult {
    let gf = f.then(g).map_err(|e| Violation::new("x_functor", alloc::format!("{e}")))?;
    let (xf, xg, xgf) = (f.on_xspace(xs[0], xs[1]), g.on_xspace(xs[1], xs[2]), gf.on_xspace(xs[0], xs[2]));
    for (c, &direct) in xgf.iter().enumerate() {
        ensure(direct == xg[xf[c]], || {
            Violation::new("x_functor", "X(g∘f) differs from X(g)∘X(f)").with_witness(xs[0].point(c).iter())
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_acts_trivially_on_down_sets() {
        let p = FinitePoset::from_relation(3, &[(0, 2), (1, 2)]).unwrap();
        let id = MonotoneMap::identity(&p);
        for d in p.down_sets() {
            assert_eq!(id.on_down_set(&d), d);
        }
    }

    #[test]
    fn constant_map_to_a_point() {
        let p = FinitePoset::chain(3);
        let pt = FinitePoset::antichain(1);
        let f = MonotoneMap::new(&p, &pt, vec![0; 3]).unwrap();
        for d in p.down_sets().into_iter().filter(|d| !d.is_empty()) {
            assert_eq!(f.on_down_set(&d), BitSet::full(1));
        }
    }

    #[test]
    fn chain_onto_antichain_is_not_spectral() {
        let (c, a) = (FinitePoset::chain(2), FinitePoset::antichain(2));
        assert_eq!(MonotoneMap::new(&c, &a, vec![0, 1]).unwrap_err(), Error::NotSpectral { x: 0, y: 1 });
        // the other direction is fine
        assert!(MonotoneMap::new(&a, &c, vec![0, 1]).is_ok());
    }

    #[test]
    fn functoriality_on_small_maps() {
        let a = FinitePoset::antichain(2);
        let c = FinitePoset::chain(2);
        let pt = FinitePoset::antichain(1);
        let f = MonotoneMap::new(&a, &c, vec![0, 1]).unwrap();
        let g = MonotoneMap::new(&c, &pt, vec![0, 0]).unwrap();
        let xs = [XSpace::new(&a), XSpace::new(&c), XSpace::new(&pt)];
        check_x_functorial(&f, &g, [&xs[0], &xs[1], &xs[2]]).unwrap();
    }
}
