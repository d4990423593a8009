use alloc::format;
use alloc::vec::Vec;

use super::{FinitePoset, TopologyPresentation};
use crate::bitset::BitSet;
use crate::check::{ensure, CheckResult, Violation};

/// `X(X)`: the nonempty inverse-closed subsets of a finite spectral space.
///
/// On a finite space these are the nonempty down-sets. The topology is
/// presented by the sets `U(Ω) = {Y : Y ⊆ Ω}` for `Ω` ranging over the opens
/// of `X`, the empty open included.
#[derive(Debug, Clone)]
pub struct XSpace {
    base_len: usize,
    opens: Vec<BitSet>,
    points: Vec<BitSet>,
    order: FinitePoset,
    presentation: TopologyPresentation,
}

impl XSpace {
    pub fn new(base: &FinitePoset) -> Self {
        let opens = base.down_sets();
        let points: Vec<BitSet> = opens.iter().filter(|d| !d.is_empty()).cloned().collect();
        let order = FinitePoset::from_leq_fn(points.len(), |a, b| points[a].is_subset(&points[b]))
            .expect("inclusion is a partial order");
        let basis = opens
            .iter()
            .map(|omega| BitSet::from_indices(points.len(), (0..points.len()).filter(|&y| points[y].is_subset(omega))))
            .collect();
        let presentation = TopologyPresentation::new(points.len(), basis).expect("basis built over the points");
        XSpace { base_len: base.len(), opens, points, order, presentation }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn base_len(&self) -> usize {
        self.base_len
    }

    pub fn points(&self) -> &[BitSet] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &BitSet {
        &self.points[i]
    }

    /// Opens of the base space, in the same order as the presentation basis.
    pub fn base_opens(&self) -> &[BitSet] {
        &self.opens
    }

    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    pub fn presentation(&self) -> &TopologyPresentation {
        &self.presentation
    }

    pub fn index_of(&self, set: &BitSet) -> Option<usize> {
        self.points.binary_search(set).ok()
    }

    /// `U(Ω)` for an arbitrary subset `Ω` of the base space.
    pub fn basic_open(&self, omega: &BitSet) -> BitSet {
        BitSet::from_indices(self.len(), (0..self.len()).filter(|&y| self.points[y].is_subset(omega)))
    }

    /// `phi(x) = {x}^gen` as a point index.
    pub fn phi(&self, base: &FinitePoset, x: usize) -> usize {
        self.index_of(base.below(x)).expect("principal down-sets are points of X")
    }

    /// Inclusion coincides with the specialization order of the presented
    /// topology.
    pub fn check_order(&self) -> CheckResult {
        let spec = self
            .presentation
            .specialization_order()
            .map_err(|e| Violation::new("xspace_order", format!("presentation is not T0: {e}")))?;
        for a in 0..self.len() {
            for b in 0..self.len() {
                ensure(spec.leq(a, b) == self.order.leq(a, b), || {
                    Violation::new("xspace_order", "specialization order differs from inclusion")
                        .with_witness(self.points[a].iter())
                        .with_witness(self.points[b].iter())
                })?;
            }
        }
        Ok(())
    }

    /// `phi` is injective, an order embedding, and pulls each `U(Ω)` back to `Ω`.
    pub fn check_phi(&self, base: &FinitePoset) -> CheckResult {
        let images: Vec<usize> = (0..base.len()).map(|x| self.phi(base, x)).collect();
        for x in 0..base.len() {
            for y in 0..base.len() {
                ensure(x == y || images[x] != images[y], || {
                    Violation::new("phi_injective", format!("phi({x}) = phi({y})"))
                })?;
                ensure(base.leq(x, y) == self.order.leq(images[x], images[y]), || {
                    Violation::new("phi_order_embedding", format!("order between {x} and {y} not preserved"))
                })?;
            }
        }
        for (omega, basic) in self.opens.iter().zip(self.presentation.basis()) {
            let pulled = BitSet::from_indices(base.len(), (0..base.len()).filter(|&x| basic.contains(images[x])));
            ensure(&pulled == omega, || {
                Violation::new("phi_preimage", "phi^-1(U(Ω)) != Ω").with_witness(omega.iter())
            })?;
        }
        Ok(())
    }
}
