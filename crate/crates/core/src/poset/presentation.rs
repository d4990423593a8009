use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::FinitePoset;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Largest space on which the sobriety axiom is also checked by enumerating
/// every closed set.
pub const SOBRIETY_ORACLE_LIMIT: usize = 12;

/// A finite set of points and a family of subsets declared open; the
/// topology is the one they generate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyPresentation {
    points: usize,
    basis: Vec<BitSet>,
}

/// Outcome of checking the four spectral-space axioms on a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SpectralReport {
    pub t0: bool,
    pub quasi_compact: bool,
    pub basis_intersection_closed: bool,
    pub sober: bool,
    /// Result of the closed-set enumeration, on spaces small enough for it.
    pub sober_oracle: Option<bool>,
    /// Two topologically indistinguishable points.
    pub t0_witness: Option<(usize, usize)>,
    /// A point no basic open covers.
    pub cover_witness: Option<usize>,
    /// Two basic opens whose intersection is not basic.
    pub basis_witness: Option<(usize, usize)>,
    /// An irreducible closed set without a unique generic point.
    pub sober_witness: Option<Vec<usize>>,
}

impl SpectralReport {
    pub fn is_spectral(&self) -> bool {
        self.t0
            && self.quasi_compact
            && self.basis_intersection_closed
            && self.sober
            && self.sober_oracle != Some(false)
    }
}

impl TopologyPresentation {
    pub fn new(points: usize, basis: Vec<BitSet>) -> Result<Self> {
        if basis.iter().any(|b| b.universe() != points) {
            return Err(Error::InvalidParameter("basic open over a different point set".into()));
        }
        Ok(TopologyPresentation { points, basis })
    }

    /// The Alexandrov topology of a poset, presented by all of its opens.
    pub fn alexandrov(poset: &FinitePoset) -> Self {
        TopologyPresentation { points: poset.len(), basis: poset.down_sets() }
    }

    pub fn len(&self) -> usize {
        self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points == 0
    }

    pub fn basis(&self) -> &[BitSet] {
        &self.basis
    }

    /// Smallest open neighbourhood of `x`.
    pub fn minimal_open(&self, x: usize) -> BitSet {
        let mut out = BitSet::full(self.points);
        for b in self.basis.iter().filter(|b| b.contains(x)) {
            out.intersect_with(b);
        }
        out
    }

    pub fn minimal_opens(&self) -> Vec<BitSet> {
        (0..self.points).map(|x| self.minimal_open(x)).collect()
    }

    pub fn is_open(&self, set: &BitSet) -> bool {
        let mins = self.minimal_opens();
        set.iter().all(|x| mins[x].is_subset(set))
    }

    pub fn closure(&self, set: &BitSet) -> BitSet {
        let mins = self.minimal_opens();
        BitSet::from_indices(self.points, (0..self.points).filter(|&x| !mins[x].is_disjoint(set)))
    }

    /// `x <= y` iff `y` is in the closure of `{x}` iff `x` lies in every open
    /// containing `y`. Fails with the first indistinguishable pair when the
    /// space is not T0.
    pub fn specialization_order(&self) -> Result<FinitePoset> {
        let mins = self.minimal_opens();
        FinitePoset::from_leq_fn(self.points, |x, y| mins[y].contains(x))
    }

    /// Checks T0, quasi-compactness, intersection-closure of the presented
    /// basis, and sobriety.
    ///
    /// Quasi-compactness of a finite space reduces to the basic opens covering
    /// it. Irreducible closed sets of a finite space are the point closures,
    /// so sobriety is decided by counting the generic points of each `cl{x}`;
    /// up to [`SOBRIETY_ORACLE_LIMIT`] points the closed sets are also
    /// enumerated and tested for irreducibility directly.
    pub fn verify_spectral(&self) -> SpectralReport {
        let n = self.points;
        let mins = self.minimal_opens();
        // cl{x} = {y : x in O(y)}
        let closures: Vec<BitSet> =
            (0..n).map(|x| BitSet::from_indices(n, (0..n).filter(|&y| mins[y].contains(x)))).collect();

        let t0_witness = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).find(|&(x, y)| mins[x] == mins[y]);

        let mut covered = BitSet::empty(n);
        for b in &self.basis {
            covered.union_with(b);
        }
        let cover_witness = covered.complement().first();

        let members: BTreeSet<&BitSet> = self.basis.iter().collect();
        let mut basis_witness = None;
        'outer: for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                if !members.contains(&self.basis[i].intersection(&self.basis[j])) {
                    basis_witness = Some((i, j));
                    break 'outer;
                }
            }
        }

        let mut sober_witness = None;
        for x in 0..n {
            let generic = (0..n).filter(|&y| closures[y] == closures[x]).count();
            if generic != 1 {
                sober_witness = Some(closures[x].to_vec());
                break;
            }
        }

        let sober_oracle = (n <= SOBRIETY_ORACLE_LIMIT).then(|| sober_by_enumeration(n, &closures));

        SpectralReport {
            t0: t0_witness.is_none(),
            quasi_compact: cover_witness.is_none(),
            basis_intersection_closed: basis_witness.is_none(),
            sober: sober_witness.is_none(),
            sober_oracle,
            t0_witness,
            cover_witness,
            basis_witness,
            sober_witness,
        }
    }
}

/// Every irreducible closed set has exactly one generic point, decided by
/// listing all closed sets and testing each for a decomposition into two
/// proper closed subsets.
fn sober_by_enumeration(n: usize, closures: &[BitSet]) -> bool {
    let cl: Vec<u64> = closures.iter().map(|c| c.to_mask().expect("small space")).collect();
    let closure_of = |mask: u64| -> u64 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= cl[x];
        }
        out
    };
    let closed: Vec<u64> = (0..1u64 << n).filter(|&s| closure_of(s) == s).collect();
    for &c in closed.iter().filter(|&&c| c != 0) {
        // C = A ∪ B with A, B proper closed iff some proper closed A has
        // cl(C \ A) proper.
        let reducible = closed.iter().any(|&a| a & !c == 0 && a != c && closure_of(c & !a) != c);
        if reducible {
            continue;
        }
        let generic = (0..n).filter(|&x| cl[x] == c).count();
        if generic != 1 {
            return false;
        }
    }
    true
}
