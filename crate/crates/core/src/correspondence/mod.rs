//! The maps `j: S(R) -> X(R)` and `P: X(R) -> S(R)`.
//!
//! `j(Q) = {P ∈ Spec(R) : P ⊆ Q}` and `P(Y) = ∪Y`. `P` is a retraction of
//! `j`, and `j` is onto exactly when the conditions collected in
//! [`SurjectivityReport`] hold.

mod dedekind;
mod diagram;
mod report;

use alloc::format;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::check::{ensure, CheckResult, Violation};
use crate::error::{Error, Result};
use crate::poset::{ClosureMode, DownSet, MonotoneMap, XSpace};
use crate::ring::{FiniteRing, Ideal};
use crate::sprime::{SPrimeSpace, SemigroupPrime};

pub use dedekind::{dedekind_verdict, ClassGroupProfile, DedekindVerdict};
pub use diagram::{diagram_check, DiagramReport};
pub use report::{SurjectivityReport, Witness};

/// `S(R)` and `X(R)` side by side, with `j` precomputed.
#[derive(Debug, Clone)]
pub struct Correspondence<'a> {
    space: SPrimeSpace<'a>,
    xspace: XSpace,
    /// `j` as point indices into `X(R)`.
    j_points: Vec<usize>,
}

/// Both sides of `j(P_1 ∪ ... ∪ P_n) = j(P_1) ∪ ... ∪ j(P_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AvoidanceReport {
    pub j_of_union: BitSet,
    pub union_of_j: BitSet,
    pub holds: bool,
}

/// Monotonicity of `P` along inverse closures, for one pair of inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MonotonePReport {
    pub closures_nested: bool,
    pub images_nested: bool,
    /// `closures_nested` implies `images_nested`.
    pub implication_holds: bool,
    /// `P(Y) = P(inverse closure of Y)` for both inputs.
    pub closure_invariant: bool,
}

impl<'a> Correspondence<'a> {
    pub fn new(ring: &'a FiniteRing) -> Self {
        let space = SPrimeSpace::new(ring);
        let xspace = XSpace::new(space.spectrum().order());
        let j_points = (0..space.len())
            .map(|q| {
                xspace.index_of(&space.spectrum().primes_inside(space.prime(q).members())).expect("j(Q) lies in X(R)")
            })
            .collect();
        Correspondence { space, xspace, j_points }
    }

    pub fn ring(&self) -> &'a FiniteRing {
        self.space.ring()
    }

    pub fn space(&self) -> &SPrimeSpace<'a> {
        &self.space
    }

    pub fn xspace(&self) -> &XSpace {
        &self.xspace
    }

    /// `j` on point indices.
    pub fn j_indices(&self) -> &[usize] {
        &self.j_points
    }

    /// `j(Q)` as a set of spectrum indices.
    pub fn j(&self, q: usize) -> &BitSet {
        self.xspace.point(self.j_points[q])
    }

    pub fn j_map(&self, q: &SemigroupPrime) -> Result<DownSet> {
        let i = self.point_of(q)?;
        DownSet::new(self.space.spectrum().order(), self.j(i).clone())
    }

    fn point_of(&self, q: &SemigroupPrime) -> Result<usize> {
        if q.carrier() != self.ring().id() {
            return Err(Error::InvalidParameter("semigroup prime of a different ring".into()));
        }
        self.space.index_of(q.members()).ok_or_else(|| Error::InvalidParameter("not a semigroup prime".into()))
    }

    fn check_point_of_x(&self, y: &BitSet) -> Result<()> {
        let order = self.space.spectrum().order();
        if y.universe() != order.len() || y.is_empty() || !order.is_down_set(y) {
            return Err(Error::InvalidParameter("not a nonempty inverse-closed subset of Spec(R)".into()));
        }
        Ok(())
    }

    /// `P(Y) = ∪Y` for `Y ∈ X(R)`.
    pub fn p_map(&self, y: &BitSet) -> Result<SemigroupPrime> {
        self.check_point_of_x(y)?;
        let members = self.space.spectrum().union_of(y);
        let i = self.space.index_of(&members).ok_or_else(|| {
            Error::CheckFailed(Violation::new("p_map", "union is not a semigroup prime").with_witness(y.iter()))
        })?;
        Ok(self.space.prime(i).clone())
    }

    /// `∩{D(a) : Y ⊆ D(a)}`, computed from the principal opens alone.
    pub fn jp_closure(&self, y: &BitSet) -> Result<BitSet> {
        self.check_point_of_x(y)?;
        let spec = self.space.spectrum();
        let mut out = spec.all();
        for a in 0..self.ring().len() {
            let d = spec.basic_open(a);
            if y.is_subset(&d) {
                out.intersect_with(&d);
            }
        }
        Ok(out)
    }

    /// `j` as a monotone map of the two specialization posets.
    pub fn j_monotone(&self) -> MonotoneMap<'_> {
        MonotoneMap::new(self.space.order(), self.xspace.order(), self.j_points.clone()).expect("j preserves inclusion")
    }

    /// `j` is injective and an order embedding, and
    /// `j(U(x)) = U(D(x)) ∩ j(S(R))` for every `x`.
    pub fn check_j(&self) -> CheckResult {
        let j = self.j_monotone();
        ensure(j.is_injective(), || Violation::new("j_injective", "two semigroup primes share j"))?;
        ensure(j.is_order_embedding(), || Violation::new("j_order_embedding", "j does not reflect inclusion"))?;
        let image = j.image(&self.space.all());
        for x in 0..self.ring().len() {
            let lhs = j.image(self.space.basic_open(x));
            let rhs = self.xspace.basic_open(&self.space.spectrum().basic_open(x)).intersection(&image);
            ensure(lhs == rhs, || {
                Violation::new("j_basic_opens", format!("j(U({x})) != U(D({x})) ∩ j(S(R))")).with_witness([x])
            })?;
        }
        Ok(())
    }

    /// `j∘i = phi` pointwise on `Spec(R)`.
    pub fn check_j_i_phi(&self) -> CheckResult {
        let spec = self.space.spectrum();
        for (p, &q) in self.space.spec_embedding().iter().enumerate() {
            let phi = spec.order().phi(p);
            ensure(self.j(q) == phi.members(), || {
                Violation::new("j_i_phi", "j(i(P)) differs from phi(P)").with_witness(spec.prime(p).members().iter())
            })?;
            ensure(self.j_points[q] == self.xspace.phi(spec.order(), p), || {
                Violation::new("j_i_phi", "index of j(i(P)) differs from phi(P)").with_witness([p])
            })?;
        }
        Ok(())
    }

    /// `P∘j = id` on `S(R)`.
    pub fn check_p_j(&self) -> CheckResult {
        for q in 0..self.space.len() {
            let back = self.p_map(self.j(q)).map_err(|e| Violation::new("p_j_identity", format!("{e}")))?;
            ensure(back == *self.space.prime(q), || {
                Violation::new("p_j_identity", "P(j(Q)) != Q").with_witness(self.space.prime(q).members().iter())
            })?;
        }
        Ok(())
    }

    /// `P` as point indices of `S(R)`, one per point of `X(R)`.
    fn p_indices(&self) -> Result<Vec<usize>, Violation> {
        (0..self.xspace.len())
            .map(|y| {
                let q = self.p_map(self.xspace.point(y)).map_err(|e| Violation::new("p_map", format!("{e}")))?;
                Ok(self.space.index_of(q.members()).expect("p_map returns points of S(R)"))
            })
            .collect()
    }

    /// `P^{-1}(U(x)) = U(D(x))` for every `x`; with the basis of `S(R)` this
    /// makes `P` continuous, and it is onto since `P∘j = id`.
    pub fn check_p_preimage(&self) -> CheckResult {
        let p = self.p_indices()?;
        for x in 0..self.ring().len() {
            let pre = BitSet::from_indices(
                self.xspace.len(),
                (0..self.xspace.len()).filter(|&y| self.space.basic_open(x).contains(p[y])),
            );
            let expected = self.xspace.basic_open(&self.space.spectrum().basic_open(x));
            ensure(pre == expected, || {
                Violation::new("p_preimage", format!("P^-1(U({x})) != U(D({x}))")).with_witness([x])
            })?;
        }
        Ok(())
    }

    /// `j(P(Y))` equals the principal-open intersection and contains `Y`,
    /// for every `Y ∈ X(R)`.
    pub fn check_jp_closure(&self) -> CheckResult {
        let p = self.p_indices()?;
        for (set, &py) in self.xspace.points().iter().zip(&p) {
            let closure = self.jp_closure(set).map_err(|e| Violation::new("jp_closure", format!("{e}")))?;
            let jp = self.j(py);
            ensure(&closure == jp, || {
                Violation::new("jp_closure", "j(P(Y)) differs from ∩{D(a) : Y ⊆ D(a)}").with_witness(set.iter())
            })?;
            ensure(set.is_subset(jp), || {
                Violation::new("jp_closure", "Y is not inside j(P(Y))").with_witness(set.iter())
            })?;
        }
        Ok(())
    }

    /// Every identity between `i`, `j`, `P` and `phi`.
    pub fn check_all(&self) -> CheckResult {
        self.check_j()?;
        self.check_j_i_phi()?;
        self.check_p_j()?;
        self.check_p_preimage()?;
        self.check_jp_closure()
    }

    /// `j(P_1 ∪ ... ∪ P_n)` against `j(P_1) ∪ ... ∪ j(P_n)`.
    pub fn prime_avoidance_j(&self, primes: &[Ideal]) -> Result<AvoidanceReport> {
        let spec = self.space.spectrum();
        if primes.is_empty() {
            return Err(Error::InvalidParameter("empty list of primes".into()));
        }
        let mut points = BitSet::empty(spec.len());
        for p in primes {
            if p.carrier() != self.ring().id() {
                return Err(Error::InvalidParameter("ideal of a different ring".into()));
            }
            let i = spec
                .index_of(p.members())
                .ok_or_else(|| Error::InvalidParameter(format!("{:?} is not a prime ideal", p.members())))?;
            points.insert(i);
        }
        let union = spec.union_of(&points);
        let q = self.space.index_of(&union).expect("a union of primes is a semigroup prime");
        let j_of_union = self.j(q).clone();
        let mut union_of_j = BitSet::empty(spec.len());
        for i in &points {
            union_of_j.union_with(self.j(self.space.spec_embedding()[i]));
        }
        Ok(AvoidanceReport { holds: j_of_union == union_of_j, j_of_union, union_of_j })
    }

    /// If the inverse closure of `Y1` lies in that of `Y2` then
    /// `P(Y1) ⊆ P(Y2)`, where `P` is extended to arbitrary nonempty subsets by
    /// taking unions; also `P(Y) = P(inverse closure of Y)`.
    pub fn monotone_p_check(&self, y1: &BitSet, y2: &BitSet) -> Result<MonotonePReport> {
        let spec = self.space.spectrum();
        for y in [y1, y2] {
            if y.universe() != spec.len() || y.is_empty() {
                return Err(Error::InvalidParameter("expected a nonempty subset of Spec(R)".into()));
            }
        }
        let ops = spec.order().closure_operator();
        let (c1, c2) = (ops.closure(y1, ClosureMode::Inverse), ops.closure(y2, ClosureMode::Inverse));
        let (p1, p2) = (spec.union_of(y1), spec.union_of(y2));
        let closures_nested = c1.is_subset(&c2);
        let images_nested = p1.is_subset(&p2);
        let closure_invariant = p1 == spec.union_of(&c1) && p2 == spec.union_of(&c2);
        Ok(MonotonePReport {
            closures_nested,
            images_nested,
            implication_holds: !closures_nested || images_nested,
            closure_invariant,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn spec_set(c: &Correspondence<'_>, primes: &[&[usize]]) -> BitSet {
        let spec = c.space().spectrum();
        let n = c.ring().len();
        BitSet::from_indices(
            spec.len(),
            primes.iter().map(|p| spec.index_of(&BitSet::from_indices(n, p.iter().copied())).unwrap()),
        )
    }

    #[test]
    fn z6_j_and_p() {
        let r = FiniteRing::zmod(6).unwrap();
        let c = Correspondence::new(&r);
        let top = c.space().index_of(&BitSet::from_indices(6, [0, 2, 3, 4])).unwrap();
        let both = spec_set(&c, &[&[0, 2, 4], &[0, 3]]);
        assert_eq!(c.j_map(c.space().prime(top)).unwrap().members(), &both);
        assert_eq!(c.p_map(&both).unwrap().members().to_vec(), vec![0, 2, 3, 4]);
        let single = spec_set(&c, &[&[0, 3]]);
        assert_eq!(c.p_map(&single).unwrap().members().to_vec(), vec![0, 3]);
        c.check_all().unwrap();
    }

    #[test]
    fn z30_examples() {
        let r = FiniteRing::zmod(30).unwrap();
        let c = Correspondence::new(&r);
        let multiples = |d: usize| (0..30).filter(move |x| x % d == 0).collect::<Vec<_>>();
        let (m2, m3, m5) = (multiples(2), multiples(3), multiples(5));
        let y = spec_set(&c, &[&m2, &m3]);
        assert_eq!(c.jp_closure(&y).unwrap(), y);
        assert_eq!(c.jp_closure(&c.space().spectrum().all()).unwrap(), c.space().spectrum().all());
        let primes: Vec<Ideal> = [2, 3].iter().map(|&d| r.principal_ideal(d)).collect();
        let rep = c.prime_avoidance_j(&primes).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.j_of_union, y);
        let all: Vec<Ideal> = [2, 3, 5].iter().map(|&d| r.principal_ideal(d)).collect();
        assert!(c.prime_avoidance_j(&all).unwrap().j_of_union.is_full());
        let _ = m5;
        c.check_all().unwrap();
    }

    #[test]
    fn non_prime_input_is_rejected() {
        let r = FiniteRing::zmod(12).unwrap();
        let c = Correspondence::new(&r);
        assert!(matches!(c.prime_avoidance_j(&[r.principal_ideal(4)]), Err(Error::InvalidParameter(_))));
        assert!(matches!(c.p_map(&BitSet::empty(2)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn monotone_p() {
        let r = FiniteRing::zmod(30).unwrap();
        let c = Correspondence::new(&r);
        let k = c.space().spectrum().len();
        for a in 1u64..1 << k {
            for b in 1u64..1 << k {
                let rep = c.monotone_p_check(&BitSet::from_mask(k, a), &BitSet::from_mask(k, b)).unwrap();
                assert!(rep.implication_holds && rep.closure_invariant);
            }
        }
    }
}
