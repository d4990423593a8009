use alloc::string::String;
use alloc::vec::Vec;

use super::Correspondence;
use crate::bitset::BitSet;
use crate::check::{ensure, CheckResult, Violation};

/// A set that makes one condition fail.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Witness {
    pub condition: &'static str,
    /// Element or point index arrays, as described per condition.
    pub sets: Vec<Vec<usize>>,
}

/// The conditions equivalent to `j` being a homeomorphism, each decided by its
/// own exhaustive procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SurjectivityReport {
    pub ring: String,
    pub s_points: usize,
    pub x_points: usize,
    /// (i) `j(S(R)) = X(R)`.
    pub j_surjective: bool,
    /// (ii) every radical of a finitely generated ideal is the radical of a
    /// principal ideal.
    pub radical_principal: bool,
    /// (iii) an ideal inside a union of primes is inside one of them.
    pub union_avoidance: bool,
    /// (iv) the sets `U(D(x))` form a basis of `X(R)`.
    pub basis_condition: bool,
    /// Every prime is the radical of a principal ideal.
    pub prime_radical_principal: bool,
    /// Compactly packed, tested over all ideals.
    pub compactly_packed_ideal: bool,
    /// Compactly packed, tested over prime ideals.
    pub compactly_packed_prime: bool,
    pub witnesses: Vec<Witness>,
}

impl SurjectivityReport {
    pub fn homeomorphism_conditions(&self) -> [bool; 4] {
        [self.j_surjective, self.radical_principal, self.union_avoidance, self.basis_condition]
    }

    pub fn noetherian_conditions(&self) -> [bool; 3] {
        [self.prime_radical_principal, self.compactly_packed_ideal, self.compactly_packed_prime]
    }

    /// The four homeomorphism conditions agree, the three spectral-Noetherian
    /// conditions agree, and the latter imply the former.
    pub fn check_equivalences(&self) -> CheckResult {
        let (t, c) = (self.homeomorphism_conditions(), self.noetherian_conditions());
        ensure(t.iter().all(|&b| b == t[0]), || Violation::new("homeomorphism_equivalence", alloc::format!("{t:?}")))?;
        ensure(c.iter().all(|&b| b == c[0]), || Violation::new("noetherian_equivalence", alloc::format!("{c:?}")))?;
        ensure(!c[0] || t[0], || Violation::new("noetherian_implies_homeomorphism", alloc::format!("{c:?} but {t:?}")))
    }

    pub fn all_true(&self) -> bool {
        self.homeomorphism_conditions().iter().chain(&self.noetherian_conditions()).all(|&b| b)
    }
}

impl Correspondence<'_> {
    pub fn surjectivity_report(&self) -> SurjectivityReport {
        let ring = self.ring();
        let spec = self.space().spectrum();
        let ideals = ring.enumerate_ideals();
        let principal_radicals: Vec<BitSet> =
            (0..ring.len()).map(|x| ring.radical(&ring.principal_ideal(x)).into_members()).collect();
        let mut witnesses = Vec::new();

        // (i): point images of j against every point of X(R).
        let image = BitSet::from_indices(self.xspace().len(), self.j_indices().iter().copied());
        let missing = image.complement().first();
        if let Some(y) = missing {
            witnesses.push(Witness { condition: "j_surjective", sets: alloc::vec![self.xspace().point(y).to_vec()] });
        }

        // (ii): every ideal of a finite ring is finitely generated.
        let unmatched = ideals.iter().find(|i| {
            let rad = ring.radical(i);
            !principal_radicals.iter().any(|r| r == rad.members())
        });
        if let Some(i) = unmatched {
            witnesses.push(Witness { condition: "radical_principal", sets: alloc::vec![i.members().to_vec()] });
        }

        // (iii): I ⊆ Q = ∪ j(Q) forces I ⊆ P for some P ∈ j(Q).
        let mut avoidance_failure = None;
        'iii: for i in &ideals {
            for q in 0..self.space().len() {
                if i.members().is_subset(self.space().prime(q).members())
                    && !self.j(q).iter().any(|p| i.is_subset(spec.prime(p)))
                {
                    avoidance_failure =
                        Some(alloc::vec![i.members().to_vec(), self.space().prime(q).members().to_vec()]);
                    break 'iii;
                }
            }
        }
        if let Some(sets) = avoidance_failure.clone() {
            witnesses.push(Witness { condition: "union_avoidance", sets });
        }

        // (iv): each basic open U(D(J)) of X(R) is a union of sets U(D(x)):
        // every Y in it lies in some U(D(x)) inside it.
        let x = self.xspace();
        let principal: Vec<BitSet> = (0..ring.len()).map(|a| x.basic_open(&spec.basic_open(a))).collect();
        let mut basis_failure = None;
        'iv: for j in &ideals {
            let target = x.basic_open(&spec.open_of(j.members()));
            for y in &target {
                if !principal.iter().any(|u| u.contains(y) && u.is_subset(&target)) {
                    basis_failure = Some(alloc::vec![j.members().to_vec(), x.point(y).to_vec()]);
                    break 'iv;
                }
            }
        }
        if let Some(sets) = basis_failure.clone() {
            witnesses.push(Witness { condition: "basis_condition", sets });
        }

        // Every prime is the radical of a principal ideal.
        let prime_unmatched = spec.primes().iter().find(|p| !principal_radicals.iter().any(|r| r == p.members()));
        if let Some(p) = prime_unmatched {
            witnesses.push(Witness { condition: "prime_radical_principal", sets: alloc::vec![p.members().to_vec()] });
        }

        // Compact packing, tested against every nonempty family of primes.
        let families: Vec<BitSet> = (1u64..1 << spec.len()).map(|m| BitSet::from_mask(spec.len(), m)).collect();
        let packed_failure = |candidates: &mut dyn Iterator<Item = &BitSet>| -> Option<Vec<Vec<usize>>> {
            for set in candidates {
                for fam in &families {
                    if set.is_subset(&spec.union_of(fam)) && !fam.iter().any(|p| set.is_subset(spec.prime(p).members()))
                    {
                        return Some(alloc::vec![set.to_vec(), fam.to_vec()]);
                    }
                }
            }
            None
        };
        let packed_ideal = packed_failure(&mut ideals.iter().map(|i| i.members()));
        let packed_prime = packed_failure(&mut spec.primes().iter().map(|p| p.members()));
        if let Some(sets) = packed_ideal.clone() {
            witnesses.push(Witness { condition: "compactly_packed_ideal", sets });
        }
        if let Some(sets) = packed_prime.clone() {
            witnesses.push(Witness { condition: "compactly_packed_prime", sets });
        }

        SurjectivityReport {
            ring: ring.label().into(),
            s_points: self.space().len(),
            x_points: self.xspace().len(),
            j_surjective: missing.is_none(),
            radical_principal: unmatched.is_none(),
            union_avoidance: avoidance_failure.is_none(),
            basis_condition: basis_failure.is_none(),
            prime_radical_principal: prime_unmatched.is_none(),
            compactly_packed_ideal: packed_ideal.is_none(),
            compactly_packed_prime: packed_prime.is_none(),
            witnesses,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    #[test]
    fn examples_are_all_true() {
        let z2 = FiniteRing::zmod(2).unwrap();
        let z3 = FiniteRing::zmod(3).unwrap();
        let z5 = FiniteRing::zmod(5).unwrap();
        let prod = FiniteRing::product(&[z2, z3, z5]).unwrap();
        for (r, points) in [(FiniteRing::zmod(12).unwrap(), 3), (FiniteRing::zmod(7).unwrap(), 1), (prod, 7)] {
            let rep = Correspondence::new(&r).surjectivity_report();
            assert!(rep.all_true(), "{rep:?}");
            assert_eq!((rep.s_points, rep.x_points), (points, points));
            assert!(rep.witnesses.is_empty());
            rep.check_equivalences().unwrap();
        }
    }

    #[test]
    fn equivalence_check_catches_disagreement() {
        let r = FiniteRing::zmod(6).unwrap();
        let mut rep = Correspondence::new(&r).surjectivity_report();
        rep.basis_condition = false;
        assert_eq!(rep.check_equivalences().unwrap_err().check, "homeomorphism_equivalence");
        rep.basis_condition = true;
        rep.compactly_packed_prime = false;
        assert_eq!(rep.check_equivalences().unwrap_err().check, "noetherian_equivalence");
    }
}
