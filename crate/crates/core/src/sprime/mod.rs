//! Semigroup primes.
//!
//! A semigroup prime of a commutative ring `R` is a nonempty proper subset
//! `Q` with
//!
//! * (a) `r*q ∈ Q` for every `r ∈ R`, `q ∈ Q`;
//! * (b) `s*t ∉ Q` whenever `s, t ∉ Q`.
//!
//! Equivalently `Q` is a union of a nonempty family of prime ideals. Both
//! descriptions are implemented here, independently: a subset scan over the
//! multiplication table ([`sprimes_bruteforce`]) and a union over subsets of
//! `Spec(R)` ([`sprimes_from_spec`]).

mod density;
mod lattice;
mod space;
mod ufd;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ring::{CarrierId, FiniteRing, Spectrum};

pub use density::DensityReport;
pub use lattice::Infimum;
pub use space::{check_s_functorial, SPrimeSpace};
pub use ufd::{UfdElement, UfdModel, UFD_CAP};

/// Default bound on the carrier size for the `2^n` subset scan.
pub const DEFAULT_BRUTEFORCE_CAP: usize = 16;

/// Hard bound on the subset scan regardless of the configured cap.
pub const MAX_BRUTEFORCE: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemigroupPrime {
    carrier: CarrierId,
    members: BitSet,
}

impl SemigroupPrime {
    pub fn carrier(&self) -> CarrierId {
        self.carrier
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &SemigroupPrime) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// First failing clause of the semigroup-prime invariant suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SPrimeViolation {
    WrongUniverse,
    Empty,
    NotProper,
    /// Clause (a): `r * a` escapes.
    NotAbsorbing {
        r: usize,
        a: usize,
    },
    /// Clause (b): `a, b` outside but `a * b` inside.
    ComplementNotClosed {
        a: usize,
        b: usize,
    },
    /// `a * b` outside but `a` inside.
    ComplementNotSaturated {
        a: usize,
        b: usize,
    },
    MissingZero,
    ContainsUnit {
        unit: usize,
    },
}

/// A finite commutative semigroup given by its multiplication table.
#[derive(Debug, Clone)]
pub struct CommutativeSemigroup {
    id: CarrierId,
    n: usize,
    table: Vec<u32>,
}

impl CommutativeSemigroup {
    /// `table` is row-major `n x n`; commutativity and associativity are
    /// checked exhaustively.
    pub fn new(n: usize, table: Vec<u32>) -> Result<Self> {
        if table.len() != n * n {
            return Err(Error::InvalidSemigroup(format!("table must have {} entries", n * n)));
        }
        if table.iter().any(|&v| v as usize >= n) {
            return Err(Error::InvalidSemigroup("table entry out of range".into()));
        }
        let m = |a: usize, b: usize| table[a * n + b] as usize;
        for a in 0..n {
            for b in 0..n {
                if m(a, b) != m(b, a) {
                    return Err(Error::InvalidSemigroup(format!("not commutative at ({a}, {b})")));
                }
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidSemigroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(CommutativeSemigroup { id: CarrierId::fresh(), n, table })
    }

    pub(crate) fn from_ring(ring: &FiniteRing) -> Self {
        CommutativeSemigroup { id: ring.id(), n: ring.len(), table: ring.mul_table().to_vec() }
    }

    pub fn id(&self) -> CarrierId {
        self.id
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    /// Clauses (a), (b) and saturation of the complement, for any subset.
    pub fn check_prime(&self, set: &BitSet) -> Result<(), SPrimeViolation> {
        if set.universe() != self.n {
            return Err(SPrimeViolation::WrongUniverse);
        }
        if set.is_empty() {
            return Err(SPrimeViolation::Empty);
        }
        if set.is_full() {
            return Err(SPrimeViolation::NotProper);
        }
        for a in set {
            for r in 0..self.n {
                if !set.contains(self.mul(r, a)) {
                    return Err(SPrimeViolation::NotAbsorbing { r, a });
                }
            }
        }
        let outside = set.complement();
        for a in &outside {
            for b in &outside {
                if set.contains(self.mul(a, b)) {
                    return Err(SPrimeViolation::ComplementNotClosed { a, b });
                }
            }
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if outside.contains(self.mul(a, b)) && !(outside.contains(a) && outside.contains(b)) {
                    return Err(SPrimeViolation::ComplementNotSaturated { a, b });
                }
            }
        }
        Ok(())
    }
}

/// Every subset satisfying the two defining clauses, found by scanning all
/// `2^n - 2` nonempty proper subsets.
pub fn sprimes_bruteforce(semigroup: &CommutativeSemigroup, cap: usize) -> Result<Vec<SemigroupPrime>> {
    let n = semigroup.len();
    let cap = cap.min(MAX_BRUTEFORCE);
    if n > cap {
        return Err(Error::TooLarge { what: "semigroup for the subset scan", size: n, cap });
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // multiples[a] = {r * a : r}
    let multiples: Vec<u64> = (0..n).map(|a| (0..n).fold(0u64, |m, r| m | 1 << semigroup.mul(r, a))).collect();
    let product = |a: usize, b: usize| 1u64 << semigroup.mul(a, b);

    let mut out = Vec::new();
    for mask in 1..full {
        let absorbing = iter_bits(mask).all(|a| multiples[a] & !mask == 0);
        if !absorbing {
            continue;
        }
        let outside = full & !mask;
        let closed = iter_bits(outside).all(|a| iter_bits(outside).all(|b| product(a, b) & mask == 0));
        if closed {
            out.push(SemigroupPrime { carrier: semigroup.id(), members: BitSet::from_mask(n, mask) });
        }
    }
    out.sort();
    Ok(out)
}

fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// The distinct unions of nonempty families of prime ideals.
pub fn sprimes_from_spec(ring: &FiniteRing) -> Vec<SemigroupPrime> {
    sprimes_from_spectrum(ring, &ring.spectrum())
}

pub fn sprimes_from_spectrum(ring: &FiniteRing, spectrum: &Spectrum) -> Vec<SemigroupPrime> {
    assert_eq!(spectrum.carrier(), ring.id(), "spectrum of a different ring");
    let k = spectrum.len();
    assert!(k < 32, "spectrum too large to enumerate its subsets");
    let unions: BTreeSet<BitSet> = (1u64..1 << k).map(|mask| spectrum.union_of(&BitSet::from_mask(k, mask))).collect();
    unions.into_iter().map(|members| SemigroupPrime { carrier: ring.id(), members }).collect()
}

impl FiniteRing {
    /// The full semigroup-prime suite: clauses (a) and (b), saturation,
    /// `0 ∈ Q`, and no units in `Q`.
    pub fn check_semigroup_prime(&self, set: &BitSet) -> Result<(), SPrimeViolation> {
        self.multiplicative_semigroup().check_prime(set)?;
        if !set.contains(self.zero()) {
            return Err(SPrimeViolation::MissingZero);
        }
        if let Some(unit) = self.units().intersection(set).first() {
            return Err(SPrimeViolation::ContainsUnit { unit });
        }
        Ok(())
    }

    pub fn semigroup_prime(&self, set: BitSet) -> Result<SemigroupPrime, SPrimeViolation> {
        self.check_semigroup_prime(&set)?;
        Ok(SemigroupPrime { carrier: self.id(), members: set })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sets(v: &[SemigroupPrime]) -> Vec<Vec<usize>> {
        v.iter().map(|q| q.members().to_vec()).collect()
    }

    #[test]
    fn bruteforce_z6() {
        let r = FiniteRing::zmod(6).unwrap();
        let found = sprimes_bruteforce(&r.multiplicative_semigroup(), DEFAULT_BRUTEFORCE_CAP).unwrap();
        assert_eq!(sets(&found), vec![vec![0, 3], vec![0, 2, 4], vec![0, 2, 3, 4]]);
        assert_eq!(found, sprimes_from_spec(&r));
    }

    #[test]
    fn bruteforce_field_and_z4() {
        let f2 = FiniteRing::zmod(2).unwrap();
        assert_eq!(sets(&sprimes_bruteforce(&f2.multiplicative_semigroup(), 16).unwrap()), vec![vec![0]]);
        let z4 = FiniteRing::zmod(4).unwrap();
        assert_eq!(sets(&sprimes_bruteforce(&z4.multiplicative_semigroup(), 16).unwrap()), vec![vec![0, 2]]);
        assert_eq!(
            z4.check_semigroup_prime(&BitSet::singleton(4, 0)),
            Err(SPrimeViolation::ComplementNotClosed { a: 2, b: 2 })
        );
    }

    #[test]
    fn from_spec_counts() {
        let z12 = FiniteRing::zmod(12).unwrap();
        let s = sprimes_from_spec(&z12);
        assert_eq!(sets(&s)[2], vec![0, 2, 3, 4, 6, 8, 9, 10]);
        assert_eq!(s.len(), 3);
        assert_eq!(sprimes_from_spec(&FiniteRing::zmod(30).unwrap()).len(), 7);
        assert_eq!(sprimes_from_spec(&FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap()).len(), 1);
    }

    #[test]
    fn scan_cap() {
        let r = FiniteRing::zmod(17).unwrap();
        assert!(matches!(
            sprimes_bruteforce(&r.multiplicative_semigroup(), DEFAULT_BRUTEFORCE_CAP),
            Err(Error::TooLarge { size: 17, cap: 16, .. })
        ));
        assert!(sprimes_bruteforce(&r.multiplicative_semigroup(), 17).is_ok());
    }

    #[test]
    fn rejects_non_commutative_tables() {
        // left-zero band: a*b = a
        let table = vec![0, 0, 1, 1];
        assert!(matches!(CommutativeSemigroup::new(2, table), Err(Error::InvalidSemigroup(_))));
        assert!(matches!(CommutativeSemigroup::new(2, vec![0, 5, 5, 0]), Err(Error::InvalidSemigroup(_))));
    }

    #[test]
    fn plain_semigroup_without_ring_structure() {
        // ({0, 1, 2}, min): a chain semilattice. Its primes are the proper
        // down-sets {0} and {0, 1}.
        let n = 3;
        let table = (0..n * n).map(|k| ((k / n).min(k % n)) as u32).collect();
        let s = CommutativeSemigroup::new(n, table).unwrap();
        assert_eq!(sets(&sprimes_bruteforce(&s, 16).unwrap()), vec![vec![0], vec![0, 1]]);
    }

    #[test]
    fn suite_flags_units() {
        let r = FiniteRing::zmod(6).unwrap();
        assert!(matches!(
            r.check_semigroup_prime(&BitSet::from_indices(6, [0, 1, 2, 3, 4])),
            Err(SPrimeViolation::NotAbsorbing { .. })
        ));
        assert_eq!(
            r.check_semigroup_prime(&BitSet::from_indices(6, [1, 2])),
            Err(SPrimeViolation::NotAbsorbing { r: 0, a: 1 })
        );
    }
}
