use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k`, standing
/// in for the ideal class group of a Dedekind domain.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ClassGroupProfile {
    pub free_rank: usize,
    pub torsion_invariants: Vec<u64>,
}

impl ClassGroupProfile {
    pub fn new(free_rank: usize, torsion_invariants: Vec<u64>) -> Result<Self> {
        if let Some(&d) = torsion_invariants.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidParameter(alloc::format!("torsion invariant {d} is below 2")));
        }
        Ok(ClassGroupProfile { free_rank, torsion_invariants })
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum DedekindVerdict {
    /// `j` is a homeomorphism.
    Homeomorphism,
    /// `j` misses points of `X(D)`.
    NotSurjective,
}

/// For a Dedekind domain `D`, `j: S(D) -> X(D)` is a homeomorphism iff the
/// class group is torsion.
pub fn dedekind_verdict(profile: &ClassGroupProfile) -> DedekindVerdict {
    if profile.is_torsion() {
        DedekindVerdict::Homeomorphism
    } else {
        DedekindVerdict::NotSurjective
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn examples() {
        let trivial = ClassGroupProfile::new(0, vec![]).unwrap();
        assert_eq!(dedekind_verdict(&trivial), DedekindVerdict::Homeomorphism);
        let z = ClassGroupProfile::new(1, vec![]).unwrap();
        assert_eq!(dedekind_verdict(&z), DedekindVerdict::NotSurjective);
        let z5 = ClassGroupProfile::new(0, vec![5]).unwrap();
        assert_eq!(dedekind_verdict(&z5), DedekindVerdict::Homeomorphism);
        assert!(ClassGroupProfile::new(0, vec![1]).is_err());
    }
}
