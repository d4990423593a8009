use alloc::format;
use alloc::vec::Vec;

use super::{FiniteRing, Ideal, Spectrum};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::poset::MonotoneMap;

/// A validated unital ring homomorphism `source -> target`.
#[derive(Debug, Clone)]
pub struct RingHom<'a> {
    source: &'a FiniteRing,
    target: &'a FiniteRing,
    image: Vec<usize>,
}

impl<'a> RingHom<'a> {
    /// Checks additivity, multiplicativity and `f(1) = 1` exhaustively.
    pub fn new(source: &'a FiniteRing, target: &'a FiniteRing, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.len() {
            return Err(Error::InvalidParameter(format!(
                "map has {} entries, source has {} elements",
                image.len(),
                source.len()
            )));
        }
        if let Some(x) = image.iter().position(|&y| y >= target.len()) {
            return Err(Error::InvalidParameter(format!("image of {x} is outside the target")));
        }
        if image[source.one()] != target.one() {
            return Err(Error::NotAHomomorphism("f(1) != 1".into()));
        }
        for x in 0..source.len() {
            for y in 0..source.len() {
                if image[source.add(x, y)] != target.add(image[x], image[y]) {
                    return Err(Error::NotAHomomorphism(format!("f({x} + {y}) != f({x}) + f({y})")));
                }
                if image[source.mul(x, y)] != target.mul(image[x], image[y]) {
                    return Err(Error::NotAHomomorphism(format!("f({x} * {y}) != f({x}) * f({y})")));
                }
            }
        }
        Ok(RingHom { source, target, image })
    }

    pub fn identity(ring: &'a FiniteRing) -> Self {
        RingHom { source: ring, target: ring, image: (0..ring.len()).collect() }
    }

    pub fn source(&self) -> &'a FiniteRing {
        self.source
    }

    pub fn target(&self) -> &'a FiniteRing {
        self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &RingHom<'a>) -> Result<RingHom<'a>> {
        if self.target.id() != then.source.id() {
            return Err(Error::InvalidParameter("homomorphisms are not composable".into()));
        }
        let image = self.image.iter().map(|&y| then.image[y]).collect();
        Ok(RingHom { source: self.source, target: then.target, image })
    }

    /// `f^{-1}(set)` for a subset of the target.
    pub fn preimage(&self, set: &BitSet) -> BitSet {
        assert_eq!(set.universe(), self.target.len(), "subset of the wrong ring");
        BitSet::from_indices(self.source.len(), (0..self.source.len()).filter(|&x| set.contains(self.image[x])))
    }

    pub fn preimage_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.carrier() != self.target.id() {
            return Err(Error::InvalidParameter("ideal does not belong to the target ring".into()));
        }
        Ok(self.source.ideal_unchecked(self.preimage(ideal.members())))
    }

    /// `f^a : Spec(target) -> Spec(source)`, `P -> f^{-1}(P)`, as a monotone
    /// map of the two specialization posets.
    pub fn spec_map<'s>(&self, target_spec: &'s Spectrum, source_spec: &'s Spectrum) -> Result<MonotoneMap<'s>> {
        if target_spec.carrier() != self.target.id() || source_spec.carrier() != self.source.id() {
            return Err(Error::InvalidParameter("spectra do not match the homomorphism".into()));
        }
        let map = target_spec
            .primes()
            .iter()
            .map(|p| {
                let pre = self.preimage(p.members());
                source_spec.index_of(&pre).ok_or_else(|| {
                    Error::CheckFailed(
                        crate::Violation::new("prime_preimage", "preimage of a prime is not prime")
                            .with_witness(p.members().iter()),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MonotoneMap::new(target_spec.order(), source_spec.order(), map)
    }
}
