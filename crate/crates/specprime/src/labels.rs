//! Human-readable names for ideals, semigroup primes and points of `X(R)`.

use std::collections::BTreeMap;

use specprime_core::{BitSet, Correspondence, FiniteRing};

/// Names a subset of a ring by its smallest principal generator when it has
/// one, `{a,b,...}` otherwise.
#[derive(Debug, Clone)]
pub struct Labeler<'a> {
    ring: &'a FiniteRing,
    principal: BTreeMap<BitSet, usize>,
}

impl<'a> Labeler<'a> {
    pub fn new(ring: &'a FiniteRing) -> Self {
        let mut principal = BTreeMap::new();
        for x in 0..ring.len() {
            principal.entry(ring.principal_ideal(x).into_members()).or_insert(x);
        }
        Labeler { ring, principal }
    }

    pub fn subset(&self, set: &BitSet) -> String {
        match self.principal.get(set) {
            Some(&g) => format!("({})", self.ring.element_name(g)),
            None => {
                let names: Vec<&str> = set.iter().map(|x| self.ring.element_name(x)).collect();
                format!("{{{}}}", names.join(","))
            }
        }
    }

    /// Spectrum point `i`.
    pub fn prime(&self, c: &Correspondence<'_>, i: usize) -> String {
        self.subset(c.space().spectrum().prime(i).members())
    }

    /// A semigroup prime as the union of the primes it contains.
    pub fn sprime(&self, c: &Correspondence<'_>, q: usize) -> String {
        let parts: Vec<String> = c.j(q).iter().map(|p| self.prime(c, p)).collect();
        parts.join("∪")
    }

    /// A point of `X(R)` as a set of primes.
    pub fn xpoint(&self, c: &Correspondence<'_>, y: usize) -> String {
        let parts: Vec<String> = c.xspace().point(y).iter().map(|p| self.prime(c, p)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}
