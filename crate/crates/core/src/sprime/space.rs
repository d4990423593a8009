use alloc::format;
use alloc::vec::Vec;

use super::{sprimes_bruteforce, sprimes_from_spectrum, SemigroupPrime};
use crate::bitset::BitSet;
use crate::check::{ensure, CheckResult, Violation};
use crate::error::{Error, Result};
use crate::poset::{FinitePoset, MonotoneMap, SpectralReport, TopologyPresentation};
use crate::ring::{FiniteRing, RingHom, Spectrum};

/// `S(R)` with the hull-kernel topology, presented by the basis
/// `U(x) = {Q : x ∉ Q}` for `x ∈ R` (basis index = element index).
#[derive(Debug, Clone)]
pub struct SPrimeSpace<'a> {
    ring: &'a FiniteRing,
    spectrum: Spectrum,
    primes: Vec<SemigroupPrime>,
    order: FinitePoset,
    presentation: TopologyPresentation,
    /// `i: Spec(R) -> S(R)` as point indices.
    spec_points: Vec<usize>,
}

impl<'a> SPrimeSpace<'a> {
    pub fn new(ring: &'a FiniteRing) -> Self {
        let spectrum = ring.spectrum();
        let primes = sprimes_from_spectrum(ring, &spectrum);
        let m = primes.len();
        let order =
            FinitePoset::from_leq_fn(m, |a, b| primes[a].is_subset(&primes[b])).expect("inclusion is a partial order");
        let basis =
            (0..ring.len()).map(|x| BitSet::from_indices(m, (0..m).filter(|&q| !primes[q].contains(x)))).collect();
        let presentation = TopologyPresentation::new(m, basis).expect("basis built over the points");
        let spec_points = spectrum
            .primes()
            .iter()
            .map(|p| {
                primes.binary_search_by(|q| q.members().cmp(p.members())).expect("every prime is a semigroup prime")
            })
            .collect();
        SPrimeSpace { ring, spectrum, primes, order, presentation, spec_points }
    }

    pub fn ring(&self) -> &'a FiniteRing {
        self.ring
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn primes(&self) -> &[SemigroupPrime] {
        &self.primes
    }

    pub fn prime(&self, i: usize) -> &SemigroupPrime {
        &self.primes[i]
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    pub fn presentation(&self) -> &TopologyPresentation {
        &self.presentation
    }

    pub fn index_of(&self, members: &BitSet) -> Option<usize> {
        self.primes.binary_search_by(|q| q.members().cmp(members)).ok()
    }

    pub fn all(&self) -> BitSet {
        BitSet::full(self.len())
    }

    /// `U(x)`.
    pub fn basic_open(&self, x: usize) -> &BitSet {
        &self.presentation.basis()[x]
    }

    /// `i(P)` for each prime, by spectrum index.
    pub fn spec_embedding(&self) -> &[usize] {
        &self.spec_points
    }

    /// `i(Spec(R))` as a set of points.
    pub fn spec_image(&self) -> BitSet {
        BitSet::from_indices(self.len(), self.spec_points.iter().copied())
    }

    /// `i` as a monotone map of the specialization posets.
    pub fn spec_inclusion(&self) -> MonotoneMap<'_> {
        MonotoneMap::new(self.spectrum.order(), &self.order, self.spec_points.clone())
            .expect("inclusion of primes is monotone")
    }

    /// Every point passes the semigroup-prime invariant suite.
    pub fn check_members(&self) -> CheckResult {
        for q in &self.primes {
            self.ring
                .check_semigroup_prime(q.members())
                .map_err(|v| Violation::new("sprime_invariants", format!("{v:?}")).with_witness(q.members().iter()))?;
        }
        Ok(())
    }

    /// Compares the union construction with the subset scan; `None` when the
    /// ring is beyond `cap`.
    pub fn check_bruteforce(&self, cap: usize) -> Option<CheckResult> {
        match sprimes_bruteforce(&self.ring.multiplicative_semigroup(), cap) {
            Err(Error::TooLarge { .. }) => None,
            Err(e) => Some(Err(Violation::new("sprime_oracle", format!("{e}")))),
            Ok(found) => Some(ensure(found == self.primes, || {
                let extra = found.iter().chain(&self.primes).find(|q| !(found.contains(q) && self.primes.contains(q)));
                Violation::new("sprime_oracle", "subset scan differs from unions of primes")
                    .with_witness(extra.map(|q| q.members().to_vec()).unwrap_or_default())
            })),
        }
    }

    /// `U(xy) = U(x) ∩ U(y)` for all `x, y`.
    pub fn check_basis_multiplicative(&self) -> CheckResult {
        let n = self.ring.len();
        for x in 0..n {
            for y in x..n {
                let xy = self.ring.mul(x, y);
                ensure(*self.basic_open(xy) == self.basic_open(x).intersection(self.basic_open(y)), || {
                    Violation::new("u_multiplicative", format!("U({x}*{y}) != U({x}) ∩ U({y})")).with_witness([x, y])
                })?;
            }
        }
        Ok(())
    }

    /// The specialization order of the hull-kernel topology is inclusion.
    pub fn check_order(&self) -> CheckResult {
        let spec = self
            .presentation
            .specialization_order()
            .map_err(|e| Violation::new("sprime_order", format!("hull-kernel topology is not T0: {e}")))?;
        ensure(spec == self.order, || {
            let (a, b) = (0..self.len())
                .flat_map(|a| (0..self.len()).map(move |b| (a, b)))
                .find(|&(a, b)| spec.leq(a, b) != self.order.leq(a, b))
                .expect("orders differ somewhere");
            Violation::new("sprime_order", "specialization order differs from inclusion")
                .with_witness(self.primes[a].members().iter())
                .with_witness(self.primes[b].members().iter())
        })
    }

    /// `i` is an order embedding with `i^{-1}(U(x)) = D(x)` and
    /// `i(D(x)) = U(x) ∩ i(Spec(R))`.
    pub fn check_spec_embedding(&self) -> CheckResult {
        let inc = self.spec_inclusion();
        ensure(inc.is_injective() && inc.is_order_embedding(), || {
            Violation::new("spec_embedding", "i is not an order embedding")
        })?;
        let image = self.spec_image();
        for x in 0..self.ring.len() {
            let d = self.spectrum.basic_open(x);
            ensure(inc.preimage(self.basic_open(x)) == d, || {
                Violation::new("spec_embedding", format!("i^-1(U({x})) != D({x})")).with_witness([x])
            })?;
            ensure(inc.image(&d) == self.basic_open(x).intersection(&image), || {
                Violation::new("spec_embedding", format!("i(D({x})) != U({x}) ∩ i(Spec)")).with_witness([x])
            })?;
        }
        Ok(())
    }

    pub fn verify_spectral(&self) -> SpectralReport {
        self.presentation.verify_spectral()
    }

    pub fn check_spectral(&self) -> CheckResult {
        let report = self.verify_spectral();
        ensure(report.is_spectral(), || Violation::new("sprime_spectral", format!("{report:?}")))
    }

    /// Every structural check on the space, the subset scan included when the
    /// ring is within `cap`.
    pub fn check_all(&self, cap: usize) -> CheckResult {
        self.check_members()?;
        if let Some(r) = self.check_bruteforce(cap) {
            r?;
        }
        self.check_basis_multiplicative()?;
        self.check_order()?;
        self.check_spec_embedding()?;
        self.check_spectral()
    }

    /// `S(f): S(target) -> S(source)`, `Q -> f^{-1}(Q)`.
    pub fn s_map<'s>(
        f: &RingHom<'_>,
        source: &'s SPrimeSpace<'_>,
        target: &'s SPrimeSpace<'_>,
    ) -> Result<MonotoneMap<'s>> {
        if source.ring.id() != f.source().id() || target.ring.id() != f.target().id() {
            return Err(Error::InvalidParameter("spaces do not match the homomorphism".into()));
        }
        let map = target
            .primes
            .iter()
            .map(|q| {
                source.index_of(&f.preimage(q.members())).ok_or_else(|| {
                    Error::CheckFailed(
                        Violation::new("s_map", "preimage is not a semigroup prime").with_witness(q.members().iter()),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MonotoneMap::new(&target.order, &source.order, map)
            .map_err(|e| Error::CheckFailed(Violation::new("s_map", format!("preimage map is not monotone: {e}"))))
    }

    /// `S(f)^{-1}(U(x)) = U(f(x))` for every `x` in the source ring.
    pub fn check_s_map_basis(
        f: &RingHom<'_>,
        source: &SPrimeSpace<'_>,
        target: &SPrimeSpace<'_>,
        map: &MonotoneMap<'_>,
    ) -> CheckResult {
        for x in 0..source.ring.len() {
            ensure(map.preimage(source.basic_open(x)) == *target.basic_open(f.apply(x)), || {
                Violation::new("s_map_basis", format!("S(f)^-1(U({x})) != U(f({x}))")).with_witness([x])
            })?;
        }
        Ok(())
    }
}

/// `S(g∘f) = S(f)∘S(g)` for `f: R1 -> R2`, `g: R2 -> R3`, and `S(id) = id` on
/// each of the three spaces.
pub fn check_s_functorial(f: &RingHom<'_>, g: &RingHom<'_>, spaces: [&SPrimeSpace<'_>; 3]) -> CheckResult {
    let fail = |e: Error| Violation::new("s_functor", format!("{e}"));
    let gf = f.then(g).map_err(fail)?;
    let sf = SPrimeSpace::s_map(f, spaces[0], spaces[1]).map_err(fail)?;
    let sg = SPrimeSpace::s_map(g, spaces[1], spaces[2]).map_err(fail)?;
    let sgf = SPrimeSpace::s_map(&gf, spaces[0], spaces[2]).map_err(fail)?;
    for q in 0..spaces[2].len() {
        ensure(sgf.apply(q) == sf.apply(sg.apply(q)), || {
            Violation::new("s_functor", "S(g∘f) differs from S(f)∘S(g)")
                .with_witness(spaces[2].primes[q].members().iter())
        })?;
    }
    for space in spaces {
        let id = RingHom::identity(space.ring);
        let s_id = SPrimeSpace::s_map(&id, space, space).map_err(fail)?;
        ensure(s_id.as_slice().iter().enumerate().all(|(q, &r)| q == r), || {
            Violation::new("s_functor", "S(id) is not the identity")
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn z6_basic_opens() {
        let r = FiniteRing::zmod(6).unwrap();
        let s = SPrimeSpace::new(&r);
        assert_eq!(s.len(), 3);
        let idx = |v: &[usize]| s.index_of(&BitSet::from_indices(6, v.iter().copied())).unwrap();
        let (p3, p2, top) = (idx(&[0, 3]), idx(&[0, 2, 4]), idx(&[0, 2, 3, 4]));
        assert_eq!(s.basic_open(2).to_vec(), vec![p3]);
        assert_eq!(s.basic_open(3).to_vec(), vec![p2]);
        assert!(s.basic_open(1).is_full());
        assert!(s.order().leq(p2, top) && s.order().leq(p3, top));
        s.check_all(16).unwrap();
    }

    #[test]
    fn z30_is_the_nonempty_subset_lattice() {
        let r = FiniteRing::zmod(30).unwrap();
        let s = SPrimeSpace::new(&r);
        assert_eq!(s.len(), 7);
        assert_eq!(s.order().covers().len(), 9);
        s.check_all(16).unwrap();
    }

    #[test]
    fn field_is_a_point() {
        let r = FiniteRing::poly_quotient(3, &[1, 0, 1]).unwrap();
        let s = SPrimeSpace::new(&r);
        assert_eq!(s.len(), 1);
        s.check_all(16).unwrap();
    }

    #[test]
    fn s_map_examples() {
        let (z12, z6) = (FiniteRing::zmod(12).unwrap(), FiniteRing::zmod(6).unwrap());
        let (s12, s6) = (SPrimeSpace::new(&z12), SPrimeSpace::new(&z6));
        let f = RingHom::new(&z12, &z6, (0..12).map(|x| x % 6).collect()).unwrap();
        let m = SPrimeSpace::s_map(&f, &s12, &s6).unwrap();
        let top6 = s6.index_of(&BitSet::from_indices(6, [0, 2, 3, 4])).unwrap();
        assert_eq!(s12.prime(m.apply(top6)).members().to_vec(), vec![0, 2, 3, 4, 6, 8, 9, 10]);
        SPrimeSpace::check_s_map_basis(&f, &s12, &s6, &m).unwrap();

        let (z2, z3) = (FiniteRing::zmod(2).unwrap(), FiniteRing::zmod(3).unwrap());
        let prod = FiniteRing::product(&[z2.clone(), z3]).unwrap();
        let (sp, s2) = (SPrimeSpace::new(&prod), SPrimeSpace::new(&z2));
        let proj = RingHom::new(&prod, &z2, (0..6).map(|x| x / 3).collect()).unwrap();
        let m = SPrimeSpace::s_map(&proj, &sp, &s2).unwrap();
        assert_eq!(sp.prime(m.apply(0)).members().to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn functor_laws() {
        let (z12, z6, z3) = (FiniteRing::zmod(12).unwrap(), FiniteRing::zmod(6).unwrap(), FiniteRing::zmod(3).unwrap());
        let f = RingHom::new(&z12, &z6, (0..12).map(|x| x % 6).collect()).unwrap();
        let g = RingHom::new(&z6, &z3, (0..6).map(|x| x % 3).collect()).unwrap();
        let spaces = [SPrimeSpace::new(&z12), SPrimeSpace::new(&z6), SPrimeSpace::new(&z3)];
        check_s_functorial(&f, &g, [&spaces[0], &spaces[1], &spaces[2]]).unwrap();
    }
}
