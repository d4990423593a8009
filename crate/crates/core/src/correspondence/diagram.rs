use alloc::vec::Vec;

use super::Correspondence;
use crate::check::{ensure, CheckResult, Violation};
use crate::error::{Error, Result};
use crate::ring::RingHom;
use crate::sprime::SPrimeSpace;

/// The two squares relating `f^a`, `S(f)` and `X(f^a)` through `i` and `j`,
/// for `f: R1 -> R2`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DiagramReport {
    /// `S(f)∘i2 = i1∘f^a` on `Spec(R2)`.
    pub left_square: bool,
    /// `X(f^a)∘j2 = j1∘S(f)` on `S(R2)`.
    pub right_square: bool,
    /// Spectrum index in `Spec(R2)` where the left square fails.
    pub left_witness: Option<Vec<usize>>,
    /// Members of the semigroup prime of `R2` where the right square fails.
    pub right_witness: Option<Vec<usize>>,
    pub fa_embedding: bool,
    pub fa_homeomorphism: bool,
    pub s_embedding: bool,
    pub s_homeomorphism: bool,
    /// `S(f)^{-1}(U(x)) = U(f(x))` for every `x`.
    pub s_basis_preimages: bool,
}

impl DiagramReport {
    /// Both squares commute, `S(f)` pulls basic opens back correctly, and
    /// `S(f)` is an embedding (homeomorphism) whenever `f^a` is.
    pub fn check(&self) -> CheckResult {
        ensure(self.left_square, || {
            Violation::new("diagram_left", "S(f)∘i2 != i1∘f^a")
                .with_witness(self.left_witness.clone().unwrap_or_default())
        })?;
        ensure(self.right_square, || {
            Violation::new("diagram_right", "X(f^a)∘j2 != j1∘S(f)")
                .with_witness(self.right_witness.clone().unwrap_or_default())
        })?;
        ensure(self.s_basis_preimages, || Violation::new("s_map_basis", "S(f)^-1(U(x)) != U(f(x))"))?;
        ensure(!self.fa_embedding || self.s_embedding, || {
            Violation::new("s_embedding", "f^a is an embedding but S(f) is not")
        })?;
        ensure(!self.fa_homeomorphism || self.s_homeomorphism, || {
            Violation::new("s_homeomorphism", "f^a is a homeomorphism but S(f) is not")
        })
    }
}

/// Evaluates both squares of the diagram on every point.
pub fn diagram_check(
    f: &RingHom<'_>,
    source: &Correspondence<'_>,
    target: &Correspondence<'_>,
) -> Result<DiagramReport> {
    if source.ring().id() != f.source().id() || target.ring().id() != f.target().id() {
        return Err(Error::InvalidParameter("correspondences do not match the homomorphism".into()));
    }
    let (s1, s2) = (source.space(), target.space());
    let fa = f.spec_map(s2.spectrum(), s1.spectrum())?;
    let sf = SPrimeSpace::s_map(f, s1, s2)?;

    let left_witness = (0..s2.spectrum().len())
        .find(|&p| sf.apply(s2.spec_embedding()[p]) != s1.spec_embedding()[fa.apply(p)])
        .map(|p| alloc::vec![p]);

    let x_fa = fa.on_xspace(target.xspace(), source.xspace());
    let right_witness = (0..s2.len())
        .find(|&q| x_fa[target.j_indices()[q]] != source.j_indices()[sf.apply(q)])
        .map(|q| s2.prime(q).members().to_vec());

    let s_basis_preimages = SPrimeSpace::check_s_map_basis(f, s1, s2, &sf).is_ok();

    Ok(DiagramReport {
        left_square: left_witness.is_none(),
        right_square: right_witness.is_none(),
        left_witness,
        right_witness,
        fa_embedding: fa.is_injective() && fa.is_order_embedding(),
        fa_homeomorphism: fa.is_isomorphism(),
        s_embedding: sf.is_injective() && sf.is_order_embedding(),
        s_homeomorphism: sf.is_isomorphism(),
        s_basis_preimages,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    #[test]
    fn quotient_z12_to_z6() {
        let (z12, z6) = (FiniteRing::zmod(12).unwrap(), FiniteRing::zmod(6).unwrap());
        let f = RingHom::new(&z12, &z6, (0..12).map(|x| x % 6).collect()).unwrap();
        let rep = diagram_check(&f, &Correspondence::new(&z12), &Correspondence::new(&z6)).unwrap();
        rep.check().unwrap();
        assert!(rep.fa_homeomorphism && rep.s_homeomorphism);
    }

    #[test]
    fn identity_and_projection() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let c6 = Correspondence::new(&z6);
        diagram_check(&RingHom::identity(&z6), &c6, &c6).unwrap().check().unwrap();

        let z2 = FiniteRing::zmod(2).unwrap();
        let prod = FiniteRing::product(&[z6.clone(), z2.clone()]).unwrap();
        let proj = RingHom::new(&prod, &z2, (0..12).map(|x| x % 2).collect()).unwrap();
        let rep = diagram_check(&proj, &Correspondence::new(&prod), &Correspondence::new(&z2)).unwrap();
        rep.check().unwrap();
        assert!(rep.fa_embedding && !rep.fa_homeomorphism);
    }
}
