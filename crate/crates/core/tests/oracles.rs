//! Library results against independent brute-force computations.

mod common;

use std::collections::BTreeSet;

use specprime_core::sprime::{sprimes_bruteforce, sprimes_from_spec, Infimum};
use specprime_core::{BitSet, ClosureMode, Correspondence, FinitePoset, FiniteRing, SPrimeSpace};

fn subsets(n: usize) -> impl Iterator<Item = BitSet> {
    (0u64..1 << n).map(move |m| BitSet::from_mask(n, m))
}

fn is_ideal(r: &FiniteRing, s: &BitSet) -> bool {
    s.contains(r.zero())
        && s.iter().all(|a| s.iter().all(|b| s.contains(r.add(a, b))))
        && s.iter().all(|a| (0..r.len()).all(|x| s.contains(r.mul(x, a))))
}

fn is_prime(r: &FiniteRing, s: &BitSet) -> bool {
    is_ideal(r, s)
        && !s.is_full()
        && (0..r.len()).all(|a| (0..r.len()).all(|b| !s.contains(r.mul(a, b)) || s.contains(a) || s.contains(b)))
}

#[test]
fn ideals_match_subset_scan() {
    for r in common::small_rings() {
        let scanned: Vec<BitSet> = subsets(r.len()).filter(|s| is_ideal(&r, s)).collect();
        let mut listed: Vec<BitSet> = r.enumerate_ideals().into_iter().map(|i| i.into_members()).collect();
        listed.sort();
        let scanned: BTreeSet<_> = scanned.into_iter().collect();
        assert_eq!(listed, scanned.into_iter().collect::<Vec<_>>(), "{}", r.label());
    }
}

#[test]
fn primes_match_definition() {
    for r in common::small_rings() {
        let scanned: BTreeSet<BitSet> = subsets(r.len()).filter(|s| is_prime(&r, s)).collect();
        let spec: BTreeSet<BitSet> = r.spectrum().primes().iter().map(|p| p.members().clone()).collect();
        assert_eq!(spec, scanned, "{}", r.label());
    }
}

#[test]
fn radical_matches_nilpotents_modulo_the_ideal() {
    for r in common::small_rings() {
        for i in r.enumerate_ideals() {
            // x ∈ rad(I) iff some power of x lies in I
            let expected =
                BitSet::from_indices(r.len(), (0..r.len()).filter(|&x| (1..=r.len()).any(|k| i.contains(r.pow(x, k)))));
            assert_eq!(r.radical(&i).members(), &expected);
            assert_eq!(r.spectrum().radical_by_primes(&i), expected);
        }
    }
}

#[test]
fn subset_scan_equals_unions_of_primes() {
    for r in common::small_rings() {
        let scan = sprimes_bruteforce(&r.multiplicative_semigroup(), 16).unwrap();
        assert_eq!(scan, sprimes_from_spec(&r), "{}", r.label());
    }
}

#[test]
fn unions_pass_the_invariant_suite_on_larger_rings() {
    for r in common::larger_rings() {
        for q in sprimes_from_spec(&r) {
            r.check_semigroup_prime(q.members()).unwrap();
        }
        SPrimeSpace::new(&r).check_all(16).unwrap();
    }
}

#[test]
fn expected_counts() {
    let count = |r: &FiniteRing| sprimes_from_spec(r).len();
    assert_eq!(count(&FiniteRing::zmod(6).unwrap()), 3);
    assert_eq!(count(&FiniteRing::zmod(30).unwrap()), 7);
    assert_eq!(count(&FiniteRing::zmod(13).unwrap()), 1);
    assert_eq!(count(&FiniteRing::poly_quotient(2, &[1, 1, 0, 1]).unwrap()), 1);
}

/// Closed sets of the constructible topology are intersections of sets
/// `(X \ U) ∪ V` with `U`, `V` open.
fn constructible_by_pairs(p: &FinitePoset, y: &BitSet) -> BitSet {
    let opens = p.down_sets();
    let mut out = p.all();
    for u in &opens {
        for v in &opens {
            let closed = u.complement().union(v);
            if y.is_subset(&closed) {
                out.intersect_with(&closed);
            }
        }
    }
    out
}

#[test]
fn closures_match_enumeration() {
    for p in common::zoo() {
        let ops = p.closure_operator();
        let opens = p.down_sets();
        let closed: Vec<BitSet> = opens.iter().map(|o| o.complement()).collect();
        for y in subsets(p.len()) {
            let direct = |family: &[BitSet]| {
                family.iter().filter(|c| y.is_subset(c)).fold(p.all(), |acc, c| acc.intersection(c))
            };
            assert_eq!(ops.closure(&y, ClosureMode::Specialization), direct(&closed));
            assert_eq!(ops.closure(&y, ClosureMode::Inverse), direct(&opens));
            assert_eq!(ops.closure(&y, ClosureMode::Generization), p.down_closure(&y));
            assert_eq!(ops.closure(&y, ClosureMode::Constructible), constructible_by_pairs(&p, &y));
        }
    }
}

#[test]
fn hull_kernel_opens_by_definition() {
    for r in common::small_rings() {
        let s = SPrimeSpace::new(&r);
        for x in 0..r.len() {
            let expected = BitSet::from_indices(s.len(), (0..s.len()).filter(|&q| !s.prime(q).members().contains(x)));
            assert_eq!(s.basic_open(x), &expected);
        }
        // closures in the hull-kernel topology are intersections of basic closed sets
        for q in 0..s.len() {
            let point = BitSet::singleton(s.len(), q);
            let by_basis = (0..r.len())
                .map(|x| s.basic_open(x).complement())
                .filter(|c| point.is_subset(c))
                .fold(s.all(), |acc, c| acc.intersection(&c));
            assert_eq!(s.presentation().closure(&point), by_basis);
        }
    }
}

#[test]
fn density_matches_enumeration() {
    for r in common::small_rings().into_iter().chain(common::larger_rings()) {
        let s = SPrimeSpace::new(&r);
        let d = s.density_report();
        assert!(d.dense);
        assert_eq!(d.very_dense, s.very_dense_by_enumeration(), "{}", r.label());
        if let Some((a, b)) = &d.witness {
            assert_ne!(a, b);
            assert_eq!(a.intersection(&s.spec_image()), b.intersection(&s.spec_image()));
            assert!(s.order().is_down_set(a) && s.order().is_down_set(b));
        }
    }
}

#[test]
fn infimum_matches_lower_bound_search() {
    for r in common::small_rings().into_iter().chain(common::larger_rings()) {
        let s = SPrimeSpace::new(&r);
        let m = s.len();
        for mask in 1u64..1 << m {
            let family: Vec<_> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| s.prime(i).clone()).collect();
            let any_lower = (0..m).any(|q| family.iter().all(|f| s.prime(q).is_subset(f)));
            match s.inf(&family).unwrap() {
                Infimum::NoInfimum => assert!(!any_lower),
                Infimum::Prime(q) => assert_eq!(s.glb_exhaustive(&family).unwrap(), Some(q)),
            }
            assert_eq!(s.lub_exhaustive(&family).unwrap(), Some(s.sup(&family).unwrap()));
        }
    }
}

#[test]
fn j_image_against_every_down_set() {
    for r in common::small_rings().into_iter().chain(common::larger_rings()) {
        let c = Correspondence::new(&r);
        let spec = c.space().spectrum();
        // X(R) recomputed as the nonempty subsets of Spec closed under generization
        let x: BTreeSet<BitSet> =
            subsets(spec.len()).filter(|y| !y.is_empty() && spec.order().is_down_set(y)).collect();
        let image: BTreeSet<BitSet> = (0..c.space().len()).map(|q| c.j(q).clone()).collect();
        assert_eq!(image == x, c.surjectivity_report().j_surjective);
        c.check_all().unwrap();
    }
}
