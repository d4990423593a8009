//! Named checks, the input kinds they apply to, and their JSON reports.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use specprime_core::poset::check_x_functorial;
use specprime_core::sprime::{check_s_functorial, DEFAULT_BRUTEFORCE_CAP};
use specprime_core::{
    dedekind_verdict, diagram_check, BitSet, CheckResult, ClosureMode, Correspondence, FinitePoset, FiniteRing,
    Infimum, RingHom, SPrimeSpace, TopologyPresentation, UfdModel, Violation, XSpace,
};

use crate::input::{BuiltHom, BuiltPoset, Input, InputKind};
use crate::labels::Labeler;

/// Posets up to this size have every subset checked by `closures`.
pub const CLOSURE_EXHAUSTIVE_LIMIT: usize = 12;
/// Random subsets checked by `closures` on larger posets.
pub const CLOSURE_RANDOM_SUBSETS: usize = 1000;
/// Pairs checked by `monotone_p` when the exhaustive list is longer.
pub const MONOTONE_P_SAMPLES: usize = 256;
/// `lattice` checks every family when `S(R)` has at most this many points,
/// and families of at most three members otherwise.
pub const LATTICE_ALL_FAMILIES_LIMIT: usize = 15;
/// Largest UFD model whose axioms are checked over products of samples.
pub const UFD_AXIOM_LIMIT: usize = 6;
/// Largest UFD model whose presentation goes through the spectral verifier.
pub const UFD_SPECTRAL_LIMIT: usize = 8;

pub const RING_CHECKS: [&str; 11] = [
    "ideals",
    "spec",
    "sprimes",
    "hull_kernel",
    "xspace",
    "correspondence",
    "surjectivity",
    "lattice",
    "density",
    "prime_avoidance",
    "monotone_p",
];
pub const POSET_CHECKS: [&str; 3] = ["closures", "spectral", "xspace"];
pub const HOM_CHECKS: [&str; 3] = ["s_map", "functor", "diagram"];
pub const PROFILE_CHECKS: [&str; 1] = ["dedekind"];
pub const UFD_CHECKS: [&str; 1] = ["ufd"];

/// Every check name, each once, in a stable order.
pub fn all_checks() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for name in RING_CHECKS.iter().chain(&POSET_CHECKS).chain(&HOM_CHECKS).chain(&PROFILE_CHECKS).chain(&UFD_CHECKS) {
        if !out.contains(name) {
            out.push(name);
        }
    }
    out
}

pub fn is_known(name: &str) -> bool {
    all_checks().contains(&name)
}

pub fn checks_for(kind: InputKind) -> &'static [&'static str] {
    match kind {
        InputKind::Ring => &RING_CHECKS,
        InputKind::Poset => &POSET_CHECKS,
        InputKind::Hom => &HOM_CHECKS,
        InputKind::Profile => &PROFILE_CHECKS,
        InputKind::Ufd => &UFD_CHECKS,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub bruteforce_cap: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { bruteforce_cap: DEFAULT_BRUTEFORCE_CAP, seed: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub input: String,
    pub kind: InputKind,
    pub check: &'static str,
    pub status: Status,
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Runs one check on one input; `None` when the check does not apply to the
/// input's kind.
pub fn run_check(input: &Input, check: &str, cfg: &RunConfig) -> Option<Report> {
    let name = *checks_for(input.kind()).iter().find(|&&c| c == check)?;
    let (data, outcome) = match input {
        Input::Ring(r) => ring_check(r, name, cfg),
        Input::Poset(p) => poset_check(p, name, cfg),
        Input::Hom(h) => hom_check(h, name),
        Input::Profile(p) => {
            let verdict = dedekind_verdict(p);
            (
                json!({ "free_rank": p.free_rank, "torsion_invariants": p.torsion_invariants, "verdict": verdict }),
                Ok(()),
            )
        }
        Input::Ufd(u) => ufd_check(u),
    };
    Some(Report {
        input: input.label(),
        kind: input.kind(),
        check: name,
        status: if outcome.is_ok() { Status::Pass } else { Status::Fail },
        data,
        violation: outcome.err(),
    })
}

/// Every applicable check from `names` on `input`, in the order given.
pub fn run_checks(input: &Input, names: &[&str], cfg: &RunConfig) -> Vec<Report> {
    names.iter().filter_map(|c| run_check(input, c, cfg)).collect()
}

fn sets(v: impl IntoIterator<Item = BitSet>) -> Vec<Vec<usize>> {
    v.into_iter().map(|s| s.to_vec()).collect()
}

fn fail(check: &'static str, detail: impl Into<String>) -> Violation {
    Violation::new(check, detail)
}

fn all_of(results: impl IntoIterator<Item = CheckResult>) -> CheckResult {
    results.into_iter().collect::<Result<Vec<()>, _>>().map(|_| ())
}

fn ring_check(r: &FiniteRing, name: &'static str, cfg: &RunConfig) -> (Value, CheckResult) {
    match name {
        "ideals" => {
            let ideals = r.enumerate_ideals();
            let spec = r.spectrum();
            let data = json!({
                "count": ideals.len(),
                "ideals": sets(ideals.iter().map(|i| i.members().clone())),
                "nilradical": r.nilradical().members().to_vec(),
                "units": r.units().to_vec(),
            });
            (data, spec.check_radicals(r))
        }
        "spec" => {
            let spec = r.spectrum();
            let l = Labeler::new(r);
            let data = json!({
                "count": spec.len(),
                "primes": sets(spec.primes().iter().map(|p| p.members().clone())),
                "labels": spec.primes().iter().map(|p| l.subset(p.members())).collect::<Vec<_>>(),
                "order": spec.order().relation(),
            });
            (data, spec.check_antichain())
        }
        "sprimes" => {
            let c = Correspondence::new(r);
            let s = c.space();
            let l = Labeler::new(r);
            let oracle = s.check_bruteforce(cfg.bruteforce_cap);
            let data = json!({
                "count": s.len(),
                "primes": sets(s.primes().iter().map(|q| q.members().clone())),
                "labels": (0..s.len()).map(|q| l.sprime(&c, q)).collect::<Vec<_>>(),
                "covers": s.order().covers(),
                "spec_points": s.spec_embedding(),
                "bruteforce": match &oracle { None => "skipped", Some(Ok(())) => "agree", Some(Err(_)) => "differ" },
                "bruteforce_cap": cfg.bruteforce_cap,
            });
            (data, all_of([s.check_members(), oracle.unwrap_or(Ok(()))]))
        }
        "hull_kernel" => {
            let s = SPrimeSpace::new(r);
            let report = s.verify_spectral();
            let data = json!({
                "points": s.len(),
                "basic_opens": sets(s.presentation().basis().iter().cloned()),
                "spectral": report,
            });
            let outcome =
                all_of([s.check_basis_multiplicative(), s.check_order(), s.check_spec_embedding(), s.check_spectral()]);
            (data, outcome)
        }
        "xspace" => {
            let spec = r.spectrum();
            xspace_check(spec.order())
        }
        "correspondence" => {
            let c = Correspondence::new(r);
            let data = json!({
                "s_points": c.space().len(),
                "x_points": c.xspace().len(),
                "j": (0..c.space().len()).map(|q| c.j(q).to_vec()).collect::<Vec<_>>(),
            });
            (data, c.check_all())
        }
        "surjectivity" => {
            let c = Correspondence::new(r);
            let report = c.surjectivity_report();
            let outcome = report.check_equivalences().and_then(|()| {
                if report.all_true() {
                    Ok(())
                } else {
                    Err(fail("finite_ring_surjectivity", "a finite ring failed a homeomorphism condition"))
                }
            });
            (serde_json::to_value(&report).expect("report serializes"), outcome)
        }
        "lattice" => lattice_check(r),
        "density" => {
            let s = SPrimeSpace::new(r);
            let d = s.density_report();
            let by_enumeration = s.very_dense_by_enumeration();
            let data = json!({
                "dense": d.dense,
                "very_dense": d.very_dense,
                "spec_closure": d.spec_closure.to_vec(),
                "witness": d.witness.as_ref().map(|(a, b)| [a.to_vec(), b.to_vec()]),
            });
            let outcome = if !d.dense {
                Err(fail("density", "closure of Spec(R) is not all of S(R)"))
            } else if by_enumeration != d.very_dense {
                Err(fail("very_dense_oracle", "open-set enumeration disagrees with the point criterion"))
            } else {
                Ok(())
            };
            (data, outcome)
        }
        "prime_avoidance" => {
            let c = Correspondence::new(r);
            let spec = c.space().spectrum();
            let k = spec.len();
            let mut checked = 0usize;
            let mut outcome = Ok(());
            for mask in 1u64..1 << k {
                if mask.count_ones() > 3 {
                    continue;
                }
                let primes: Vec<_> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| spec.prime(i).clone()).collect();
                checked += 1;
                match c.prime_avoidance_j(&primes) {
                    Ok(rep) if rep.holds => {}
                    Ok(rep) => {
                        outcome = Err(fail("prime_avoidance_j", "j of a union differs from the union of j")
                            .with_witness(rep.j_of_union.iter())
                            .with_witness(rep.union_of_j.iter()));
                        break;
                    }
                    Err(e) => {
                        outcome = Err(fail("prime_avoidance_j", e.to_string()));
                        break;
                    }
                }
            }
            (json!({ "tuples_checked": checked, "max_tuple": 3 }), outcome)
        }
        "monotone_p" => monotone_p_check(r, cfg),
        _ => unreachable!("ring checks are listed in RING_CHECKS"),
    }
}

fn xspace_check(base: &FinitePoset) -> (Value, CheckResult) {
    let x = XSpace::new(base);
    let report = x.presentation().verify_spectral();
    let data = json!({
        "points": sets(x.points().iter().cloned()),
        "covers": x.order().covers(),
        "spectral": report,
    });
    let spectral = if report.is_spectral() { Ok(()) } else { Err(fail("xspace_spectral", format!("{report:?}"))) };
    (data, all_of([x.check_order(), x.check_phi(base), spectral]))
}

fn lattice_check(r: &FiniteRing) -> (Value, CheckResult) {
    let s = SPrimeSpace::new(r);
    let m = s.len();
    let families: Vec<Vec<usize>> = if m <= LATTICE_ALL_FAMILIES_LIMIT {
        (1u64..1 << m).map(|mask| (0..m).filter(|&i| mask >> i & 1 == 1).collect()).collect()
    } else {
        let mut v: Vec<Vec<usize>> = (0..m).map(|a| vec![a]).collect();
        for a in 0..m {
            for b in a + 1..m {
                v.push(vec![a, b]);
                v.extend((b + 1..m).map(|c| vec![a, b, c]));
            }
        }
        v
    };
    let mut no_infimum = 0usize;
    let mut outcome = Ok(());
    for fam in &families {
        let family: Vec<_> = fam.iter().map(|&i| s.prime(i).clone()).collect();
        let witness = || fam.iter().copied();
        let step = (|| -> CheckResult {
            let sup = s.sup(&family).map_err(|e| fail("sup", e.to_string()).with_witness(witness()))?;
            let lub = s.lub_exhaustive(&family).map_err(|e| fail("sup", e.to_string()))?;
            if lub.as_ref() != Some(&sup) {
                return Err(fail("sup", "union is not the least upper bound").with_witness(witness()));
            }
            let any_lower = (0..m).any(|q| family.iter().all(|f| s.prime(q).is_subset(f)));
            match s.inf(&family).map_err(|e| fail("inf", e.to_string()))? {
                Infimum::NoInfimum if any_lower => {
                    Err(fail("inf", "NoInfimum although a lower bound exists").with_witness(witness()))
                }
                Infimum::NoInfimum => {
                    no_infimum += 1;
                    Ok(())
                }
                Infimum::Prime(q) => {
                    let glb = s.glb_exhaustive(&family).map_err(|e| fail("inf", e.to_string()))?;
                    if glb.as_ref() == Some(&q) {
                        Ok(())
                    } else {
                        Err(fail("inf", "constructed infimum is not the greatest lower bound").with_witness(witness()))
                    }
                }
            }
        })();
        if step.is_err() {
            outcome = step;
            break;
        }
    }
    let data = json!({
        "points": m,
        "families_checked": families.len(),
        "all_families": m <= LATTICE_ALL_FAMILIES_LIMIT,
        "no_infimum": no_infimum,
    });
    (data, outcome)
}

fn monotone_p_check(r: &FiniteRing, cfg: &RunConfig) -> (Value, CheckResult) {
    let c = Correspondence::new(r);
    let k = c.space().spectrum().len();
    let subsets: Vec<BitSet> = (1u64..1 << k).map(|m| BitSet::from_mask(k, m)).collect();
    let total = subsets.len() * subsets.len();
    let pairs: Vec<(usize, usize)> = if total <= MONOTONE_P_SAMPLES {
        (0..subsets.len()).flat_map(|a| (0..subsets.len()).map(move |b| (a, b))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        (0..MONOTONE_P_SAMPLES)
            .map(|_| (rng.random_range(0..subsets.len()), rng.random_range(0..subsets.len())))
            .collect()
    };
    let mut nested = 0usize;
    let mut outcome = Ok(());
    for &(a, b) in &pairs {
        match c.monotone_p_check(&subsets[a], &subsets[b]) {
            Ok(rep) => {
                nested += rep.closures_nested as usize;
                if !(rep.implication_holds && rep.closure_invariant) {
                    outcome = Err(fail("monotone_p", "P is not monotone along inverse closures")
                        .with_witness(subsets[a].iter())
                        .with_witness(subsets[b].iter()));
                    break;
                }
            }
            Err(e) => {
                outcome = Err(fail("monotone_p", e.to_string()));
                break;
            }
        }
    }
    let data = json!({
        "pairs_checked": pairs.len(),
        "exhaustive": total <= MONOTONE_P_SAMPLES,
        "nested_pairs": nested,
        "seed": cfg.seed,
    });
    (data, outcome)
}

/// The subsets the `closures` check visits: all of them up to
/// [`CLOSURE_EXHAUSTIVE_LIMIT`] points, a seeded sample beyond.
pub fn closure_subsets(n: usize, seed: u64) -> Vec<BitSet> {
    if n <= CLOSURE_EXHAUSTIVE_LIMIT {
        (0u64..1 << n).map(|m| BitSet::from_mask(n, m)).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut points: Vec<usize> = (0..n).collect();
        (0..CLOSURE_RANDOM_SUBSETS)
            .map(|_| {
                points.shuffle(&mut rng);
                let size = rng.random_range(0..=n);
                BitSet::from_indices(n, points[..size].iter().copied())
            })
            .collect()
    }
}

/// Inverse closure equals generization closure, constructible closure is the
/// identity, and the closure in the space itself is the up-closure.
pub fn check_closure_identities(p: &FinitePoset, subsets: &[BitSet]) -> CheckResult {
    let ops = p.closure_operator();
    for y in subsets {
        let witness = || y.iter();
        if ops.closure(y, ClosureMode::Inverse) != ops.closure(y, ClosureMode::Generization) {
            return Err(
                fail("inverse_closure", "inverse closure differs from generization closure").with_witness(witness())
            );
        }
        if ops.closure(y, ClosureMode::Constructible) != *y {
            return Err(
                fail("constructible_closure", "constructible closure is not the identity").with_witness(witness())
            );
        }
        let cl = ops.closure(y, ClosureMode::Specialization);
        if !(p.is_up_set(&cl) && y.is_subset(&cl) && ops.closure(&cl, ClosureMode::Specialization) == cl) {
            return Err(fail("specialization_closure", "closure is not a closed superset").with_witness(witness()));
        }
    }
    Ok(())
}

fn poset_check(p: &BuiltPoset, name: &'static str, cfg: &RunConfig) -> (Value, CheckResult) {
    let poset = &p.poset;
    match name {
        "closures" => {
            let subsets = closure_subsets(poset.len(), cfg.seed);
            let data = json!({
                "points": poset.len(),
                "subsets_checked": subsets.len(),
                "exhaustive": poset.len() <= CLOSURE_EXHAUSTIVE_LIMIT,
            });
            (data, check_closure_identities(poset, &subsets))
        }
        "spectral" => {
            let t = TopologyPresentation::alexandrov(poset);
            let report = t.verify_spectral();
            let order_matches = t.specialization_order().map(|o| o == *poset).unwrap_or(false);
            let data = json!({ "points": poset.len(), "opens": t.basis().len(), "spectral": report });
            let outcome = if !report.is_spectral() {
                Err(fail("alexandrov_spectral", format!("{report:?}")))
            } else if !order_matches {
                Err(fail("alexandrov_order", "specialization order of the down-set topology differs from the poset"))
            } else {
                Ok(())
            };
            (data, outcome)
        }
        "xspace" => xspace_check(poset),
        _ => unreachable!("poset checks are listed in POSET_CHECKS"),
    }
}

fn hom_check(h: &BuiltHom, name: &'static str) -> (Value, CheckResult) {
    let f = h.hom();
    let (cs, ct) = (Correspondence::new(&h.source), Correspondence::new(&h.target));
    match name {
        "s_map" => match SPrimeSpace::s_map(&f, cs.space(), ct.space()) {
            Ok(m) => {
                let data = json!({
                    "map": m.as_slice(),
                    "images": sets(m.as_slice().iter().map(|&q| cs.space().prime(q).members().clone())),
                });
                (data, SPrimeSpace::check_s_map_basis(&f, cs.space(), ct.space(), &m))
            }
            Err(e) => (Value::Null, Err(fail("s_map", e.to_string()))),
        },
        "functor" => {
            let id = RingHom::identity(&h.target);
            let g = h.then_hom().unwrap_or(id);
            let third = Correspondence::new(g.target());
            let spaces = [cs.space(), ct.space(), third.space()];
            let s_law = check_s_functorial(&f, &g, spaces);
            let x_law = (|| -> CheckResult {
                let e = |e: specprime_core::Error| fail("x_functor", e.to_string());
                let fa = f.spec_map(ct.space().spectrum(), cs.space().spectrum()).map_err(e)?;
                let ga = g.spec_map(third.space().spectrum(), ct.space().spectrum()).map_err(e)?;
                check_x_functorial(&ga, &fa, [third.xspace(), ct.xspace(), cs.xspace()])
            })();
            let data = json!({ "composite": h.then.is_some(), "rings": [h.source.label(), h.target.label(), g.target().label()] });
            (data, all_of([s_law, x_law]))
        }
        "diagram" => match diagram_check(&f, &cs, &ct) {
            Ok(rep) => (serde_json::to_value(&rep).expect("report serializes"), rep.check()),
            Err(e) => (Value::Null, Err(fail("diagram", e.to_string()))),
        },
        _ => unreachable!("hom checks are listed in HOM_CHECKS"),
    }
}

fn ufd_check(u: &UfdModel) -> (Value, CheckResult) {
    let n = u.n();
    let count_ok = if u.sprime_count() == 1 << n { Ok(()) } else { Err(fail("ufd_count", "|S| != 2^n")) };
    let axioms = if n <= UFD_AXIOM_LIMIT { u.check_axioms() } else { Ok(()) };
    let spectral = if n <= UFD_SPECTRAL_LIMIT {
        let report = u.hull_kernel_presentation().verify_spectral();
        if report.is_spectral() {
            Ok(())
        } else {
            Err(fail("ufd_spectral", format!("{report:?}")))
        }
    } else {
        Ok(())
    };
    let families = u.compare_open_families();
    let open_count = families.as_ref().and_then(|r| r.as_ref().ok().copied());
    let data = json!({
        "n": n,
        "sprimes": u.sprime_count(),
        "axioms_checked": n <= UFD_AXIOM_LIMIT,
        "spectral_checked": n <= UFD_SPECTRAL_LIMIT,
        "open_sets": open_count,
    });
    let outcome = all_of([
        count_ok,
        axioms,
        u.check_bijection(),
        u.check_order(),
        u.check_homeomorphism(),
        families.map(|r| r.map(|_| ())).unwrap_or(Ok(())),
        spectral,
    ]);
    (data, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::InputSpec;

    fn input(json: &str) -> Input {
        serde_json::from_str::<InputSpec>(json).unwrap().build().unwrap()
    }

    #[test]
    fn every_ring_check_passes_on_z12() {
        let r = input(r#"{"kind":"zmod","n":12}"#);
        for report in run_checks(&r, &RING_CHECKS, &RunConfig::default()) {
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn inapplicable_checks_are_skipped() {
        let r = input(r#"{"kind":"zmod","n":6}"#);
        assert!(run_check(&r, "dedekind", &RunConfig::default()).is_none());
        assert!(run_check(&r, "closures", &RunConfig::default()).is_none());
    }

    #[test]
    fn sprimes_report_contents() {
        let r = input(r#"{"kind":"zmod","n":6}"#);
        let rep = run_check(&r, "sprimes", &RunConfig::default()).unwrap();
        assert_eq!(rep.data["count"], 3);
        assert_eq!(rep.data["bruteforce"], "agree");
        let capped = run_check(&r, "sprimes", &RunConfig { bruteforce_cap: 4, seed: 0 }).unwrap();
        assert_eq!(capped.data["bruteforce"], "skipped");
    }

    #[test]
    fn density_witness_for_z6() {
        let r = input(r#"{"kind":"zmod","n":6}"#);
        let rep = run_check(&r, "density", &RunConfig::default()).unwrap();
        assert_eq!(rep.data["very_dense"], false);
        assert_eq!(rep.data["witness"], json!([[0, 1], [0, 1, 2]]));
    }

    #[test]
    fn other_kinds() {
        let cfg = RunConfig::default();
        let p = input(r#"{"kind":"poset","points":4,"leq":[[0,2],[1,2],[1,3]]}"#);
        assert!(run_checks(&p, &POSET_CHECKS, &cfg).iter().all(Report::passed));
        let h = input(
            r#"{"kind":"hom","source":{"kind":"zmod","n":12},"target":{"kind":"zmod","n":6},"map":[0,1,2,3,4,5,0,1,2,3,4,5],
                "then":{"target":{"kind":"zmod","n":3},"map":[0,1,2,0,1,2]}}"#,
        );
        assert!(run_checks(&h, &HOM_CHECKS, &cfg).iter().all(Report::passed));
        let c = input(r#"{"kind":"profile","free_rank":1}"#);
        assert_eq!(run_check(&c, "dedekind", &cfg).unwrap().data["verdict"], "NotSurjective");
        let u = input(r#"{"kind":"ufd","n":3}"#);
        let rep = run_check(&u, "ufd", &cfg).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.data["open_sets"], 20);
    }

    #[test]
    fn large_posets_use_random_subsets() {
        assert_eq!(closure_subsets(13, 7).len(), CLOSURE_RANDOM_SUBSETS);
        assert_eq!(closure_subsets(13, 7), closure_subsets(13, 7));
        assert_eq!(closure_subsets(4, 7).len(), 16);
    }
}
