//! The default input corpus.

use specprime_core::FiniteRing;

use crate::input::{HomSpec, InputSpec, Points, PosetSpec, ProfileSpec, RingSpec, ThenSpec, UfdSpec};
use crate::job::{Format, JobSpec};

/// Largest ring in the product part of the corpus.
pub const PRODUCT_SIZE_LIMIT: usize = 64;
/// Largest poset in the zoo.
pub const ZOO_SIZE_LIMIT: usize = 8;
/// Largest UFD model in the corpus.
pub const UFD_LIMIT: usize = 10;

fn zmod(n: usize) -> RingSpec {
    RingSpec::Zmod { n }
}

fn poly(p: u64, modulus: &[i64]) -> RingSpec {
    RingSpec::Polyquot { p, modulus: modulus.to_vec() }
}

fn build(spec: &RingSpec) -> FiniteRing {
    spec.build().expect("corpus rings are valid")
}

/// `Z/n` for `2 <= n <= 40` and `n = 60`.
pub fn zmod_rings() -> Vec<RingSpec> {
    (2..=40).chain([60]).map(zmod).collect()
}

/// Every monic modulus of degree 1 to 3 over `F2` and `F3`.
pub fn poly_rings() -> Vec<RingSpec> {
    let mut out = Vec::new();
    for p in [2u64, 3] {
        for d in 1..=3u32 {
            for low in 0..(p as usize).pow(d) {
                let mut modulus: Vec<i64> = (0..d).map(|k| (low / (p as usize).pow(k) % p as usize) as i64).collect();
                modulus.push(1);
                out.push(poly(p, &modulus));
            }
        }
    }
    out
}

/// Products of two or three factors, in non-decreasing factor order, of at
/// most [`PRODUCT_SIZE_LIMIT`] elements.
pub fn product_rings() -> Vec<RingSpec> {
    let mut base: Vec<(RingSpec, usize)> = (2..=32).map(|n| (zmod(n), n)).collect();
    base.extend([
        (poly(2, &[1, 1, 1]), 4),
        (poly(2, &[0, 0, 1]), 4),
        (poly(3, &[1, 0, 1]), 9),
        (poly(2, &[1, 1, 0, 1]), 8),
    ]);
    let mut out = Vec::new();
    for a in 0..base.len() {
        for b in a..base.len() {
            let ab = base[a].1 * base[b].1;
            if ab > PRODUCT_SIZE_LIMIT {
                continue;
            }
            out.push(RingSpec::Product { factors: vec![base[a].0.clone(), base[b].0.clone()] });
            for c in b..base.len() {
                if ab * base[c].1 <= PRODUCT_SIZE_LIMIT {
                    out.push(RingSpec::Product {
                        factors: vec![base[a].0.clone(), base[b].0.clone(), base[c].0.clone()],
                    });
                }
            }
        }
    }
    out
}

pub fn rings() -> Vec<RingSpec> {
    let mut out = zmod_rings();
    out.extend(product_rings());
    out.extend(poly_rings());
    out
}

/// `k ↦ k·1` from `Z/c`, `c` the characteristic of `r`.
fn canonical_map(r: &FiniteRing) -> Vec<usize> {
    let mut map = vec![r.zero()];
    for k in 1..r.characteristic() {
        map.push(r.add(map[k - 1], r.one()));
    }
    map
}

fn projection(r: &FiniteRing, sizes: &[usize], k: usize) -> Vec<usize> {
    let stride: usize = sizes[k + 1..].iter().product();
    (0..r.len()).map(|x| x / stride % sizes[k]).collect()
}

fn hom(source: RingSpec, target: RingSpec, map: Vec<usize>) -> InputSpec {
    InputSpec::Hom(HomSpec { source, target, map, then: None })
}

/// Quotients, projections, canonical maps from `Z/c`, Frobenius maps, and
/// composable pairs of these.
pub fn homs() -> Vec<InputSpec> {
    let mut out = Vec::new();
    for n in (2..=40).chain([60]) {
        for d in (2..n).filter(|d| n % d == 0) {
            out.push(hom(zmod(n), zmod(d), (0..n).map(|x| x % d).collect()));
            for e in (2..d).filter(|e| d % e == 0) {
                out.push(InputSpec::Hom(HomSpec {
                    source: zmod(n),
                    target: zmod(d),
                    map: (0..n).map(|x| x % d).collect(),
                    then: Some(ThenSpec { target: zmod(e), map: (0..d).map(|x| x % e).collect() }),
                }));
            }
        }
    }
    for spec in product_rings() {
        let RingSpec::Product { factors } = &spec else { unreachable!() };
        let r = build(&spec);
        let sizes: Vec<usize> = factors.iter().map(|f| build(f).len()).collect();
        for (k, f) in factors.iter().enumerate() {
            out.push(hom(spec.clone(), f.clone(), projection(&r, &sizes, k)));
        }
        let c = r.characteristic();
        out.push(InputSpec::Hom(HomSpec {
            source: zmod(c),
            target: spec.clone(),
            map: canonical_map(&r),
            then: Some(ThenSpec { target: factors[0].clone(), map: projection(&r, &sizes, 0) }),
        }));
    }
    for spec in poly_rings() {
        let r = build(&spec);
        let RingSpec::Polyquot { p, .. } = spec else { unreachable!() };
        out.push(hom(zmod(p as usize), spec.clone(), canonical_map(&r)));
        out.push(hom(spec.clone(), spec.clone(), (0..r.len()).map(|x| r.pow(x, p as usize)).collect()));
    }
    out
}

fn poset(name: String, n: usize, leq: Vec<[usize; 2]>) -> InputSpec {
    InputSpec::Poset(PosetSpec { name: Some(name), points: Points::Count(n), leq })
}

/// Chains, antichains, fences, diamonds, a crown and the Boolean lattice
/// `B3`, none above [`ZOO_SIZE_LIMIT`] points.
pub fn posets() -> Vec<InputSpec> {
    let mut out = Vec::new();
    for n in 1..=ZOO_SIZE_LIMIT {
        out.push(poset(format!("chain {n}"), n, (1..n).map(|i| [i - 1, i]).collect()));
    }
    for n in 2..=ZOO_SIZE_LIMIT {
        out.push(poset(format!("antichain {n}"), n, Vec::new()));
    }
    for n in 3..=ZOO_SIZE_LIMIT {
        let leq = (1..n).map(|i| if i % 2 == 1 { [i - 1, i] } else { [i, i - 1] }).collect();
        out.push(poset(format!("fence {n}"), n, leq));
    }
    for k in 1..=ZOO_SIZE_LIMIT - 2 {
        let top = k + 1;
        let leq = (1..=k).flat_map(|m| [[0, m], [m, top]]).collect();
        out.push(poset(format!("diamond {k}"), k + 2, leq));
    }
    let crown = (0..3).flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| [i, 3 + j])).collect();
    out.push(poset("crown 6".into(), 6, crown));
    let b3 = (0..8usize).flat_map(|s| (0..3).filter(move |b| s >> b & 1 == 0).map(move |b| [s, s | 1 << b])).collect();
    out.push(poset("boolean lattice B3".into(), 8, b3));
    out
}

/// Free rank 0 to 3 against torsion parts `0`, `Z/2`, `Z/5`, `Z/2 x Z/4`.
pub fn profiles() -> Vec<InputSpec> {
    let torsion: [&[u64]; 4] = [&[], &[2], &[5], &[2, 4]];
    (0..=3)
        .flat_map(|r| torsion.iter().map(move |t| ProfileSpec { free_rank: r, torsion_invariants: t.to_vec() }.into()))
        .collect()
}

pub fn ufds() -> Vec<InputSpec> {
    (0..=UFD_LIMIT).map(|n| UfdSpec { n }.into()).collect()
}

/// Every corpus input, rings first.
pub fn inputs() -> Vec<InputSpec> {
    let mut out: Vec<InputSpec> = rings().into_iter().map(InputSpec::from).collect();
    out.extend(homs());
    out.extend(posets());
    out.extend(profiles());
    out.extend(ufds());
    out
}

/// The corpus with every check, writing JSON reports to `specprime-out`.
pub fn default_job() -> JobSpec {
    JobSpec { inputs: inputs(), checks: None, output: "specprime-out".into(), formats: vec![Format::Json] }
}

/// `job` as JSON with one input per line.
pub fn render(job: &JobSpec) -> String {
    let mut out = String::from("{\n  \"inputs\": [\n");
    for (i, input) in job.inputs.iter().enumerate() {
        let sep = if i + 1 < job.inputs.len() { "," } else { "" };
        out.push_str(&format!("    {}{sep}\n", serde_json::to_string(input).expect("inputs serialize")));
    }
    out.push_str("  ],\n");
    if let Some(checks) = &job.checks {
        out.push_str(&format!("  \"checks\": {},\n", serde_json::to_string(checks).expect("names serialize")));
    }
    out.push_str(&format!("  \"output\": {},\n", serde_json::to_string(&job.output).expect("paths serialize")));
    out.push_str(&format!("  \"formats\": {}\n}}\n", serde_json::to_string(&job.formats).expect("formats serialize")));
    out
}
