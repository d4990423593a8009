#![allow(dead_code)]

use specprime_core::{FinitePoset, FiniteRing};

/// Rings small enough for every subset-scan oracle.
pub fn small_rings() -> Vec<FiniteRing> {
    let mut out: Vec<FiniteRing> = (2..=16).map(|n| FiniteRing::zmod(n).unwrap()).collect();
    let z = |n| FiniteRing::zmod(n).unwrap();
    for factors in [
        vec![z(2), z(2)],
        vec![z(2), z(3)],
        vec![z(2), z(4)],
        vec![z(4), z(2)],
        vec![z(3), z(3)],
        vec![z(2), z(2), z(2)],
        vec![z(2), z(2), z(3)],
        vec![z(2), z(6)],
    ] {
        out.push(FiniteRing::product(&factors).unwrap());
    }
    for (p, m) in [
        (2, vec![1, 1, 1]),
        (2, vec![0, 0, 1]),
        (2, vec![1, 0, 1]),
        (2, vec![1, 1, 0, 1]),
        (2, vec![0, 1, 0, 1]),
        (3, vec![1, 0, 1]),
        (3, vec![0, 0, 1]),
        (3, vec![2, 0, 1]),
    ] {
        out.push(FiniteRing::poly_quotient(p, &m).unwrap());
    }
    out
}

/// Rings past the subset-scan cap.
pub fn larger_rings() -> Vec<FiniteRing> {
    let z = |n| FiniteRing::zmod(n).unwrap();
    vec![
        z(30),
        z(36),
        z(60),
        FiniteRing::product(&[z(2), z(3), z(5)]).unwrap(),
        FiniteRing::product(&[z(6), z(10)]).unwrap(),
        FiniteRing::poly_quotient(3, &[0, 1, 0, 1]).unwrap(),
        FiniteRing::poly_quotient(2, &[0, 0, 1, 1]).unwrap(),
    ]
}

pub fn zoo() -> Vec<FinitePoset> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(FinitePoset::chain(n));
        out.push(FinitePoset::antichain(n));
    }
    // fence 0 < 1 > 2 < 3 > 4 ...
    for n in 3..=7 {
        let pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| if i % 2 == 0 { (i, i + 1) } else { (i + 1, i) }).collect();
        out.push(FinitePoset::from_relation(n, &pairs).unwrap());
    }
    // diamond: bottom 0, middles 1..=k, top k+1
    for k in 1..=4 {
        let mut pairs: Vec<(usize, usize)> = (1..=k).map(|m| (0, m)).collect();
        pairs.extend((1..=k).map(|m| (m, k + 1)));
        out.push(FinitePoset::from_relation(k + 2, &pairs).unwrap());
    }
    out
}
