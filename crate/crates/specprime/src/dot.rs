//! Hasse diagrams in Graphviz DOT.
//!
//! Nodes appear in the canonical order of their bit vectors and edges are
//! the covering pairs, drawn from the generic (smaller) point up to the
//! closed one, so identical inputs give byte-identical output.

use std::fmt::Write;
use std::str::FromStr;

use specprime_core::{Correspondence, FinitePoset, XSpace};

use crate::input::{BuiltPoset, Input};
use crate::labels::Labeler;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    Spec,
    Sprimes,
    Xspace,
}

impl FromStr for SpaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "spec" => Ok(SpaceKind::Spec),
            "sprimes" => Ok(SpaceKind::Sprimes),
            "xspace" => Ok(SpaceKind::Xspace),
            other => Err(Error::Usage(format!("unknown space {other:?}; expected spec, sprimes or xspace"))),
        }
    }
}

impl SpaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Spec => "spec",
            SpaceKind::Sprimes => "sprimes",
            SpaceKind::Xspace => "xspace",
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn hasse_dot(title: &str, order: &FinitePoset, labels: &[String]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(title)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, label) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(label)).unwrap();
    }
    for (a, b) in order.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn ring_dot(c: &Correspondence<'_>, space: SpaceKind) -> String {
    let l = Labeler::new(c.ring());
    let label = c.ring().label();
    match space {
        SpaceKind::Spec => {
            let spec = c.space().spectrum();
            let labels: Vec<String> = (0..spec.len()).map(|i| l.prime(c, i)).collect();
            hasse_dot(&format!("Spec({label})"), spec.order(), &labels)
        }
        SpaceKind::Sprimes => {
            let labels: Vec<String> = (0..c.space().len()).map(|q| l.sprime(c, q)).collect();
            hasse_dot(&format!("S({label})"), c.space().order(), &labels)
        }
        SpaceKind::Xspace => {
            let labels: Vec<String> = (0..c.xspace().len()).map(|y| l.xpoint(c, y)).collect();
            hasse_dot(&format!("X({label})"), c.xspace().order(), &labels)
        }
    }
}

pub fn poset_dot(p: &BuiltPoset, space: SpaceKind) -> Result<String, Error> {
    match space {
        SpaceKind::Spec => {
            let labels: Vec<String> = (0..p.poset.len()).map(|i| p.labels.label(i)).collect();
            Ok(hasse_dot(&p.name, &p.poset, &labels))
        }
        SpaceKind::Xspace => {
            let x = XSpace::new(&p.poset);
            let labels: Vec<String> = x
                .points()
                .iter()
                .map(|d| format!("{{{}}}", d.iter().map(|i| p.labels.label(i)).collect::<Vec<_>>().join(", ")))
                .collect();
            Ok(hasse_dot(&format!("X({})", p.name), x.order(), &labels))
        }
        SpaceKind::Sprimes => Err(Error::Usage("semigroup primes need a ring input".into())),
    }
}

/// DOT text for any input that has the requested space.
pub fn export_dot(input: &Input, space: SpaceKind) -> Result<String, Error> {
    match input {
        Input::Ring(r) => Ok(ring_dot(&Correspondence::new(r), space)),
        Input::Poset(p) => poset_dot(p, space),
        other => Err(Error::Usage(format!("no {} diagram for a {:?} input", space.name(), other.kind()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use specprime_core::FiniteRing;

    fn edges(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    fn nodes(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("[label=")).count()
    }

    #[test]
    fn examples() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let d = ring_dot(&Correspondence::new(&z6), SpaceKind::Sprimes);
        assert_eq!((nodes(&d), edges(&d)), (3, 2));
        assert!(d.contains("n0 -> n2;") && d.contains("n1 -> n2;"));

        let f = FiniteRing::zmod(7).unwrap();
        let d = ring_dot(&Correspondence::new(&f), SpaceKind::Spec);
        assert_eq!((nodes(&d), edges(&d)), (1, 0));

        let z30 = FiniteRing::zmod(30).unwrap();
        let d = ring_dot(&Correspondence::new(&z30), SpaceKind::Xspace);
        assert_eq!((nodes(&d), edges(&d)), (7, 9));
    }

    #[test]
    fn output_is_byte_stable() {
        let a = ring_dot(&Correspondence::new(&FiniteRing::zmod(60).unwrap()), SpaceKind::Sprimes);
        let b = ring_dot(&Correspondence::new(&FiniteRing::zmod(60).unwrap()), SpaceKind::Sprimes);
        assert_eq!(a, b);
        assert!(a.starts_with("digraph \"S(Z/60)\" {\n  rankdir=BT;"));
    }
}
