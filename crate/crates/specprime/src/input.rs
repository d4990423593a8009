//! JSON input schemas and their construction into core objects.

use serde::{Deserialize, Serialize};
use specprime_core::{ClassGroupProfile, FinitePoset, FiniteRing, RingHom, UfdModel};

use crate::Error;

/// A ring description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RingSpec {
    Zmod { n: usize },
    Product { factors: Vec<RingSpec> },
    Polyquot { p: u64, modulus: Vec<i64> },
}

impl RingSpec {
    pub fn build(&self) -> Result<FiniteRing, Error> {
        Ok(match self {
            RingSpec::Zmod { n } => FiniteRing::zmod(*n)?,
            RingSpec::Product { factors } => {
                let built = factors.iter().map(RingSpec::build).collect::<Result<Vec<_>, _>>()?;
                FiniteRing::product(&built)?
            }
            RingSpec::Polyquot { p, modulus } => FiniteRing::poly_quotient(*p, modulus)?,
        })
    }
}

/// The second map of a composable pair: `source -> target -> then.target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThenSpec {
    pub target: RingSpec,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomSpec {
    pub source: RingSpec,
    pub target: RingSpec,
    /// Image of each source element, as a target element index.
    pub map: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub then: Option<ThenSpec>,
}

/// Point labels, or just their number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Points {
    Count(usize),
    Labels(Vec<String>),
}

impl Points {
    pub fn len(&self) -> usize {
        match self {
            Points::Count(n) => *n,
            Points::Labels(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn label(&self, i: usize) -> String {
        match self {
            Points::Count(_) => i.to_string(),
            Points::Labels(v) => v[i].clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub points: Points,
    /// Pairs `[i, j]` meaning `i <= j`; the order is their reflexive-transitive
    /// closure.
    pub leq: Vec<[usize; 2]>,
}

impl PosetSpec {
    pub fn build(&self) -> Result<FinitePoset, Error> {
        let pairs: Vec<(usize, usize)> = self.leq.iter().map(|&[a, b]| (a, b)).collect();
        Ok(FinitePoset::from_relation(self.points.len(), &pairs)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileSpec {
    pub free_rank: usize,
    #[serde(default)]
    pub torsion_invariants: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UfdSpec {
    pub n: usize,
}

/// Any input accepted by a job, discriminated by `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum InputSpec {
    Zmod { n: usize },
    Product { factors: Vec<RingSpec> },
    Polyquot { p: u64, modulus: Vec<i64> },
    Hom(HomSpec),
    Poset(PosetSpec),
    Profile(ProfileSpec),
    Ufd(UfdSpec),
}

impl From<RingSpec> for InputSpec {
    fn from(r: RingSpec) -> Self {
        match r {
            RingSpec::Zmod { n } => InputSpec::Zmod { n },
            RingSpec::Product { factors } => InputSpec::Product { factors },
            RingSpec::Polyquot { p, modulus } => InputSpec::Polyquot { p, modulus },
        }
    }
}

impl From<HomSpec> for InputSpec {
    fn from(h: HomSpec) -> Self {
        InputSpec::Hom(h)
    }
}

impl From<PosetSpec> for InputSpec {
    fn from(p: PosetSpec) -> Self {
        InputSpec::Poset(p)
    }
}

impl From<ProfileSpec> for InputSpec {
    fn from(p: ProfileSpec) -> Self {
        InputSpec::Profile(p)
    }
}

impl From<UfdSpec> for InputSpec {
    fn from(u: UfdSpec) -> Self {
        InputSpec::Ufd(u)
    }
}

/// A homomorphism with owned rings; the `RingHom` is rebuilt on demand.
#[derive(Debug, Clone)]
pub struct BuiltHom {
    pub source: FiniteRing,
    pub target: FiniteRing,
    pub map: Vec<usize>,
    pub then: Option<(FiniteRing, Vec<usize>)>,
}

impl BuiltHom {
    pub fn hom(&self) -> RingHom<'_> {
        RingHom::new(&self.source, &self.target, self.map.clone()).expect("validated when built")
    }

    pub fn then_hom(&self) -> Option<RingHom<'_>> {
        self.then.as_ref().map(|(t, m)| RingHom::new(&self.target, t, m.clone()).expect("validated when built"))
    }

    pub fn label(&self) -> String {
        let mut s = format!("{} -> {}", self.source.label(), self.target.label());
        if let Some((t, _)) = &self.then {
            s.push_str(&format!(" -> {}", t.label()));
        }
        s
    }
}

#[derive(Debug, Clone)]
pub struct BuiltPoset {
    pub name: String,
    pub poset: FinitePoset,
    pub labels: Points,
}

/// A validated input.
#[derive(Debug, Clone)]
pub enum Input {
    Ring(FiniteRing),
    Hom(Box<BuiltHom>),
    Poset(BuiltPoset),
    Profile(ClassGroupProfile),
    Ufd(UfdModel),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    Ring,
    Hom,
    Poset,
    Profile,
    Ufd,
}

impl Input {
    pub fn kind(&self) -> InputKind {
        match self {
            Input::Ring(_) => InputKind::Ring,
            Input::Hom(_) => InputKind::Hom,
            Input::Poset(_) => InputKind::Poset,
            Input::Profile(_) => InputKind::Profile,
            Input::Ufd(_) => InputKind::Ufd,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Input::Ring(r) => r.label().to_string(),
            Input::Hom(h) => h.label(),
            Input::Poset(p) => p.name.clone(),
            Input::Profile(p) => {
                let mut parts: Vec<String> = Vec::new();
                if p.free_rank > 0 {
                    parts.push(if p.free_rank == 1 { "Z".into() } else { format!("Z^{}", p.free_rank) });
                }
                parts.extend(p.torsion_invariants.iter().map(|d| format!("Z/{d}")));
                if parts.is_empty() {
                    "Cl = 0".into()
                } else {
                    format!("Cl = {}", parts.join(" x "))
                }
            }
            Input::Ufd(u) => format!("UFD with {} prime classes", u.n()),
        }
    }
}

impl InputSpec {
    pub fn build(&self) -> Result<Input, Error> {
        Ok(match self {
            InputSpec::Zmod { n } => Input::Ring(RingSpec::Zmod { n: *n }.build()?),
            InputSpec::Product { factors } => Input::Ring(RingSpec::Product { factors: factors.clone() }.build()?),
            InputSpec::Polyquot { p, modulus } => {
                Input::Ring(RingSpec::Polyquot { p: *p, modulus: modulus.clone() }.build()?)
            }
            InputSpec::Hom(h) => {
                let (source, target) = (h.source.build()?, h.target.build()?);
                RingHom::new(&source, &target, h.map.clone())?;
                let then = match &h.then {
                    None => None,
                    Some(t) => {
                        let third = t.target.build()?;
                        RingHom::new(&target, &third, t.map.clone())?;
                        Some((third, t.map.clone()))
                    }
                };
                Input::Hom(Box::new(BuiltHom { source, target, map: h.map.clone(), then }))
            }
            InputSpec::Poset(p) => {
                let poset = p.build()?;
                let name = p.name.clone().unwrap_or_else(|| format!("poset on {} points", poset.len()));
                Input::Poset(BuiltPoset { name, poset, labels: p.points.clone() })
            }
            InputSpec::Profile(p) => Input::Profile(ClassGroupProfile::new(p.free_rank, p.torsion_invariants.clone())?),
            InputSpec::Ufd(u) => Input::Ufd(UfdModel::new(u.n)?),
        })
    }
}

/// Parses one input object, reporting the line and column of malformed JSON.
pub fn parse_input(text: &str) -> Result<InputSpec, Error> {
    serde_json::from_str(text).map_err(Error::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_schemas() {
        let r: InputSpec = serde_json::from_str(r#"{"kind":"zmod","n":12}"#).unwrap();
        assert_eq!(r, InputSpec::Zmod { n: 12 });
        let p: InputSpec =
            serde_json::from_str(r#"{"kind":"product","factors":[{"kind":"zmod","n":2},{"kind":"zmod","n":3}]}"#)
                .unwrap();
        assert_eq!(p.build().unwrap().label().to_string(), "Z/2 x Z/3");
        let q: InputSpec = serde_json::from_str(r#"{"kind":"polyquot","p":2,"modulus":[1,1,1]}"#).unwrap();
        assert_eq!(q.build().unwrap().kind(), InputKind::Ring);
    }

    #[test]
    fn tagged_schemas() {
        let h: InputSpec = serde_json::from_str(
            r#"{"kind":"hom","source":{"kind":"zmod","n":4},"target":{"kind":"zmod","n":2},"map":[0,1,0,1]}"#,
        )
        .unwrap();
        assert_eq!(h.build().unwrap().label(), "Z/4 -> Z/2");
        let p: InputSpec =
            serde_json::from_str(r#"{"kind":"poset","points":["a","b","c"],"leq":[[0,2],[1,2]]}"#).unwrap();
        assert_eq!(p.build().unwrap().kind(), InputKind::Poset);
        let p: InputSpec = serde_json::from_str(r#"{"kind":"poset","points":2,"leq":[]}"#).unwrap();
        assert_eq!(p.build().unwrap().kind(), InputKind::Poset);
        let c: InputSpec =
            serde_json::from_str(r#"{"kind":"profile","free_rank":1,"torsion_invariants":[2,4]}"#).unwrap();
        assert_eq!(c.build().unwrap().label(), "Cl = Z x Z/2 x Z/4");
        let u: InputSpec = serde_json::from_str(r#"{"kind":"ufd","n":3}"#).unwrap();
        assert_eq!(u.build().unwrap().kind(), InputKind::Ufd);
    }

    #[test]
    fn build_errors_surface() {
        let r: InputSpec = serde_json::from_str(r#"{"kind":"zmod","n":1}"#).unwrap();
        assert!(matches!(r.build(), Err(Error::Core(specprime_core::Error::InvalidParameter(_)))));
        let h: InputSpec = serde_json::from_str(
            r#"{"kind":"hom","source":{"kind":"zmod","n":6},"target":{"kind":"zmod","n":4},"map":[0,1,2,3,0,1]}"#,
        )
        .unwrap();
        assert!(h.build().is_err());
        let e = parse_input("{\"kind\":\"zmod\",\n \"n\": }").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        assert!(parse_input(r#"{"kind":"zmod","m":3}"#).is_err());
    }
}
