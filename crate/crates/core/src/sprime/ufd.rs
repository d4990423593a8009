//! Symbolic model of the semigroup primes of a UFD with `n` classes of prime
//! elements.
//!
//! Elements are never materialized as a set: a nonzero element is a unit
//! sign and an exponent vector over the prime classes `p_0, ..., p_{n-1}`.
//! Semigroup primes are indexed by subsets `B` of the prime classes, with
//! `Q(B) = {0} ∪ {x : p_i | x for some i ∈ B}`; `B` is a bitmask.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::check::{ensure, CheckResult, Violation};
use crate::error::{Error, Result};
use crate::poset::TopologyPresentation;

/// Largest number of prime classes the model accepts.
pub const UFD_CAP: usize = 12;

/// Largest model whose two open families are also enumerated in full.
pub const OPEN_FAMILY_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UfdElement {
    Zero,
    NonZero { negative: bool, exponents: Vec<u32> },
}

impl UfdElement {
    /// Prime classes dividing the element; `None` for zero.
    pub fn support(&self) -> Option<u32> {
        match self {
            UfdElement::Zero => None,
            UfdElement::NonZero { exponents, .. } => {
                Some(exponents.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (i, _)| m | 1 << i))
            }
        }
    }

    pub fn is_unit(&self) -> bool {
        self.support() == Some(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UfdModel {
    n: usize,
}

impl UfdModel {
    pub fn new(n: usize) -> Result<Self> {
        if n > UFD_CAP {
            return Err(Error::TooLarge { what: "prime classes in the UFD model", size: n, cap: UFD_CAP });
        }
        Ok(UfdModel { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sprime_count(&self) -> usize {
        1 << self.n
    }

    fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    pub fn one(&self) -> UfdElement {
        UfdElement::NonZero { negative: false, exponents: vec![0; self.n] }
    }

    pub fn prime_element(&self, i: usize) -> UfdElement {
        let mut exponents = vec![0; self.n];
        exponents[i] = 1;
        UfdElement::NonZero { negative: false, exponents }
    }

    /// `prod_{i ∈ S} p_i`.
    pub fn squarefree(&self, support: u32) -> UfdElement {
        UfdElement::NonZero { negative: false, exponents: (0..self.n).map(|i| support >> i & 1).collect() }
    }

    pub fn mul(&self, a: &UfdElement, b: &UfdElement) -> UfdElement {
        match (a, b) {
            (UfdElement::NonZero { negative: s, exponents: e }, UfdElement::NonZero { negative: t, exponents: f }) => {
                UfdElement::NonZero { negative: s ^ t, exponents: e.iter().zip(f).map(|(x, y)| x + y).collect() }
            }
            _ => UfdElement::Zero,
        }
    }

    /// `x ∈ Q(B)`.
    pub fn contains(&self, b: u32, x: &UfdElement) -> bool {
        x.support().is_none_or(|s| s & b != 0)
    }

    /// Zero, both units, every squarefree product with either sign, and the
    /// square of each prime.
    pub fn sample_elements(&self) -> Vec<UfdElement> {
        let mut out = vec![UfdElement::Zero];
        for s in 0..=self.full() {
            for negative in [false, true] {
                let UfdElement::NonZero { exponents, .. } = self.squarefree(s) else { unreachable!() };
                out.push(UfdElement::NonZero { negative, exponents });
            }
        }
        for i in 0..self.n {
            let p = self.prime_element(i);
            out.push(self.mul(&p, &p));
        }
        out
    }

    /// The defining clauses and the saturation of the complement, for every
    /// `Q(B)`, over products of sample elements.
    pub fn check_axioms(&self) -> CheckResult {
        let sample = self.sample_elements();
        for b in 0..=self.full() {
            let fail = |what: &str| Violation::new("ufd_axioms", alloc::format!("Q({b:#b}): {what}"));
            ensure(self.contains(b, &UfdElement::Zero), || fail("missing zero"))?;
            ensure(!self.contains(b, &self.one()), || fail("not proper"))?;
            for x in &sample {
                for y in &sample {
                    let xy = self.mul(x, y);
                    let (inx, iny, inxy) = (self.contains(b, x), self.contains(b, y), self.contains(b, &xy));
                    ensure(!inx || inxy, || fail("not absorbing"))?;
                    ensure(inx || iny || !inxy, || fail("complement not multiplicatively closed"))?;
                }
            }
        }
        Ok(())
    }

    /// `B -> Q(B)` is injective, `B` is recovered from the prime elements in
    /// `Q(B)`, inclusion is preserved and reflected, and `Q(∅) = {0}`.
    pub fn check_bijection(&self) -> CheckResult {
        let sample = self.sample_elements();
        let trace =
            |b: u32| BitSet::from_indices(sample.len(), (0..sample.len()).filter(|&k| self.contains(b, &sample[k])));
        let traces: Vec<BitSet> = (0..=self.full()).map(trace).collect();
        for b in 0..=self.full() {
            let recovered =
                (0..self.n).filter(|&i| self.contains(b, &self.prime_element(i))).fold(0u32, |m, i| m | 1 << i);
            ensure(recovered == b, || {
                Violation::new("ufd_bijection", alloc::format!("Q({b:#b}) recovers {recovered:#b}"))
            })?;
            for c in 0..=self.full() {
                ensure((b & !c == 0) == traces[b as usize].is_subset(&traces[c as usize]), || {
                    Violation::new("ufd_bijection", alloc::format!("inclusion not matched between {b:#b} and {c:#b}"))
                })?;
            }
        }
        ensure(traces[0].to_vec() == vec![0], || Violation::new("ufd_bijection", "Q(∅) is not {0}"))
    }

    /// The hull-kernel topology on the `2^n` points, presented by `U(x)` for
    /// zero and every squarefree `x`; `U(x)` depends only on the support.
    pub fn hull_kernel_presentation(&self) -> TopologyPresentation {
        let points = self.sprime_count();
        let u = |x: &UfdElement| {
            BitSet::from_indices(points, (0..points as u32).filter(|&b| !self.contains(b, x)).map(|b| b as usize))
        };
        let mut basis = vec![u(&UfdElement::Zero)];
        basis.extend((0..=self.full()).map(|s| u(&self.squarefree(s))));
        TopologyPresentation::new(points, basis).expect("basis over the points")
    }

    /// The topology generated by `V(p_i) = {B : i ∉ B}`, the whole space
    /// included as the empty intersection.
    pub fn power_set_presentation(&self) -> TopologyPresentation {
        let points = self.sprime_count();
        let mut basis = vec![BitSet::full(points)];
        basis.extend((0..self.n).map(|i| BitSet::from_indices(points, (0..points).filter(|&b| b >> i & 1 == 0))));
        TopologyPresentation::new(points, basis).expect("basis over the points")
    }

    /// The hull-kernel specialization order is inclusion of the `B`s.
    pub fn check_order(&self) -> CheckResult {
        let order = self
            .hull_kernel_presentation()
            .specialization_order()
            .map_err(|e| Violation::new("ufd_order", alloc::format!("{e}")))?;
        for b in 0..self.sprime_count() {
            for c in 0..self.sprime_count() {
                ensure(order.leq(b, c) == (b & !c == 0), || {
                    Violation::new("ufd_order", alloc::format!("order differs from inclusion at ({b:#b}, {c:#b})"))
                })?;
            }
        }
        Ok(())
    }

    /// Identity on indices is a homeomorphism between the two topologies:
    /// a finite topology is determined by its minimal open neighbourhoods.
    pub fn check_homeomorphism(&self) -> CheckResult {
        let (hk, ps) = (self.hull_kernel_presentation(), self.power_set_presentation());
        let (a, b) = (hk.minimal_opens(), ps.minimal_opens());
        match (0..a.len()).find(|&x| a[x] != b[x]) {
            None => Ok(()),
            Some(x) => Err(Violation::new("ufd_homeomorphism", alloc::format!("minimal opens differ at B = {x:#b}"))
                .with_witness(a[x].iter())
                .with_witness(b[x].iter())),
        }
    }

    /// Enumerates every open set of the hull-kernel topology, checks each is
    /// open in the power-set topology, and compares the two counts. Returns
    /// the common count; `None` above [`OPEN_FAMILY_LIMIT`].
    pub fn compare_open_families(&self) -> Option<Result<u64, Violation>> {
        if self.n > OPEN_FAMILY_LIMIT {
            return None;
        }
        let masks = |t: &TopologyPresentation| -> Vec<u64> {
            t.minimal_opens().iter().map(|m| m.to_mask().expect("≤ 64 points")).collect()
        };
        let (hk, ps) = (masks(&self.hull_kernel_presentation()), masks(&self.power_set_presentation()));
        let (mut count_hk, mut foreign) = (0u64, None);
        for_each_open(&hk, &mut |open| {
            count_hk += 1;
            if foreign.is_none() && !is_open_mask(&ps, open) {
                foreign = Some(open);
            }
        });
        let mut count_ps = 0u64;
        for_each_open(&ps, &mut |_| count_ps += 1);
        Some(match foreign {
            Some(open) => {
                Err(Violation::new("ufd_open_families", "hull-kernel open not open in the power-set topology")
                    .with_witness((0..64).filter(|&i| open >> i & 1 == 1)))
            }
            None if count_hk != count_ps => Err(Violation::new(
                "ufd_open_families",
                alloc::format!("{count_hk} hull-kernel opens against {count_ps} power-set opens"),
            )),
            None => Ok(count_hk),
        })
    }
}

fn is_open_mask(mins: &[u64], set: u64) -> bool {
    let mut m = set;
    while m != 0 {
        let x = m.trailing_zeros() as usize;
        m &= m - 1;
        if mins[x] & !set != 0 {
            return false;
        }
    }
    true
}

/// Calls `f` on every open set of the finite topology with the given minimal
/// opens, as a bitmask.
fn for_each_open(mins: &[u64], f: &mut impl FnMut(u64)) {
    // Points sorted by the size of their minimal open precede every point
    // whose minimal open strictly contains theirs.
    let mut order: Vec<usize> = (0..mins.len()).collect();
    order.sort_by_key(|&x| (mins[x].count_ones(), x));
    fn go(mins: &[u64], order: &[usize], current: u64, f: &mut impl FnMut(u64)) {
        let Some((&x, rest)) = order.split_first() else {
            f(current);
            return;
        };
        go(mins, rest, current, f);
        if mins[x] & !(current | 1 << x) == 0 {
            go(mins, rest, current | 1 << x, f);
        }
    }
    go(mins, &order, 0, f);
}
