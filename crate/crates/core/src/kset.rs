//! Subsets of a ground set `[n]` stored as bitmasks, plus the interval and
//! isle/gap vocabulary used by the Kneser constructions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{invalid, Error, Result};

/// Largest supported ground set. Element `e` lives in bit `e - 1`.
pub const MAX_GROUND: u32 = 128;

/// A subset of `[ground]`. Equality includes the ground set.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct KSubset {
    bits: u128,
    ground: u32,
}

fn ground_mask(ground: u32) -> u128 {
    if ground >= 128 {
        u128::MAX
    } else {
        (1u128 << ground) - 1
    }
}

impl KSubset {
    pub fn new(ground: u32, elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(invalid(format!(
                "ground set [{ground}] exceeds the supported maximum {MAX_GROUND}"
            )));
        }
        let mut bits = 0u128;
        for e in elements {
            if e == 0 || e > ground {
                return Err(invalid(format!("element {e} outside [1,{ground}]")));
            }
            let b = 1u128 << (e - 1);
            if bits & b != 0 {
                return Err(invalid(format!("element {e} repeated")));
            }
            bits |= b;
        }
        Ok(KSubset { bits, ground })
    }

    pub fn from_bits(ground: u32, bits: u128) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(invalid(format!(
                "ground set [{ground}] exceeds the supported maximum {MAX_GROUND}"
            )));
        }
        if bits & !ground_mask(ground) != 0 {
            return Err(invalid(format!("bitmask has elements beyond {ground}")));
        }
        Ok(KSubset { bits, ground })
    }

    pub fn interval(ground: u32, iv: Interval) -> Result<Self> {
        SetBuilder::new(ground).span(iv.lo, iv.hi).build()
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn ground(&self) -> u32 {
        self.ground
    }

    pub fn len(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, e: u32) -> bool {
        e >= 1 && e <= self.ground && self.bits & (1u128 << (e - 1)) != 0
    }

    pub fn is_disjoint(&self, other: &KSubset) -> bool {
        self.bits & other.bits == 0
    }

    pub fn intersection(&self, other: &KSubset) -> KSubset {
        KSubset {
            bits: self.bits & other.bits,
            ground: self.ground,
        }
    }

    pub fn union(&self, other: &KSubset) -> KSubset {
        KSubset {
            bits: self.bits | other.bits,
            ground: self.ground.max(other.ground),
        }
    }

    pub fn complement(&self) -> KSubset {
        KSubset {
            bits: !self.bits & ground_mask(self.ground),
            ground: self.ground,
        }
    }

    pub fn elements(&self) -> Elements {
        Elements { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.elements().collect()
    }

    pub fn min(&self) -> Option<u32> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() + 1)
    }

    pub fn max(&self) -> Option<u32> {
        (self.bits != 0).then(|| 128 - self.bits.leading_zeros())
    }

    /// True when two elements are consecutive in the cyclic order of `[ground]`.
    pub fn has_cyclic_neighbours(&self) -> bool {
        if self.bits & (self.bits >> 1) != 0 {
            return true;
        }
        self.ground >= 2 && self.contains(1) && self.contains(self.ground)
    }
}

/// Sorted-element iterator.
pub struct Elements {
    bits: u128,
}

impl Iterator for Elements {
    type Item = u32;
    fn next(&mut self) -> Option<u32> {
        if self.bits == 0 {
            return None;
        }
        let tz = self.bits.trailing_zeros();
        self.bits &= self.bits - 1;
        Some(tz + 1)
    }
}

/// Lexicographic order on the sorted element lists, then by ground size.
impl Ord for KSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.bits ^ other.bits;
        if diff == 0 {
            return self.ground.cmp(&other.ground);
        }
        let low = diff & diff.wrapping_neg();
        let (holder, rest) = if self.bits & low != 0 {
            (Ordering::Less, other.bits)
        } else {
            (Ordering::Greater, self.bits)
        };
        // The set holding the smallest differing element sorts first unless
        // the other one has run out of elements at that point.
        let above = !(low | (low - 1));
        if rest & above != 0 {
            holder
        } else {
            holder.reverse()
        }
    }
}

impl PartialOrd for KSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, e) in self.elements().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.ground)
    }
}

/// `{lo, lo+1, ..., hi}`, empty when `hi < lo`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Self {
        Interval { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn len(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo + 1) as u64
        }
    }

    pub fn iter(&self) -> core::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

/// Accumulates intervals and singletons into a subset, remembering the first
/// problem (out-of-range element, overlap) instead of failing mid-expression.
#[derive(Clone, Debug)]
pub struct SetBuilder {
    ground: u32,
    bits: u128,
    fault: Option<String>,
}

impl SetBuilder {
    pub fn new(ground: u32) -> Self {
        let fault = (ground > MAX_GROUND).then(|| format!("ground {ground} exceeds {MAX_GROUND}"));
        SetBuilder {
            ground,
            bits: 0,
            fault,
        }
    }

    pub fn elem(mut self, e: i64) -> Self {
        if self.fault.is_some() {
            return self;
        }
        if e < 1 || e > self.ground as i64 {
            self.fault = Some(format!("element {e} outside [1,{}]", self.ground));
            return self;
        }
        let b = 1u128 << (e - 1);
        if self.bits & b != 0 {
            self.fault = Some(format!("element {e} listed twice"));
            return self;
        }
        self.bits |= b;
        self
    }

    pub fn elems(self, es: &[i64]) -> Self {
        es.iter().fold(self, |acc, &e| acc.elem(e))
    }

    pub fn span(self, lo: i64, hi: i64) -> Self {
        (lo..=hi).fold(self, |acc, e| acc.elem(e))
    }

    pub fn build(self) -> Result<KSubset> {
        match self.fault {
            Some(m) => Err(invalid(m)),
            None => Ok(KSubset {
                bits: self.bits,
                ground: self.ground,
            }),
        }
    }

    /// Builds and insists on cardinality `k`; any fault is a construction bug.
    pub fn finish(self, k: u32, label: &str) -> Result<KSubset> {
        if let Some(m) = self.fault {
            return Err(Error::ConstructionBug(format!("{label}: {m}")));
        }
        let s = KSubset {
            bits: self.bits,
            ground: self.ground,
        };
        if s.len() != k {
            return Err(Error::ConstructionBug(format!(
                "{label}: {s} has {} elements, expected {k}",
                s.len()
            )));
        }
        Ok(s)
    }
}

/// Disjointness test for two vertices of the same Kneser graph.
pub fn kneser_adjacent(a: &KSubset, b: &KSubset) -> Result<bool> {
    if a.ground != b.ground {
        return Err(invalid(format!(
            "ground sets differ: [{}] vs [{}]",
            a.ground, b.ground
        )));
    }
    if a.len() != b.len() {
        return Err(invalid(format!(
            "cardinalities differ: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.is_disjoint(b))
}

/// Elements of `a` with neither neighbour in `a` (linear order, no wraparound).
pub fn isles(a: &KSubset) -> Vec<u32> {
    let b = a.bits;
    Elements {
        bits: b & !(b << 1) & !(b >> 1),
    }
    .collect()
}

/// Non-elements of `a` inside `[ground]` with both neighbours in `a`.
pub fn gaps(a: &KSubset) -> Vec<u32> {
    let b = a.bits;
    Elements {
        bits: !b & (b << 1) & (b >> 1) & ground_mask(a.ground),
    }
    .collect()
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays exact because acc = C(n, i) * ...
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: u32, es: &[u32]) -> KSubset {
        KSubset::new(n, es.iter().copied()).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        assert!(kneser_adjacent(&set(5, &[1, 2]), &set(5, &[3, 4])).unwrap());
        assert!(!kneser_adjacent(&set(5, &[1, 2]), &set(5, &[2, 3])).unwrap());
        let x8 = SetBuilder::new(32).span(1, 12).elem(21).finish(13, "x").unwrap();
        let b1 = SetBuilder::new(32)
            .elems(&[20, 25])
            .span(16, 18)
            .span(22, 23)
            .span(27, 32)
            .finish(13, "b")
            .unwrap();
        assert!(kneser_adjacent(&x8, &b1).unwrap());
        assert!(kneser_adjacent(&set(5, &[1]), &set(6, &[2])).is_err());
        assert!(kneser_adjacent(&set(5, &[1]), &set(5, &[2, 3])).is_err());
    }

    #[test]
    fn isles_and_gaps_examples() {
        assert_eq!(isles(&set(7, &[1, 3, 4, 6])), [1, 6]);
        assert_eq!(gaps(&set(7, &[1, 3, 4, 6])), [2, 5]);
        assert!(isles(&set(5, &[1, 2, 3])).is_empty());
        assert!(gaps(&set(5, &[1, 2])).is_empty());
        let b2 = SetBuilder::new(32)
            .span(7, 15)
            .elems(&[19, 21, 24, 26])
            .finish(13, "b2")
            .unwrap();
        assert_eq!(gaps(&b2), [20, 25]);
        // Top element of [n] is an isle without wraparound to 1.
        assert_eq!(isles(&set(128, &[1, 128])), [1, 128]);
    }

    #[test]
    fn lexicographic_order() {
        assert!(set(5, &[1, 2]) < set(5, &[1, 3]));
        assert!(set(5, &[1, 5]) < set(5, &[2, 3]));
        assert!(set(5, &[1, 2]) < set(5, &[1, 2, 3]));
        assert!(set(5, &[2]) > set(5, &[1, 2, 3]));
    }

    #[test]
    fn builder_faults() {
        assert!(SetBuilder::new(5).span(1, 3).elem(3).finish(4, "dup").is_err());
        assert!(SetBuilder::new(5).span(0, 1).finish(2, "low").is_err());
        assert!(SetBuilder::new(5).span(3, 2).finish(0, "empty").is_ok());
        assert!(KSubset::new(129, [1]).is_err());
        assert!(KSubset::new(4, [5]).is_err());
    }

    #[test]
    fn cyclic_neighbours() {
        assert!(!set(5, &[1, 3]).has_cyclic_neighbours());
        assert!(set(5, &[1, 5]).has_cyclic_neighbours());
        assert!(set(5, &[2, 3]).has_cyclic_neighbours());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(18, 7), 31824);
        assert_eq!(binomial(104, 49), 1_333_552_706_063_787_946_460_903_892_960);
        assert_eq!(binomial(3, 4), 0);
    }
}
