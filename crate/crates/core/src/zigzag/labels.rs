//! Even labels `ℓ^i_{ij}` for pairs of odd colours.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::chromatic::colour_with;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::host::Vertex;

/// For each pair `i < j` of odd colours, the labels `(ℓ^i, ℓ^j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelAssignment {
    t: u32,
    labels: BTreeMap<(u32, u32), (u32, u32)>,
    degenerate: bool,
}

impl LabelAssignment {
    pub fn t(&self) -> u32 {
        self.t
    }

    /// Too few even colours to separate the labels (`t <= 4`); both ends of
    /// every pair share one label.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// `ℓ^owner_{owner,other}`.
    pub fn label(&self, owner: u32, other: u32) -> Option<u32> {
        let (a, b) = *self.labels.get(&(owner.min(other), owner.max(other)))?;
        Some(if owner < other { a } else { b })
    }

    pub fn pairs(&self) -> impl Iterator<Item = ((u32, u32), (u32, u32))> + '_ {
        self.labels.iter().map(|(&k, &v)| (k, v))
    }

    /// Every label is even and below `t`; the two labels of a pair differ;
    /// the labels a colour receives across its pairs are distinct.
    pub fn check(&self) -> Result<()> {
        let mut per_owner: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for (&(i, j), &(li, lj)) in &self.labels {
            for l in [li, lj] {
                if l % 2 != 0 || l == 0 || l >= self.t.max(3) {
                    return Err(bad(format!("label {l} of pair ({i},{j}) out of range")));
                }
            }
            if self.degenerate {
                continue;
            }
            if li == lj {
                return Err(bad(format!("pair ({i},{j}) has equal labels {li}")));
            }
            per_owner.entry(i).or_default().push(li);
            per_owner.entry(j).or_default().push(lj);
        }
        for (owner, mut ls) in per_owner {
            ls.sort_unstable();
            if ls.windows(2).any(|w| w[0] == w[1]) {
                return Err(bad(format!("colour {owner} reuses a label")));
            }
        }
        Ok(())
    }
}

fn bad(msg: alloc::string::String) -> Error {
    Error::ConstructionBug(msg)
}

/// Labels for odd `t >= 5`: a proper colouring of the conflict graph whose
/// vertices are the ends `(i, {i,j})`, using `⌈t/2⌉ - 1` even values.
pub fn assign_even_labels(t: u32) -> Result<LabelAssignment> {
    if t < 5 || t % 2 == 0 {
        return Err(invalid(format!("labels need an odd t >= 5, got {t}")));
    }
    let odd: Vec<u32> = (1..=t).step_by(2).collect();
    let mut ends = Vec::new();
    for (a, &i) in odd.iter().enumerate() {
        for &j in &odd[a + 1..] {
            ends.push((i, (i, j)));
            ends.push((j, (i, j)));
        }
    }
    let mut edges = Vec::new();
    for x in 0..ends.len() {
        for y in x + 1..ends.len() {
            let (ox, px) = ends[x];
            let (oy, py) = ends[y];
            if px == py || ox == oy {
                edges.push((x, y));
            }
        }
    }
    let labels = (0..ends.len() as u32).map(Vertex::Id).collect();
    let h = Graph::from_edges(labels, &edges)?;
    let d = (t.div_ceil(2) - 1) as usize;
    let colours = greedy(&h)
        .filter(|c| c.iter().all(|&x| x as usize <= d))
        .or_else(|| colour_with(&h, d))
        .ok_or_else(|| bad(format!("label graph for t={t} is not {d}-colourable")))?;
    let mut out = BTreeMap::new();
    for (x, &(owner, pair)) in ends.iter().enumerate() {
        let entry = out.entry(pair).or_insert((0, 0));
        if owner == pair.0 {
            entry.0 = 2 * colours[x];
        } else {
            entry.1 = 2 * colours[x];
        }
    }
    let la = LabelAssignment {
        t,
        labels: out,
        degenerate: false,
    };
    la.check()?;
    Ok(la)
}

/// Labels for the immersion routing: odd colours of `t` (or `t-1` when `t`
/// is even). Below five odd-side colours the assignment is degenerate.
pub(crate) fn labels_for(t: u32) -> Result<LabelAssignment> {
    let top = if t % 2 == 0 { t.saturating_sub(1) } else { t };
    if top >= 5 {
        let mut la = assign_even_labels(top)?;
        la.t = t;
        return Ok(la);
    }
    let mut labels = BTreeMap::new();
    if top == 3 {
        labels.insert((1, 3), (2, 2));
    }
    Ok(LabelAssignment {
        t,
        labels,
        degenerate: true,
    })
}

fn greedy(g: &Graph) -> Option<Vec<u32>> {
    let mut c = alloc::vec![0u32; g.order()];
    for v in 0..g.order() {
        let used: Vec<u32> = g.neighbours(v).iter().map(|&u| c[u as usize]).collect();
        c[v] = (1..).find(|x| !used.contains(x))?;
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_colours() {
        let la = assign_even_labels(5).unwrap();
        assert_eq!(la.label(1, 3), Some(2));
        assert_eq!(la.label(3, 1), Some(4));
        assert_eq!(la.label(1, 5), Some(4));
        assert_eq!(la.label(5, 1), Some(2));
        assert_eq!(la.label(3, 5), Some(2));
        assert_eq!(la.label(5, 3), Some(4));
    }

    #[test]
    fn larger_t_satisfy_constraints() {
        for t in [7, 9, 11, 13] {
            let la = assign_even_labels(t).unwrap();
            la.check().unwrap();
            let odd = t.div_ceil(2) as usize;
            assert_eq!(la.pairs().count(), odd * (odd - 1) / 2);
        }
    }

    #[test]
    fn rejects_small_or_even() {
        assert!(assign_even_labels(3).is_err());
        assert!(assign_even_labels(6).is_err());
    }

    #[test]
    fn degenerate_small() {
        let la = labels_for(4).unwrap();
        assert!(la.is_degenerate());
        assert_eq!(la.label(3, 1), Some(2));
        assert_eq!(labels_for(6).unwrap().label(1, 3), Some(2));
    }
}
