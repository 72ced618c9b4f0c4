//! Exact `zig(G)` and zigzag-minimising colourings on small graphs.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{longest_at_least, max_zigzags_by, zig_of_by, ProperColouring};
use crate::chromatic::{clique_number, optimal_colouring};
use crate::error::{invalid, limit, Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ZIGZAG_CAP: usize = 12;
/// Search nodes allowed when enumerating colourings.
pub const DEFAULT_COLOURING_BUDGET: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZigzagCaps {
    pub vertices: usize,
    pub colourings: u64,
    pub chromatic: usize,
}

impl Default for ZigzagCaps {
    fn default() -> Self {
        ZigzagCaps {
            vertices: DEFAULT_ZIGZAG_CAP,
            colourings: DEFAULT_COLOURING_BUDGET,
            chromatic: crate::chromatic::DEFAULT_CHROMATIC_CAP,
        }
    }
}

/// `zig(G)` with `χ(G)` and a colouring attaining each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigReport {
    pub zig: usize,
    pub chromatic: usize,
    pub zig_colouring: Vec<u32>,
    pub chromatic_colouring: Vec<u32>,
}

fn check_cap(g: &Graph, caps: &ZigzagCaps) -> Result<()> {
    if g.order() > caps.vertices {
        return Err(limit(
            "vertices for zigzag search",
            caps.vertices as u128,
            g.order() as u128,
        ));
    }
    Ok(())
}

/// Visits every proper colouring with colours in `1..=t`, in lexicographic
/// order of the colour vector. Returns the number visited.
pub fn for_each_proper_colouring(
    g: &Graph,
    t: u32,
    budget: u64,
    mut f: impl FnMut(&[u32]),
) -> Result<u64> {
    let n = g.order();
    let mut c = vec![0u32; n];
    let mut visited = 0u64;
    let mut nodes = 0u64;
    if n == 0 {
        f(&c);
        return Ok(1);
    }
    let mut v = 0usize;
    loop {
        // Advance vertex v to its next admissible colour.
        let mut next = c[v] + 1;
        while next <= t
            && g.neighbours(v)
                .iter()
                .any(|&u| (u as usize) < v && c[u as usize] == next)
        {
            next += 1;
        }
        nodes += 1;
        if nodes > budget {
            return Err(limit("colouring search nodes", budget as u128, nodes as u128));
        }
        if next > t {
            c[v] = 0;
            if v == 0 {
                return Ok(visited);
            }
            v -= 1;
            continue;
        }
        c[v] = next;
        if v + 1 == n {
            visited += 1;
            f(&c);
        } else {
            v += 1;
        }
    }
}

struct OrderedSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    /// Rank of each vertex's class, 1-based; 0 while unassigned.
    rank: Vec<u32>,
    classes: u32,
    below: usize,
    nodes: u64,
    budget: u64,
}

impl OrderedSearch<'_> {
    /// Finds an ordered colouring whose longest zigzag is `< below`.
    fn run(&mut self, depth: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(limit("zigzag search nodes", self.budget as u128, self.nodes as u128));
        }
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        // Join an existing class.
        for r in 1..=self.classes {
            if self.g.neighbours(v).iter().any(|&u| self.rank[u as usize] == r) {
                continue;
            }
            self.rank[v] = r;
            if self.ok() && self.run(depth + 1)? {
                return Ok(true);
            }
            self.rank[v] = 0;
        }
        // Open a new class at every position.
        for pos in 1..=self.classes + 1 {
            self.shift_up(pos);
            self.rank[v] = pos;
            self.classes += 1;
            if self.ok() && self.run(depth + 1)? {
                return Ok(true);
            }
            self.classes -= 1;
            self.rank[v] = 0;
            self.shift_down(pos);
        }
        Ok(false)
    }

    fn ok(&self) -> bool {
        longest_at_least(self.g, &self.rank, self.below) < self.below
    }

    fn shift_up(&mut self, pos: u32) {
        for r in self.rank.iter_mut().filter(|r| **r >= pos) {
            *r += 1;
        }
    }

    fn shift_down(&mut self, pos: u32) {
        for r in self.rank.iter_mut().filter(|r| **r > pos) {
            *r -= 1;
        }
    }
}

/// `zig(G)`: the least `zig(G, c)` over proper colourings `c`.
pub fn zig(g: &Graph, caps: &ZigzagCaps) -> Result<ZigReport> {
    check_cap(g, caps)?;
    let n = g.order();
    let chromatic_colouring = optimal_colouring(g, caps.chromatic)?;
    let chromatic = chromatic_colouring.iter().copied().max().unwrap_or(0) as usize;
    let upper = zig_of_by(g, &chromatic_colouring);
    if n == 0 {
        return Ok(ZigReport {
            zig: 0,
            chromatic: 0,
            zig_colouring: Vec::new(),
            chromatic_colouring,
        });
    }
    let mut lower = clique_number(g, caps.chromatic)?;
    if g.edge_count() > 0 {
        lower = lower.max(2);
    }
    if !g.is_bipartite() {
        lower = lower.max(3);
    }
    let mut best = (upper, chromatic_colouring.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(g.degree(v)));
    let mut spent = 0u64;
    while best.0 > lower {
        let mut s = OrderedSearch {
            g,
            order: order.clone(),
            rank: vec![0; n],
            classes: 0,
            below: best.0,
            nodes: 0,
            budget: caps.colourings.saturating_sub(spent),
        };
        let found = s.run(0)?;
        spent += s.nodes;
        if !found {
            break;
        }
        let z = zig_of_by(g, &s.rank);
        best = (z, s.rank);
    }
    if best.0 > chromatic {
        return Err(Error::AlgorithmInvariant(format!(
            "zig {} exceeds chromatic number {chromatic}",
            best.0
        )));
    }
    if best.0 == chromatic && upper != chromatic {
        return Err(Error::AlgorithmInvariant(format!(
            "zig = χ = {chromatic} but a χ-colouring has zig {upper}"
        )));
    }
    Ok(ZigReport {
        zig: best.0,
        chromatic,
        zig_colouring: best.1,
        chromatic_colouring,
    })
}

/// Among proper `t`-colourings, the lexicographically first one with the
/// fewest zigzags of size `t`. Requires `χ(G) = zig(G) = t`.
pub fn choose_min_zigzag_colouring(
    g: &Graph,
    t: u32,
    caps: &ZigzagCaps,
) -> Result<ProperColouring> {
    let report = zig(g, caps)?;
    if report.chromatic != t as usize || report.zig != t as usize {
        return Err(invalid(format!(
            "need χ(G) = zig(G) = {t}, found χ(G) = {} and zig(G) = {}",
            report.chromatic, report.zig
        )));
    }
    let mut best: Option<(usize, Vec<u32>)> = None;
    let mut failure = None;
    for_each_proper_colouring(g, t, caps.colourings, |c| {
        if failure.is_some() {
            return;
        }
        let zs = max_zigzags_by(g, c);
        if zs.first().map_or(0, |z| z.len()) != t as usize {
            failure = Some(Error::AlgorithmInvariant(format!(
                "a {t}-colouring has no zigzag of size {t}"
            )));
            return;
        }
        if best.as_ref().map_or(true, |(n, _)| zs.len() < *n) {
            best = Some((zs.len(), c.to_vec()));
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    let (_, colours) = best.ok_or_else(|| invalid(format!("graph has no proper {t}-colouring")))?;
    ProperColouring::new(g, colours, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::{mycielskian, HostGraph};

    #[test]
    fn zig_of_small_graphs() {
        let caps = ZigzagCaps::default();
        assert_eq!(zig(&Graph::complete(4), &caps).unwrap().zig, 4);
        assert_eq!(zig(&Graph::cycle(5).unwrap(), &caps).unwrap().zig, 3);
        assert_eq!(zig(&Graph::cycle(6).unwrap(), &caps).unwrap().zig, 2);
        assert_eq!(zig(&Graph::empty(3), &caps).unwrap().zig, 1);
        let petersen = HostGraph::kneser(5, 2).unwrap().materialize(100).unwrap();
        let r = zig(&petersen, &caps).unwrap();
        assert_eq!((r.zig, r.chromatic), (3, 3));
    }

    #[test]
    fn zig_at_most_chromatic_on_grotzsch() {
        let g = mycielskian(&Graph::cycle(5).unwrap(), 1);
        let r = zig(&g, &ZigzagCaps::default()).unwrap();
        assert_eq!(r.chromatic, 4);
        assert!(r.zig <= 4 && r.zig >= 3);
    }

    #[test]
    fn colourings_are_enumerated_in_order() {
        let mut seen = Vec::new();
        let n = for_each_proper_colouring(&Graph::path(3), 2, 1000, |c| seen.push(c.to_vec()))
            .unwrap();
        assert_eq!(n, 2);
        assert_eq!(seen, [vec![1, 2, 1], vec![2, 1, 2]]);
        let n = for_each_proper_colouring(&Graph::complete(4), 4, 10_000, |_| {}).unwrap();
        assert_eq!(n, 24);
    }

    #[test]
    fn min_zigzag_colouring() {
        let caps = ZigzagCaps::default();
        let c = choose_min_zigzag_colouring(&Graph::complete(3), 3, &caps).unwrap();
        assert_eq!(c.colours(), [1, 2, 3]);
        let c5 = Graph::cycle(5).unwrap();
        let c = choose_min_zigzag_colouring(&c5, 3, &caps).unwrap();
        assert_eq!(super::super::zig_of(&c5, &c), 3);
        let err = choose_min_zigzag_colouring(&Graph::cycle(6).unwrap(), 3, &caps).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn vertex_cap_enforced() {
        let err = zig(&Graph::empty(13), &ZigzagCaps::default()).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }
}
