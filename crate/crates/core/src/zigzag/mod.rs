//! Zigzags, Kempe chains and potential zigzags over proper colourings.
//!
//! A zigzag of `(G, c)` is a sequence `z_1..z_s` with strictly increasing
//! colours in which every even-position vertex is adjacent to every
//! odd-position vertex.

mod immersion;
mod labels;
mod search;

pub use immersion::{
    audit_colour_pairs, build_immersion, ImmersionCaps, ImmersionOutcome, PairRoute, RouteKind,
};
pub use labels::{assign_even_labels, LabelAssignment};
pub use search::{
    choose_min_zigzag_colouring, for_each_proper_colouring, zig, ZigReport, ZigzagCaps,
    DEFAULT_COLOURING_BUDGET, DEFAULT_ZIGZAG_CAP,
};

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Vertex indices in sequence order.
pub type ZigzagSeq = Vec<usize>;

/// A proper colouring with colours in `1..=t`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProperColouring {
    colours: Vec<u32>,
    t: u32,
}

impl ProperColouring {
    pub fn new(g: &Graph, colours: Vec<u32>, t: u32) -> Result<Self> {
        if colours.len() != g.order() {
            return Err(invalid(format!(
                "colouring has {} entries for {} vertices",
                colours.len(),
                g.order()
            )));
        }
        if let Some((v, &c)) = colours.iter().enumerate().find(|(_, &c)| c == 0 || c > t) {
            return Err(invalid(format!("vertex {v} has colour {c} outside [1,{t}]")));
        }
        if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| colours[u] == colours[v]) {
            return Err(invalid(format!("edge ({u},{v}) is monochromatic")));
        }
        Ok(ProperColouring { colours, t })
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Swaps colours `i` and `j` on the marked vertices. The result is
    /// proper whenever the marked set is a union of `{i,j}`-Kempe chains.
    pub fn switched(&self, region: &[bool], i: u32, j: u32) -> ProperColouring {
        let colours = self
            .colours
            .iter()
            .zip(region)
            .map(|(&c, &inside)| match (inside, c) {
                (true, c) if c == i => j,
                (true, c) if c == j => i,
                (_, c) => c,
            })
            .collect();
        ProperColouring {
            colours,
            t: self.t,
        }
    }
}

/// Both zigzag conditions for `seq` under the colour lookup `colour`.
pub fn is_zigzag(g: &Graph, colour: &[u32], seq: &[usize]) -> bool {
    if seq.windows(2).any(|w| colour[w[0]] >= colour[w[1]]) {
        return false;
    }
    for &u in seq.iter().skip(1).step_by(2) {
        for &v in seq.iter().step_by(2) {
            if !g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

struct Enumerator<'a> {
    g: &'a Graph,
    colour: &'a [u32],
    best: usize,
    found: Vec<ZigzagSeq>,
    collect: bool,
    stop_at: usize,
}

impl Enumerator<'_> {
    fn run(&mut self) {
        let all: Vec<usize> = (0..self.g.order()).filter(|&v| self.colour[v] != 0).collect();
        let mut seq = Vec::new();
        self.dfs(&mut seq, &all, &all, 0);
    }

    fn distinct_above(&self, a: &[usize], b: &[usize], last: u32) -> usize {
        let mut cs: Vec<u32> = a
            .iter()
            .chain(b)
            .map(|&v| self.colour[v])
            .filter(|&c| c > last)
            .collect();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    /// `odd`: candidates for the next odd position (adjacent to all chosen
    /// even-position vertices); `even` likewise.
    fn dfs(&mut self, seq: &mut ZigzagSeq, odd: &[usize], even: &[usize], last: u32) -> bool {
        let len = seq.len();
        if len > self.best {
            self.best = len;
            self.found.clear();
        }
        if len == self.best && self.collect && len > 0 {
            self.found.push(seq.clone());
        }
        if self.best >= self.stop_at {
            return true;
        }
        if len + self.distinct_above(odd, even, last) < self.best.max(1) {
            return false;
        }
        let next_is_odd = len % 2 == 0;
        let pool = if next_is_odd { odd } else { even };
        for &v in pool {
            let cv = self.colour[v];
            if cv <= last {
                continue;
            }
            let nbrs = self.g.neighbours(v);
            let narrowed: Vec<usize> = if next_is_odd { even } else { odd }
                .iter()
                .copied()
                .filter(|&u| nbrs.binary_search(&(u as u32)).is_ok())
                .collect();
            seq.push(v);
            let stop = if next_is_odd {
                self.dfs(seq, odd, &narrowed, cv)
            } else {
                self.dfs(seq, &narrowed, even, cv)
            };
            seq.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// All maximum-size zigzags of `(G, colour)` in lexicographic vertex order.
/// Vertices with colour 0 are ignored.
pub fn max_zigzags_by(g: &Graph, colour: &[u32]) -> Vec<ZigzagSeq> {
    let mut e = Enumerator {
        g,
        colour,
        best: 0,
        found: Vec::new(),
        collect: true,
        stop_at: usize::MAX,
    };
    e.run();
    e.found
}

/// All maximum zigzags of `(G, c)`.
pub fn max_zigzags(g: &Graph, c: &ProperColouring) -> Vec<ZigzagSeq> {
    max_zigzags_by(g, c.colours())
}

/// `zig(G, c)` for a colour lookup (0 = uncoloured, ignored).
pub fn zig_of_by(g: &Graph, colour: &[u32]) -> usize {
    longest_at_least(g, colour, usize::MAX)
}

pub fn zig_of(g: &Graph, c: &ProperColouring) -> usize {
    zig_of_by(g, c.colours())
}

/// Longest zigzag size, stopping early once `stop_at` is reached.
pub(crate) fn longest_at_least(g: &Graph, colour: &[u32], stop_at: usize) -> usize {
    let mut e = Enumerator {
        g,
        colour,
        best: 0,
        found: Vec::new(),
        collect: false,
        stop_at,
    };
    e.run();
    e.best
}

/// One component of the subgraph induced by colours `i` and `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempeChain {
    pub colour_pair: (u32, u32),
    pub vertices: Vec<usize>,
}

/// The `{i,j}`-Kempe chain through `x`.
pub fn kempe_chain(g: &Graph, c: &ProperColouring, i: u32, j: u32, x: usize) -> Result<KempeChain> {
    if i == j {
        return Err(invalid("a Kempe chain needs two distinct colours"));
    }
    if x >= g.order() {
        return Err(invalid(format!("vertex {x} out of range")));
    }
    let cx = c.colour(x);
    if cx != i && cx != j {
        return Err(invalid(format!("vertex {x} has colour {cx}, not {i} or {j}")));
    }
    let comp = kempe_components(g, c.colours(), i, j);
    let id = comp[x];
    Ok(KempeChain {
        colour_pair: (i.min(j), i.max(j)),
        vertices: (0..g.order()).filter(|&v| comp[v] == id).collect(),
    })
}

/// Component ids of the `{i,j}`-coloured subgraph; `usize::MAX` elsewhere.
pub fn kempe_components(g: &Graph, colour: &[u32], i: u32, j: u32) -> Vec<usize> {
    let n = g.order();
    let inside = |v: usize| colour[v] == i || colour[v] == j;
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if !inside(s) || comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in g.neighbours(u) {
                let v = v as usize;
                if inside(v) && comp[v] == usize::MAX {
                    comp[v] = next;
                    q.push_back(v);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Shortest path from `s` to `t` using only vertices with `allowed[v]`.
pub(crate) fn shortest_path(g: &Graph, allowed: &[bool], s: usize, t: usize) -> Option<Vec<usize>> {
    let n = g.order();
    let mut prev = vec![usize::MAX; n];
    prev[s] = s;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        if u == t {
            break;
        }
        for &v in g.neighbours(u) {
            let v = v as usize;
            if allowed[v] && prev[v] == usize::MAX {
                prev[v] = u;
                q.push_back(v);
            }
        }
    }
    if prev[t] == usize::MAX {
        return None;
    }
    let mut path = vec![t];
    let mut cur = t;
    while cur != s {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

/// A sequence that becomes a zigzag whichever twin is recoloured within
/// `{i, j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialZigzag {
    pub vertices: ZigzagSeq,
    pub twins: (usize, usize),
    pub colour_pair: (u32, u32),
}

impl PotentialZigzag {
    /// With `t = |Z|` colours: the non-twin vertices carry exactly the
    /// colours `[t] \ {i, j}` and the twins share colour `i` or `j`.
    pub fn colours_fill_positions(&self, c: &ProperColouring) -> bool {
        let t = self.vertices.len() as u32;
        let (i, j) = self.colour_pair;
        let mut seen: Vec<u32> = self
            .vertices
            .iter()
            .filter(|&&v| v != self.twins.0 && v != self.twins.1)
            .map(|&v| c.colour(v))
            .collect();
        seen.sort_unstable();
        let want: Vec<u32> = (1..=t).filter(|&k| k != i && k != j).collect();
        let tc = c.colour(self.twins.0);
        seen == want && tc == c.colour(self.twins.1) && (tc == i || tc == j)
    }
}

/// Returns the potential zigzag with the lexicographically first twin pair
/// if `seq` is an `{i,j}`-potential zigzag of `(G, c)`. Both single-twin
/// recolourings must turn `seq` (reordered by colour) into a zigzag.
pub fn is_potential_zigzag(
    g: &Graph,
    c: &ProperColouring,
    seq: &[usize],
    i: u32,
    j: u32,
) -> Option<PotentialZigzag> {
    if i == j || seq.iter().any(|&v| v >= g.order()) {
        return None;
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mut colour = c.colours().to_vec();
    for (p, &u) in seq.iter().enumerate() {
        for &v in &seq[p + 1..] {
            let cu = c.colour(u);
            if cu != c.colour(v) || (cu != i && cu != j) {
                continue;
            }
            let flipped = if cu == i { j } else { i };
            let ok = [u, v].iter().all(|&y| {
                colour[y] = flipped;
                let mut order = seq.to_vec();
                order.sort_by_key(|&x| colour[x]);
                let good = is_zigzag(g, &colour, &order);
                colour[y] = cu;
                good
            });
            if ok {
                return Some(PotentialZigzag {
                    vertices: seq.to_vec(),
                    twins: (u, v),
                    colour_pair: (i.min(j), i.max(j)),
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::HostGraph;

    fn identity(n: usize) -> ProperColouring {
        let g = Graph::complete(n);
        ProperColouring::new(&g, (1..=n as u32).collect(), n as u32).unwrap()
    }

    #[test]
    fn complete_graph_has_one_max_zigzag() {
        let g = Graph::complete(3);
        assert_eq!(max_zigzags(&g, &identity(3)), [vec![0, 1, 2]]);
        let g = Graph::complete(5);
        assert_eq!(max_zigzags(&g, &identity(5)).len(), 1);
    }

    #[test]
    fn edgeless_zigzag_is_single_vertex() {
        let g = Graph::empty(3);
        let c = ProperColouring::new(&g, vec![1, 1, 1], 1).unwrap();
        assert_eq!(zig_of(&g, &c), 1);
        assert_eq!(max_zigzags(&g, &c).len(), 3);
    }

    #[test]
    fn c5_zigzag_size_three() {
        let g = Graph::cycle(5).unwrap();
        let c = ProperColouring::new(&g, vec![1, 2, 1, 2, 3], 3).unwrap();
        assert_eq!(zig_of(&g, &c), 3);
        for z in max_zigzags(&g, &c) {
            assert!(is_zigzag(&g, c.colours(), &z));
        }
    }

    #[test]
    fn zigzag_conditions() {
        // Path 0-1-2-3: (0,1,2) is a zigzag; (0,1,2,3) needs 0~3.
        let g = Graph::path(4);
        let col = [1, 2, 3, 4];
        assert!(is_zigzag(&g, &col, &[0, 1, 2]));
        assert!(!is_zigzag(&g, &col, &[0, 1, 2, 3]));
        assert!(!is_zigzag(&g, &[2, 1, 3, 4], &[0, 1, 2]));
    }

    #[test]
    fn kempe_examples() {
        let k3 = Graph::complete(3);
        let c = identity(3);
        assert_eq!(kempe_chain(&k3, &c, 1, 2, 0).unwrap().vertices, [0, 1]);
        let p = Graph::path(3);
        let c = ProperColouring::new(&p, vec![1, 2, 1], 3).unwrap();
        assert_eq!(kempe_chain(&p, &c, 1, 3, 0).unwrap().vertices, [0]);
        assert!(kempe_chain(&p, &c, 2, 3, 0).is_err());
    }

    #[test]
    fn potential_zigzag_examples() {
        let k3 = Graph::complete(3);
        assert!(is_potential_zigzag(&k3, &identity(3), &[0, 1, 2], 1, 3).is_none());

        // u - w - v coloured 1,2,1: flipping either twin to 3 gives a zigzag.
        let p = Graph::path(3);
        let c = ProperColouring::new(&p, vec![1, 2, 1], 3).unwrap();
        let pz = is_potential_zigzag(&p, &c, &[0, 1, 2], 1, 3).unwrap();
        assert_eq!(pz.twins, (0, 2));
        assert!(pz.colours_fill_positions(&c));
        // Twins must carry a colour of the pair.
        assert!(is_potential_zigzag(&p, &c, &[0, 1, 2], 2, 3).is_none());

        // Two non-twin vertices share a colour: no reordering helps.
        let g = Graph::complete(4).without_edge(0, 1).unwrap();
        let c = ProperColouring::new(&g, vec![2, 2, 1, 3], 4).unwrap();
        assert!(is_potential_zigzag(&g, &c, &[2, 0, 1, 3], 1, 3).is_none());
    }

    #[test]
    fn petersen_components() {
        let g = HostGraph::kneser(5, 2).unwrap().materialize(100).unwrap();
        let c = crate::chromatic::optimal_colouring(&g, 40).unwrap();
        let comp = kempe_components(&g, &c, 1, 2);
        for (u, v) in g.edges() {
            if comp[u] != usize::MAX && comp[v] != usize::MAX {
                assert_eq!(comp[u], comp[v]);
            }
        }
    }
}
