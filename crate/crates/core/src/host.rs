//! Host graphs: materialized graphs and lazy adjacency oracles for Kneser,
//! Schrijver and generalized Mycielski graphs.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, limit, Result};
use crate::graph::Graph;
use crate::kset::{binomial, KSubset, MAX_GROUND};

/// Default cap on materialized vertex counts.
pub const DEFAULT_MATERIALIZE_CAP: usize = 200_000;

/// Adjacency-list entries a Kneser or Schrijver materialization may allocate.
pub const ADJACENCY_ENTRY_CAP: u128 = 50_000_000;

/// A vertex of any supported host. `Level` and `Apex` are the vertices of a
/// generalized Mycielskian; levels nest for iterated constructions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Vertex {
    Id(u32),
    Set(KSubset),
    Level(Box<Vertex>, u32),
    Apex,
}

impl Vertex {
    pub fn level(base: Vertex, level: u32) -> Vertex {
        Vertex::Level(Box::new(base), level)
    }

    pub fn as_set(&self) -> Option<&KSubset> {
        match self {
            Vertex::Set(s) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Id(i) => write!(f, "{i}"),
            Vertex::Set(s) => write!(f, "{s}"),
            Vertex::Level(b, i) => write!(f, "({b},{i})"),
            Vertex::Apex => f.write_str("w"),
        }
    }
}

impl From<KSubset> for Vertex {
    fn from(s: KSubset) -> Self {
        Vertex::Set(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HostGraph {
    Materialized(Graph),
    Kneser { n: u32, k: u32 },
    Schrijver { n: u32, k: u32 },
    Mycielski { base: Box<HostGraph>, levels: u32 },
}

/// Parameters accepted by [`make_host`].
#[derive(Clone, Debug)]
pub enum HostSpec {
    Kneser { n: u32, k: u32 },
    Schrijver { n: u32, k: u32 },
    Mycielski { base: HostGraph, levels: u32 },
    Materialized(Graph),
}

pub fn make_host(spec: HostSpec) -> Result<HostGraph> {
    match spec {
        HostSpec::Kneser { n, k } => HostGraph::kneser(n, k),
        HostSpec::Schrijver { n, k } => HostGraph::schrijver(n, k),
        HostSpec::Mycielski { base, levels } => HostGraph::mycielski(base, levels),
        HostSpec::Materialized(g) => Ok(HostGraph::Materialized(g)),
    }
}

fn check_nk(n: u32, k: u32) -> Result<()> {
    if k == 0 || n < k {
        return Err(invalid(format!("need n >= k >= 1, got n={n}, k={k}")));
    }
    if n > MAX_GROUND {
        return Err(invalid(format!("n={n} exceeds the supported ground size {MAX_GROUND}")));
    }
    Ok(())
}

impl HostGraph {
    pub fn kneser(n: u32, k: u32) -> Result<Self> {
        check_nk(n, k)?;
        Ok(HostGraph::Kneser { n, k })
    }

    pub fn schrijver(n: u32, k: u32) -> Result<Self> {
        check_nk(n, k)?;
        Ok(HostGraph::Schrijver { n, k })
    }

    pub fn mycielski(base: HostGraph, levels: u32) -> Result<Self> {
        if levels == 0 {
            return Err(invalid("the Mycielskian needs at least one level"));
        }
        Ok(HostGraph::Mycielski {
            base: Box::new(base),
            levels,
        })
    }

    /// Ground size for set-labelled vertices, when the host has one.
    pub fn ground(&self) -> Option<u32> {
        match self {
            HostGraph::Kneser { n, .. } | HostGraph::Schrijver { n, .. } => Some(*n),
            HostGraph::Mycielski { base, .. } => base.ground(),
            HostGraph::Materialized(g) => g.labels().iter().find_map(ground_of),
        }
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        match (self, v) {
            (HostGraph::Materialized(g), _) => g.index_of(v).is_some(),
            (HostGraph::Kneser { n, k }, Vertex::Set(s)) => s.ground() == *n && s.len() == *k,
            (HostGraph::Schrijver { n, k }, Vertex::Set(s)) => {
                s.ground() == *n && s.len() == *k && !s.has_cyclic_neighbours()
            }
            (HostGraph::Mycielski { base, levels }, Vertex::Level(b, i)) => {
                i < levels && base.contains(b)
            }
            (HostGraph::Mycielski { .. }, Vertex::Apex) => true,
            _ => false,
        }
    }

    /// Adjacency; `false` whenever either vertex is not in the host.
    pub fn adjacent(&self, u: &Vertex, v: &Vertex) -> bool {
        if !self.contains(u) || !self.contains(v) {
            return false;
        }
        match self {
            HostGraph::Materialized(g) => {
                let (a, b) = (g.index_of(u).unwrap(), g.index_of(v).unwrap());
                g.has_edge(a, b)
            }
            HostGraph::Kneser { .. } | HostGraph::Schrijver { .. } => {
                let (a, b) = (u.as_set().unwrap(), v.as_set().unwrap());
                a.is_disjoint(b)
            }
            HostGraph::Mycielski { base, levels } => match (u, v) {
                (Vertex::Level(a, i), Vertex::Level(b, j)) => {
                    let ok_levels = (*i == 0 && *j == 0) || i.abs_diff(*j) == 1;
                    ok_levels && base.adjacent(a, b)
                }
                (Vertex::Level(_, i), Vertex::Apex) | (Vertex::Apex, Vertex::Level(_, i)) => {
                    *i == levels - 1
                }
                _ => false,
            },
        }
    }

    /// Number of vertices, saturating at `u128::MAX`.
    pub fn vertex_count(&self) -> u128 {
        match self {
            HostGraph::Materialized(g) => g.order() as u128,
            HostGraph::Kneser { n, k } => binomial(*n as u64, *k as u64),
            HostGraph::Schrijver { n, k } => schrijver_count(*n, *k),
            HostGraph::Mycielski { base, levels } => base
                .vertex_count()
                .saturating_mul(*levels as u128)
                .saturating_add(1),
        }
    }

    pub fn is_oracle(&self) -> bool {
        !matches!(self, HostGraph::Materialized(_))
    }

    /// Enumerates the host into a [`Graph`] if it has at most `cap` vertices.
    pub fn materialize(&self, cap: usize) -> Result<Graph> {
        let count = self.vertex_count();
        if count > cap as u128 {
            return Err(limit("materialized vertices", cap as u128, count));
        }
        match self {
            HostGraph::Materialized(g) => Ok(g.clone()),
            HostGraph::Kneser { n, k } => materialize_kneser(*n, *k),
            HostGraph::Schrijver { n, k } => materialize_schrijver(*n, *k),
            HostGraph::Mycielski { base, levels } => {
                let b = base.materialize(cap)?;
                Ok(mycielskian(&b, *levels))
            }
        }
    }

    /// Sorted neighbour list of `v`, refusing to list more than `cap` vertices.
    pub fn neighbours(&self, v: &Vertex, cap: usize) -> Result<Vec<Vertex>> {
        if !self.contains(v) {
            return Err(invalid(format!("{v} is not a vertex of the host")));
        }
        let mut out = match (self, v) {
            (HostGraph::Materialized(g), _) => {
                let i = g.index_of(v).unwrap();
                g.neighbours(i)
                    .iter()
                    .map(|&j| g.label(j as usize).clone())
                    .collect()
            }
            (HostGraph::Kneser { n, k }, Vertex::Set(s))
            | (HostGraph::Schrijver { n, k }, Vertex::Set(s)) => {
                let need = binomial((*n - *k) as u64, *k as u64);
                if need > cap as u128 {
                    return Err(limit("neighbour list", cap as u128, need));
                }
                let comp: Vec<u32> = s.complement().to_vec();
                let mut res = Vec::new();
                for_each_combination(comp.len(), *k as usize, |idx| {
                    let set = KSubset::new(*n, idx.iter().map(|&i| comp[i])).unwrap();
                    let cand = Vertex::Set(set);
                    if self.contains(&cand) {
                        res.push(cand);
                    }
                });
                res
            }
            (HostGraph::Mycielski { base, levels }, Vertex::Level(b, i)) => {
                let bn = base.neighbours(b, cap)?;
                let mut res = Vec::new();
                let mut push_level = |lvl: u32| {
                    for u in &bn {
                        res.push(Vertex::level(u.clone(), lvl));
                    }
                };
                if *i == 0 {
                    push_level(0);
                }
                if *i > 0 {
                    push_level(i - 1);
                }
                if i + 1 < *levels {
                    push_level(i + 1);
                }
                if *i == levels - 1 {
                    res.push(Vertex::Apex);
                }
                res
            }
            (HostGraph::Mycielski { base, levels }, Vertex::Apex) => {
                let g = base.materialize(cap)?;
                g.labels()
                    .iter()
                    .map(|b| Vertex::level(b.clone(), levels - 1))
                    .collect()
            }
            _ => unreachable!("membership checked above"),
        };
        if out.len() > cap {
            return Err(limit("neighbour list", cap as u128, out.len() as u128));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

fn ground_of(v: &Vertex) -> Option<u32> {
    match v {
        Vertex::Set(s) => Some(s.ground()),
        Vertex::Level(b, _) => ground_of(b),
        _ => None,
    }
}

fn schrijver_count(n: u32, k: u32) -> u128 {
    if n == k {
        return u128::from(k == 1);
    }
    let (n, k) = (n as u64, k as u64);
    binomial(n - k - 1, k - 1).saturating_mul(n as u128) / k as u128
}

/// Calls `f` on each `k`-combination of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Colex rank of a `k`-subset given a binomial table `c[p][q] = C(p, q)`.
fn colex_rank(bits: u128, table: &[Vec<u64>]) -> u64 {
    let mut b = bits;
    let mut rank = 0u64;
    let mut q = 1;
    while b != 0 {
        let p = b.trailing_zeros() as usize;
        rank += table[p][q];
        q += 1;
        b &= b - 1;
    }
    rank
}

fn binomial_table(n: u32, k: u32) -> Vec<Vec<u64>> {
    (0..n as u64)
        .map(|p| {
            (0..=k as u64)
                .map(|q| binomial(p, q).min(u64::MAX as u128) as u64)
                .collect()
        })
        .collect()
}

/// All `k`-subsets of `[n]` in colex order.
fn colex_subsets(n: u32, k: u32) -> Vec<u128> {
    let mut out = Vec::new();
    let mut x: u128 = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
    let top = if n == 128 { None } else { Some(1u128 << n) };
    loop {
        if let Some(t) = top {
            if x >= t {
                break;
            }
        }
        out.push(x);
        if x == 0 {
            break;
        }
        // Gosper's hack.
        let c = x & x.wrapping_neg();
        let r = match x.checked_add(c) {
            Some(r) => r,
            None => break,
        };
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

fn adjacency_budget(vertices: u128, degree: u128) -> Result<()> {
    let need = vertices.saturating_mul(degree);
    if need > ADJACENCY_ENTRY_CAP {
        return Err(limit("adjacency entries", ADJACENCY_ENTRY_CAP, need));
    }
    Ok(())
}

fn materialize_kneser(n: u32, k: u32) -> Result<Graph> {
    let degree = binomial((n - k) as u64, k as u64);
    adjacency_budget(binomial(n as u64, k as u64), degree)?;
    let sets = colex_subsets(n, k);
    let table = binomial_table(n, k);
    let mut adj = Vec::with_capacity(sets.len());
    let mut comp = Vec::with_capacity(n as usize);
    for &s in &sets {
        comp.clear();
        let mut c = !s & if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        while c != 0 {
            comp.push(c.trailing_zeros());
            c &= c - 1;
        }
        let mut list = Vec::with_capacity(degree as usize);
        for_each_combination(comp.len(), k as usize, |idx| {
            let bits = idx.iter().fold(0u128, |acc, &i| acc | 1u128 << comp[i]);
            list.push(colex_rank(bits, &table) as u32);
        });
        adj.push(list);
    }
    let labels = sets
        .iter()
        .map(|&b| Vertex::Set(KSubset::from_bits(n, b).unwrap()))
        .collect();
    Graph::from_parts(labels, adj)
}

fn materialize_schrijver(n: u32, k: u32) -> Result<Graph> {
    let members: Vec<KSubset> = colex_subsets(n, k)
        .into_iter()
        .map(|b| KSubset::from_bits(n, b).unwrap())
        .filter(|s| !s.has_cyclic_neighbours())
        .collect();
    adjacency_budget(members.len() as u128, members.len() as u128)?;
    let index: BTreeMap<u128, u32> = members
        .iter()
        .enumerate()
        .map(|(i, s)| (s.bits(), i as u32))
        .collect();
    let mut adj = vec![Vec::new(); members.len()];
    for (i, s) in members.iter().enumerate() {
        let comp = s.complement().to_vec();
        for_each_combination(comp.len(), k as usize, |idx| {
            let bits = idx.iter().fold(0u128, |acc, &e| acc | 1u128 << (comp[e] - 1));
            if let Some(&j) = index.get(&bits) {
                adj[i].push(j);
            }
        });
    }
    Graph::from_parts(members.into_iter().map(Vertex::Set).collect(), adj)
}

/// The generalized Mycielskian of a materialized graph with `levels` levels.
/// Vertex `(v, i)` gets index `i * |V| + v`; the apex comes last.
pub fn mycielskian(g: &Graph, levels: u32) -> Graph {
    let n = g.order();
    let m = levels as usize;
    let total = n * m + 1;
    let apex = n * m;
    let mut labels = Vec::with_capacity(total);
    for lvl in 0..levels {
        for v in g.labels() {
            labels.push(Vertex::level(v.clone(), lvl));
        }
    }
    labels.push(Vertex::Apex);
    let mut adj = vec![Vec::new(); total];
    let mut link = |a: usize, b: usize| {
        adj[a].push(b as u32);
        adj[b].push(a as u32);
    };
    for (u, v) in g.edges() {
        link(u, v);
        for lvl in 0..m.saturating_sub(1) {
            link(lvl * n + u, (lvl + 1) * n + v);
            link(lvl * n + v, (lvl + 1) * n + u);
        }
    }
    for v in 0..n {
        link((m - 1) * n + v, apex);
    }
    Graph::from_parts(labels, adj).expect("level labels are distinct")
}
