//! Materialized simple graphs with labelled vertices.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::host::Vertex;

/// A simple undirected loopless graph. Vertex `i` carries label `labels[i]`;
/// adjacency lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<Vertex>,
    index: BTreeMap<Vertex, u32>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    pub fn from_edges(labels: Vec<Vertex>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u},{v}) names a missing vertex")));
            }
            if u == v {
                return Err(invalid(format!("loop at vertex {u}")));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(invalid(format!("parallel edges at vertex {u}")));
            }
        }
        Self::from_parts(labels, adj)
    }

    /// Adjacency lists must already be symmetric and loop-free; they are sorted here.
    pub(crate) fn from_parts(labels: Vec<Vertex>, mut adj: Vec<Vec<u32>>) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i as u32).is_some() {
                return Err(invalid(format!("duplicate vertex label {l}")));
            }
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Graph { labels, index, adj })
    }

    fn numbered(n: usize) -> Vec<Vertex> {
        (0..n as u32).map(Vertex::Id).collect()
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(Self::numbered(n), &[]).expect("valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Self::from_edges(Self::numbered(n), &e).expect("valid")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid("a cycle needs at least 3 vertices"));
        }
        let e: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Self::from_edges(Self::numbered(n), &e)
    }

    pub fn path(n: usize) -> Self {
        let e: Vec<_> = (1..n).map(|u| (u - 1, u)).collect();
        Self::from_edges(Self::numbered(n), &e).expect("valid")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn label(&self, i: usize) -> &Vertex {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.index.get(v).map(|&i| i as usize)
    }

    pub fn neighbours(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (v as usize) > u {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    /// Adds a vertex adjacent to every existing vertex.
    pub fn with_dominating_vertex(&self, label: Vertex) -> Result<Self> {
        let mut labels = self.labels.clone();
        let n = labels.len();
        labels.push(label);
        let mut e = self.edges();
        e.extend((0..n).map(|u| (u, n)));
        Self::from_edges(labels, &e)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(invalid(format!("no edge ({u},{v}) to remove")));
        }
        let e: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)))
            .collect();
        Self::from_edges(self.labels.clone(), &e)
    }

    /// Two-colouring by BFS, `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &self.adj[u] {
                    let v = v as usize;
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        q.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.has_edge(0, 3) && !k4.has_edge(2, 2));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(!c5.is_bipartite());
        assert!(Graph::cycle(4).unwrap().is_bipartite());
        assert!(Graph::cycle(2).is_err());
        let d = k4.without_edge(0, 1).unwrap().with_dominating_vertex(Vertex::Id(4)).unwrap();
        assert_eq!(d.edge_count(), 9);
        assert_eq!(d.degree(4), 4);
    }

    #[test]
    fn rejects_non_simple() {
        let l = Graph::numbered(3);
        assert!(Graph::from_edges(l.clone(), &[(0, 0)]).is_err());
        assert!(Graph::from_edges(l.clone(), &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(l, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(vec![Vertex::Id(1), Vertex::Id(1)], &[]).is_err());
    }
}
