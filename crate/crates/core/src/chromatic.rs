//! Exact chromatic number and clique number for small materialized graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{limit, Result};
use crate::graph::Graph;

/// Default vertex cap for exact colouring.
pub const DEFAULT_CHROMATIC_CAP: usize = 40;

pub fn chromatic_number_exact(g: &Graph, cap: usize) -> Result<usize> {
    Ok(optimal_colouring(g, cap)?.into_iter().max().unwrap_or(0) as usize)
}

/// A proper colouring with colours `1..=χ(G)`.
pub fn optimal_colouring(g: &Graph, cap: usize) -> Result<Vec<u32>> {
    let n = g.order();
    if n > cap {
        return Err(limit("vertices for exact colouring", cap as u128, n as u128));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let lower = greedy_clique(g).max(1);
    let mut k = lower;
    loop {
        if let Some(c) = colour_with(g, k) {
            return Ok(c);
        }
        k += 1;
    }
}

/// DSATUR backtracking: a proper colouring with colours in `1..=k`, if any.
/// New colours are only opened in increasing order, which removes
/// permutation symmetry.
pub fn colour_with(g: &Graph, k: usize) -> Option<Vec<u32>> {
    let n = g.order();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut colour = vec![0u32; n];
    // forbidden[v][c] counts coloured neighbours of v with colour c.
    let mut forbidden = vec![vec![0u16; k + 1]; n];
    if dsatur(g, k, &mut colour, &mut forbidden, 0, 0) {
        Some(colour)
    } else {
        None
    }
}

fn dsatur(
    g: &Graph,
    k: usize,
    colour: &mut [u32],
    forbidden: &mut [Vec<u16>],
    done: usize,
    used: usize,
) -> bool {
    let n = g.order();
    if done == n {
        return true;
    }
    let mut best = usize::MAX;
    let mut best_key = (0usize, 0usize);
    for v in 0..n {
        if colour[v] != 0 {
            continue;
        }
        let sat = forbidden[v][1..].iter().filter(|&&c| c > 0).count();
        let key = (sat, g.degree(v));
        if best == usize::MAX || key > best_key {
            best = v;
            best_key = key;
        }
    }
    let v = best;
    let top = (used + 1).min(k);
    for c in 1..=top {
        if forbidden[v][c] > 0 {
            continue;
        }
        colour[v] = c as u32;
        for &u in g.neighbours(v) {
            forbidden[u as usize][c] += 1;
        }
        if dsatur(g, k, colour, forbidden, done + 1, used.max(c)) {
            return true;
        }
        for &u in g.neighbours(v) {
            forbidden[u as usize][c] -= 1;
        }
        colour[v] = 0;
    }
    false
}

fn greedy_clique(g: &Graph) -> usize {
    let mut best = 0;
    for s in 0..g.order() {
        let mut clique = vec![s];
        let mut cand: Vec<usize> = g.neighbours(s).iter().map(|&x| x as usize).collect();
        cand.sort_by_key(|&v| core::cmp::Reverse(g.degree(v)));
        for v in cand {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Exact clique number by branch and bound over bitmasks (`|V| <= 128`).
pub fn clique_number(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.order();
    if n > cap.min(128) {
        return Err(limit("vertices for clique search", cap.min(128) as u128, n as u128));
    }
    let masks: Vec<u128> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u128, |m, &u| m | 1u128 << u))
        .collect();
    let mut best = 0;
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    expand(&masks, 0, all, &mut best);
    Ok(best)
}

fn expand(masks: &[u128], size: usize, mut cand: u128, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= !(1u128 << v);
        expand(masks, size + 1, cand & masks[v], best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::HostGraph;

    fn is_proper(g: &Graph, c: &[u32]) -> bool {
        g.edges().iter().all(|&(u, v)| c[u] != c[v])
    }

    #[test]
    fn known_values() {
        assert_eq!(chromatic_number_exact(&Graph::complete(4), 40).unwrap(), 4);
        assert_eq!(chromatic_number_exact(&Graph::cycle(5).unwrap(), 40).unwrap(), 3);
        assert_eq!(chromatic_number_exact(&Graph::cycle(6).unwrap(), 40).unwrap(), 2);
        assert_eq!(chromatic_number_exact(&Graph::empty(3), 40).unwrap(), 1);
        assert_eq!(chromatic_number_exact(&Graph::empty(0), 40).unwrap(), 0);
        let petersen = HostGraph::kneser(5, 2).unwrap().materialize(100).unwrap();
        assert_eq!(chromatic_number_exact(&petersen, 40).unwrap(), 3);
        let c = optimal_colouring(&petersen, 40).unwrap();
        assert!(is_proper(&petersen, &c));
    }

    #[test]
    fn kneser_closed_form_small() {
        // chi(KG(2k+r, k)) = r + 2
        for (k, r) in [(2, 2), (2, 3), (3, 1), (3, 2)] {
            let g = HostGraph::kneser(2 * k + r, k).unwrap().materialize(100).unwrap();
            assert_eq!(chromatic_number_exact(&g, 100).unwrap(), (r + 2) as usize);
        }
    }

    #[test]
    fn grotzsch_is_four_chromatic() {
        let c5 = HostGraph::Materialized(Graph::cycle(5).unwrap());
        let g = HostGraph::mycielski(c5, 2).unwrap().materialize(100).unwrap();
        assert_eq!(chromatic_number_exact(&g, 40).unwrap(), 4);
        assert_eq!(clique_number(&g, 40).unwrap(), 2);
    }

    #[test]
    fn cap_enforced() {
        assert!(chromatic_number_exact(&Graph::empty(41), 40).is_err());
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&Graph::complete(5), 12).unwrap(), 5);
        assert_eq!(clique_number(&Graph::cycle(5).unwrap(), 12).unwrap(), 2);
        assert_eq!(clique_number(&Graph::empty(3), 12).unwrap(), 1);
    }
}
