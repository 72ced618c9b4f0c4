use alloc::vec;
use alloc::vec::Vec;

use super::{CertPath, Certificate, PatternKind};
use crate::error::{limit, Result};
use crate::graph::Graph;
use crate::host::{for_each_combination, HostGraph};

/// Default vertex cap for the exhaustive subdivision search.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 12;

struct Search<'a> {
    g: &'a Graph,
    nbr: Vec<u128>,
    require_odd: bool,
    budget: u64,
    spent: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(limit("search steps", self.budget as u128, self.spent as u128));
        }
        Ok(())
    }

    /// Routes pairs `idx..` with internally disjoint paths avoiding `blocked`.
    fn route(
        &mut self,
        pairs: &[(usize, usize)],
        idx: usize,
        blocked: u128,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<bool> {
        if idx == pairs.len() {
            return Ok(true);
        }
        let (a, b) = pairs[idx];
        let mut stack = vec![a];
        self.extend(pairs, idx, blocked, b, &mut stack, out)
    }

    fn extend(
        &mut self,
        pairs: &[(usize, usize)],
        idx: usize,
        blocked: u128,
        target: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<bool> {
        self.tick()?;
        let last = *stack.last().unwrap();
        let mut on_path = 0u128;
        for &v in stack.iter() {
            on_path |= 1u128 << v;
        }
        let mut cand = self.nbr[last];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if v == target {
                let edges = stack.len();
                if self.require_odd && edges % 2 == 0 {
                    continue;
                }
                stack.push(v);
                let internal = stack[1..stack.len() - 1]
                    .iter()
                    .fold(0u128, |m, &x| m | 1u128 << x);
                out.push(stack.clone());
                if self.route(pairs, idx + 1, blocked | internal, out)? {
                    stack.pop();
                    return Ok(true);
                }
                out.pop();
                stack.pop();
                continue;
            }
            if (blocked | on_path) & (1u128 << v) != 0 {
                continue;
            }
            stack.push(v);
            if self.extend(pairs, idx, blocked, target, stack, out)? {
                stack.pop();
                return Ok(true);
            }
            stack.pop();
        }
        Ok(false)
    }
}

/// Exhaustive search for a `K_t` subdivision (totally odd when
/// `require_odd`) in a small materialized graph. `budget` bounds search steps.
pub fn brute_force_find_subdivision(
    g: &Graph,
    t: usize,
    require_odd: bool,
    budget: u64,
    cap: usize,
) -> Result<Option<Certificate>> {
    let n = g.order();
    if n > cap.min(128) {
        return Err(limit("vertices for subdivision search", cap.min(128) as u128, n as u128));
    }
    let host = HostGraph::Materialized(g.clone());
    if t > n {
        return Ok(None);
    }
    let nbr: Vec<u128> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u128, |m, &u| m | 1u128 << u))
        .collect();
    let eligible: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 >= t).collect();
    let mut search = Search {
        g,
        nbr,
        require_odd,
        budget,
        spent: 0,
    };
    let mut found: Option<(Vec<usize>, Vec<Vec<usize>>)> = None;
    let mut failure = None;
    for_each_combination(eligible.len(), t, |idx| {
        if found.is_some() || failure.is_some() {
            return;
        }
        let terms: Vec<usize> = idx.iter().map(|&i| eligible[i]).collect();
        let mut pairs = Vec::new();
        for a in 0..t {
            for b in a + 1..t {
                pairs.push((terms[a], terms[b]));
            }
        }
        let blocked = terms.iter().fold(0u128, |m, &v| m | 1u128 << v);
        let mut out = Vec::new();
        match search.route(&pairs, 0, blocked, &mut out) {
            Ok(true) => found = Some((terms, out)),
            Ok(false) => {}
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let Some((terms, routes)) = found else {
        return Ok(None);
    };
    let labels = |vs: &[usize]| vs.iter().map(|&v| search.g.label(v).clone()).collect();
    let mut cert = Certificate::new(PatternKind::Subdivision, host, labels(&terms));
    let mut k = 0;
    for a in 0..t {
        for b in a + 1..t {
            cert.paths.push(CertPath {
                pair: (a, b),
                vertices: labels(&routes[k]),
            });
            k += 1;
        }
    }
    Ok(Some(cert))
}
