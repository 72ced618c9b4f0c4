//! Totally odd immersions of `K_{⌊t/2⌋+1}` in graphs with `χ = zig = t`.
//!
//! Terminals are the odd-position vertices of a maximum zigzag of a
//! colouring that minimises the number of maximum zigzags (plus `z_t` when
//! `t` is even). Pairs in one Kempe chain use the chain; otherwise the
//! potential-zigzag layers are unwound into a walk with an odd 2-colouring,
//! which is cut down to an odd path.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::labels::labels_for;
use super::{
    choose_min_zigzag_colouring, is_potential_zigzag, kempe_components, max_zigzags,
    shortest_path, LabelAssignment, ProperColouring, ZigzagCaps, ZigzagSeq,
};
use crate::certify::{verify_immersion, CertPath, Certificate, PatternKind};
use crate::chromatic::chromatic_number_exact;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::host::HostGraph;

pub type ImmersionCaps = ZigzagCaps;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RouteKind {
    /// `z_i z_t` for the extra terminal of even `t`.
    Direct,
    /// Both ends lie in one `{i,j}`-Kempe chain.
    Kempe,
    /// Unwound through this many potential-zigzag layers.
    Layers(usize),
}

/// How one terminal pair was joined; colours are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRoute {
    pub colours: (u32, u32),
    pub kind: RouteKind,
    pub path: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ImmersionOutcome {
    pub certificate: Certificate,
    pub colouring: ProperColouring,
    pub zigzag: ZigzagSeq,
    pub labels: LabelAssignment,
    pub routes: Vec<PairRoute>,
}

fn broken(msg: alloc::string::String) -> Error {
    Error::AlgorithmInvariant(msg)
}

struct Layer {
    /// (zigzag, twin inside the current region, twin outside the union).
    entries: Vec<(ZigzagSeq, usize, usize)>,
}

struct Router<'a> {
    g: &'a Graph,
    c: &'a ProperColouring,
    z: &'a [usize],
    labels: &'a LabelAssignment,
}

impl Router<'_> {
    fn route(&self, i: u32, j: u32) -> Result<PairRoute> {
        let g = self.g;
        let n = g.order();
        let (zi, zj) = (self.z[i as usize - 1], self.z[j as usize - 1]);
        let comp = kempe_components(g, self.c.colours(), i, j);
        let allowed: Vec<bool> = comp.iter().map(|&x| x != usize::MAX).collect();
        if comp[zi] == comp[zj] {
            let path = shortest_path(g, &allowed, zi, zj)
                .ok_or_else(|| broken(format!("no path inside the ({i},{j}) chain")))?;
            return Ok(PairRoute {
                colours: (i, j),
                kind: RouteKind::Kempe,
                path,
            });
        }

        let members = |id: usize| -> Vec<bool> { comp.iter().map(|&x| x == id).collect() };
        let mut union = members(comp[zi]);
        let mut current = union.clone();
        let mut layers: Vec<Layer> = Vec::new();
        loop {
            if layers.len() > n {
                return Err(broken(format!("layer iteration for ({i},{j}) did not stop")));
            }
            let cp = self.c.switched(&union, i, j);
            let mut entries = Vec::new();
            for zz in max_zigzags(g, &cp) {
                let Some(pz) = is_potential_zigzag(g, self.c, &zz, i, j) else {
                    continue;
                };
                if !pz.colours_fill_positions(self.c) {
                    return Err(broken(format!(
                        "potential zigzag {zz:?} does not fill the colour positions"
                    )));
                }
                let (u, v) = pz.twins;
                let (a, b) = if current[u] && !union[v] {
                    (u, v)
                } else if current[v] && !union[u] {
                    (v, u)
                } else {
                    return Err(broken(format!(
                        "potential zigzag {zz:?} has twins ({u},{v}) outside the expected regions"
                    )));
                };
                entries.push((zz, a, b));
            }
            if entries.is_empty() {
                return Err(broken(format!(
                    "no potential zigzag at layer {} for ({i},{j})",
                    layers.len() + 1
                )));
            }
            let mut next = vec![false; n];
            for &(_, _, b) in &entries {
                for (x, &id) in comp.iter().enumerate() {
                    if id == comp[b] {
                        next[x] = true;
                    }
                }
            }
            layers.push(Layer { entries });
            if next[zj] {
                break;
            }
            for x in 0..n {
                union[x] |= next[x];
            }
            current = next;
        }

        // Unwind from the last layer back to the first.
        let m = layers.len() + 1;
        let mut chosen: Vec<(ZigzagSeq, usize, usize)> = Vec::with_capacity(m - 1);
        let mut target = zj;
        for layer in layers.iter().rev() {
            let e = layer
                .entries
                .iter()
                .find(|(_, _, b)| comp[*b] == comp[target])
                .ok_or_else(|| broken(format!("layer unwinding for ({i},{j}) lost its way")))?;
            target = e.1;
            chosen.push(e.clone());
        }
        chosen.reverse();

        let chain = |s: usize, t: usize| {
            shortest_path(g, &allowed, s, t)
                .ok_or_else(|| broken(format!("chain gap between {s} and {t}")))
        };
        let other = |col: u32| if col == i { j } else { i };
        let mut walk = chain(zi, chosen[0].1)?;
        let mut phi: BTreeMap<usize, u32> = BTreeMap::new();
        for (q, (zz, a, b)) in chosen.iter().enumerate() {
            let ca = self.c.colour(*a);
            let l = self
                .labels
                .label(ca, other(ca))
                .ok_or_else(|| broken(format!("no label for colour {ca}")))?;
            let hits: Vec<usize> = zz.iter().copied().filter(|&x| self.c.colour(x) == l).collect();
            let [vq] = hits[..] else {
                return Err(broken(format!("zigzag {zz:?} has {} vertices of label colour {l}", hits.len())));
            };
            let f = other(ca);
            if phi.insert(vq, f).is_some_and(|old| old != f) {
                return Err(broken(format!("vertex {vq} gets two walk colours")));
            }
            walk.push(vq);
            let end = chosen.get(q + 1).map_or(zj, |e| e.1);
            walk.extend(chain(*b, end)?);
        }
        let phi_of = |x: usize| phi.get(&x).copied().unwrap_or(self.c.colour(x));
        for w in walk.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(broken(format!("walk step {}-{} is not an edge", w[0], w[1])));
            }
            if phi_of(w[0]) == phi_of(w[1]) {
                return Err(broken(format!("walk colouring clashes on {}-{}", w[0], w[1])));
            }
        }
        let path = loop_erase(&walk);
        if phi_of(path[0]) == phi_of(*path.last().unwrap()) || path.len() % 2 != 0 {
            return Err(broken(format!("({i},{j}) path has even length")));
        }
        Ok(PairRoute {
            colours: (i, j),
            kind: RouteKind::Layers(m),
            path,
        })
    }
}

/// Removes cycles from a walk, keeping its endpoints.
fn loop_erase(walk: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for &x in walk {
        if let Some(p) = out.iter().position(|&y| y == x) {
            out.truncate(p + 1);
        } else {
            out.push(x);
        }
    }
    out
}

/// Builds and self-verifies the immersion for `G` with `χ(G) = zig(G)`.
pub fn build_immersion(g: &Graph, caps: &ImmersionCaps) -> Result<ImmersionOutcome> {
    if g.order() > caps.vertices {
        return Err(crate::error::limit(
            "vertices for immersion",
            caps.vertices as u128,
            g.order() as u128,
        ));
    }
    let t = chromatic_number_exact(g, caps.chromatic)? as u32;
    if t == 0 {
        return Err(invalid("graph has no vertices"));
    }
    let c = choose_min_zigzag_colouring(g, t, caps)?;
    let z = max_zigzags(g, &c)
        .into_iter()
        .next()
        .ok_or_else(|| broken("no zigzag".to_string()))?;
    if (0..z.len()).any(|k| c.colour(z[k]) != k as u32 + 1) || z.len() != t as usize {
        return Err(broken(format!("maximum zigzag {z:?} does not use colours 1..{t}")));
    }
    let labels = labels_for(t)?;
    let mut term_colours: Vec<u32> = (1..=t).step_by(2).collect();
    if t % 2 == 0 {
        term_colours.push(t);
    }
    let router = Router {
        g,
        c: &c,
        z: &z,
        labels: &labels,
    };
    let mut routes = Vec::new();
    for (a, &i) in term_colours.iter().enumerate() {
        for &j in &term_colours[a + 1..] {
            let route = if j % 2 == 0 {
                PairRoute {
                    colours: (i, j),
                    kind: RouteKind::Direct,
                    path: vec![z[i as usize - 1], z[j as usize - 1]],
                }
            } else {
                router.route(i, j)?
            };
            routes.push(route);
        }
    }

    let host = HostGraph::Materialized(g.clone());
    let label = |v: usize| g.label(v).clone();
    let terminals = term_colours.iter().map(|&k| label(z[k as usize - 1])).collect();
    let mut cert = Certificate::new(PatternKind::Immersion, host, terminals);
    let pos = |col: u32| term_colours.iter().position(|&x| x == col).unwrap();
    for r in &routes {
        cert.paths.push(CertPath {
            pair: (pos(r.colours.0), pos(r.colours.1)),
            vertices: r.path.iter().map(|&v| label(v)).collect(),
        });
    }
    cert.note("construction", "zigzag-immersion");
    cert.note("colours", t.to_string());
    if labels.is_degenerate() {
        cert.note("degenerate_labels", "true");
    }
    if t % 2 == 0 {
        cert.note("extra_terminal", format!("z_{t}"));
    }
    let layered: Vec<_> = routes
        .iter()
        .filter_map(|r| match r.kind {
            RouteKind::Layers(m) => Some(format!("{}-{}:{m}", r.colours.0, r.colours.1)),
            _ => None,
        })
        .collect();
    if !layered.is_empty() {
        cert.note("layered_pairs", layered.join(","));
    }
    let outcome = ImmersionOutcome {
        certificate: cert,
        colouring: c,
        zigzag: z,
        labels,
        routes,
    };
    let report = verify_immersion(&outcome.certificate, true);
    if !report.passed() {
        return Err(Error::ConstructionBug(format!(
            "immersion failed verification: {:?}",
            report.violations.first()
        )));
    }
    audit_colour_pairs(g, &outcome)?;
    Ok(outcome)
}

/// Each route for colours `(i, j)` only uses edges coloured `{i,j}`,
/// `{i, ℓ^i}` or `{j, ℓ^j}` (just `{i, t}` for the extra terminal).
pub fn audit_colour_pairs(g: &Graph, outcome: &ImmersionOutcome) -> Result<()> {
    let c = &outcome.colouring;
    let t = c.t();
    for r in &outcome.routes {
        let (i, j) = r.colours;
        let mut allowed = vec![(i, j)];
        if !(t % 2 == 0 && j == t) {
            for (own, oth) in [(i, j), (j, i)] {
                if let Some(l) = outcome.labels.label(own, oth) {
                    allowed.push((own.min(l), own.max(l)));
                }
            }
        }
        for w in r.path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::ConstructionBug(format!(
                    "route ({i},{j}) uses non-edge {}-{}",
                    w[0], w[1]
                )));
            }
            let (a, b) = (c.colour(w[0]), c.colour(w[1]));
            if !allowed.contains(&(a.min(b), a.max(b))) {
                return Err(Error::ConstructionBug(format!(
                    "route ({i},{j}) uses an edge coloured {{{a},{b}}}"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::mycielskian;

    fn build(g: &Graph) -> ImmersionOutcome {
        build_immersion(g, &ImmersionCaps::default()).unwrap()
    }

    #[test]
    fn complete_graphs() {
        for (n, order) in [(3, 2), (4, 3), (5, 3), (6, 4), (7, 4)] {
            let out = build(&Graph::complete(n));
            assert_eq!(out.certificate.pattern_order, order, "K_{n}");
            assert!(out.routes.iter().all(|r| r.path.len() == 2));
        }
    }

    #[test]
    fn odd_cycle() {
        let out = build(&Graph::cycle(5).unwrap());
        assert_eq!(out.certificate.pattern_order, 2);
        assert_eq!(out.certificate.paths[0].edge_count() % 2, 1);
        assert_eq!(out.certificate.metadata["degenerate_labels"], "true");
    }

    #[test]
    fn even_t_uses_extra_terminal() {
        let out = build(&Graph::complete(4));
        assert_eq!(out.certificate.metadata["extra_terminal"], "z_4");
    }

    #[test]
    fn bipartite() {
        let out = build(&Graph::cycle(6).unwrap());
        assert_eq!(out.certificate.pattern_order, 2);
        assert_eq!(out.routes[0].kind, RouteKind::Direct);
    }

    #[test]
    fn grotzsch() {
        let g = mycielskian(&Graph::cycle(5).unwrap(), 1);
        match build_immersion(&g, &ImmersionCaps::default()) {
            Ok(out) => assert_eq!(out.certificate.pattern_order, 3),
            Err(e) => assert!(matches!(e, Error::InvalidInput(_)), "{e}"),
        }
    }

    #[test]
    fn loop_erasure() {
        assert_eq!(loop_erase(&[0, 1, 2, 1, 3]), [0, 1, 3]);
        assert_eq!(loop_erase(&[0, 1, 0, 2]), [0, 2]);
    }
}
