//! Lifting a totally odd `K_t` (immersion or subdivision) in `G` to a
//! totally odd `K_{t+1}` in the generalized Mycielskian `μ_m(G)`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::certify::{verify_immersion, verify_subdivision, CertPath, Certificate, PatternKind};
use crate::error::{invalid, Error, Result};
use crate::host::{HostGraph, Vertex, DEFAULT_MATERIALIZE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftCase {
    /// No base path is a single edge; the apex becomes the new terminal.
    NoEdgePath,
    /// Base path between these terminal indices is an edge.
    EdgePath(usize, usize),
}

impl LiftCase {
    pub fn name(&self) -> &'static str {
        match self {
            LiftCase::NoEdgePath => "A",
            LiftCase::EdgePath(..) => "B",
        }
    }
}

fn lv(v: &Vertex, level: u32) -> Vertex {
    Vertex::level(v.clone(), level)
}

/// Base path from terminal `a` to terminal `b`.
fn oriented(cert: &Certificate, a: usize, b: usize) -> Result<Vec<Vertex>> {
    let p = cert
        .path_for(a, b)
        .ok_or_else(|| invalid(format!("base certificate has no path for ({a},{b})")))?;
    let mut vs = p.vertices.clone();
    if vs.first() != Some(&cert.terminals[a]) {
        vs.reverse();
    }
    Ok(vs)
}

/// Which case applies to a base certificate.
pub fn lift_case(base: &Certificate) -> LiftCase {
    let t = base.terminals.len();
    for a in 0..t {
        for b in a + 1..t {
            if base.path_for(a, b).is_some_and(|p| p.edge_count() == 1) {
                return LiftCase::EdgePath(a, b);
            }
        }
    }
    LiftCase::NoEdgePath
}

/// Distinct neighbours `x_i` of every terminal, trying the first vertices
/// of the terminal's own paths before other host neighbours.
fn spoke_neighbours(base: &Certificate) -> Result<Vec<Vertex>> {
    let t = base.terminals.len();
    let mut cands: Vec<Vec<Vertex>> = Vec::with_capacity(t);
    for a in 0..t {
        let mut c: Vec<Vertex> = (0..t)
            .filter(|&b| b != a)
            .map(|b| oriented(base, a, b).map(|p| p[1].clone()))
            .collect::<Result<_>>()?;
        c.sort();
        c.dedup();
        cands.push(c);
    }
    if let Some(x) = sdr(&cands) {
        return Ok(x);
    }
    for (a, c) in cands.iter_mut().enumerate() {
        for v in base.host.neighbours(&base.terminals[a], DEFAULT_MATERIALIZE_CAP)? {
            if !c.contains(&v) {
                c.push(v);
            }
        }
    }
    sdr(&cands).ok_or_else(|| {
        Error::ConstructionBug("terminals have no distinct neighbours for the spokes".to_string())
    })
}

fn sdr(cands: &[Vec<Vertex>]) -> Option<Vec<Vertex>> {
    fn go(cands: &[Vec<Vertex>], chosen: &mut Vec<Vertex>) -> bool {
        let i = chosen.len();
        if i == cands.len() {
            return true;
        }
        for v in &cands[i] {
            if chosen.contains(v) {
                continue;
            }
            chosen.push(v.clone());
            if go(cands, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(cands.len());
    go(cands, &mut chosen).then_some(chosen)
}

fn lift(base: &Certificate, m: u32, kind: PatternKind) -> Result<Certificate> {
    if m < 2 {
        return Err(invalid(format!("lift needs m >= 2, got {m}")));
    }
    let report = match kind {
        PatternKind::Subdivision => verify_subdivision(base, true),
        PatternKind::Immersion => verify_immersion(base, true),
    };
    if !report.passed() {
        return Err(invalid(format!(
            "base certificate fails verification: {:?}",
            report.violations.first()
        )));
    }
    let t = base.terminals.len();
    let host = HostGraph::mycielski(base.host.clone(), m)?;
    let case = lift_case(base);
    let v = &base.terminals;
    // paths[p][q] for p < q over the t+1 new terminals.
    let mut paths: Vec<((usize, usize), Vec<Vertex>)> = Vec::new();
    let terminals: Vec<Vertex> = match case {
        LiftCase::NoEdgePath => {
            let start = if m % 2 == 0 { 1 } else { 0 };
            let mut terms: Vec<Vertex> = v.iter().map(|x| lv(x, start)).collect();
            terms.push(Vertex::Apex);
            for a in 0..t {
                for b in a + 1..t {
                    let p = oriented(base, a, b)?;
                    let mut q = vec![terms[a].clone()];
                    q.extend(p[1..p.len() - 1].iter().map(|x| lv(x, 0)));
                    q.push(terms[b].clone());
                    paths.push(((a, b), q));
                }
            }
            let xs = if m - start >= 2 {
                spoke_neighbours(base)?
            } else {
                v.clone()
            };
            for a in 0..t {
                let q: Vec<Vertex> = (start..m)
                    .map(|l| {
                        let at = if (l - start) % 2 == 0 { &v[a] } else { &xs[a] };
                        lv(at, l)
                    })
                    .chain([Vertex::Apex])
                    .collect();
                paths.push(((a, t), q));
            }
            terms
        }
        LiftCase::EdgePath(one, partner) => {
            let mut terms: Vec<Vertex> = v.iter().map(|x| lv(x, 0)).collect();
            terms.push(lv(&v[one], 1));
            for a in 0..t {
                for b in a + 1..t {
                    if a == one || b == one {
                        continue;
                    }
                    let p = oriented(base, a, b)?;
                    paths.push(((a, b), p.iter().map(|x| lv(x, 0)).collect()));
                }
            }
            for k in (0..t).filter(|&k| k != one) {
                let p = oriented(base, one, k)?;
                let last = p.len() - 1;
                // Q_{1k}: internal b_x at level x mod 2; Q_k: the other parity.
                let same: Vec<Vertex> = p
                    .iter()
                    .enumerate()
                    .map(|(x, b)| {
                        let l = if x == 0 || x == last { 0 } else { (x % 2) as u32 };
                        lv(b, l)
                    })
                    .collect();
                let mut cross: Vec<Vertex> = p
                    .iter()
                    .enumerate()
                    .map(|(x, b)| {
                        let l = if x == 0 {
                            1
                        } else if x == last {
                            0
                        } else {
                            1 - (x % 2) as u32
                        };
                        lv(b, l)
                    })
                    .collect();
                cross.reverse();
                let (a, b) = (one.min(k), one.max(k));
                let mut same = same;
                if a != one {
                    same.reverse();
                }
                paths.push(((a, b), same));
                paths.push(((k, t), cross));
            }
            let (v1, vi) = (&v[one], &v[partner]);
            let up = (0..m).map(|l| lv(if l % 2 == 0 { v1 } else { vi }, l));
            let down = (1..m).rev().map(|l| lv(if l % 2 == 1 { v1 } else { vi }, l));
            let q: Vec<Vertex> = up.chain([Vertex::Apex]).chain(down).collect();
            paths.push(((one, t), q));
            terms
        }
    };
    paths.sort_by_key(|(pair, _)| *pair);
    let mut cert = Certificate::new(kind, host, terminals);
    cert.paths = paths
        .into_iter()
        .map(|(pair, vertices)| CertPath { pair, vertices })
        .collect();
    cert.note("construction", "mycielski-lift");
    cert.note("case", case.name());
    cert.note("levels", m.to_string());
    cert.note("base_order", t.to_string());
    if let LiftCase::EdgePath(a, b) = case {
        cert.note("edge_pair", format!("{a},{b}"));
    }
    let report = cert.verify(true);
    if !report.passed() {
        return Err(Error::ConstructionBug(format!(
            "lifted certificate fails verification: {:?}",
            report.violations.first()
        )));
    }
    Ok(cert)
}

/// Totally odd `K_{t+1}` immersion in `μ_m(G)`.
pub fn lift_immersion(base: &Certificate, m: u32) -> Result<Certificate> {
    lift(base, m, PatternKind::Immersion)
}

/// Totally odd `K_{t+1}` subdivision in `μ_m(G)`.
pub fn lift_subdivision(base: &Certificate, m: u32) -> Result<Certificate> {
    lift(base, m, PatternKind::Subdivision)
}
