//! Certificates for complete patterns and their independent verification.

mod brute_force;

pub use brute_force::{brute_force_find_subdivision, DEFAULT_BRUTE_FORCE_CAP};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::host::{HostGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PatternKind {
    Subdivision,
    Immersion,
}

/// One path of a certificate; `pair` holds terminal indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertPath {
    pub pair: (usize, usize),
    pub vertices: Vec<Vertex>,
}

impl CertPath {
    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }
}

/// A claimed `K_t` subdivision or immersion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: PatternKind,
    pub host: HostGraph,
    pub pattern_order: usize,
    pub terminals: Vec<Vertex>,
    pub paths: Vec<CertPath>,
    pub metadata: BTreeMap<String, String>,
}

impl Certificate {
    pub fn new(kind: PatternKind, host: HostGraph, terminals: Vec<Vertex>) -> Self {
        Certificate {
            kind,
            host,
            pattern_order: terminals.len(),
            terminals,
            paths: Vec::new(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn path_for(&self, a: usize, b: usize) -> Option<&CertPath> {
        let key = (a.min(b), a.max(b));
        self.paths
            .iter()
            .find(|p| (p.pair.0.min(p.pair.1), p.pair.0.max(p.pair.1)) == key)
    }

    pub fn note(&mut self, key: &str, value: impl Into<String>) {
        self.metadata.insert(key.into(), value.into());
    }

    /// Verifies with the checker matching `kind`.
    pub fn verify(&self, require_odd: bool) -> VerificationReport {
        match self.kind {
            PatternKind::Subdivision => verify_subdivision(self, require_odd),
            PatternKind::Immersion => verify_immersion(self, require_odd),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// Pattern order disagrees with the terminal list.
    PatternOrder,
    TerminalNotInHost,
    DuplicateTerminal,
    /// A path names a terminal index that does not exist, or a pair twice.
    MalformedPair,
    MissingPath,
    EmptyPath,
    EndpointMismatch,
    VertexNotInHost,
    NotAdjacent,
    RepeatedVertex,
    SharedInternalVertex,
    TerminalAsInternal,
    SharedEdge,
    EvenLength,
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::PatternOrder => "pattern-order",
            Rule::TerminalNotInHost => "terminal-not-in-host",
            Rule::DuplicateTerminal => "duplicate-terminal",
            Rule::MalformedPair => "malformed-pair",
            Rule::MissingPath => "missing-path",
            Rule::EmptyPath => "empty-path",
            Rule::EndpointMismatch => "endpoint-mismatch",
            Rule::VertexNotInHost => "vertex-not-in-host",
            Rule::NotAdjacent => "not-adjacent",
            Rule::RepeatedVertex => "repeated-vertex",
            Rule::SharedInternalVertex => "shared-internal-vertex",
            Rule::TerminalAsInternal => "terminal-as-internal",
            Rule::SharedEdge => "shared-edge",
            Rule::EvenLength => "even-length",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The concrete evidence behind a violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Count { expected: usize, found: usize },
    Terminal { index: usize, vertex: Vertex },
    Pair { pair: (usize, usize) },
    Vertex { pair: (usize, usize), position: usize, vertex: Vertex },
    Edge { pair: (usize, usize), position: usize, u: Vertex, v: Vertex },
    SharedVertex { pairs: [(usize, usize); 2], vertex: Vertex },
    SharedEdge { pairs: [(usize, usize); 2], u: Vertex, v: Vertex },
    Length { pair: (usize, usize), edges: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_rule(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    fn push(&mut self, rule: Rule, witness: Witness) {
        self.violations.push(Violation { rule, witness });
    }
}

fn norm(pair: (usize, usize)) -> (usize, usize) {
    (pair.0.min(pair.1), pair.0.max(pair.1))
}

fn edge_key(u: &Vertex, v: &Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u.clone(), v.clone())
    } else {
        (v.clone(), u.clone())
    }
}

/// Checks shared by both pattern kinds: terminals, pair coverage, endpoints,
/// membership, adjacency, simplicity and parity.
fn common_checks(cert: &Certificate, require_odd: bool, report: &mut VerificationReport) {
    let t = cert.terminals.len();
    if cert.pattern_order != t {
        report.push(
            Rule::PatternOrder,
            Witness::Count {
                expected: cert.pattern_order,
                found: t,
            },
        );
    }
    let mut seen_terminals: BTreeMap<&Vertex, usize> = BTreeMap::new();
    for (i, v) in cert.terminals.iter().enumerate() {
        if !cert.host.contains(v) {
            report.push(
                Rule::TerminalNotInHost,
                Witness::Terminal {
                    index: i,
                    vertex: v.clone(),
                },
            );
        }
        if seen_terminals.insert(v, i).is_some() {
            report.push(
                Rule::DuplicateTerminal,
                Witness::Terminal {
                    index: i,
                    vertex: v.clone(),
                },
            );
        }
    }

    let mut covered = BTreeSet::new();
    for p in &cert.paths {
        let key = norm(p.pair);
        if key.0 == key.1 || key.1 >= t || !covered.insert(key) {
            report.push(Rule::MalformedPair, Witness::Pair { pair: p.pair });
        }
    }
    for a in 0..t {
        for b in a + 1..t {
            if !covered.contains(&(a, b)) {
                report.push(Rule::MissingPath, Witness::Pair { pair: (a, b) });
            }
        }
    }

    for p in &cert.paths {
        let pair = p.pair;
        let Some(first) = p.vertices.first() else {
            report.push(Rule::EmptyPath, Witness::Pair { pair });
            continue;
        };
        let last = p.vertices.last().unwrap();
        let (a, b) = pair;
        if a < t && b < t {
            let ta = &cert.terminals[a];
            let tb = &cert.terminals[b];
            let ok = (first == ta && last == tb) || (first == tb && last == ta);
            if !ok || p.vertices.len() < 2 {
                report.push(Rule::EndpointMismatch, Witness::Pair { pair });
            }
        }
        let mut within: BTreeMap<&Vertex, usize> = BTreeMap::new();
        for (pos, v) in p.vertices.iter().enumerate() {
            if !cert.host.contains(v) {
                report.push(
                    Rule::VertexNotInHost,
                    Witness::Vertex {
                        pair,
                        position: pos,
                        vertex: v.clone(),
                    },
                );
            }
            if within.insert(v, pos).is_some() {
                report.push(
                    Rule::RepeatedVertex,
                    Witness::Vertex {
                        pair,
                        position: pos,
                        vertex: v.clone(),
                    },
                );
            }
        }
        for (pos, w) in p.vertices.windows(2).enumerate() {
            if !cert.host.adjacent(&w[0], &w[1]) {
                report.push(
                    Rule::NotAdjacent,
                    Witness::Edge {
                        pair,
                        position: pos,
                        u: w[0].clone(),
                        v: w[1].clone(),
                    },
                );
            }
        }
        if require_odd && p.edge_count() % 2 == 0 {
            report.push(
                Rule::EvenLength,
                Witness::Length {
                    pair,
                    edges: p.edge_count(),
                },
            );
        }
    }
}

fn internal(p: &CertPath) -> &[Vertex] {
    if p.vertices.len() <= 2 {
        &[]
    } else {
        &p.vertices[1..p.vertices.len() - 1]
    }
}

fn terminal_as_internal(cert: &Certificate, report: &mut VerificationReport) {
    let terminals: BTreeSet<&Vertex> = cert.terminals.iter().collect();
    for p in &cert.paths {
        for (off, v) in internal(p).iter().enumerate() {
            if terminals.contains(v) {
                report.push(
                    Rule::TerminalAsInternal,
                    Witness::Vertex {
                        pair: p.pair,
                        position: off + 1,
                        vertex: v.clone(),
                    },
                );
            }
        }
    }
}

/// Totally odd subdivision check (odd parity only when `require_odd`).
pub fn verify_subdivision(cert: &Certificate, require_odd: bool) -> VerificationReport {
    let mut report = VerificationReport::default();
    common_checks(cert, require_odd, &mut report);
    terminal_as_internal(cert, &mut report);
    let mut owner: BTreeMap<&Vertex, (usize, usize)> = BTreeMap::new();
    for p in &cert.paths {
        let mut mine = BTreeSet::new();
        for v in internal(p) {
            if !mine.insert(v) {
                continue; // already reported as a repeat within the path
            }
            if let Some(&other) = owner.get(v) {
                report.push(
                    Rule::SharedInternalVertex,
                    Witness::SharedVertex {
                        pairs: [other, p.pair],
                        vertex: v.clone(),
                    },
                );
            } else {
                owner.insert(v, p.pair);
            }
        }
    }
    report
}

/// Totally odd immersion check (odd parity only when `require_odd`).
pub fn verify_immersion(cert: &Certificate, require_odd: bool) -> VerificationReport {
    let mut report = VerificationReport::default();
    common_checks(cert, require_odd, &mut report);
    terminal_as_internal(cert, &mut report);
    let mut owner: BTreeMap<(Vertex, Vertex), (usize, usize)> = BTreeMap::new();
    for p in &cert.paths {
        let mut mine = BTreeSet::new();
        for w in p.vertices.windows(2) {
            let key = edge_key(&w[0], &w[1]);
            if !mine.insert(key.clone()) {
                report.push(
                    Rule::SharedEdge,
                    Witness::SharedEdge {
                        pairs: [p.pair, p.pair],
                        u: key.0,
                        v: key.1,
                    },
                );
                continue;
            }
            if let Some(&other) = owner.get(&key) {
                report.push(
                    Rule::SharedEdge,
                    Witness::SharedEdge {
                        pairs: [other, p.pair],
                        u: key.0,
                        v: key.1,
                    },
                );
            } else {
                owner.insert(key, p.pair);
            }
        }
    }
    report
}

/// Complete-pattern certificate with every pair joined by a single host edge.
pub fn identity_certificate(host: HostGraph, terminals: Vec<Vertex>, kind: PatternKind) -> Certificate {
    let mut cert = Certificate::new(kind, host, terminals);
    let t = cert.terminals.len();
    for a in 0..t {
        for b in a + 1..t {
            let vertices = alloc::vec![cert.terminals[a].clone(), cert.terminals[b].clone()];
            cert.paths.push(CertPath { pair: (a, b), vertices });
        }
    }
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use alloc::vec;

    fn ids(v: &[u32]) -> Vec<Vertex> {
        v.iter().map(|&i| Vertex::Id(i)).collect()
    }

    fn c5_triangle() -> Certificate {
        let host = HostGraph::Materialized(Graph::cycle(5).unwrap());
        let mut cert = Certificate::new(PatternKind::Subdivision, host, ids(&[0, 1, 2]));
        cert.paths = vec![
            CertPath { pair: (0, 1), vertices: ids(&[0, 1]) },
            CertPath { pair: (1, 2), vertices: ids(&[1, 2]) },
            CertPath { pair: (0, 2), vertices: ids(&[0, 4, 3, 2]) },
        ];
        cert
    }

    #[test]
    fn k4_in_k4_passes() {
        let cert = identity_certificate(
            HostGraph::Materialized(Graph::complete(4)),
            ids(&[0, 1, 2, 3]),
            PatternKind::Subdivision,
        );
        assert!(verify_subdivision(&cert, true).passed());
        assert!(verify_immersion(&cert, true).passed());
    }

    #[test]
    fn odd_triangle_in_c5() {
        let cert = c5_triangle();
        assert!(verify_subdivision(&cert, true).passed());
        let mut even = cert.clone();
        even.terminals = ids(&[0, 2, 3]);
        even.paths = vec![
            CertPath { pair: (0, 1), vertices: ids(&[0, 1, 2]) },
            CertPath { pair: (1, 2), vertices: ids(&[2, 3]) },
            CertPath { pair: (0, 2), vertices: ids(&[0, 4, 3]) },
        ];
        let r = verify_subdivision(&even, true);
        assert!(r.has_rule(Rule::EvenLength));
        assert!(verify_subdivision(&even, false).passed());
    }

    #[test]
    fn detects_each_rule() {
        let base = c5_triangle();

        let mut c = base.clone();
        c.paths.pop();
        assert!(verify_subdivision(&c, true).has_rule(Rule::MissingPath));

        let mut c = base.clone();
        c.terminals[2] = Vertex::Id(9);
        let r = verify_subdivision(&c, true);
        assert!(r.has_rule(Rule::TerminalNotInHost));
        assert!(r.has_rule(Rule::EndpointMismatch));

        let mut c = base.clone();
        c.paths[2].vertices = ids(&[0, 3, 2]);
        let r = verify_subdivision(&c, false);
        assert_eq!(
            r.violations,
            vec![Violation {
                rule: Rule::NotAdjacent,
                witness: Witness::Edge {
                    pair: (0, 2),
                    position: 0,
                    u: Vertex::Id(0),
                    v: Vertex::Id(3)
                }
            }]
        );

        let mut c = base.clone();
        c.paths[1].vertices = ids(&[1, 0, 4, 3, 2]);
        let r = verify_subdivision(&c, true);
        assert!(r.has_rule(Rule::TerminalAsInternal));
        assert!(r.has_rule(Rule::SharedInternalVertex));
        assert!(verify_immersion(&c, true).has_rule(Rule::SharedEdge));

        let mut c = base.clone();
        c.pattern_order = 4;
        assert!(verify_subdivision(&c, true).has_rule(Rule::PatternOrder));

        let mut c = base;
        c.paths.push(CertPath { pair: (0, 7), vertices: vec![] });
        let r = verify_subdivision(&c, true);
        assert!(r.has_rule(Rule::MalformedPair) && r.has_rule(Rule::EmptyPath));
    }

    #[test]
    fn backtracking_edge_is_flagged() {
        let host = HostGraph::Materialized(Graph::path(3));
        let mut cert = Certificate::new(PatternKind::Immersion, host, ids(&[0, 2]));
        cert.paths = vec![CertPath { pair: (0, 1), vertices: ids(&[0, 1, 0, 1, 2]) }];
        let r = verify_immersion(&cert, false);
        assert!(r.has_rule(Rule::RepeatedVertex));
        assert!(r.has_rule(Rule::SharedEdge));
    }
}
