//! Graphviz rendering of graphs and certificates.

use std::collections::BTreeMap;
use std::fmt::Write;

use oddsub_core::certify::Certificate;
use oddsub_core::graph::Graph;
use oddsub_core::host::{HostGraph, Vertex};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
    "#7f7f7f", "#bcbd22",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for (i, v) in g.labels().iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(&v.to_string())).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  n{u} -- n{v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Materializes an oracle host within `cap` vertices first.
pub fn host_to_dot(h: &HostGraph, cap: usize) -> oddsub_core::Result<String> {
    Ok(graph_to_dot(&h.materialize(cap)?))
}

/// The union of the certificate's paths. Terminals are double circles and
/// each path's edges share one colour.
pub fn certificate_to_dot(c: &Certificate) -> String {
    let mut ids: BTreeMap<&Vertex, usize> = BTreeMap::new();
    for v in c.terminals.iter().chain(c.paths.iter().flat_map(|p| &p.vertices)) {
        let next = ids.len();
        ids.entry(v).or_insert(next);
    }
    let mut out = String::from("graph certificate {\n  node [shape=circle];\n");
    for (v, id) in &ids {
        let shape = if c.terminals.contains(v) {
            ", shape=doublecircle, style=bold"
        } else {
            ""
        };
        writeln!(out, "  n{id} [label={}{shape}];", quote(&v.to_string())).unwrap();
    }
    for (k, p) in c.paths.iter().enumerate() {
        let colour = PALETTE[k % PALETTE.len()];
        for w in p.vertices.windows(2) {
            writeln!(
                out,
                "  n{} -- n{} [color=\"{colour}\", tooltip=\"{}-{}\"];",
                ids[&w[0]], ids[&w[1]], p.pair.0, p.pair.1
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use oddsub_core::subdivision::chromatic_clique::{build, ChromaticCliqueParams};

    #[test]
    fn triangle() {
        let dot = graph_to_dot(&Graph::complete(3));
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot.matches("[label=").count(), 3);
        assert_eq!(dot, graph_to_dot(&Graph::complete(3)));
    }

    #[test]
    fn certificate_terminals_marked() {
        let cert = build(&ChromaticCliqueParams::new(2, 3).unwrap()).unwrap();
        let dot = certificate_to_dot(&cert);
        assert_eq!(dot.matches("doublecircle").count(), 5);
        assert_eq!(dot, certificate_to_dot(&cert));
    }

    #[test]
    fn oracle_needs_materialization() {
        let h = HostGraph::kneser(40, 10).unwrap();
        assert!(host_to_dot(&h, 1000).is_err());
    }
}
