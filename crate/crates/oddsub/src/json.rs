//! JSON interchange for hosts, vertices, certificates and reports.

use oddsub_core::certify::{
    CertPath, Certificate, PatternKind, VerificationReport, Violation, Witness,
};
use oddsub_core::graph::Graph;
use oddsub_core::host::{HostGraph, Vertex};
use oddsub_core::kset::KSubset;
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct FormatError(pub String);

type Result<T> = std::result::Result<T, FormatError>;

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(FormatError(msg.into()))
}

pub fn vertex_to_json(v: &Vertex) -> Value {
    match v {
        Vertex::Id(i) => json!(i),
        Vertex::Set(s) => json!(s.to_vec()),
        Vertex::Level(b, l) => json!({"base": vertex_to_json(b), "level": l}),
        Vertex::Apex => json!("w"),
    }
}

/// `ground` sizes set vertices; without it the largest element is used.
pub fn vertex_from_json(v: &Value, ground: Option<u32>) -> Result<Vertex> {
    match v {
        Value::Number(n) => match n.as_u64().and_then(|x| u32::try_from(x).ok()) {
            Some(x) => Ok(Vertex::Id(x)),
            None => fail(format!("vertex id {n} is not a small non-negative integer")),
        },
        Value::Array(items) => {
            let mut elems = Vec::with_capacity(items.len());
            for x in items {
                match x.as_u64().and_then(|e| u32::try_from(e).ok()) {
                    Some(e) => elems.push(e),
                    None => return fail(format!("set element {x} is not a positive integer")),
                }
            }
            let n = ground.unwrap_or_else(|| elems.iter().copied().max().unwrap_or(1));
            KSubset::new(n, elems.iter().copied())
                .map(Vertex::Set)
                .map_err(|e| FormatError(e.to_string()))
        }
        Value::Object(o) => {
            let base = o.get("base").ok_or_else(|| FormatError("level vertex without base".into()))?;
            let level = o
                .get("level")
                .and_then(Value::as_u64)
                .and_then(|l| u32::try_from(l).ok())
                .ok_or_else(|| FormatError("level vertex without a valid level".into()))?;
            Ok(Vertex::level(vertex_from_json(base, ground)?, level))
        }
        Value::String(s) if s == "w" => Ok(Vertex::Apex),
        other => fail(format!("unrecognised vertex {other}")),
    }
}

fn ground_of(g: &Graph) -> Option<u32> {
    g.labels().iter().find_map(|v| set_ground(v))
}

fn set_ground(v: &Vertex) -> Option<u32> {
    match v {
        Vertex::Set(s) => Some(s.ground()),
        Vertex::Level(b, _) => set_ground(b),
        _ => None,
    }
}

pub fn graph_to_json(g: &Graph) -> Value {
    let mut o = Map::new();
    o.insert(
        "vertices".into(),
        Value::Array(g.labels().iter().map(vertex_to_json).collect()),
    );
    o.insert(
        "edges".into(),
        Value::Array(g.edges().into_iter().map(|(u, v)| json!([u, v])).collect()),
    );
    if let Some(n) = ground_of(g) {
        o.insert("ground".into(), json!(n));
    }
    Value::Object(o)
}

pub fn host_to_json(h: &HostGraph) -> Value {
    match h {
        HostGraph::Materialized(g) => graph_to_json(g),
        HostGraph::Kneser { n, k } => json!({"kind": "kneser", "params": {"n": n, "k": k}}),
        HostGraph::Schrijver { n, k } => json!({"kind": "schrijver", "params": {"n": n, "k": k}}),
        HostGraph::Mycielski { base, levels } => {
            json!({"kind": "mycielski", "params": {"m": levels, "base": host_to_json(base)}})
        }
    }
}

fn uint(v: &Value, what: &str) -> Result<u32> {
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| FormatError(format!("{what} must be a non-negative integer")))
}

fn field<'a>(o: &'a Map<String, Value>, key: &str, ctx: &str) -> Result<&'a Value> {
    o.get(key)
        .ok_or_else(|| FormatError(format!("{ctx} is missing \"{key}\"")))
}

pub fn host_from_json(v: &Value) -> Result<HostGraph> {
    let Some(o) = v.as_object() else {
        return fail("graph must be a JSON object");
    };
    let core = |r: oddsub_core::Result<HostGraph>| r.map_err(|e| FormatError(e.to_string()));
    if let Some(kind) = o.get("kind") {
        let params = field(o, "params", "graph")?
            .as_object()
            .ok_or_else(|| FormatError("params must be an object".into()))?;
        let nk = || -> Result<(u32, u32)> {
            Ok((
                uint(field(params, "n", "params")?, "n")?,
                uint(field(params, "k", "params")?, "k")?,
            ))
        };
        return match kind.as_str() {
            Some("kneser") => nk().and_then(|(n, k)| core(HostGraph::kneser(n, k))),
            Some("schrijver") => nk().and_then(|(n, k)| core(HostGraph::schrijver(n, k))),
            Some("mycielski") => {
                let m = uint(field(params, "m", "params")?, "m")?;
                let base = host_from_json(field(params, "base", "params")?)?;
                core(HostGraph::mycielski(base, m))
            }
            _ => fail(format!("unknown graph kind {kind}")),
        };
    }
    let ground = match o.get("ground") {
        Some(g) => Some(uint(g, "ground")?),
        None => None,
    };
    let verts = field(o, "vertices", "graph")?
        .as_array()
        .ok_or_else(|| FormatError("vertices must be an array".into()))?;
    let labels = verts
        .iter()
        .map(|x| vertex_from_json(x, ground))
        .collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::new();
    for e in field(o, "edges", "graph")?
        .as_array()
        .ok_or_else(|| FormatError("edges must be an array".into()))?
    {
        match e.as_array().map(|p| p.as_slice()) {
            Some([a, b]) => edges.push((uint(a, "edge end")? as usize, uint(b, "edge end")? as usize)),
            _ => return fail(format!("edge {e} is not a pair of indices")),
        }
    }
    Graph::from_edges(labels, &edges)
        .map(HostGraph::Materialized)
        .map_err(|e| FormatError(e.to_string()))
}

pub fn kind_name(kind: PatternKind) -> &'static str {
    match kind {
        PatternKind::Subdivision => "subdivision",
        PatternKind::Immersion => "immersion",
    }
}

pub fn certificate_to_json(c: &Certificate) -> Value {
    let paths: Vec<Value> = c
        .paths
        .iter()
        .map(|p| {
            json!({
                "pair": [p.pair.0, p.pair.1],
                "vertices": p.vertices.iter().map(vertex_to_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "host": host_to_json(&c.host),
        "pattern": format!("K_{}", c.pattern_order),
        "kind": kind_name(c.kind),
        "terminals": c.terminals.iter().map(vertex_to_json).collect::<Vec<_>>(),
        "paths": paths,
        "metadata": c.metadata,
    })
}

pub fn certificate_from_json(v: &Value) -> Result<Certificate> {
    let Some(o) = v.as_object() else {
        return fail("certificate must be a JSON object");
    };
    let host = host_from_json(field(o, "host", "certificate")?)?;
    let ground = host.ground();
    let pattern = field(o, "pattern", "certificate")?
        .as_str()
        .and_then(|s| s.strip_prefix("K_"))
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(|| FormatError("pattern must look like \"K_t\"".into()))?;
    let kind = match o.get("kind").map(|k| k.as_str()) {
        None | Some(Some("subdivision")) => PatternKind::Subdivision,
        Some(Some("immersion")) => PatternKind::Immersion,
        Some(other) => return fail(format!("unknown certificate kind {other:?}")),
    };
    let vertex_list = |val: &Value, what: &str| -> Result<Vec<Vertex>> {
        val.as_array()
            .ok_or_else(|| FormatError(format!("{what} must be an array")))?
            .iter()
            .map(|x| vertex_from_json(x, ground))
            .collect()
    };
    let terminals = vertex_list(field(o, "terminals", "certificate")?, "terminals")?;
    let mut paths = Vec::new();
    for p in field(o, "paths", "certificate")?
        .as_array()
        .ok_or_else(|| FormatError("paths must be an array".into()))?
    {
        let po = p
            .as_object()
            .ok_or_else(|| FormatError("each path must be an object".into()))?;
        let pair = match field(po, "pair", "path")?.as_array().map(|a| a.as_slice()) {
            Some([a, b]) => (uint(a, "pair index")? as usize, uint(b, "pair index")? as usize),
            _ => return fail("pair must hold two terminal indices"),
        };
        paths.push(CertPath {
            pair,
            vertices: vertex_list(field(po, "vertices", "path")?, "path vertices")?,
        });
    }
    let mut cert = Certificate::new(kind, host, terminals);
    cert.pattern_order = pattern;
    cert.paths = paths;
    if let Some(meta) = o.get("metadata") {
        let meta = meta
            .as_object()
            .ok_or_else(|| FormatError("metadata must be an object".into()))?;
        for (k, v) in meta {
            let text = v.as_str().map(str::to_owned).unwrap_or_else(|| v.to_string());
            cert.note(k, text);
        }
    }
    Ok(cert)
}

fn pair_json(p: (usize, usize)) -> Value {
    json!([p.0, p.1])
}

pub fn witness_to_json(w: &Witness) -> Value {
    let vj = vertex_to_json;
    match w {
        Witness::Count { expected, found } => json!({"expected": expected, "found": found}),
        Witness::Terminal { index, vertex } => json!({"terminal": index, "vertex": vj(vertex)}),
        Witness::Pair { pair } => json!({"pair": pair_json(*pair)}),
        Witness::Vertex { pair, position, vertex } => {
            json!({"pair": pair_json(*pair), "position": position, "vertex": vj(vertex)})
        }
        Witness::Edge { pair, position, u, v } => {
            json!({"pair": pair_json(*pair), "position": position, "edge": [vj(u), vj(v)]})
        }
        Witness::SharedVertex { pairs, vertex } => json!({
            "pairs": [pair_json(pairs[0]), pair_json(pairs[1])],
            "vertex": vj(vertex),
        }),
        Witness::SharedEdge { pairs, u, v } => json!({
            "pairs": [pair_json(pairs[0]), pair_json(pairs[1])],
            "edge": [vj(u), vj(v)],
        }),
        Witness::Length { pair, edges } => json!({"pair": pair_json(*pair), "edges": edges}),
    }
}

fn violation_to_json(v: &Violation) -> Value {
    json!({"rule": v.rule.name(), "witness": witness_to_json(&v.witness)})
}

pub fn report_to_json(r: &VerificationReport, kind: PatternKind, require_odd: bool) -> Value {
    json!({
        "passed": r.passed(),
        "checked_as": kind_name(kind),
        "require_odd": require_odd,
        "violations": r.violations.iter().map(violation_to_json).collect::<Vec<_>>(),
    })
}

/// Report for input that could not be read as a certificate at all.
pub fn malformed_report(msg: &str, kind: PatternKind, require_odd: bool) -> Value {
    json!({
        "passed": false,
        "checked_as": kind_name(kind),
        "require_odd": require_odd,
        "violations": [{"rule": "malformed-input", "witness": {"detail": msg}}],
    })
}

pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}
