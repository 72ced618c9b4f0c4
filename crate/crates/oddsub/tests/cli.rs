use std::io::Write;
use std::process::{Command, Output, Stdio};

use oddsub::json::{certificate_from_json, certificate_to_json};
use oddsub_core::certify::{identity_certificate, PatternKind};
use oddsub_core::graph::Graph;
use oddsub_core::host::HostGraph;
use oddsub_core::subdivision::chromatic_clique::{build, ChromaticCliqueParams};
use proptest::prelude::*;
use serde_json::Value;

fn oddsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddsub")).args(args).output().unwrap()
}

fn oddsub_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_oddsub"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("oddsub-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn construct_then_certify_through_pipe() {
    let cert = oddsub(&["construct", "theorem2", "--k", "3", "--r", "4"]);
    assert!(cert.status.success());
    let report = oddsub_stdin(&["certify"], &cert.stdout);
    assert_eq!(report.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&report.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn tampered_certificate_is_rejected() {
    let cert = oddsub(&["construct", "theorem2", "--k", "2", "--r", "3"]);
    let mut v: Value = serde_json::from_slice(&cert.stdout).unwrap();
    let path = v["paths"][0]["vertices"].as_array_mut().unwrap();
    path.remove(1);
    let report = oddsub_stdin(&["certify"], v.to_string().as_bytes());
    assert_eq!(report.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&report.stdout).unwrap();
    assert_eq!(r["passed"], false);
    assert!(!r["violations"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_certificate_reports_failure() {
    let report = oddsub_stdin(&["certify"], b"{\"host\": 3}");
    assert_eq!(report.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&report.stdout).unwrap();
    assert_eq!(r["violations"][0]["rule"], "malformed-input");
}

#[test]
fn unsupported_parameters_exit_with_usage_code() {
    let out = oddsub(&["construct", "theorem8", "--k", "14", "--r", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(oddsub(&["construct"]).status.code(), Some(2));
}

#[test]
fn dot_export_is_stable() {
    let cert = scratch("t2.json");
    let made = oddsub(&["construct", "theorem2", "--k", "2", "--r", "4", "--out", cert.to_str().unwrap()]);
    assert!(made.status.success());
    let a = oddsub(&["export-dot", "--cert", cert.to_str().unwrap()]);
    let b = oddsub(&["export-dot", "--cert", cert.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).starts_with("graph certificate {"));
}

#[test]
fn dot_export_of_huge_oracle_host_is_refused() {
    let graph = scratch("kg.json");
    let made = oddsub(&["generate", "kneser", "--n", "40", "--k", "10", "--out", graph.to_str().unwrap()]);
    assert!(made.status.success());
    let out = oddsub(&["export-dot", "--graph", graph.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zigzag_and_lift_round() {
    let graph = scratch("k4.json");
    let cert = scratch("k4-cert.json");
    let g = graph.to_str().unwrap();
    assert!(oddsub(&["generate", "complete", "--n", "4", "--out", g]).status.success());
    let z = oddsub(&["zigzag", "--graph", g]);
    let v: Value = serde_json::from_slice(&z.stdout).unwrap();
    assert_eq!(v["zig"], 4);
    assert!(oddsub(&["construct", "theorem3", "--graph", g, "--out", cert.to_str().unwrap()])
        .status
        .success());
    let lifted = oddsub(&["lift", "--cert", cert.to_str().unwrap(), "--m", "3"]);
    assert!(lifted.status.success());
    let report = oddsub_stdin(&["certify", "--immersion"], &lifted.stdout);
    assert_eq!(report.status.code(), Some(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn certificate_json_round_trips(k in 2u32..6, r in 3u32..6, t in 2usize..7, imm in any::<bool>()) {
        let cert = build(&ChromaticCliqueParams::new(k, r).unwrap()).unwrap();
        let back = certificate_from_json(&certificate_to_json(&cert)).unwrap();
        prop_assert_eq!(certificate_to_json(&back), certificate_to_json(&cert));
        prop_assert!(back.verify(true).passed());

        let g = Graph::complete(t);
        let kind = if imm { PatternKind::Immersion } else { PatternKind::Subdivision };
        let id = identity_certificate(HostGraph::Materialized(g.clone()), g.labels().to_vec(), kind);
        let back = certificate_from_json(&certificate_to_json(&id)).unwrap();
        prop_assert_eq!(certificate_to_json(&back), certificate_to_json(&id));
    }
}
