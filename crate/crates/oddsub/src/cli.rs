//! The `oddsub` command line.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use oddsub_core::certify::{verify_immersion, verify_subdivision, Certificate, PatternKind};
use oddsub_core::graph::Graph;
use oddsub_core::host::{HostGraph, DEFAULT_MATERIALIZE_CAP};
use oddsub_core::lift::{lift_immersion, lift_subdivision};
use oddsub_core::subdivision::{chromatic_clique, large_clique};
use oddsub_core::zigzag::{build_immersion, zig, ZigzagCaps, DEFAULT_COLOURING_BUDGET, DEFAULT_ZIGZAG_CAP};
use serde_json::{json, Value};

use crate::dot::{certificate_to_dot, host_to_dot};
use crate::json::{
    certificate_from_json, certificate_to_json, host_from_json, host_to_json, malformed_report,
    report_to_json, to_text, vertex_to_json,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "oddsub", version, about = "Totally odd subdivisions and immersions: build and check")]
struct Cli {
    /// Vertex cap for exhaustive searches (zigzags, colourings).
    #[arg(long, global = true, env = "ODDSUB_CAP_VERTICES", default_value_t = DEFAULT_ZIGZAG_CAP)]
    cap_vertices: usize,
    /// Node budget for colouring enumeration.
    #[arg(long, global = true, env = "ODDSUB_CAP_COLOURINGS", default_value_t = DEFAULT_COLOURING_BUDGET)]
    cap_colourings: u64,
    /// Largest host materialized into an explicit graph.
    #[arg(long, global = true, env = "ODDSUB_CAP_MATERIALIZE", default_value_t = DEFAULT_MATERIALIZE_CAP)]
    cap_materialize: usize,
    /// Vertex cap for exact chromatic number.
    #[arg(long, global = true, env = "ODDSUB_CAP_CHROMATIC", default_value_t = oddsub_core::chromatic::DEFAULT_CHROMATIC_CAP)]
    cap_chromatic: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a graph as JSON.
    Generate(GenerateArgs),
    /// Build a certificate.
    #[command(subcommand)]
    Construct(Construct),
    /// Verify a certificate (reads stdin when --cert is absent or "-").
    Certify {
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Check as an immersion (edge-disjoint paths).
        #[arg(long)]
        immersion: bool,
        /// Do not require odd path lengths.
        #[arg(long)]
        no_odd: bool,
    },
    /// Report zig(G), χ(G) and witnessing colourings.
    Zigzag {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Lift a certificate to the generalized Mycielskian.
    Lift {
        /// Base graph; must match the certificate's host when given.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long)]
        subdivision: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a graph or certificate as DOT.
    ExportDot {
        #[arg(long, conflicts_with = "cert", required_unless_present = "cert")]
        graph: Option<PathBuf>,
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    /// Base graph for `mycielski`.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    m: Option<u32>,
    /// Emit an explicit vertex/edge list instead of an oracle description.
    #[arg(long)]
    materialize: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Kneser,
    Schrijver,
    Mycielski,
    Complete,
    Cycle,
    Path,
    Empty,
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Large complete subdivisions in KG(2k+r, k), 2r | k-1.
    Theorem8 {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// K_{r+2} subdivisions in KG(2k+r, k).
    Theorem2 {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Zigzag-based immersion in a small graph with χ = zig.
    Theorem3 {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Outcome of a command before it is written out.
enum Failure {
    Usage(String),
    Verify(String),
}

impl From<oddsub_core::Error> for Failure {
    fn from(e: oddsub_core::Error) -> Self {
        use oddsub_core::Error::*;
        match e {
            InvalidInput(_) | ResourceLimit { .. } => Failure::Usage(e.to_string()),
            ConstructionBug(_) | AlgorithmInvariant(_) => Failure::Verify(e.to_string()),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit(&mut self, text: &str, dest: Option<&Path>) -> Result<(), Failure> {
        match dest {
            Some(p) => std::fs::write(p, text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("cannot write output: {e}"))),
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    serde_json::from_str(&read_text(path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_host(path: &Path) -> Result<HostGraph, Failure> {
    host_from_json(&read_json(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path, cap: usize) -> Result<Graph, Failure> {
    Ok(read_host(path)?.materialize(cap)?)
}

fn read_certificate(path: &Path) -> Result<Certificate, Failure> {
    certificate_from_json(&read_json(path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Runs the CLI; returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut io = Io { stdin, out };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verify(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAIL
        }
    }
}

fn caps(cli: &Cli) -> ZigzagCaps {
    ZigzagCaps {
        vertices: cli.cap_vertices,
        colourings: cli.cap_colourings,
        chromatic: cli.cap_chromatic,
    }
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32, Failure> {
    match &cli.command {
        Command::Generate(a) => generate(cli, a, io),
        Command::Construct(c) => construct(cli, c, io),
        Command::Certify {
            cert,
            immersion,
            no_odd,
        } => certify(cert.as_deref(), *immersion, !*no_odd, io),
        Command::Zigzag { graph } => {
            let g = read_graph(graph, cli.cap_materialize)?;
            let r = zig(&g, &caps(cli))?;
            let v = json!({
                "vertices": g.labels().iter().map(vertex_to_json).collect::<Vec<_>>(),
                "zig": r.zig,
                "chromatic": r.chromatic,
                "zig_colouring": r.zig_colouring,
                "chromatic_colouring": r.chromatic_colouring,
            });
            io.emit(&to_text(&v), None)?;
            Ok(EXIT_OK)
        }
        Command::Lift {
            graph,
            cert,
            m,
            subdivision,
            out,
        } => {
            let base = read_certificate(cert)?;
            if let Some(path) = graph {
                let host = read_host(path)?;
                if host != base.host {
                    return Err(Failure::Usage(
                        "the graph does not match the certificate's host".into(),
                    ));
                }
            }
            let lifted = if *subdivision {
                lift_subdivision(&base, *m)?
            } else {
                lift_immersion(&base, *m)?
            };
            io.emit(&to_text(&certificate_to_json(&lifted)), out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::ExportDot { graph, cert, out } => {
            let text = match (graph, cert) {
                (Some(g), _) => host_to_dot(&read_host(g)?, cli.cap_materialize)?,
                (None, Some(c)) => certificate_to_dot(&read_certificate(c)?),
                (None, None) => return Err(Failure::Usage("give --graph or --cert".into())),
            };
            io.emit(&text, out.as_deref())?;
            Ok(EXIT_OK)
        }
    }
}

fn need(v: Option<u32>, flag: &str, family: Family) -> Result<u32, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{family:?} needs --{flag}").to_lowercase()))
}

fn generate(cli: &Cli, a: &GenerateArgs, io: &mut Io) -> Result<i32, Failure> {
    let f = a.family;
    let host = match f {
        Family::Kneser => HostGraph::kneser(need(a.n, "n", f)?, need(a.k, "k", f)?)?,
        Family::Schrijver => HostGraph::schrijver(need(a.n, "n", f)?, need(a.k, "k", f)?)?,
        Family::Mycielski => {
            let base = a
                .graph
                .as_deref()
                .ok_or_else(|| Failure::Usage("mycielski needs --graph".into()))?;
            HostGraph::mycielski(read_host(base)?, need(a.m, "m", f)?)?
        }
        Family::Complete => HostGraph::Materialized(Graph::complete(need(a.n, "n", f)? as usize)),
        Family::Cycle => HostGraph::Materialized(Graph::cycle(need(a.n, "n", f)? as usize)?),
        Family::Path => HostGraph::Materialized(Graph::path(need(a.n, "n", f)? as usize)),
        Family::Empty => HostGraph::Materialized(Graph::empty(need(a.n, "n", f)? as usize)),
    };
    let host = if a.materialize {
        HostGraph::Materialized(host.materialize(cli.cap_materialize)?)
    } else {
        host
    };
    io.emit(&to_text(&host_to_json(&host)), a.out.as_deref())?;
    Ok(EXIT_OK)
}

fn construct(cli: &Cli, c: &Construct, io: &mut Io) -> Result<i32, Failure> {
    let (cert, out) = match c {
        Construct::Theorem8 { k, r, out } => {
            let p = large_clique::LargeCliqueParams::new(*k, *r)?;
            (large_clique::build(&p)?, out)
        }
        Construct::Theorem2 { k, r, out } => {
            let p = chromatic_clique::ChromaticCliqueParams::new(*k, *r)?;
            (chromatic_clique::build(&p)?, out)
        }
        Construct::Theorem3 { graph, out } => {
            let g = read_graph(graph, cli.cap_materialize)?;
            let res = build_immersion(&g, &caps(cli))?;
            let mut cert = res.certificate;
            let colours: Vec<String> = res.colouring.colours().iter().map(u32::to_string).collect();
            cert.note("colouring", colours.join(","));
            let zz: Vec<String> = res.zigzag.iter().map(|&v| g.label(v).to_string()).collect();
            cert.note("zigzag", zz.join(","));
            (cert, out)
        }
    };
    io.emit(&to_text(&certificate_to_json(&cert)), out.as_deref())?;
    Ok(EXIT_OK)
}

fn certify(path: Option<&Path>, immersion: bool, odd: bool, io: &mut Io) -> Result<i32, Failure> {
    let kind = if immersion {
        PatternKind::Immersion
    } else {
        PatternKind::Subdivision
    };
    let text = match path {
        Some(p) if p != Path::new("-") => read_text(p)?,
        _ => {
            let mut s = String::new();
            io.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    let parsed = serde_json::from_str::<Value>(&text)
        .map_err(|e| e.to_string())
        .and_then(|v| certificate_from_json(&v).map_err(|e| e.to_string()));
    let report = match parsed {
        Err(msg) => malformed_report(&msg, kind, odd),
        Ok(cert) => {
            let r = if immersion {
                verify_immersion(&cert, odd)
            } else {
                verify_subdivision(&cert, odd)
            };
            report_to_json(&r, kind, odd)
        }
    };
    io.emit(&to_text(&report), None)?;
    Ok(if report["passed"] == json!(true) {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}
