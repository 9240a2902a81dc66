//! Subcommand implementations. Each returns the text for stdout and the
//! process exit code; input and usage problems surface as `CliError`.

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use trunkit::connectivity::{check_connectedness_theorem, check_edge_connectivity_bound, spanning_tree_truncation};
use trunkit::planarity::{check_cohesive_planarity_theorem, check_nonplanar_lemma};
use trunkit::report::{Summary, VerificationReport};
use trunkit::source::{
    check_round_trip, coarsened_sources, graph_sources, minimal_sources, unique_source_certificate, SourceSet,
};
use trunkit::suite::{graphs_for, guard, run_suite, Suite};
use trunkit::traversal::check_euler_theorem;
use trunkit::truncation::{
    complete_truncation, matching_constituent_truncation, random_truncation, spanning_path_truncation, Truncation,
};
use trunkit::Multigraph;

use crate::dot::truncation_dot;
use crate::error::CliError;
use crate::format::{parse_graph, parse_truncation, write_graph, write_truncation};

pub const VERSION: &str = concat!("trunkit ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Complete,
    Paths,
    Matching,
    Tree,
    Random,
}

pub struct TruncateArgs {
    pub input: PathBuf,
    pub mode: Mode,
    pub density: Option<f64>,
    pub seed: Option<u64>,
    pub dot: Option<PathBuf>,
}

pub fn truncate(args: &TruncateArgs) -> Result<Output, CliError> {
    let x = parse_graph(&read(&args.input)?)?;
    if args.mode != Mode::Random && (args.density.is_some() || args.seed.is_some()) {
        return Err(CliError::Usage("--density and --seed apply only to --mode random".into()));
    }
    let t = match args.mode {
        Mode::Complete => complete_truncation(&x)?,
        Mode::Paths => spanning_path_truncation(&x)?,
        Mode::Matching => matching_constituent_truncation(&x)?,
        Mode::Tree => spanning_tree_truncation(&x)?,
        Mode::Random => random_truncation(&x, args.density.unwrap_or(0.5), args.seed.unwrap_or(0))?,
    };
    if let Some(path) = &args.dot {
        write(path, &truncation_dot(&t))?;
    }
    Ok(Output::ok(write_truncation(&t)))
}

fn graph_json(g: &Multigraph) -> Value {
    json!({ "order": g.order(), "size": g.size(), "edges": g.edges() })
}

pub struct SourcesArgs {
    pub input: PathBuf,
    pub graph_only: bool,
    pub coarsen: bool,
}

pub fn sources(args: &SourcesArgs) -> Result<Output, CliError> {
    let text = read(&args.input)?;
    let y = parse_graph(&text)?;
    let set: SourceSet = if args.graph_only {
        graph_sources(&y)?
    } else {
        minimal_sources(&y)?
    };
    let mut listed = Vec::new();
    for class in &set.classes {
        let cert = &class.certificate;
        let mut entry = json!({
            "source": graph_json(&cert.source),
            "multiplicity": class.multiplicity,
            "compared": class.compared,
            "certificate": { "matching": cert.matching, "components": cert.components, "blocks": cert.blocks },
        });
        if args.coarsen {
            let coarse = coarsened_sources(&y, cert)?;
            entry["coarsened"] = coarse.sources().map(graph_json).collect();
        }
        listed.push(entry);
    }
    let report = json!({
        "version": VERSION,
        "input_sha256": sha256_hex(text.as_bytes()),
        "graph_only": args.graph_only,
        "unique_certificate": unique_source_certificate(&y)?,
        "raw_count": set.raw_count,
        "partial": set.is_partial(),
        "sources": listed,
    });
    Ok(Output::ok(to_json(&report)))
}

pub struct VerifyArgs {
    pub suite: Suite,
    pub catalog: Vec<String>,
    pub seeds: u64,
    pub truncation: Option<PathBuf>,
}

/// Checks that apply to a single truncation read from a file.
fn truncation_checks(t: &Truncation, subject: &str) -> Vec<VerificationReport> {
    let mut out = vec![
        guard("source-round-trip", subject, check_round_trip(t, subject)),
        check_connectedness_theorem(t, subject),
        check_edge_connectivity_bound(t, subject),
        guard("eulerian-truncation", subject, check_euler_theorem(t, subject)),
    ];
    if t.graph().is_simple() {
        out.push(guard("nonplanar-source", subject, check_nonplanar_lemma(t, subject)));
        out.push(guard("cohesive-planarity", subject, check_cohesive_planarity_theorem(t, subject)));
    }
    out
}

pub fn verify(args: &VerifyArgs) -> Result<Output, CliError> {
    let (reports, inputs) = match &args.truncation {
        Some(path) => {
            let text = read(path)?;
            let t = parse_truncation(&text).map_err(|e| match e {
                CliError::Core(err) => CliError::Parse { line: 0, msg: err.to_string() },
                other => other,
            })?;
            let subject = path.display().to_string();
            (truncation_checks(&t, &subject), json!({ "truncation_sha256": sha256_hex(text.as_bytes()) }))
        }
        None => {
            let graphs = graphs_for(&args.catalog)?;
            let mut hasher = Sha256::new();
            for (name, g) in &graphs {
                hasher.update(format!("c {name}\n{}", write_graph(g)));
            }
            let names: Vec<&str> = graphs.iter().map(|(n, _)| n.as_str()).collect();
            let inputs = json!({ "catalog": names, "catalog_sha256": hex::encode(hasher.finalize()) });
            (run_suite(args.suite, &graphs, args.seeds), inputs)
        }
    };
    let summary = Summary::of(&reports);
    let doc = json!({
        "version": VERSION,
        "suite": args.suite,
        "seeds": args.seeds,
        "inputs": inputs,
        "summary": summary,
        "reports": reports,
    });
    let mut stderr = String::new();
    for r in reports.iter().filter(|r| r.failed()) {
        stderr.push_str(&format!(
            "counterexample: {} on {}: {}\n",
            r.check,
            r.subject,
            r.certificate.as_ref().map(Value::to_string).unwrap_or_default()
        ));
    }
    Ok(Output {
        stdout: to_json(&doc),
        stderr,
        code: if summary.failed > 0 { 1 } else { 0 },
    })
}

pub fn export_dot(input: &Path) -> Result<Output, CliError> {
    let t = parse_truncation(&read(input)?)?;
    Ok(Output::ok(truncation_dot(&t)))
}

pub fn catalog(name: Option<&str>) -> Result<Output, CliError> {
    match name {
        Some(name) => Ok(Output::ok(write_graph(&trunkit::catalog::graph(name)?))),
        None => {
            let mut out = String::new();
            for (name, g) in trunkit::catalog::all() {
                out.push_str(&format!("{name}\t{}\t{}\n", g.order(), g.size()));
            }
            Ok(Output::ok(out))
        }
    }
}
