//! `tree-span`: spans, witnesses, oracle runs, tree generation and scaling
//! benchmarks from the command line.
//!
//! Exit codes: 0 success, 1 verification failed, 2 bad input, 3 internal
//! invariant violated.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;
use tree_span_core::oracle::{product_span_oracle_capped, DEFAULT_CAP};
use tree_span_core::prufer::{all_trees, random_tree, seeded_rng};
use tree_span_core::{
    build_witness, parse_edge_list, scaling, strong_edge_span, strong_vertex_span, verify_walk_pair, Graph,
    SpanResult, Tree, VerifyReport, WitnessDocument,
};

const ENUMERATE_CAP: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "tree-span", version, about = "Strong vertex and edge span of trees")]
struct RunConfig {
    #[command(subcommand)]
    command: Command,

    /// Edge-list file (stdin when absent).
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Random seed for `gen` and `bench`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Tree size for `gen` and `enumerate`.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Comma-separated ascending sizes for `bench`.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = [100_000usize, 200_000, 400_000])]
    sizes: Vec<usize>,

    /// Trees timed per size in `bench`.
    #[arg(long, global = true, default_value_t = 5)]
    trials: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Strong vertex span of a tree.
    Span,
    /// Strong edge span of a tree.
    EdgeSpan,
    /// Emit a verified walk pair that keeps the span.
    Witness,
    /// Check a walk pair against a graph.
    Verify {
        /// Walk JSON file (stdin when absent; then --input must be given).
        #[arg(long)]
        walk: Option<PathBuf>,
    },
    /// Brute-force span of a small connected graph.
    Oracle {
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Uniform random labeled tree.
    Gen,
    /// Every labeled tree on n vertices.
    Enumerate,
    /// Time the span solver on random trees.
    Bench,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("verification failed")]
    Verification,
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification => 1,
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

fn input_error(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn read_source(path: Option<&PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(input_error)?;
            Ok(s)
        }
    }
}

fn read_graph(cfg: &RunConfig) -> Result<Graph, CliError> {
    parse_edge_list(&read_source(cfg.input.as_ref())?).map_err(input_error)
}

fn read_tree(cfg: &RunConfig) -> Result<Tree, CliError> {
    Tree::new(read_graph(cfg)?).map_err(input_error)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value).map_err(|e| CliError::Internal(e.to_string()))
}

fn render_span(r: &SpanResult, json: bool) -> Result<String, CliError> {
    if json {
        return to_json(r);
    }
    let kind = serde_json::to_value(r.kind).map_err(|e| CliError::Internal(e.to_string()))?;
    let witness = r.witness_vertex.map_or("-".to_owned(), |v| v.to_string());
    Ok(format!(
        "span: {}\nkind: {}\nwitness_vertex: {}\neta: {}\nradius: {}",
        r.span,
        kind.as_str().unwrap_or_default(),
        witness,
        r.eta,
        r.radius
    ))
}

fn render_report(r: &VerifyReport, json: bool) -> Result<String, CliError> {
    if json {
        return to_json(r);
    }
    let mut out = String::new();
    let _ = writeln!(out, "result: {}", if r.passed() { "pass" } else { "fail" });
    let _ = writeln!(out, "valid: A={} B={}", r.valid_a, r.valid_b);
    let _ = writeln!(out, "surjective: A={} B={}", r.surjective_a, r.surjective_b);
    match r.min_distance {
        Some(d) => {
            let _ = writeln!(out, "min_distance: {d}");
        }
        None => {
            let _ = writeln!(out, "min_distance: -");
        }
    }
    let _ = write!(out, "claimed: {}", r.claimed);
    if let Some(v) = &r.first_violation {
        match v.step {
            Some(step) => {
                let _ = write!(out, "\nviolation at step {step}: {}", v.reason);
            }
            None => {
                let _ = write!(out, "\nviolation: {}", v.reason);
            }
        }
    }
    Ok(out)
}

fn render_tree(t: &Tree, json: bool) -> Result<String, CliError> {
    if json {
        #[derive(Serialize)]
        struct EdgeList {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        to_json(&EdgeList {
            n: t.n(),
            edges: t.edges().collect(),
        })
    } else {
        Ok(t.to_edge_list().trim_end().to_owned())
    }
}

fn require_n(cfg: &RunConfig) -> Result<usize, CliError> {
    match cfg.n {
        Some(0) => Err(CliError::Input("--n must be at least 1".into())),
        Some(n) => Ok(n),
        None => Err(CliError::Input("--n is required".into())),
    }
}

fn run(cfg: &RunConfig, out: &mut impl Write) -> Result<(), CliError> {
    let mut emit = |s: &str| writeln!(out, "{s}").map_err(|e| CliError::Internal(e.to_string()));
    match &cfg.command {
        Command::Span => emit(&render_span(&strong_vertex_span(&read_tree(cfg)?), cfg.json)?),
        Command::EdgeSpan => emit(&render_span(&strong_edge_span(&read_tree(cfg)?), cfg.json)?),
        Command::Witness => {
            let t = read_tree(cfg)?;
            let (walks, claimed_span) = build_witness(&t);
            let report = verify_walk_pair(&t, &walks, claimed_span)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            if !report.passed() {
                return Err(CliError::Internal(format!(
                    "constructed witness fails verification: {report:?}"
                )));
            }
            emit(&to_json(&WitnessDocument { claimed_span, walks })?)
        }
        Command::Verify { walk } => {
            if walk.is_none() && cfg.input.is_none() {
                return Err(CliError::Input(
                    "verify reads one of --input/--walk from stdin, not both".into(),
                ));
            }
            let g = read_graph(cfg)?;
            let doc: WitnessDocument =
                serde_json::from_str(&read_source(walk.as_ref())?).map_err(|e| CliError::Input(format!("walk JSON: {e}")))?;
            let report = verify_walk_pair(&g, &doc.walks, doc.claimed_span).map_err(input_error)?;
            emit(&render_report(&report, cfg.json)?)?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Verification)
            }
        }
        Command::Oracle { cap } => {
            let g = read_graph(cfg)?;
            let span = product_span_oracle_capped(&g, *cap).map_err(input_error)?;
            if cfg.json {
                emit(&format!("{{\"span\":{span}}}"))
            } else {
                emit(&format!("span: {span}"))
            }
        }
        Command::Gen => {
            let n = require_n(cfg)?;
            let t = random_tree(n, &mut seeded_rng(cfg.seed));
            emit(&render_tree(&t, cfg.json)?)
        }
        Command::Enumerate => {
            let n = require_n(cfg)?;
            if n > ENUMERATE_CAP {
                return Err(CliError::Input(format!(
                    "enumerate is capped at n = {ENUMERATE_CAP}, got {n}"
                )));
            }
            for (i, t) in all_trees(n).enumerate() {
                if cfg.json {
                    emit(&render_tree(&t, true)?)?;
                } else {
                    emit(&format!("# tree {}\n{}\n", i + 1, render_tree(&t, false)?))?;
                }
            }
            Ok(())
        }
        Command::Bench => {
            if cfg.sizes.is_empty() || cfg.sizes.contains(&0) {
                return Err(CliError::Input("--sizes needs positive entries".into()));
            }
            if cfg.sizes.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CliError::Input("--sizes must be strictly ascending".into()));
            }
            let rows = scaling::measure(&cfg.sizes, cfg.trials, cfg.seed);
            if cfg.json {
                return emit(&to_json(&rows)?);
            }
            emit(&format!("{:>10}  {:>12}  {:>6}", "n", "median_ms", "ratio"))?;
            for row in rows {
                let ratio = row.ratio.map_or("-".to_owned(), |r| format!("{r:.2}"));
                emit(&format!("{:>10}  {:>12.3}  {:>6}", row.n, row.median_secs * 1e3, ratio))?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cfg, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification) => ExitCode::from(1),
        Err(e) => {
            eprintln!("tree-span: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
