//! Command-line surface. All reports are deterministic JSON (sorted keys,
//! fixed orderings) so identical inputs give byte-identical output.
//!
//! Exit codes: 0 success, 1 checked property is false, 2 input error,
//! 3 internal invariant violation (including oracle disagreement).

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::decompose::{
    decompose, indecomposable_oracle, is_f_indecomposable, is_minimal, minimality_oracle,
    verify_decomposition,
};
use crate::equivalence::compare_bases;
use crate::error::Error;
use crate::graph::AssocGraph;
use crate::io::{parse_problem, BasisChangeRequest};
use crate::matrix::Matrix;
use crate::structure::StructureSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FALSE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_INTERNAL_ERROR: i32 = 3;

#[derive(Parser)]
#[command(name = "preeuclid", version, about = "Graph-driven block analysis of a linear operator and a bilinear form")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the associated graph: edges, provenance, components.
    Graph {
        file: PathBuf,
        /// Also write a Graphviz rendering here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Also write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Orthogonal block decomposition plus its verification report.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Decide a property; the result is also surfaced via the exit code.
    Check {
        file: PathBuf,
        #[arg(long)]
        property: Property,
        /// Cross-check against the brute-force counterpart.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare the basis with the new_basis given in the file.
    Compare { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Indecomposable,
    WeaklySymmetric,
    Minimal,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Invariant(_) => EXIT_INTERNAL_ERROR,
        _ => EXIT_INPUT_ERROR,
    }
}

/// Run the CLI on explicit arguments, writing reports to `out`.
/// Diagnostics go to stderr. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not errors
            if e.use_stderr() {
                eprintln!("{e}");
                return EXIT_INPUT_ERROR;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> crate::error::Result<i32> {
    match cli.command {
        Command::Graph { file, dot, json } => cmd_graph(&file, dot.as_deref(), json.as_deref(), out),
        Command::Decompose { file, json } => cmd_decompose(&file, json.as_deref(), out),
        Command::Check {
            file,
            property,
            oracle,
        } => cmd_check(&file, property, oracle, out),
        Command::Compare { file } => cmd_compare(&file, out),
    }
}

fn emit(report: &Value, json_path: Option<&Path>, out: &mut dyn Write) -> crate::error::Result<()> {
    let rendered = format!("{}\n", serde_json::to_string_pretty(report)?);
    out.write_all(rendered.as_bytes())?;
    if let Some(path) = json_path {
        std::fs::write(path, rendered)?;
    }
    Ok(())
}

fn labels_of(spec: &StructureSpec, indices: &[usize]) -> Vec<String> {
    indices.iter().map(|&i| spec.labels()[i].clone()).collect()
}

fn matrix_to_value(m: &Matrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| {
            let row: Vec<Value> = (0..m.cols())
                .map(|c| serde_json::to_value(m.get(r, c).to_literal()).expect("literal"))
                .collect();
            Value::Array(row)
        })
        .collect();
    Value::Array(rows)
}

fn cmd_graph(
    file: &Path,
    dot_path: Option<&Path>,
    json_path: Option<&Path>,
    out: &mut dyn Write,
) -> crate::error::Result<i32> {
    let (spec, _) = parse_problem(file)?;
    let graph = AssocGraph::build(&spec);
    let edges: Vec<Value> = graph
        .edges()
        .map(|((u, v), prov)| {
            json!({
                "from": spec.labels()[u],
                "to": spec.labels()[v],
                "provenance": prov,
            })
        })
        .collect();
    let components: Vec<Vec<String>> = graph
        .weak_components()
        .blocks()
        .iter()
        .map(|b| labels_of(&spec, b))
        .collect();
    let report = json!({
        "connected": graph.is_connected(),
        "components": components,
        "edge_count": graph.edge_count(),
        "edges": edges,
        "vertices": spec.labels(),
    });
    emit(&report, json_path, out)?;
    if let Some(path) = dot_path {
        std::fs::write(path, graph.to_dot())?;
    }
    Ok(EXIT_OK)
}

fn cmd_decompose(
    file: &Path,
    json_path: Option<&Path>,
    out: &mut dyn Write,
) -> crate::error::Result<i32> {
    let (spec, _) = parse_problem(file)?;
    let d = decompose(&spec)?;
    let verification = verify_decomposition(&spec, &d);
    let components: Vec<Value> = d
        .components()
        .iter()
        .map(|c| {
            json!({
                "block_gram": matrix_to_value(&c.block_gram),
                "block_op": matrix_to_value(&c.block_op),
                "indices": c.indices,
                "labels": c.labels,
                "summand": matrix_to_value(&c.summand_full),
            })
        })
        .collect();
    let checks: Vec<Value> = verification
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "pass": c.pass, "witness": c.witness}))
        .collect();
    let report = json!({
        "components": components,
        "signature": d.signature(),
        "verification": {
            "all_passed": verification.all_passed(),
            "checks": checks,
        },
    });
    emit(&report, json_path, out)?;
    if verification.all_passed() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_INTERNAL_ERROR)
    }
}

fn cmd_check(
    file: &Path,
    property: Property,
    oracle: bool,
    out: &mut dyn Write,
) -> crate::error::Result<i32> {
    let (spec, _) = parse_problem(file)?;
    let (name, holds, witness, oracle_result): (&str, bool, Option<Value>, Option<bool>) =
        match property {
            Property::Indecomposable => {
                let holds = is_f_indecomposable(&spec);
                let witness = (!holds).then(|| {
                    // a block of the splitting partition
                    let graph = AssocGraph::build(&spec);
                    let blocks = graph.weak_components();
                    json!(labels_of(&spec, &blocks.blocks()[0]))
                });
                let oracle_result = oracle.then(|| indecomposable_oracle(&spec));
                ("indecomposable", holds, witness, oracle_result)
            }
            Property::WeaklySymmetric => {
                let graph = AssocGraph::build(&spec);
                let (holds, violating) = graph.is_weakly_symmetric();
                let witness = violating
                    .map(|(u, v)| json!([spec.labels()[u], spec.labels()[v]]));
                let oracle_result = oracle.then(|| weak_symmetry_by_reachability(&graph));
                ("weakly-symmetric", holds, witness, oracle_result)
            }
            Property::Minimal => {
                let (holds, subset) = is_minimal(&spec);
                let witness = subset.map(|s| json!(labels_of(&spec, &s)));
                let oracle_result = oracle.then(|| minimality_oracle(&spec));
                ("minimal", holds, witness, oracle_result)
            }
        };
    let mut report = json!({
        "holds": holds,
        "property": name,
        "witness": witness,
    });
    if let Some(oracle_holds) = oracle_result {
        report["oracle_agrees"] = json!(oracle_holds == holds);
        if oracle_holds != holds {
            emit(&report, None, out)?;
            eprintln!("error: oracle disagreement on property {name}");
            return Ok(EXIT_INTERNAL_ERROR);
        }
    }
    emit(&report, None, out)?;
    Ok(if holds { EXIT_OK } else { EXIT_PROPERTY_FALSE })
}

/// Definition-direct weak symmetry: every edge must be closable by a
/// directed path back to its source.
fn weak_symmetry_by_reachability(graph: &AssocGraph) -> bool {
    graph
        .edges()
        .all(|((u, v), _)| graph.reachable_from(v).contains(&u))
}

fn cmd_compare(file: &Path, out: &mut dyn Write) -> crate::error::Result<i32> {
    let (spec, change) = parse_problem(file)?;
    let Some(BasisChangeRequest { labels, transition }) = change else {
        return Err(Error::Schema {
            path: "new_basis".into(),
            msg: "compare requires a new_basis section".into(),
        });
    };
    let new_labels = labels.clone();
    let report = compare_bases(&spec, &transition, labels)?;
    let graph_isomorphism = report.graph_isomorphism.as_ref().map(|pi| {
        pi.iter()
            .enumerate()
            .map(|(i, &j)| json!([spec.labels()[i], new_labels[j]]))
            .collect::<Vec<Value>>()
    });
    let f_equivalence = report.equivalence_witness.as_ref().map(|w| {
        let mapping: Vec<Value> = w
            .mapping
            .iter()
            .enumerate()
            .map(|(i, &j)| json!([spec.labels()[i], new_labels[j]]))
            .collect();
        json!({
            "mapping": mapping,
            "matrix": matrix_to_value(&w.matrix),
        })
    });
    let value = json!({
        "f_equivalence": f_equivalence,
        "graph_isomorphism": graph_isomorphism,
        "graphs_isomorphic": report.graph_isomorphism.is_some(),
        "signatures": {
            "new": report.signature_new,
            "old": report.signature_old,
        },
        "verdict": report.verdict,
    });
    emit(&value, None, out)?;
    Ok(EXIT_OK)
}
