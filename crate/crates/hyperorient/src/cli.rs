//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage or parse error. Errors are
//! reported on the normal output with a first line `ERROR <code>`.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hyperorient_core::encoding::refine_to_injective;
use hyperorient_core::flows::{
    cancel_cycles, check_delta_flow, compute_delta_flow, decompose_flow_paths, is_acyclic,
    validate_path_family,
};
use hyperorient_core::spanning::{
    build_dfst, build_priority_tree, edge_ordering, neighbourhood_ordering,
};
use hyperorient_core::sparsity::{
    antisymmetric_orientation, bounded_orientation, h_orientation, is_k_sparse,
    is_k_sparse_bruteforce, DEFAULT_BRUTE_FORCE_CAP,
};
use hyperorient_core::{EdgeId, Error, Hypergraph, VertexId};

use crate::format::{self, FormatError};
use crate::suite::{self, SuiteName};

#[derive(Debug, Parser)]
#[command(
    name = "hyperorient",
    version,
    about = "Orientations, spanning trees and flow encodings of sparse hypergraphs"
)]
pub struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide k-sparsity of a hypergraph.
    Sparsity {
        #[command(subcommand)]
        action: SparsityAction,
    },
    /// Orient the edges of a hypergraph.
    Orient {
        #[command(subcommand)]
        action: OrientAction,
    },
    /// Build spanning trees.
    Tree {
        #[command(subcommand)]
        action: TreeAction,
    },
    /// Vertex orderings of edges and neighbourhoods.
    Order {
        #[command(subcommand)]
        action: OrderAction,
    },
    /// δ-flows on graphs.
    Flow {
        #[command(subcommand)]
        action: FlowAction,
    },
    /// Encode finite sets by vertices.
    Encode {
        #[command(subcommand)]
        action: EncodeAction,
    },
    /// Run a seeded oracle or property suite.
    Suite(SuiteArgs),
}

#[derive(Debug, Subcommand)]
pub enum SparsityAction {
    Check {
        #[arg(long)]
        k: usize,
        /// Decide by enumerating all vertex subsets instead of max flow.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
        cap: usize,
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum OrientAction {
    /// Every vertex chosen by at most k edges.
    Bounded {
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
    /// Bounded by rank·k², with no two vertices pointing at each other.
    Antisym {
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
    /// A bounded orientation of a graph with a homomorphism into a target.
    Hom {
        #[arg(long, value_name = "FILE")]
        target: PathBuf,
        /// Defaults to the least k for which the graph is k-sparse.
        #[arg(long)]
        k: Option<usize>,
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum TreeAction {
    /// Depth-first spanning tree of a connected hypergraph.
    Dfst {
        /// Defaults to the first declared vertex.
        #[arg(long)]
        root: Option<String>,
        file: PathBuf,
    },
    /// Priority tree through the given leaf edges.
    Priority {
        #[arg(long)]
        root: String,
        /// Comma-separated edge labels.
        #[arg(long)]
        leaves: String,
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum OrderAction {
    /// The vertices of every edge in spanning-tree order.
    Edges { file: PathBuf },
    /// The in-neighbours of every vertex of a directed graph, ordered.
    Neighbourhoods { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum FlowAction {
    /// An edge-bounded δ-flow for a distribution.
    Delta {
        #[arg(long)]
        k: usize,
        #[arg(long, value_name = "FILE")]
        dist: PathBuf,
        file: PathBuf,
    },
    /// Paths realising a δ-flow (computed, or read with --flow).
    Paths {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_name = "FILE")]
        dist: PathBuf,
        #[arg(long, value_name = "FILE")]
        flow: Option<PathBuf>,
        /// Also check every vertex and edge lies on at most m paths.
        #[arg(long)]
        m: Option<usize>,
        file: PathBuf,
    },
    /// Check that a flow is a δ-flow and report its bounds.
    Check {
        #[arg(long, value_name = "FILE")]
        dist: PathBuf,
        #[arg(long, value_name = "FILE")]
        flow: PathBuf,
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum EncodeAction {
    /// Factor a set-to-vertex map through an injective one.
    Refine {
        #[arg(long)]
        k: usize,
        #[arg(long, value_name = "FILE")]
        sets: PathBuf,
        file: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(value_enum)]
    pub name: SuiteName,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Largest vertex count, overriding each criterion's default.
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated largest vertex counts; one run per entry.
    #[arg(long, conflicts_with = "n")]
    pub sizes: Option<String>,
}

/// A failed command: its exit code and report.
#[derive(Debug)]
pub struct Failure {
    pub exit: i32,
    pub report: String,
}

impl Failure {
    fn domain(code: &str, body: impl Into<String>) -> Self {
        Self {
            exit: 1,
            report: format!("ERROR {code}\n{}", body.into()),
        }
    }

    fn usage(code: &str, message: impl std::fmt::Display) -> Self {
        Self {
            exit: 2,
            report: format!("ERROR {code}\n{message}\n"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let mut body = format!("{e}\n");
        if let Some(w) = e.witness() {
            body.push_str("witness:");
            for v in w {
                body.push_str(&format!(" {}", v.0));
            }
            body.push('\n');
        }
        Failure::domain(e.code(), body)
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Syntax { .. } => Failure::usage(e.code(), e),
            _ => Failure::domain(e.code(), format!("{e}\n")),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage("Io", format!("{}: {e}", path.display())))
}

fn vertex(h: &Hypergraph, name: &str) -> Result<VertexId, Failure> {
    h.find_vertex(name)
        .ok_or_else(|| Failure::usage("UnknownVertex", format!("no vertex `{name}`")))
}

fn edge(h: &Hypergraph, name: &str) -> Result<EdgeId, Failure> {
    h.find_edge(name)
        .ok_or_else(|| Failure::usage("UnknownEdge", format!("no edge `{name}`")))
}

/// Runs a parsed command and returns its exit code and report.
pub fn run(cli: &Cli) -> (i32, String) {
    match dispatch(&cli.command) {
        Ok(report) => (0, report),
        Err(f) => (f.exit, f.report),
    }
}

fn dispatch(command: &Command) -> Outcome {
    match command {
        Command::Sparsity { action } => sparsity(action),
        Command::Orient { action } => orient(action),
        Command::Tree { action } => tree(action),
        Command::Order { action } => order(action),
        Command::Flow { action } => flow(action),
        Command::Encode { action } => encode(action),
        Command::Suite(args) => run_suite(args),
    }
}

fn sparsity(action: &SparsityAction) -> Outcome {
    let SparsityAction::Check {
        k,
        oracle,
        cap,
        file,
    } = action;
    let h = format::parse_hypergraph(&read(file)?)?;
    let report = if *oracle {
        is_k_sparse_bruteforce(&h, *k, *cap)?
    } else {
        is_k_sparse(&h, *k)
    };
    match report.witness {
        None => Ok(format!("sparse k={k}\n")),
        Some(w) => Err(Failure::domain(
            "NotKSparse",
            format!("not-sparse k={k}\n{}", format::serialize_vertices(&h, &w)),
        )),
    }
}

fn orient(action: &OrientAction) -> Outcome {
    match action {
        OrientAction::Bounded { k, file } => {
            let h = format::parse_hypergraph(&read(file)?)?;
            Ok(format::serialize_orientation(
                &h,
                &bounded_orientation(&h, *k)?,
            ))
        }
        OrientAction::Antisym { k, file } => {
            let h = format::parse_hypergraph(&read(file)?)?;
            Ok(format::serialize_orientation(
                &h,
                &antisymmetric_orientation(&h, *k)?,
            ))
        }
        OrientAction::Hom { target, k, file } => {
            let g = format::parse_graph(&read(file)?)?;
            let t = format::parse_digraph(&read(target)?)?;
            let k = k.unwrap_or_else(|| {
                (0..)
                    .find(|&k| is_k_sparse(g.hypergraph(), k).is_sparse)
                    .expect("some k suffices")
            });
            let ho = h_orientation(&g, &t, k)?;
            let mut out = format::serialize_orientation(g.hypergraph(), &ho.orientation);
            out.push_str("# hom\n");
            for v in g.vertices() {
                out.push_str(&format!(
                    "{} -> {}\n",
                    g.vertex_name(v),
                    t.vertex_name(ho.hom[v.0])
                ));
            }
            Ok(out)
        }
    }
}

fn tree(action: &TreeAction) -> Outcome {
    match action {
        TreeAction::Dfst { root, file } => {
            let h = format::parse_hypergraph(&read(file)?)?;
            let root = match root {
                Some(name) => vertex(&h, name)?,
                None if h.vertex_count() > 0 => VertexId(0),
                None => {
                    return Err(Failure::usage(
                        "UnknownVertex",
                        "empty hypergraph has no root",
                    ))
                }
            };
            Ok(format::serialize_dfst(&h, &build_dfst(&h, root)?))
        }
        TreeAction::Priority { root, leaves, file } => {
            let h = format::parse_hypergraph(&read(file)?)?;
            let root = vertex(&h, root)?;
            let leaves = leaves
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|name| edge(&h, name))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(format::serialize_priority_tree(
                &h,
                &build_priority_tree(&h, root, &leaves)?,
            ))
        }
    }
}

fn order(action: &OrderAction) -> Outcome {
    match action {
        OrderAction::Edges { file } => {
            let h = format::parse_hypergraph(&read(file)?)?;
            let orders = edge_ordering(&h)?;
            Ok(format::serialize_lists(
                h.edge_ids().map(|e| h.edge_name(e)),
                &orders,
                |v| h.vertex_name(v),
            ))
        }
        OrderAction::Neighbourhoods { file } => {
            let g = format::parse_digraph(&read(file)?)?;
            let orders = neighbourhood_ordering(&g)?;
            Ok(format::serialize_lists(
                g.vertices().map(|v| g.vertex_name(v)),
                &orders,
                |v| g.vertex_name(v),
            ))
        }
    }
}

fn flow(action: &FlowAction) -> Outcome {
    match action {
        FlowAction::Delta { k, dist, file } => {
            let g = format::parse_graph(&read(file)?)?;
            let d = format::parse_distribution(&g, &read(dist)?)?;
            Ok(format::serialize_flow(&g, &compute_delta_flow(&g, &d, *k)?))
        }
        FlowAction::Paths {
            k,
            dist,
            flow,
            m,
            file,
        } => {
            let g = format::parse_graph(&read(file)?)?;
            let d = format::parse_distribution(&g, &read(dist)?)?;
            let f = match flow {
                Some(path) => format::parse_flow(&g, &read(path)?)?,
                None => compute_delta_flow(&g, &d, *k)?,
            };
            let paths = decompose_flow_paths(&g, &cancel_cycles(&f), &d)?;
            let mut out = format::serialize_paths(&g, &paths);
            if let Some(m) = m {
                out.push_str(&format!(
                    "# valid m={m}: {}\n",
                    validate_path_family(&g, &paths, *m)
                ));
            }
            Ok(out)
        }
        FlowAction::Check { dist, flow, file } => {
            let g = format::parse_graph(&read(file)?)?;
            let d = format::parse_distribution(&g, &read(dist)?)?;
            let f = format::parse_flow(&g, &read(flow)?)?;
            let (eb, vb) = f.bounds();
            let body = format!(
                "edge-bound {eb}\nvertex-bound {vb}\nacyclic {}\n",
                is_acyclic(&f)
            );
            if check_delta_flow(&f, &d) {
                Ok(format!("delta-flow true\n{body}"))
            } else {
                Err(Failure::domain(
                    "InvalidFlow",
                    format!("delta-flow false\n{body}"),
                ))
            }
        }
    }
}

fn encode(action: &EncodeAction) -> Outcome {
    let EncodeAction::Refine { k, sets, file } = action;
    let g = format::parse_graph(&read(file)?)?;
    let h = format::parse_set_function(&g, &read(sets)?)?;
    let r = refine_to_injective(&g, &h, *k)?;
    Ok(format!(
        "# h0\n{}# gmap\n{}",
        format::serialize_set_function(&g, &r.h0),
        format::serialize_vertex_map(&g, &r.gmap)
    ))
}

fn run_suite(args: &SuiteArgs) -> Outcome {
    let sizes: Vec<Option<usize>> = match (&args.sizes, args.n) {
        (Some(list), _) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map(Some))
            .collect::<Result<_, _>>()
            .map_err(|e| Failure::usage("ParseError", format!("--sizes: {e}")))?,
        (None, Some(n)) => vec![Some(n)],
        (None, None) => vec![None],
    };
    Ok(suite::run_suite(args.name, args.seed, &sizes).0)
}
