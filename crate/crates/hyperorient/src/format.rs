//! Line-based text formats. `#` starts a comment; blank lines are skipped.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use hyperorient_core::encoding::FiniteSetFunction;
use hyperorient_core::flows::{Distribution, Flow, PathFamily, VertexMap};
use hyperorient_core::spanning::{DepthFirstSpanningTree, NodeType, PriorityTree};
use hyperorient_core::{
    DirectedGraph, EdgeId, Error, Hypergraph, HypergraphBuilder, Orientation, UndirectedGraph,
    VertexId,
};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Domain { line: usize, source: Error },
    /// A domain error not tied to one line (line 0 in reports).
    #[error("{0}")]
    Invalid(#[from] Error),
}

impl FormatError {
    pub fn code(&self) -> &'static str {
        match self {
            FormatError::Syntax { .. } => "ParseError",
            FormatError::Domain { source, .. } | FormatError::Invalid(source) => source.code(),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-blank lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

struct Names(HashMap<String, VertexId>);

impl Names {
    fn of(h: &Hypergraph) -> Self {
        Names(h.vertices().map(|v| (h.vertex_name(v), v)).collect())
    }

    fn get(&self, line: usize, name: &str) -> Result<VertexId, FormatError> {
        self.0
            .get(name)
            .copied()
            .ok_or_else(|| syntax(line, format!("undeclared vertex `{name}`")))
    }
}

/// `v <label>` declares a vertex, `e <label> <v1> <v2> ...` an edge over
/// vertices declared earlier. Ids follow declaration order.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, FormatError> {
    let mut b = HypergraphBuilder::new();
    let mut names = HashMap::new();
    let mut edge_names = BTreeSet::new();
    for (line, body) in lines(text) {
        let mut tokens = body.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let (Some(label), None) = (tokens.next(), tokens.next()) else {
                    return Err(syntax(line, "expected `v <label>`"));
                };
                if names.contains_key(label) {
                    return Err(syntax(line, format!("vertex `{label}` declared twice")));
                }
                let v = b.add_vertex(Some(label.to_string()));
                names.insert(label.to_string(), v);
            }
            Some("e") => {
                let Some(label) = tokens.next() else {
                    return Err(syntax(line, "expected `e <label> <v1> ...`"));
                };
                if !edge_names.insert(label.to_string()) {
                    return Err(syntax(line, format!("edge `{label}` declared twice")));
                }
                let members = tokens
                    .map(|t| {
                        names
                            .get(t)
                            .copied()
                            .ok_or_else(|| syntax(line, format!("undeclared vertex `{t}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                b.add_edge(Some(label.to_string()), &members)
                    .map_err(|source| FormatError::Domain { line, source })?;
            }
            _ => return Err(syntax(line, "expected a `v` or `e` line")),
        }
    }
    Ok(b.build())
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    for v in h.vertices() {
        writeln!(out, "v {}", h.vertex_name(v)).unwrap();
    }
    for e in h.edge_ids() {
        write!(out, "e {}", h.edge_name(e)).unwrap();
        for &v in h.edge(e) {
            write!(out, " {}", h.vertex_name(v)).unwrap();
        }
        out.push('\n');
    }
    out
}

/// A hypergraph file whose edges are distinct pairs.
pub fn parse_graph(text: &str) -> Result<UndirectedGraph, FormatError> {
    Ok(UndirectedGraph::new(parse_hypergraph(text)?)?)
}

/// `v <label>` declares a vertex, `a <from> <to>` an arc.
pub fn parse_digraph(text: &str) -> Result<DirectedGraph, FormatError> {
    let mut labels = Vec::new();
    let mut names: HashMap<String, VertexId> = HashMap::new();
    let mut arcs = Vec::new();
    for (line, body) in lines(text) {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        match tokens.as_slice() {
            ["v", label] => {
                if names
                    .insert(label.to_string(), VertexId(labels.len()))
                    .is_some()
                {
                    return Err(syntax(line, format!("vertex `{label}` declared twice")));
                }
                labels.push(Some(label.to_string()));
            }
            ["a", from, to] => {
                let get = |t: &str| {
                    names
                        .get(t)
                        .copied()
                        .ok_or_else(|| syntax(line, format!("undeclared vertex `{t}`")))
                };
                arcs.push((line, get(from)?, get(to)?));
            }
            _ => return Err(syntax(line, "expected `v <label>` or `a <from> <to>`")),
        }
    }
    let mut g = DirectedGraph::with_labels(labels);
    for (line, u, v) in arcs {
        g.add_arc(u, v)
            .map_err(|source| FormatError::Domain { line, source })?;
    }
    Ok(g)
}

pub fn serialize_digraph(g: &DirectedGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "v {}", g.vertex_name(v)).unwrap();
    }
    for (u, v) in g.arcs() {
        writeln!(out, "a {} {}", g.vertex_name(u), g.vertex_name(v)).unwrap();
    }
    out
}

/// `<edge-label> -> <vertex-label>` per edge, in edge order.
pub fn serialize_orientation(h: &Hypergraph, f: &Orientation) -> String {
    let mut out = String::new();
    for e in h.edge_ids() {
        writeln!(out, "{} -> {}", h.edge_name(e), h.vertex_name(f.head(e))).unwrap();
    }
    out
}

/// Reads the format written by [`serialize_orientation`]; every edge must be
/// assigned exactly once.
pub fn parse_orientation(h: &Hypergraph, text: &str) -> Result<Orientation, FormatError> {
    let names = Names::of(h);
    let edges: HashMap<String, EdgeId> = h.edge_ids().map(|e| (h.edge_name(e), e)).collect();
    let mut heads: Vec<Option<VertexId>> = vec![None; h.edge_count()];
    for (line, body) in lines(text) {
        let Some((e, v)) = body.split_once("->") else {
            return Err(syntax(line, "expected `<edge> -> <vertex>`"));
        };
        let e = *edges
            .get(e.trim())
            .ok_or_else(|| syntax(line, format!("unknown edge `{}`", e.trim())))?;
        if heads[e.0].replace(names.get(line, v.trim())?).is_some() {
            return Err(syntax(line, "edge assigned twice"));
        }
    }
    let heads = heads
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| syntax(0, format!("edge `{}` unassigned", h.edge_name(EdgeId(i)))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Orientation::new(h, heads)?)
}

pub fn serialize_vertices(h: &Hypergraph, vs: &[VertexId]) -> String {
    vs.iter().map(|&v| h.vertex_name(v) + "\n").collect()
}

/// `<vertex-label> <count>` lines; unlisted vertices get 0.
pub fn parse_distribution(g: &UndirectedGraph, text: &str) -> Result<Distribution, FormatError> {
    let names = Names::of(g.hypergraph());
    let mut d = Distribution::zero(g.vertex_count());
    let mut seen = BTreeSet::new();
    for (line, body) in lines(text) {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let [name, count] = tokens.as_slice() else {
            return Err(syntax(line, "expected `<vertex> <count>`"));
        };
        let v = names.get(line, name)?;
        let count: usize = count
            .parse()
            .map_err(|_| syntax(line, format!("`{count}` is not a nonnegative integer")))?;
        if !seen.insert(v) {
            return Err(syntax(line, format!("vertex `{name}` listed twice")));
        }
        d.set(v, count)?;
    }
    Ok(d)
}

/// Nonzero demands only.
pub fn serialize_distribution(g: &UndirectedGraph, d: &Distribution) -> String {
    let mut out = String::new();
    for v in d.support() {
        writeln!(out, "{} {}", g.vertex_name(v), d.get(v)).unwrap();
    }
    out
}

/// `<u> <v> <value>` lines; a pair may appear in either order.
pub fn parse_flow(g: &UndirectedGraph, text: &str) -> Result<Flow, FormatError> {
    let names = Names::of(g.hypergraph());
    let mut f = Flow::zero(g.vertex_count());
    for (line, body) in lines(text) {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let [u, v, x] = tokens.as_slice() else {
            return Err(syntax(line, "expected `<u> <v> <value>`"));
        };
        let (u, v) = (names.get(line, u)?, names.get(line, v)?);
        let x: i64 = x
            .parse()
            .map_err(|_| syntax(line, format!("`{x}` is not an integer")))?;
        f.set(g, u, v, x)
            .map_err(|source| FormatError::Domain { line, source })?;
    }
    Ok(f)
}

/// `<u> <v> <f(u, v)>` with `u < v` by id, zero entries omitted.
pub fn serialize_flow(g: &UndirectedGraph, f: &Flow) -> String {
    let mut out = String::new();
    for (u, v, x) in f.entries() {
        writeln!(out, "{} {} {x}", g.vertex_name(u), g.vertex_name(v)).unwrap();
    }
    out
}

pub fn serialize_paths(g: &UndirectedGraph, p: &PathFamily) -> String {
    let mut out = String::new();
    for path in p.paths() {
        let names: Vec<String> = path.iter().map(|&v| g.vertex_name(v)).collect();
        writeln!(out, "{}", names.join(" ")).unwrap();
    }
    out
}

/// `<v1>,<v2>,... -> <vertex>` lines; an empty left side is the empty set.
pub fn parse_set_function(
    g: &UndirectedGraph,
    text: &str,
) -> Result<FiniteSetFunction, FormatError> {
    let names = Names::of(g.hypergraph());
    let mut h = FiniteSetFunction::new(g.vertex_count());
    for (line, body) in lines(text) {
        let Some((set, image)) = body.split_once("->") else {
            return Err(syntax(line, "expected `<v1>,<v2>,... -> <vertex>`"));
        };
        let members = set
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| names.get(line, t))
            .collect::<Result<Vec<_>, _>>()?;
        let image = names.get(line, image.trim())?;
        h.insert(&members, image)
            .map_err(|source| FormatError::Domain { line, source })?;
    }
    Ok(h)
}

pub fn serialize_set_function(g: &UndirectedGraph, h: &FiniteSetFunction) -> String {
    let mut out = String::new();
    for (x, v) in h.iter() {
        let names: Vec<String> = x.iter().map(|&u| g.vertex_name(u)).collect();
        writeln!(out, "{} -> {}", names.join(","), g.vertex_name(v)).unwrap();
    }
    out
}

/// `<v> -> <u>` per defined point, ascending.
pub fn serialize_vertex_map(g: &UndirectedGraph, map: &VertexMap) -> String {
    let mut out = String::new();
    for (&v, &u) in map {
        writeln!(out, "{} -> {}", g.vertex_name(v), g.vertex_name(u)).unwrap();
    }
    out
}

fn join_names<T: Copy>(items: impl IntoIterator<Item = T>, name: impl Fn(T) -> String) -> String {
    items.into_iter().map(name).collect::<Vec<_>>().join(",")
}

/// One line per node, parents first:
/// `<v> parent=<u|-> type=<root|s<l>|l<l>> F=<e,...> A=<v,...>`.
pub fn serialize_dfst(h: &Hypergraph, t: &DepthFirstSpanningTree) -> String {
    let mut out = String::new();
    for node in t.nodes() {
        let parent = node.parent.map_or("-".to_string(), |p| h.vertex_name(p));
        let kind = match node.kind {
            NodeType::Root => "root".to_string(),
            NodeType::Successor(l) => format!("s{l}"),
            NodeType::Limit(l) => format!("l{l}"),
        };
        let aux = t.aux(node.vertex).expect("nodes have auxiliary sets");
        writeln!(
            out,
            "{} parent={parent} type={kind} F={} A={}",
            h.vertex_name(node.vertex),
            join_names(node.attach.iter().copied(), |e| h.edge_name(e)),
            join_names(aux.iter().copied(), |v| h.vertex_name(v)),
        )
        .unwrap();
    }
    out
}

/// Classes as `F<k>=<edges> P<k>=<vertices>`, then the leaf edges.
pub fn serialize_priority_tree(h: &Hypergraph, t: &PriorityTree) -> String {
    let mut out = String::new();
    writeln!(out, "root {}", h.vertex_name(t.root())).unwrap();
    for (k, (edges, vertices)) in t.edge_classes().iter().zip(t.vertex_classes()).enumerate() {
        writeln!(
            out,
            "F{k}={} P{k}={}",
            join_names(edges.iter().copied(), |e| h.edge_name(e)),
            join_names(vertices.iter().copied(), |v| h.vertex_name(v)),
        )
        .unwrap();
    }
    writeln!(
        out,
        "L={}",
        join_names(t.leaves().iter().copied(), |e| h.edge_name(e))
    )
    .unwrap();
    out
}

/// `<owner>: <v1> <v2> ...` per list.
pub fn serialize_lists(
    owners: impl IntoIterator<Item = String>,
    lists: &[Vec<VertexId>],
    name: impl Fn(VertexId) -> String,
) -> String {
    let mut out = String::new();
    for (owner, list) in owners.into_iter().zip(lists) {
        let names: Vec<String> = list.iter().map(|&v| name(v)).collect();
        writeln!(out, "{owner}: {}", names.join(" ")).unwrap();
    }
    out
}
