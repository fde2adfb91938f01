//! Simple undirected graphs and simple directed graphs (loops allowed).

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

/// A hypergraph whose edges are distinct unordered pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    inner: Hypergraph,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl UndirectedGraph {
    pub fn new(h: Hypergraph) -> Result<Self> {
        let mut adjacency = alloc::vec![Vec::new(); h.vertex_count()];
        let mut seen = BTreeSet::new();
        for e in h.edge_ids() {
            let &[u, v] = h.edge(e) else {
                return Err(Error::NotAPair(e));
            };
            if !seen.insert((u, v)) {
                return Err(Error::ParallelEdge(e));
            }
            adjacency[u.0].push((v, e));
            adjacency[v.0].push((u, e));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            inner: h,
            adjacency,
        })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges: Vec<[usize; 2]> = pairs.iter().map(|&(u, v)| [u, v]).collect();
        Self::new(Hypergraph::from_edges(n, &edges)?)
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.inner
    }

    pub fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.inner.vertices()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.inner.edge_ids()
    }

    /// Endpoints `(u, v)` with `u < v`.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let members = self.inner.edge(e);
        (members[0], members[1])
    }

    /// Neighbours of `v` in ascending order, with the connecting edge.
    pub fn neighbours(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let list = self.adjacency.get(u.0)?;
        list.binary_search_by(|&(w, _)| w.cmp(&v))
            .ok()
            .map(|i| list[i].1)
    }

    pub fn vertex_name(&self, v: VertexId) -> String {
        self.inner.vertex_name(v)
    }
}

/// A simple directed graph on `0..n`; loops are permitted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DirectedGraph {
    labels: Vec<Option<String>>,
    arcs: BTreeSet<(VertexId, VertexId)>,
}

impl DirectedGraph {
    pub fn new(n: usize) -> Self {
        Self {
            labels: alloc::vec![None; n],
            arcs: BTreeSet::new(),
        }
    }

    pub fn with_labels(labels: Vec<Option<String>>) -> Self {
        Self {
            labels,
            arcs: BTreeSet::new(),
        }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in arcs {
            g.add_arc(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    /// Inserts an arc; returns `false` if it was already present.
    pub fn add_arc(&mut self, from: VertexId, to: VertexId) -> Result<bool> {
        for v in [from, to] {
            if v.0 >= self.vertex_count() {
                return Err(Error::UnknownVertex(v));
            }
        }
        Ok(self.arcs.insert((from, to)))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(VertexId)
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, from: VertexId, to: VertexId) -> bool {
        self.arcs.contains(&(from, to))
    }

    pub fn out_neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.arcs
            .range((v, VertexId(0))..=(v, VertexId(usize::MAX)))
            .map(|&(_, w)| w)
    }

    /// `I(v) = { u : (u, v) is an arc }` in ascending order.
    pub fn in_neighbours(&self, v: VertexId) -> Vec<VertexId> {
        self.arcs
            .iter()
            .filter(|&&(_, w)| w == v)
            .map(|&(u, _)| u)
            .collect()
    }

    pub fn max_indegree(&self) -> usize {
        let mut counts = alloc::vec![0usize; self.vertex_count()];
        for &(_, w) in &self.arcs {
            counts[w.0] += 1;
        }
        counts.into_iter().max().unwrap_or(0)
    }

    pub fn has_loops(&self) -> bool {
        self.arcs.iter().any(|&(u, v)| u == v)
    }

    /// No pair of distinct vertices is joined in both directions.
    pub fn is_antisymmetric(&self) -> bool {
        self.opposite_pair().is_none()
    }

    /// The least `(a, b)` with `a < b` such that both `(a, b)` and `(b, a)` are arcs.
    pub fn opposite_pair(&self) -> Option<(VertexId, VertexId)> {
        self.arcs
            .iter()
            .find(|&&(u, v)| u < v && self.arcs.contains(&(v, u)))
            .copied()
    }

    pub fn vertex_label(&self, v: VertexId) -> Option<&str> {
        self.labels[v.0].as_deref()
    }

    pub fn vertex_name(&self, v: VertexId) -> String {
        match self.vertex_label(v) {
            Some(label) => label.into(),
            None => v.0.to_string(),
        }
    }

    pub fn find_vertex(&self, name: &str) -> Option<VertexId> {
        self.vertices().find(|&v| self.vertex_name(v) == name)
    }
}
