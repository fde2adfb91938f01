//! Finite hypergraphs as two-sorted incidence structures.
//!
//! Vertices and edges carry dense ids `0..n` and optional labels. Distinct edges
//! may have identical vertex sets. Each edge stores its vertices in ascending id
//! order and each vertex stores its incident edges in ascending id order.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Hypergraph {
    vertex_labels: Vec<Option<String>>,
    edge_labels: Vec<Option<String>>,
    edges: Vec<Vec<VertexId>>,
    incident: Vec<Vec<EdgeId>>,
}

/// Incremental construction in declaration order.
#[derive(Debug, Clone, Default)]
pub struct HypergraphBuilder {
    graph: Hypergraph,
}

impl HypergraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: Option<String>) -> VertexId {
        let id = VertexId(self.graph.vertex_labels.len());
        self.graph.vertex_labels.push(label);
        self.graph.incident.push(Vec::new());
        id
    }

    pub fn add_edge(&mut self, label: Option<String>, vertices: &[VertexId]) -> Result<EdgeId> {
        let id = EdgeId(self.graph.edges.len());
        if vertices.is_empty() {
            return Err(Error::EmptyEdge(id));
        }
        let mut members = vertices.to_vec();
        members.sort_unstable();
        for pair in members.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertexInEdge {
                    edge: id,
                    vertex: pair[0],
                });
            }
        }
        for &v in &members {
            if v.0 >= self.graph.vertex_labels.len() {
                return Err(Error::UnknownVertex(v));
            }
        }
        for &v in &members {
            self.graph.incident[v.0].push(id);
        }
        self.graph.edges.push(members);
        self.graph.edge_labels.push(label);
        Ok(id)
    }

    pub fn build(self) -> Hypergraph {
        self.graph
    }
}

/// An induced subhypergraph together with the ids it had in its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subhypergraph {
    pub hypergraph: Hypergraph,
    /// `vertex_map[new] = old`
    pub vertex_map: Vec<VertexId>,
    /// `edge_map[new] = old`
    pub edge_map: Vec<EdgeId>,
}

impl Hypergraph {
    /// Unlabelled hypergraph on `n` vertices with the given edges.
    pub fn from_edges<E: AsRef<[usize]>>(n: usize, edges: &[E]) -> Result<Self> {
        let mut builder = HypergraphBuilder::new();
        for _ in 0..n {
            builder.add_vertex(None);
        }
        for edge in edges {
            let members: Vec<VertexId> = edge.as_ref().iter().map(|&v| VertexId(v)).collect();
            builder.add_edge(None, &members)?;
        }
        Ok(builder.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_count()).map(EdgeId)
    }

    /// Vertices of `e` in ascending order.
    pub fn edge(&self, e: EdgeId) -> &[VertexId] {
        &self.edges[e.0]
    }

    /// Edges incident with `v` in ascending order.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident[v.0].len()
    }

    pub fn contains(&self, e: EdgeId, v: VertexId) -> bool {
        self.edges[e.0].binary_search(&v).is_ok()
    }

    /// Largest edge size, 0 for an edgeless hypergraph.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 < self.edge_count() {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    pub fn vertex_label(&self, v: VertexId) -> Option<&str> {
        self.vertex_labels[v.0].as_deref()
    }

    pub fn edge_label(&self, e: EdgeId) -> Option<&str> {
        self.edge_labels[e.0].as_deref()
    }

    /// The label of `v`, or its id when unlabelled.
    pub fn vertex_name(&self, v: VertexId) -> String {
        match self.vertex_label(v) {
            Some(label) => label.into(),
            None => v.0.to_string(),
        }
    }

    pub fn edge_name(&self, e: EdgeId) -> String {
        match self.edge_label(e) {
            Some(label) => label.into(),
            None => e.0.to_string(),
        }
    }

    pub fn find_vertex(&self, name: &str) -> Option<VertexId> {
        self.vertices().find(|&v| self.vertex_name(v) == name)
    }

    pub fn find_edge(&self, name: &str) -> Option<EdgeId> {
        self.edge_ids().find(|&e| self.edge_name(e) == name)
    }

    /// `⟨C, E|_C⟩`: the vertices of `c` and every edge lying entirely inside `c`.
    pub fn induced_subhypergraph(&self, c: &BTreeSet<VertexId>) -> Result<Subhypergraph> {
        let mut new_id = alloc::vec![None; self.vertex_count()];
        let mut builder = HypergraphBuilder::new();
        let mut vertex_map = Vec::with_capacity(c.len());
        for &v in c {
            self.check_vertex(v)?;
            new_id[v.0] = Some(builder.add_vertex(self.vertex_labels[v.0].clone()));
            vertex_map.push(v);
        }
        let mut edge_map = Vec::new();
        for e in self.edge_ids() {
            let members: Option<Vec<VertexId>> = self.edge(e).iter().map(|v| new_id[v.0]).collect();
            if let Some(members) = members {
                builder.add_edge(self.edge_labels[e.0].clone(), &members)?;
                edge_map.push(e);
            }
        }
        Ok(Subhypergraph {
            hypergraph: builder.build(),
            vertex_map,
            edge_map,
        })
    }

    /// Partition of the vertices into connected components, each sorted, ordered by
    /// least member. Isolated vertices form singleton components.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut sets = DisjointSets::new(self.vertex_count());
        for members in &self.edges {
            for pair in members.windows(2) {
                sets.union(pair[0].0, pair[1].0);
            }
        }
        let mut slot = alloc::vec![usize::MAX; self.vertex_count()];
        let mut components: Vec<Vec<VertexId>> = Vec::new();
        for v in self.vertices() {
            let root = sets.find(v.0);
            if slot[root] == usize::MAX {
                slot[root] = components.len();
                components.push(Vec::new());
            }
            components[slot[root]].push(v);
        }
        components
    }

    /// A hypergraph is connected when it has exactly one component.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// `⋃F` for a set of edges `F`.
    pub fn union_of(&self, edges: impl IntoIterator<Item = EdgeId>) -> BTreeSet<VertexId> {
        edges
            .into_iter()
            .flat_map(|e| self.edge(e).iter().copied())
            .collect()
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: alloc::vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}
