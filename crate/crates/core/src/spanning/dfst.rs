//! Depth-first spanning trees of hypergraphs and the vertex orders they induce.
//!
//! A tree node `v` owns a set of attached edges `F_v` and the auxiliary vertices
//! `A_v = ({v} ∪ ⋃F_v) ∖ ⋃_{x<v} A_x`. Every edge must meet the auxiliary sets
//! of a nonempty chain of nodes, its border `B(e/T)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::hypergraph::{EdgeId, Hypergraph, HypergraphBuilder, VertexId};
use crate::order::VertexOrder;
use crate::orientation::Orientation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NodeType {
    Root,
    Successor(usize),
    Limit(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfstNode {
    pub vertex: VertexId,
    pub parent: Option<VertexId>,
    pub kind: NodeType,
    /// `F_v`.
    pub attach: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthFirstSpanningTree {
    nodes: Vec<DfstNode>,
    position: BTreeMap<VertexId, usize>,
    depth: Vec<usize>,
    aux: Vec<BTreeSet<VertexId>>,
}

impl DepthFirstSpanningTree {
    /// Assembles a tree from nodes listed parents-first, the root first, and
    /// computes the auxiliary sets. Only the shape is checked here; see
    /// [`validate_dfst`] for the remaining conditions.
    pub fn from_nodes(h: &Hypergraph, nodes: Vec<DfstNode>) -> Result<Self> {
        let mut position = BTreeMap::new();
        let mut depth = Vec::with_capacity(nodes.len());
        for (i, node) in nodes.iter().enumerate() {
            h.check_vertex(node.vertex)?;
            for &e in &node.attach {
                h.check_edge(e)?;
            }
            let d = match (i, node.parent) {
                (0, None) => 0,
                (0, Some(_)) | (_, None) => {
                    return Err(Error::MalformedTree("exactly the first node is the root"))
                }
                (_, Some(p)) => match position.get(&p) {
                    Some(&j) => depth[j] + 1,
                    None => return Err(Error::MalformedTree("parent listed after its child")),
                },
            };
            if position.insert(node.vertex, i).is_some() {
                return Err(Error::MalformedTree("vertex listed twice"));
            }
            depth.push(d);
        }
        if nodes.is_empty() {
            return Err(Error::MalformedTree("no root"));
        }
        let mut t = Self {
            nodes,
            position,
            depth,
            aux: Vec::new(),
        };
        for i in 0..t.nodes.len() {
            let node = &t.nodes[i];
            let mut a: BTreeSet<VertexId> = h.union_of(node.attach.iter().copied());
            a.insert(node.vertex);
            let mut up = node.parent;
            while let Some(p) = up {
                let j = t.position[&p];
                a.retain(|x| !t.aux[j].contains(x));
                up = t.nodes[j].parent;
            }
            t.aux.push(a);
        }
        Ok(t)
    }

    pub fn root(&self) -> VertexId {
        self.nodes[0].vertex
    }

    /// Nodes, parents before children.
    pub fn nodes(&self) -> &[DfstNode] {
        &self.nodes
    }

    pub fn node(&self, v: VertexId) -> Option<&DfstNode> {
        self.position.get(&v).map(|&i| &self.nodes[i])
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.position.contains_key(&v)
    }

    pub fn depth(&self, v: VertexId) -> Option<usize> {
        self.position.get(&v).map(|&i| self.depth[i])
    }

    /// The tree order: `u ≤ v` iff `u` is `v` or one of its ancestors.
    pub fn leq(&self, u: VertexId, v: VertexId) -> bool {
        let (Some(&i), Some(&j)) = (self.position.get(&u), self.position.get(&v)) else {
            return false;
        };
        let mut j = j;
        while self.depth[j] > self.depth[i] {
            j = self.position[&self.nodes[j].parent.expect("non-root nodes have parents")];
        }
        i == j
    }

    pub fn tree_order(&self) -> VertexOrder {
        VertexOrder::from_fn(self.position.keys().copied(), |u, v| self.leq(u, v))
    }

    /// `A_v`.
    pub fn aux(&self, v: VertexId) -> Result<&BTreeSet<VertexId>> {
        self.position
            .get(&v)
            .map(|&i| &self.aux[i])
            .ok_or(Error::NotATreeNode(v))
    }

    /// The first node, parents-first, whose auxiliary set contains `x`.
    pub fn owner(&self, x: VertexId) -> Option<VertexId> {
        self.aux
            .iter()
            .position(|a| a.contains(&x))
            .map(|i| self.nodes[i].vertex)
    }

    /// `⋃_v A_v`.
    pub fn covered(&self) -> BTreeSet<VertexId> {
        self.aux.iter().flatten().copied().collect()
    }

    /// `B(X/T)` in parents-first order.
    fn border_nodes(&self, x: &BTreeSet<VertexId>) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| !self.aux[i].is_disjoint(x))
            .collect()
    }

    fn chain_max(&self, members: &[usize]) -> Option<VertexId> {
        let deepest = *members.iter().max_by_key(|&&i| self.depth[i])?;
        let top = self.nodes[deepest].vertex;
        members
            .iter()
            .all(|&i| self.leq(self.nodes[i].vertex, top))
            .then_some(top)
    }
}

/// `B(X/T)` with its maximum `β(X/T)` when it is a nonempty chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderSet {
    /// Ascending by id.
    pub members: Vec<VertexId>,
    pub beta: Option<VertexId>,
}

pub fn auxiliary_nodes(t: &DepthFirstSpanningTree, v: VertexId) -> Result<BTreeSet<VertexId>> {
    t.aux(v).cloned()
}

pub fn b_set(t: &DepthFirstSpanningTree, x: impl IntoIterator<Item = VertexId>) -> BorderSet {
    let x: BTreeSet<VertexId> = x.into_iter().collect();
    let nodes = t.border_nodes(&x);
    let mut members: Vec<VertexId> = nodes.iter().map(|&i| t.nodes[i].vertex).collect();
    members.sort_unstable();
    BorderSet {
        members,
        beta: t.chain_max(&nodes),
    }
}

/// Builds a depth-first spanning tree of the component of `root`.
///
/// Each step takes the uncovered component `C` with the least vertex, the
/// maximum `u` of `N(C/T)`, the least edge `e` meeting both `A_u` and `C`, and
/// attaches the least vertex `v ∈ e ∩ C` below `u` with `F_v = {e}` and type
/// `s_l` for the least `l` not used by a successor node in `B(e/T)`.
fn grow(h: &Hypergraph, root: VertexId) -> Result<DepthFirstSpanningTree> {
    let component: BTreeSet<VertexId> = h
        .connected_components()
        .into_iter()
        .find(|c| c.contains(&root))
        .unwrap_or_default()
        .into_iter()
        .collect();
    let mut nodes = alloc::vec![DfstNode {
        vertex: root,
        parent: None,
        kind: NodeType::Root,
        attach: Vec::new(),
    }];
    let mut t = DepthFirstSpanningTree::from_nodes(h, nodes.clone())?;
    loop {
        let covered = t.covered();
        let uncovered: BTreeSet<VertexId> = component.difference(&covered).copied().collect();
        // depth-first: grow from the most recently added node that still
        // borders an uncovered component
        let mut best: Option<(usize, VertexId, BTreeSet<VertexId>, Vec<EdgeId>)> = None;
        for c in uncovered_components(h, &uncovered) {
            let touching: Vec<EdgeId> = h
                .edge_ids()
                .filter(|&e| h.edge(e).iter().any(|v| c.contains(v)))
                .collect();
            let mut neighbourhood = BTreeSet::new();
            for &e in &touching {
                neighbourhood.extend(t.border_nodes(&h.edge(e).iter().copied().collect()));
            }
            let neighbourhood: Vec<usize> = neighbourhood.into_iter().collect();
            let u = t
                .chain_max(&neighbourhood)
                .expect("every N(C/T) is a nonempty chain");
            let recency = t.position[&u];
            if best.as_ref().is_none_or(|b| recency > b.0) {
                best = Some((recency, u, c, touching));
            }
        }
        let Some((_, u, c, touching)) = best else {
            break;
        };
        let a_u = t.aux(u)?;
        let e = *touching
            .iter()
            .find(|&&e| h.edge(e).iter().any(|v| a_u.contains(v)))
            .expect("u borders C through some edge");
        let v = *h.edge(e).iter().find(|v| c.contains(v)).expect("e meets C");
        let used: BTreeSet<usize> = t
            .border_nodes(&h.edge(e).iter().copied().collect())
            .into_iter()
            .filter_map(|i| match t.nodes[i].kind {
                NodeType::Successor(l) => Some(l),
                _ => None,
            })
            .collect();
        let l = (0..).find(|l| !used.contains(l)).unwrap_or(0);
        nodes.push(DfstNode {
            vertex: v,
            parent: Some(u),
            kind: NodeType::Successor(l),
            attach: alloc::vec![e],
        });
        t = DepthFirstSpanningTree::from_nodes(h, nodes.clone())?;
    }
    Ok(t)
}

/// Components of `⟨U, E|_U⟩`, ordered by least vertex.
fn uncovered_components(h: &Hypergraph, u: &BTreeSet<VertexId>) -> Vec<BTreeSet<VertexId>> {
    if u.is_empty() {
        return Vec::new();
    }
    let Ok(sub) = h.induced_subhypergraph(u) else {
        return Vec::new();
    };
    sub.hypergraph
        .connected_components()
        .into_iter()
        .map(|c| c.into_iter().map(|v| sub.vertex_map[v.0]).collect())
        .collect()
}

pub fn build_dfst(h: &Hypergraph, root: VertexId) -> Result<DepthFirstSpanningTree> {
    h.check_vertex(root)?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    grow(h, root)
}

/// One depth-first spanning tree per component, rooted at its least vertex.
pub fn dfst_forest(h: &Hypergraph) -> Result<Vec<DepthFirstSpanningTree>> {
    h.connected_components()
        .into_iter()
        .map(|c| grow(h, c[0]))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DfstViolation {
    /// An edge is attached to two nodes.
    AttachOverlap {
        edge: EdgeId,
    },
    AuxOverlap {
        u: VertexId,
        v: VertexId,
    },
    /// `A_u ∩ T` contains a tree node other than `u`.
    AuxContainsNode {
        node: VertexId,
        other: VertexId,
    },
    EmptyBorder {
        edge: EdgeId,
    },
    BorderNotChain {
        edge: EdgeId,
    },
    /// The root is not typed `0` with no attached edges, or another node is.
    RootType {
        node: VertexId,
    },
    /// A type index is not below the rank.
    TypeIndex {
        node: VertexId,
    },
    /// A successor does not have exactly one attached edge containing it.
    SuccessorEdge {
        node: VertexId,
    },
    /// Another node of the same successor type lies in the border of its edge.
    SuccessorTypeClash {
        node: VertexId,
        other: VertexId,
    },
    /// The border of its edge, without itself, does not top out at its parent.
    SuccessorParent {
        node: VertexId,
    },
    /// A limit node fails one of the structural limit conditions.
    LimitStructure {
        node: VertexId,
    },
}

/// Every condition of a depth-first spanning tree that `t` violates, sorted.
/// Coverage of all vertices is not part of these conditions.
pub fn validate_dfst(h: &Hypergraph, t: &DepthFirstSpanningTree) -> Vec<DfstViolation> {
    let mut out = BTreeSet::new();
    let rank = h.rank().max(1);
    let mut attached: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for node in &t.nodes {
        for &e in &node.attach {
            *attached.entry(e).or_default() += 1;
        }
    }
    for (&edge, &count) in &attached {
        if count > 1 {
            out.insert(DfstViolation::AttachOverlap { edge });
        }
    }
    for (i, a) in t.aux.iter().enumerate() {
        let u = t.nodes[i].vertex;
        for (j, b) in t.aux.iter().enumerate().skip(i + 1) {
            if !a.is_disjoint(b) {
                out.insert(DfstViolation::AuxOverlap {
                    u,
                    v: t.nodes[j].vertex,
                });
            }
        }
        for &x in a {
            if x != u && t.contains(x) {
                out.insert(DfstViolation::AuxContainsNode { node: u, other: x });
            }
        }
    }
    for e in h.edge_ids() {
        let border = b_set(t, h.edge(e).iter().copied());
        if border.members.is_empty() {
            out.insert(DfstViolation::EmptyBorder { edge: e });
        } else if border.beta.is_none() {
            out.insert(DfstViolation::BorderNotChain { edge: e });
        }
    }
    for (i, node) in t.nodes.iter().enumerate() {
        let v = node.vertex;
        let index = match node.kind {
            NodeType::Root => None,
            NodeType::Successor(l) | NodeType::Limit(l) => Some(l),
        };
        if (i == 0) != index.is_none() || (i == 0 && !node.attach.is_empty()) {
            out.insert(DfstViolation::RootType { node: v });
            continue;
        }
        if index.is_some_and(|l| l >= rank) {
            out.insert(DfstViolation::TypeIndex { node: v });
            continue;
        }
        match node.kind {
            NodeType::Root => {}
            NodeType::Successor(l) => {
                let &[e] = node.attach.as_slice() else {
                    out.insert(DfstViolation::SuccessorEdge { node: v });
                    continue;
                };
                if !h.contains(e, v) {
                    out.insert(DfstViolation::SuccessorEdge { node: v });
                    continue;
                }
                let edge: BTreeSet<VertexId> = h.edge(e).iter().copied().collect();
                let border = t.border_nodes(&edge);
                for &j in &border {
                    let other = &t.nodes[j];
                    if other.vertex != v && other.kind == NodeType::Successor(l) {
                        out.insert(DfstViolation::SuccessorTypeClash {
                            node: v,
                            other: other.vertex,
                        });
                    }
                }
                let rest: Vec<usize> = border.into_iter().filter(|&j| j != i).collect();
                if t.chain_max(&rest) != node.parent {
                    out.insert(DfstViolation::SuccessorParent { node: v });
                }
            }
            NodeType::Limit(l) => {
                let spanned = h.union_of(node.attach.iter().copied());
                let clash = t
                    .border_nodes(&spanned)
                    .into_iter()
                    .any(|j| t.nodes[j].vertex != v && t.nodes[j].kind == NodeType::Limit(l));
                if node.attach.is_empty() || !spanned.contains(&v) || clash {
                    out.insert(DfstViolation::LimitStructure { node: v });
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Per-vertex sort key agreeing with `⊑` on every set whose border is a chain:
/// depth of the owning node, then vertex id.
fn order_key(t: &DepthFirstSpanningTree, x: VertexId) -> Option<(usize, VertexId)> {
    let owner = t.owner(x)?;
    Some((t.depth(owner)?, x))
}

/// `⊑₀` on the covered vertices: `x ⊑₀ y` iff the owner of `x` is below the
/// owner of `y` in the tree order, or both have the same owner.
pub fn aux_preorder(h: &Hypergraph, t: &DepthFirstSpanningTree) -> VertexOrder {
    let owners: BTreeMap<VertexId, VertexId> = h
        .vertices()
        .filter_map(|x| t.owner(x).map(|o| (x, o)))
        .collect();
    VertexOrder::from_fn(owners.keys().copied(), |x, y| t.leq(owners[&x], owners[&y]))
}

/// `⊑`: `⊑₀` with each class ordered by vertex id.
pub fn aux_order(h: &Hypergraph, t: &DepthFirstSpanningTree) -> VertexOrder {
    let owners: BTreeMap<VertexId, VertexId> = h
        .vertices()
        .filter_map(|x| t.owner(x).map(|o| (x, o)))
        .collect();
    VertexOrder::from_fn(owners.keys().copied(), |x, y| {
        let (a, b) = (owners[&x], owners[&y]);
        if a == b {
            x <= y
        } else {
            t.leq(a, b)
        }
    })
}

/// `e`'s vertices sorted by `⊑` of the tree spanning its component.
fn sort_edge(
    forest: &[DepthFirstSpanningTree],
    owner_tree: &[usize],
    e: &[VertexId],
) -> Vec<VertexId> {
    let mut sorted = e.to_vec();
    sorted.sort_by_key(|&x| order_key(&forest[owner_tree[x.0]], x));
    sorted
}

fn forest_index(h: &Hypergraph, forest: &[DepthFirstSpanningTree]) -> Vec<usize> {
    let mut owner_tree = alloc::vec![0; h.vertex_count()];
    for (i, t) in forest.iter().enumerate() {
        for x in t.covered() {
            owner_tree[x.0] = i;
        }
    }
    owner_tree
}

/// Each edge's vertices in `⊑`-ascending order.
pub fn edge_ordering(h: &Hypergraph) -> Result<Vec<Vec<VertexId>>> {
    let forest = dfst_forest(h)?;
    let owner_tree = forest_index(h, &forest);
    Ok(h.edge_ids()
        .map(|e| sort_edge(&forest, &owner_tree, h.edge(e)))
        .collect())
}

/// Each edge to its `⊑`-least vertex.
pub fn dfst_orientation(h: &Hypergraph) -> Result<Orientation> {
    let heads = edge_ordering(h)?
        .into_iter()
        .map(|order| order[0])
        .collect();
    Orientation::new(h, heads)
}

/// For every vertex, its in-neighbours `I(v)` in a linear order, obtained by
/// ordering the hypergraph whose edges are the nonempty `I(v)`.
pub fn neighbourhood_ordering(g: &DirectedGraph) -> Result<Vec<Vec<VertexId>>> {
    let mut builder = HypergraphBuilder::new();
    for _ in g.vertices() {
        builder.add_vertex(None);
    }
    let mut slot = alloc::vec![None; g.vertex_count()];
    for v in g.vertices() {
        let inn = g.in_neighbours(v);
        if !inn.is_empty() {
            slot[v.0] = Some(builder.add_edge(None, &inn)?);
        }
    }
    let orders = edge_ordering(&builder.build())?;
    Ok(slot
        .into_iter()
        .map(|s| s.map(|e| orders[e.0].clone()).unwrap_or_default())
        .collect())
}
