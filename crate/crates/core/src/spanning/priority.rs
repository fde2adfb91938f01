//! Priority trees: tree-like sub-hypergraphs grown from hyperpaths, with their
//! branches, the edge order they induce and a linear order on their vertices.
//!
//! Vertices and edges carry a class index below the rank `m`. A tree starts
//! as one hyperpath from the root in class 0; each later hyperpath is attached
//! by its first edge and placed in the least class that edge does not meet.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::hyperpath::{edge_neighbours, hyperpath_to_edge, is_hyperpath, meets, Hyperpath};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::order::{EdgeOrder, VertexOrder};

/// Default limit on the number of branches [`branches`] will enumerate.
pub const DEFAULT_BRANCH_CAP: usize = 1_000_000;

/// One pass of the construction, for one edge of `L₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PriorityStep {
    /// The edge of `L₀` this step reaches.
    pub leaf: EdgeId,
    /// The hyperpath from the root ending at `leaf`; empty when skipped.
    pub path: Vec<EdgeId>,
    /// Index of the first edge of `path` that is added to the tree.
    pub suffix_start: usize,
    /// Class of the added edges and vertices; `None` when `leaf` was already
    /// inside the tree.
    pub class: Option<usize>,
    /// Vertices added by this step, ascending.
    pub vertices: Vec<VertexId>,
}

impl PriorityStep {
    pub fn suffix(&self) -> &[EdgeId] {
        &self.path[self.suffix_start..]
    }

    pub fn is_skipped(&self) -> bool {
        self.class.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PriorityTree {
    root: VertexId,
    classes: usize,
    edge_class: BTreeMap<EdgeId, usize>,
    vertex_class: BTreeMap<VertexId, usize>,
    leaves: BTreeSet<EdgeId>,
    log: Vec<PriorityStep>,
}

impl PriorityTree {
    pub fn root(&self) -> VertexId {
        self.root
    }

    /// Number of classes `m`.
    pub fn class_count(&self) -> usize {
        self.classes
    }

    /// `T`.
    pub fn nodes(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertex_class.keys().copied()
    }

    /// `F`.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_class.keys().copied()
    }

    /// `L`.
    pub fn leaves(&self) -> &BTreeSet<EdgeId> {
        &self.leaves
    }

    pub fn contains_node(&self, v: VertexId) -> bool {
        self.vertex_class.contains_key(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edge_class.contains_key(&e)
    }

    pub fn edge_class(&self, e: EdgeId) -> Option<usize> {
        self.edge_class.get(&e).copied()
    }

    pub fn vertex_class(&self, v: VertexId) -> Option<usize> {
        self.vertex_class.get(&v).copied()
    }

    /// `(F_i)_{i<m}`.
    pub fn edge_classes(&self) -> Vec<BTreeSet<EdgeId>> {
        let mut out = alloc::vec![BTreeSet::new(); self.classes];
        for (&e, &k) in &self.edge_class {
            out[k].insert(e);
        }
        out
    }

    /// `(P_i)_{i<m}`.
    pub fn vertex_classes(&self) -> Vec<BTreeSet<VertexId>> {
        let mut out = alloc::vec![BTreeSet::new(); self.classes];
        for (&v, &k) in &self.vertex_class {
            out[k].insert(v);
        }
        out
    }

    pub fn log(&self) -> &[PriorityStep] {
        &self.log
    }

    /// Replays the log and checks the side conditions of every step: the base
    /// step is a hyperpath from the root in class 0; in later steps only the
    /// first added edge meets the earlier tree, it is not contained in it, and
    /// the class is the least one that edge avoids.
    pub fn verify_log(&self, h: &Hypergraph) -> Result<()> {
        let bad = |what| Err(Error::MalformedTree(what));
        let mut nodes: BTreeSet<VertexId> = BTreeSet::new();
        let mut vclass: BTreeMap<VertexId, usize> = BTreeMap::new();
        let mut eclass: BTreeMap<EdgeId, usize> = BTreeMap::new();
        let mut leaves = BTreeSet::new();
        for (i, step) in self.log.iter().enumerate() {
            let Some(k) = step.class else {
                if !h.edge(step.leaf).iter().all(|v| nodes.contains(v)) {
                    return bad("skipped step whose leaf is not inside the tree");
                }
                continue;
            };
            if step.path.last() != Some(&step.leaf) || !is_hyperpath(h, &step.path) {
                return bad("step path is not a hyperpath ending at its leaf");
            }
            let p = &step.path;
            if !h.contains(p[0], self.root) || (p.len() > 1 && h.contains(p[1], self.root)) {
                return bad("step path does not start at the root");
            }
            let suffix = step.suffix();
            if i == 0 {
                if step.suffix_start != 0 || k != 0 {
                    return bad("base step must add the whole path in class 0");
                }
            } else {
                for (j, &e) in suffix.iter().enumerate() {
                    if h.edge(e).iter().any(|v| nodes.contains(v)) != (j == 0) {
                        return bad("only the first added edge may meet the tree");
                    }
                }
                let first = h.edge(suffix[0]);
                if first.iter().all(|v| nodes.contains(v)) {
                    return bad("first added edge lies inside the tree");
                }
                let least = (0..).find(|&l| first.iter().all(|v| vclass.get(v) != Some(&l)));
                if least != Some(k) {
                    return bad("class is not the least one avoided by the first edge");
                }
            }
            let new: BTreeSet<VertexId> = h
                .union_of(suffix.iter().copied())
                .into_iter()
                .filter(|v| !nodes.contains(v))
                .collect();
            if new.iter().copied().collect::<Vec<_>>() != step.vertices {
                return bad("recorded vertices differ from the replay");
            }
            for &e in suffix {
                eclass.insert(e, k);
            }
            for v in new {
                vclass.insert(v, k);
                nodes.insert(v);
            }
            leaves.insert(step.leaf);
        }
        if eclass != self.edge_class || vclass != self.vertex_class || leaves != self.leaves {
            return bad("replay does not reproduce the tree");
        }
        Ok(())
    }
}

/// Class lookups for a tree under construction or finished.
struct Classes<'a> {
    vertex: &'a dyn Fn(VertexId) -> Option<usize>,
    edge: &'a dyn Fn(EdgeId) -> Option<usize>,
}

/// The branch conditions for the pair `(prev, next)` of consecutive edges.
///
/// `next ∖ prev ⊆ P_{k'}` where `k'` is the class of `next`; on a change of
/// class, `prev` must lie in the least class other than `k'` that `next` meets.
fn branch_step(h: &Hypergraph, c: &Classes<'_>, prev: EdgeId, next: EdgeId) -> bool {
    let (Some(k), Some(k_next)) = ((c.edge)(prev), (c.edge)(next)) else {
        return false;
    };
    let fresh_ok = h
        .edge(next)
        .iter()
        .filter(|v| !h.contains(prev, **v))
        .all(|&v| (c.vertex)(v) == Some(k_next));
    if !fresh_ok {
        return false;
    }
    if k == k_next {
        return true;
    }
    let least_other = h
        .edge(next)
        .iter()
        .filter_map(|&v| (c.vertex)(v))
        .filter(|&l| l != k_next)
        .min();
    least_other == Some(k)
}

fn is_branch_with(h: &Hypergraph, c: &Classes<'_>, root: VertexId, seq: &[EdgeId]) -> bool {
    if seq.is_empty() || !is_hyperpath(h, seq) {
        return false;
    }
    if seq.iter().any(|&e| (c.edge)(e).is_none()) {
        return false;
    }
    if !h.contains(seq[0], root) || (seq.len() > 1 && h.contains(seq[1], root)) {
        return false;
    }
    seq.windows(2).all(|w| branch_step(h, c, w[0], w[1]))
}

/// Whether `seq` is a branch of `t`.
pub fn is_branch(h: &Hypergraph, t: &PriorityTree, seq: &[EdgeId]) -> bool {
    let vertex = |v| t.vertex_class(v);
    let edge = |e| t.edge_class(e);
    is_branch_with(
        h,
        &Classes {
            vertex: &vertex,
            edge: &edge,
        },
        t.root,
        seq,
    )
}

struct Builder<'a> {
    h: &'a Hypergraph,
    root: VertexId,
    vclass: Vec<Option<usize>>,
    eclass: Vec<Option<usize>>,
    /// One known branch ending at each tree edge, where one was found.
    known: BTreeMap<EdgeId, Vec<EdgeId>>,
}

impl Builder<'_> {
    fn in_tree(&self, v: VertexId) -> bool {
        self.vclass[v.0].is_some()
    }

    fn least_free_class(&self, e: EdgeId) -> usize {
        let used: BTreeSet<usize> = self
            .h
            .edge(e)
            .iter()
            .filter_map(|v| self.vclass[v.0])
            .collect();
        (0..).find(|l| !used.contains(l)).unwrap_or(0)
    }

    /// Would `prefix ++ suffix` be a branch once `suffix` is added in class `k`?
    fn extends_to_branch(&self, prefix: &[EdgeId], suffix: &[EdgeId], k: usize) -> bool {
        let new_edges: BTreeSet<EdgeId> = suffix.iter().copied().collect();
        let vertex = |v: VertexId| {
            self.vclass[v.0].or_else(|| suffix.iter().any(|&e| self.h.contains(e, v)).then_some(k))
        };
        let edge = |e: EdgeId| {
            if new_edges.contains(&e) {
                Some(k)
            } else {
                self.eclass[e.0]
            }
        };
        let seq: Vec<EdgeId> = prefix.iter().chain(suffix).copied().collect();
        is_branch_with(
            self.h,
            &Classes {
                vertex: &vertex,
                edge: &edge,
            },
            self.root,
            &seq,
        )
    }

    /// Candidate suffixes ending at `target`: a first edge meeting the tree
    /// followed by a shortest run of edges avoiding it.
    fn candidate_suffixes(&self, target: EdgeId) -> Vec<Vec<EdgeId>> {
        let h = self.h;
        let outside = |e: EdgeId| !h.edge(e).iter().any(|&v| self.in_tree(v));
        if !outside(target) {
            return alloc::vec![alloc::vec![target]];
        }
        // distances towards `target` through edges avoiding the tree
        let mut next: Vec<Option<EdgeId>> = alloc::vec![None; h.edge_count()];
        let mut dist: Vec<Option<usize>> = alloc::vec![None; h.edge_count()];
        dist[target.0] = Some(0);
        let mut queue = VecDeque::from([target]);
        while let Some(e) = queue.pop_front() {
            for f in edge_neighbours(h, e) {
                if dist[f.0].is_none() && outside(f) {
                    dist[f.0] = Some(dist[e.0].unwrap_or(0) + 1);
                    next[f.0] = Some(e);
                    queue.push_back(f);
                }
            }
        }
        let mut out = Vec::new();
        for a in h.edge_ids() {
            if self.eclass[a.0].is_some() || outside(a) {
                continue;
            }
            let via = edge_neighbours(h, a)
                .into_iter()
                .filter_map(|x| dist[x.0].map(|d| (d, x)))
                .min();
            let Some((_, mut x)) = via else { continue };
            let mut suffix = alloc::vec![a, x];
            while let Some(y) = next[x.0] {
                suffix.push(y);
                x = y;
            }
            out.push(suffix);
        }
        out
    }

    /// The hyperpath for the next leaf: preferably a known branch followed by
    /// a suffix that keeps it a branch, otherwise a shortest hyperpath.
    fn choose_path(&self, target: EdgeId) -> Result<(Vec<EdgeId>, usize)> {
        let mut best: Option<(usize, Vec<EdgeId>, usize)> = None;
        for suffix in self.candidate_suffixes(target) {
            let k = self.least_free_class(suffix[0]);
            let no_prefix: (EdgeId, Vec<EdgeId>) = (suffix[0], Vec::new());
            let prefixes = core::iter::once((&no_prefix.0, &no_prefix.1)).chain(&self.known);
            for (&g, prefix) in prefixes {
                if prefix.is_empty() {
                    if self.extends_to_branch(prefix, &suffix, k)
                        && best.as_ref().is_none_or(|b| suffix.len() < b.0)
                    {
                        best = Some((suffix.len(), suffix.clone(), 0));
                    }
                    continue;
                }
                if !meets(self.h, g, suffix[0]) || !self.extends_to_branch(prefix, &suffix, k) {
                    continue;
                }
                if best.as_ref().is_none_or(|b| suffix.len() < b.0) {
                    let path: Vec<EdgeId> = prefix.iter().chain(&suffix).copied().collect();
                    best = Some((suffix.len(), path, prefix.len()));
                }
                break;
            }
        }
        if let Some((_, path, start)) = best {
            return Ok((path, start));
        }
        let path = hyperpath_to_edge(self.h, self.root, target)?.into_edges();
        let start = path
            .iter()
            .rposition(|&e| self.h.edge(e).iter().any(|&v| self.in_tree(v)))
            .unwrap_or(0);
        Ok((path, start))
    }

    fn record_branches(&mut self, path: &[EdgeId], start: usize) {
        for j in start..path.len() {
            if self.known.contains_key(&path[j]) {
                continue;
            }
            let vertex = |v: VertexId| self.vclass[v.0];
            let edge = |e: EdgeId| self.eclass[e.0];
            let ok = is_branch_with(
                self.h,
                &Classes {
                    vertex: &vertex,
                    edge: &edge,
                },
                self.root,
                &path[..=j],
            );
            if ok {
                self.known.insert(path[j], path[..=j].to_vec());
            }
        }
    }
}

/// Grows a priority tree with root `root` whose node set covers every edge of
/// `l0`, taking the edges of `l0` in ascending id order.
///
/// Each step fixes a hyperpath from the root to the next edge `eᵢ` and adds its
/// shortest suffix meeting the current tree, in the least class its first
/// edge avoids; steps whose edge is already inside the tree change nothing.
/// Among the admissible hyperpaths, one that extends a branch of the current
/// tree into a branch through `eᵢ` is preferred (shortest such suffix, least
/// ids first), since then every added edge lies on a branch.
pub fn build_priority_tree(h: &Hypergraph, root: VertexId, l0: &[EdgeId]) -> Result<PriorityTree> {
    h.check_vertex(root)?;
    for &e in l0 {
        h.check_edge(e)?;
    }
    let l0: BTreeSet<EdgeId> = l0.iter().copied().collect();
    if l0.is_empty() {
        return Err(Error::MalformedTree("no leaf edges requested"));
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let classes = h.rank().max(1);
    let mut b = Builder {
        h,
        root,
        vclass: alloc::vec![None; h.vertex_count()],
        eclass: alloc::vec![None; h.edge_count()],
        known: BTreeMap::new(),
    };
    let mut leaves = BTreeSet::new();
    let mut log = Vec::new();
    for (i, &leaf) in l0.iter().enumerate() {
        if i > 0 && h.edge(leaf).iter().all(|&v| b.in_tree(v)) {
            log.push(PriorityStep {
                leaf,
                path: Vec::new(),
                suffix_start: 0,
                class: None,
                vertices: Vec::new(),
            });
            continue;
        }
        let (path, start) = if i == 0 {
            (hyperpath_to_edge(h, root, leaf)?.into_edges(), 0)
        } else {
            b.choose_path(leaf)?
        };
        let k = if i == 0 {
            0
        } else {
            b.least_free_class(path[start])
        };
        if k >= classes {
            return Err(Error::ClassOverflow { classes });
        }
        let vertices: Vec<VertexId> = h
            .union_of(path[start..].iter().copied())
            .into_iter()
            .filter(|&v| !b.in_tree(v))
            .collect();
        for &e in &path[start..] {
            b.eclass[e.0] = Some(k);
        }
        for &v in &vertices {
            b.vclass[v.0] = Some(k);
        }
        b.record_branches(&path, start);
        leaves.insert(leaf);
        log.push(PriorityStep {
            leaf,
            path,
            suffix_start: start,
            class: Some(k),
            vertices,
        });
    }
    let edge_class = h
        .edge_ids()
        .filter_map(|e| b.eclass[e.0].map(|k| (e, k)))
        .collect();
    let vertex_class = h
        .vertices()
        .filter_map(|v| b.vclass[v.0].map(|k| (v, k)))
        .collect();
    Ok(PriorityTree {
        root,
        classes,
        edge_class,
        vertex_class,
        leaves,
        log,
    })
}

/// Every branch of `t`, in depth-first order with least ids first.
pub fn branches(h: &Hypergraph, t: &PriorityTree, cap: usize) -> Result<Vec<Hyperpath>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<EdgeId>> = t
        .edges()
        .filter(|&e| h.contains(e, t.root))
        .map(|e| alloc::vec![e])
        .collect();
    stack.reverse();
    while let Some(seq) = stack.pop() {
        if out.len() == cap {
            return Err(Error::BranchCapExceeded { cap });
        }
        let last = seq[seq.len() - 1];
        let mut grown = Vec::new();
        for f in edge_neighbours(h, last) {
            if !t.contains_edge(f) || seq.contains(&f) {
                continue;
            }
            if seq[..seq.len() - 1].iter().any(|&e| meets(h, e, f)) {
                continue;
            }
            if seq.len() == 1 && h.contains(f, t.root) {
                continue;
            }
            let mut next = seq.clone();
            next.push(f);
            if is_branch(h, t, &next) {
                grown.push(next);
            }
        }
        stack.extend(grown.into_iter().rev());
        out.push(Hyperpath::unchecked(seq));
    }
    Ok(out)
}

/// `e ≤ f` iff every branch containing `f` also contains `e`.
pub fn edge_order(h: &Hypergraph, t: &PriorityTree, cap: usize) -> Result<EdgeOrder> {
    let all: BTreeSet<EdgeId> = t.edges().collect();
    // Branches are closed under prefixes, so the branches ending at f carry
    // the whole intersection.
    let mut below: BTreeMap<EdgeId, BTreeSet<EdgeId>> = BTreeMap::new();
    for branch in branches(h, t, cap)? {
        let members: BTreeSet<EdgeId> = branch.edges().iter().copied().collect();
        below
            .entry(branch.last())
            .and_modify(|s| *s = s.intersection(&members).copied().collect())
            .or_insert(members);
    }
    Ok(EdgeOrder::from_fn(all.iter().copied(), |e, f| {
        below.get(&f).is_none_or(|s| s.contains(&e))
    }))
}

/// A `~`-class: the vertices one construction step added, with the hyperpath
/// of that step and its leaf edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClass {
    pub class: usize,
    pub path: Vec<EdgeId>,
    pub leaf: EdgeId,
    pub members: Vec<VertexId>,
}

impl EquivClass {
    /// Position in `path` of the last edge containing `u`.
    pub fn eta_start(&self, h: &Hypergraph, u: VertexId) -> Option<usize> {
        self.path.iter().rposition(|&e| h.contains(e, u))
    }

    /// `η(u)`: the part of `path` from the last edge containing `u` to the leaf.
    pub fn eta(&self, h: &Hypergraph, u: VertexId) -> Option<&[EdgeId]> {
        self.eta_start(h, u).map(|j| &self.path[j..])
    }
}

/// The `~`-classes of `t`.
///
/// Two vertices are equivalent when they share a class `P_k` and are joined by
/// a hyperpath inside `F_k` whose consecutive edges meet inside `P_k`. These
/// are exactly the vertex sets of the individual construction steps.
pub fn vertex_equiv(t: &PriorityTree) -> Result<Vec<EquivClass>> {
    let mut out = Vec::new();
    for step in t.log.iter().filter(|s| !s.is_skipped()) {
        let path = step.suffix().to_vec();
        let leaves_inside = path.iter().filter(|e| t.leaves.contains(e)).count();
        if leaves_inside != 1 || path.last() != Some(&step.leaf) {
            return Err(Error::MalformedTree("class without a unique leaf edge"));
        }
        out.push(EquivClass {
            class: step.class.unwrap_or(0),
            path,
            leaf: step.leaf,
            members: step.vertices.clone(),
        });
    }
    Ok(out)
}

/// Class, leaf rank, then longer `η` first.
type ClassKey = (usize, usize, Reverse<usize>);

fn class_keys(
    h: &Hypergraph,
    t: &PriorityTree,
    leaf_order: Option<&[EdgeId]>,
) -> Result<BTreeMap<VertexId, ClassKey>> {
    let rank_of = |leaf: EdgeId| -> Result<usize> {
        match leaf_order {
            None => Ok(leaf.0),
            Some(order) => order
                .iter()
                .position(|&e| e == leaf)
                .ok_or(Error::MalformedTree("leaf order misses a leaf edge")),
        }
    };
    let mut keys = BTreeMap::new();
    for class in vertex_equiv(t)? {
        let theta = rank_of(class.leaf)?;
        for &u in &class.members {
            let j = class.eta_start(h, u).unwrap_or(0);
            keys.insert(u, (class.class, theta, Reverse(j)));
        }
    }
    Ok(keys)
}

/// The preorder `⊑₀` on `T`: by class, then by the leaf edge of the
/// `~`-class under `leaf_order` (edge id order by default), then by
/// containment of `η`.
pub fn priority_tree_preorder(
    h: &Hypergraph,
    t: &PriorityTree,
    leaf_order: Option<&[EdgeId]>,
) -> Result<VertexOrder> {
    let keys = class_keys(h, t, leaf_order)?;
    Ok(VertexOrder::from_key(keys.keys().copied(), |v| keys[&v]))
}

/// `⊑₀` refined to a linear order on `T`: vertices with equal `η` are ordered
/// by id, which is the slot assignment giving the least id the least slot.
pub fn priority_tree_linear_order(
    h: &Hypergraph,
    t: &PriorityTree,
    leaf_order: Option<&[EdgeId]>,
) -> Result<VertexOrder> {
    let keys = class_keys(h, t, leaf_order)?;
    Ok(VertexOrder::from_key(keys.keys().copied(), |v| {
        (keys[&v], v)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(ids: &[usize]) -> Vec<EdgeId> {
        ids.iter().map(|&x| EdgeId(x)).collect()
    }

    #[test]
    fn forced_edge_can_miss_every_branch() {
        // {0,2,3} meets the tree in P0 and P1 but no tree edge holds both 0 and 2
        let edges: [&[usize]; 3] = [&[1, 2], &[0, 1], &[0, 2, 3]];
        let h = Hypergraph::from_edges(4, &edges).unwrap();
        let t = build_priority_tree(&h, VertexId(1), &e(&[0, 1, 2])).unwrap();
        t.verify_log(&h).unwrap();
        assert_eq!(t.edge_class(EdgeId(2)), Some(2));
        let bs = branches(&h, &t, DEFAULT_BRANCH_CAP).unwrap();
        assert!(bs.iter().all(|b| !b.edges().contains(&EdgeId(2))));
        let order = edge_order(&h, &t, DEFAULT_BRANCH_CAP).unwrap();
        assert!(order.tree_order_violation().is_some());
    }

    #[test]
    fn base_case_single_hyperpath() {
        // path 0 - 1 - 2 - 3 as edges e0 e1 e2
        let h = Hypergraph::from_edges(4, &[[0, 1], [1, 2], [2, 3]]).unwrap();
        let t = build_priority_tree(&h, VertexId(0), &e(&[2])).unwrap();
        assert_eq!(t.edges().collect::<Vec<_>>(), e(&[0, 1, 2]));
        assert_eq!(t.vertex_classes()[0].len(), 4);
        assert_eq!(t.leaves().iter().copied().collect::<Vec<_>>(), e(&[2]));
        t.verify_log(&h).unwrap();

        let bs = branches(&h, &t, DEFAULT_BRANCH_CAP).unwrap();
        let seqs: Vec<Vec<EdgeId>> = bs.into_iter().map(Hyperpath::into_edges).collect();
        assert_eq!(seqs, [e(&[0]), e(&[0, 1]), e(&[0, 1, 2])]);

        let order = edge_order(&h, &t, DEFAULT_BRANCH_CAP).unwrap();
        assert!(order.is_linear());
        assert!(order.lt(EdgeId(0), EdgeId(1)) && order.lt(EdgeId(1), EdgeId(2)));

        let classes = vertex_equiv(&t).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].leaf, EdgeId(2));

        // vertices nearer the leaf edge have shorter η and come first
        let lin = priority_tree_linear_order(&h, &t, None).unwrap();
        let sorted = lin.sort_chain(&[VertexId(0), VertexId(1), VertexId(2), VertexId(3)]);
        assert_eq!(
            sorted.unwrap(),
            [VertexId(2), VertexId(3), VertexId(1), VertexId(0)]
        );
    }

    #[test]
    fn single_edge_at_root() {
        let h = Hypergraph::from_edges(3, &[[0, 1], [1, 2]]).unwrap();
        let t = build_priority_tree(&h, VertexId(0), &e(&[0])).unwrap();
        assert_eq!(t.edges().collect::<Vec<_>>(), e(&[0]));
        assert_eq!(t.edge_class(EdgeId(0)), Some(0));
        assert_eq!(branches(&h, &t, 10).unwrap().len(), 1);
        assert_eq!(edge_order(&h, &t, 10).unwrap().len(), 1);
        // equal η: ordered by id
        let lin = priority_tree_linear_order(&h, &t, None).unwrap();
        assert!(lin.lt(VertexId(0), VertexId(1)));
        let pre = priority_tree_preorder(&h, &t, None).unwrap();
        assert!(pre.leq(VertexId(1), VertexId(0)) && pre.leq(VertexId(0), VertexId(1)));
    }

    #[test]
    fn star_second_path_gets_class_one() {
        let h = Hypergraph::from_edges(4, &[[0, 1], [0, 2], [0, 3]]).unwrap();
        let t = build_priority_tree(&h, VertexId(0), &e(&[0, 1])).unwrap();
        assert_eq!(t.edge_class(EdgeId(0)), Some(0));
        assert_eq!(t.edge_class(EdgeId(1)), Some(1));
        assert_eq!(t.vertex_class(VertexId(2)), Some(1));
        t.verify_log(&h).unwrap();
        let order = edge_order(&h, &t, 10).unwrap();
        assert!(!order.comparable(EdgeId(0), EdgeId(1)));
        assert_eq!(order.tree_order_violation(), None);
        assert_eq!(vertex_equiv(&t).unwrap().len(), 2);
    }

    #[test]
    fn skipped_leaf_and_errors() {
        let h = Hypergraph::from_edges(3, &[&[0, 1, 2][..], &[1, 2]]).unwrap();
        let t = build_priority_tree(&h, VertexId(0), &e(&[0, 1])).unwrap();
        assert!(t.log()[1].is_skipped());
        assert_eq!(t.leaves().len(), 1);
        assert!(build_priority_tree(&h, VertexId(0), &[]).is_err());
        let split = Hypergraph::from_edges(3, &[[0, 1]]).unwrap();
        assert_eq!(
            build_priority_tree(&split, VertexId(0), &e(&[0])),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn attaches_to_a_branch_edge() {
        // root 0; first leaf e1 reached through e0; second leaf e3 hangs off e1
        let h = Hypergraph::from_edges(5, &[&[0, 1][..], &[1, 2], &[2, 3], &[3, 4]]).unwrap();
        let t = build_priority_tree(&h, VertexId(0), &e(&[1, 3])).unwrap();
        t.verify_log(&h).unwrap();
        let bs = branches(&h, &t, 100).unwrap();
        let covered: BTreeSet<EdgeId> = bs.iter().flat_map(|b| b.edges().to_vec()).collect();
        assert_eq!(covered, t.edges().collect());
        assert_eq!(
            edge_order(&h, &t, 100).unwrap().tree_order_violation(),
            None
        );
    }

    #[test]
    fn leaf_order_parameter() {
        let h = Hypergraph::from_edges(4, &[[0, 1], [0, 2], [0, 3]]).unwrap();
        let t = build_priority_tree(&h, VertexId(0), &e(&[1, 2])).unwrap();
        assert!(priority_tree_linear_order(&h, &t, Some(&e(&[2]))).is_err());
        let lin = priority_tree_linear_order(&h, &t, Some(&e(&[2, 1]))).unwrap();
        assert!(lin.is_linear());
        assert_eq!(lin.len(), t.nodes().count());
    }
}
