//! Coding finite vertex sets by vertices.
//!
//! A set-to-vertex map `h` whose induced distribution is `k`-sparse factors as
//! `h = g ∘ h₀` with `h₀` injective: a δ-flow is turned into paths, `g` sends
//! path ends back to path starts, and the sets in each `h⁻¹(v)` are spread over
//! the ends of the paths starting at `v` in a lexicographic set order.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::flows::{self, Distribution, Flow, VertexMap};
use crate::graph::{DirectedGraph, UndirectedGraph};
use crate::hypergraph::{EdgeId, VertexId};
use crate::spanning::neighbourhood_ordering;

/// A finite table of `(X, h(X))` with every set stored sorted and at most once.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FiniteSetFunction {
    vertex_count: usize,
    entries: BTreeMap<Vec<VertexId>, VertexId>,
}

impl FiniteSetFunction {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        vertex_count: usize,
        entries: &[(Vec<VertexId>, VertexId)],
    ) -> Result<Self> {
        let mut h = Self::new(vertex_count);
        for (x, v) in entries {
            h.insert(x, *v)?;
        }
        Ok(h)
    }

    /// Adds `h(X) = v`. Repeating an entry is harmless; remapping a set is not.
    pub fn insert(&mut self, x: &[VertexId], v: VertexId) -> Result<()> {
        for &w in x.iter().chain([&v]) {
            if w.0 >= self.vertex_count {
                return Err(Error::UnknownVertex(w));
            }
        }
        let key: Vec<VertexId> = x
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        match self.entries.get(&key) {
            Some(&old) if old != v => Err(Error::NotFunctional),
            _ => {
                self.entries.insert(key, v);
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, x: &[VertexId]) -> Option<VertexId> {
        self.entries.get(x).copied()
    }

    /// Entries in ascending order of the (sorted) sets.
    pub fn iter(&self) -> impl Iterator<Item = (&[VertexId], VertexId)> + '_ {
        self.entries.iter().map(|(x, &v)| (x.as_slice(), v))
    }

    /// `h⁻¹(v)`, in ascending order of the sets.
    pub fn preimage(&self, v: VertexId) -> Vec<&[VertexId]> {
        self.iter()
            .filter(|&(_, w)| w == v)
            .map(|(x, _)| x)
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        let images: BTreeSet<VertexId> = self.entries.values().copied().collect();
        images.len() == self.entries.len()
    }
}

/// A breadth-first spanning forest with ordered children, used to order
/// vertices lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexContext {
    forest_edges: Vec<EdgeId>,
    roots: Vec<VertexId>,
    parent: Vec<Option<VertexId>>,
    children: Vec<Vec<VertexId>>,
    root_of: Vec<VertexId>,
    /// Child indices along the path from the root.
    address: Vec<Vec<usize>>,
}

impl LexContext {
    /// Forest edges, ascending.
    pub fn forest_edges(&self) -> &[EdgeId] {
        &self.forest_edges
    }

    /// One root per component, ascending.
    pub fn roots(&self) -> &[VertexId] {
        &self.roots
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v.0]
    }

    /// Children of `v` in successor order.
    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v.0]
    }

    pub fn root_of(&self, v: VertexId) -> VertexId {
        self.root_of[v.0]
    }

    /// `u` lies on the forest path from a root to `v`.
    pub fn tree_leq(&self, u: VertexId, v: VertexId) -> bool {
        self.root_of[u.0] == self.root_of[v.0] && self.address[v.0].starts_with(&self.address[u.0])
    }

    /// Roots by id, then child-index sequences lexicographically.
    pub fn vertex_cmp(&self, u: VertexId, v: VertexId) -> Ordering {
        self.root_of[u.0]
            .cmp(&self.root_of[v.0])
            .then_with(|| self.address[u.0].cmp(&self.address[v.0]))
    }

    /// `X < Y` iff the least element of `X Δ Y` lies in `Y`.
    pub fn set_cmp(&self, x: &[VertexId], y: &[VertexId]) -> Ordering {
        let x: BTreeSet<VertexId> = x.iter().copied().collect();
        let y: BTreeSet<VertexId> = y.iter().copied().collect();
        match x
            .symmetric_difference(&y)
            .copied()
            .min_by(|&a, &b| self.vertex_cmp(a, b))
        {
            None => Ordering::Equal,
            Some(least) if y.contains(&least) => Ordering::Less,
            Some(_) => Ordering::Greater,
        }
    }
}

/// Breadth-first spanning forest rooted at the least vertex of each component.
/// The children of a vertex follow the neighbourhood ordering of the graph.
pub fn spanning_forest(g: &UndirectedGraph) -> Result<LexContext> {
    let n = g.vertex_count();
    let mut symmetric = DirectedGraph::new(n);
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        symmetric.add_arc(u, v)?;
        symmetric.add_arc(v, u)?;
    }
    let orders = neighbourhood_ordering(&symmetric)?;
    let rank: Vec<BTreeMap<VertexId, usize>> = orders
        .iter()
        .map(|order| order.iter().enumerate().map(|(i, &w)| (w, i)).collect())
        .collect();

    let mut ctx = LexContext {
        forest_edges: Vec::new(),
        roots: Vec::new(),
        parent: alloc::vec![None; n],
        children: alloc::vec![Vec::new(); n],
        root_of: (0..n).map(VertexId).collect(),
        address: alloc::vec![Vec::new(); n],
    };
    let mut seen = alloc::vec![false; n];
    for root in g.vertices() {
        if seen[root.0] {
            continue;
        }
        seen[root.0] = true;
        ctx.roots.push(root);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let mut fresh: Vec<(VertexId, EdgeId)> = g
                .neighbours(u)
                .iter()
                .copied()
                .filter(|&(w, _)| !seen[w.0])
                .collect();
            fresh.sort_by_key(|&(w, _)| rank[u.0][&w]);
            for (w, e) in fresh {
                seen[w.0] = true;
                ctx.parent[w.0] = Some(u);
                ctx.root_of[w.0] = root;
                let mut address = ctx.address[u.0].clone();
                address.push(ctx.children[u.0].len());
                ctx.address[w.0] = address;
                ctx.children[u.0].push(w);
                ctx.forest_edges.push(e);
                queue.push_back(w);
            }
        }
    }
    ctx.forest_edges.sort_unstable();
    Ok(ctx)
}

pub fn vertex_lex_order(ctx: &LexContext, u: VertexId, v: VertexId) -> Ordering {
    ctx.vertex_cmp(u, v)
}

pub fn set_order(ctx: &LexContext, x: &[VertexId], y: &[VertexId]) -> Ordering {
    ctx.set_cmp(x, y)
}

/// Every intermediate result of [`refine_to_injective`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub h0: FiniteSetFunction,
    pub gmap: VertexMap,
    pub distribution: Distribution,
    pub flow: Flow,
    /// `slots[v]` lists `gmap⁻¹(v)` ascending; the member at index `i` has slot `i`.
    pub slots: Vec<Vec<VertexId>>,
}

/// Factors `h = gmap ∘ h₀` with `h₀` injective.
///
/// The sets of each `h⁻¹(v)` are ranked by [`set_order`] and the set of rank
/// `i` is sent to the member of `gmap⁻¹(v)` in slot `i`.
pub fn refine_to_injective(
    g: &UndirectedGraph,
    h: &FiniteSetFunction,
    k: usize,
) -> Result<Refinement> {
    if h.vertex_count() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            found: h.vertex_count(),
        });
    }
    let distribution = flows::induced_distribution(h, g)?;
    let flow = flows::compute_delta_flow(g, &distribution, k)?;
    let gmap = flows::function_from_flow(g, &distribution, &flow)?;
    let mut slots = alloc::vec![Vec::new(); g.vertex_count()];
    for (&end, &start) in &gmap {
        slots[start.0].push(end);
    }

    let ctx = spanning_forest(g)?;
    let mut h0 = FiniteSetFunction::new(g.vertex_count());
    for v in g.vertices() {
        let mut sets = h.preimage(v);
        sets.sort_by(|x, y| ctx.set_cmp(x, y));
        for (i, x) in sets.into_iter().enumerate() {
            let target = *slots[v.0]
                .get(i)
                .ok_or(Error::InvalidFlow("fewer path ends than preimage sets"))?;
            h0.insert(x, target)?;
        }
    }
    Ok(Refinement {
        h0,
        gmap,
        distribution,
        flow,
        slots,
    })
}

/// `h₀` is injective, has the same domain as `h`, and `gmap(h₀(X)) = h(X)`.
pub fn verify_encoding(h: &FiniteSetFunction, h0: &FiniteSetFunction, gmap: &VertexMap) -> bool {
    h0.is_injective()
        && h.len() == h0.len()
        && h.iter()
            .all(|(x, v)| h0.get(x).and_then(|w| gmap.get(&w)) == Some(&v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vs(ids: &[usize]) -> Vec<VertexId> {
        ids.iter().map(|&x| VertexId(x)).collect()
    }

    #[test]
    fn set_functions() {
        let mut h = FiniteSetFunction::new(3);
        h.insert(&vs(&[1, 0, 1]), VertexId(2)).unwrap();
        assert_eq!(h.get(&vs(&[0, 1])), Some(VertexId(2)));
        h.insert(&vs(&[0, 1]), VertexId(2)).unwrap();
        assert_eq!(
            h.insert(&vs(&[0, 1]), VertexId(1)),
            Err(Error::NotFunctional)
        );
        assert_eq!(
            h.insert(&vs(&[5]), VertexId(1)),
            Err(Error::UnknownVertex(VertexId(5)))
        );
        h.insert(&[], VertexId(2)).unwrap();
        assert_eq!(h.len(), 2);
        assert!(!h.is_injective());
    }

    #[test]
    fn forests() {
        let path = UndirectedGraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let ctx = spanning_forest(&path).unwrap();
        assert_eq!(ctx.roots(), vs(&[0]));
        assert!(ctx.tree_leq(VertexId(0), VertexId(2)) && ctx.tree_leq(VertexId(1), VertexId(2)));
        assert_eq!(ctx.vertex_cmp(VertexId(0), VertexId(1)), Ordering::Less);

        let empty = UndirectedGraph::from_pairs(3, &[]).unwrap();
        assert_eq!(spanning_forest(&empty).unwrap().roots(), vs(&[0, 1, 2]));

        let two = UndirectedGraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        let ctx = spanning_forest(&two).unwrap();
        assert_eq!(ctx.roots(), vs(&[0, 2]));
        assert!(!ctx.tree_leq(VertexId(0), VertexId(3)));
        assert_eq!(ctx.forest_edges(), [EdgeId(0), EdgeId(1)]);

        let star = UndirectedGraph::from_pairs(3, &[(0, 1), (0, 2)]).unwrap();
        let ctx = spanning_forest(&star).unwrap();
        let (a, b) = (ctx.children(VertexId(0))[0], ctx.children(VertexId(0))[1]);
        assert_eq!(ctx.vertex_cmp(a, b), Ordering::Less);
        assert_eq!(ctx.vertex_cmp(a, a), Ordering::Equal);
    }

    #[test]
    fn set_order_examples() {
        let g = UndirectedGraph::from_pairs(2, &[(0, 1)]).unwrap();
        let ctx = spanning_forest(&g).unwrap();
        assert_eq!(set_order(&ctx, &[], &vs(&[0])), Ordering::Less);
        assert_eq!(set_order(&ctx, &vs(&[0, 1]), &vs(&[1, 0])), Ordering::Equal);
        assert_eq!(set_order(&ctx, &vs(&[0]), &vs(&[1])), Ordering::Greater);
        assert_eq!(set_order(&ctx, &vs(&[0]), &vs(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn refinement_examples() {
        let g = UndirectedGraph::from_pairs(2, &[(0, 1)]).unwrap();
        let h = FiniteSetFunction::from_entries(
            2,
            &[(vs(&[0]), VertexId(0)), (vs(&[0, 1]), VertexId(0))],
        )
        .unwrap();
        let r = refine_to_injective(&g, &h, 1).unwrap();
        assert_eq!(r.distribution.values(), [2, 0]);
        assert_eq!(r.flow.value(VertexId(0), VertexId(1)), 1);
        assert_eq!(
            r.gmap.iter().map(|(&a, &b)| (a.0, b.0)).collect::<Vec<_>>(),
            [(0, 0), (1, 0)]
        );
        assert_eq!(r.h0.get(&vs(&[0])), Some(VertexId(0)));
        assert_eq!(r.h0.get(&vs(&[0, 1])), Some(VertexId(1)));
        assert!(verify_encoding(&h, &r.h0, &r.gmap));

        let injective =
            FiniteSetFunction::from_entries(2, &[(vs(&[1]), VertexId(0)), (vs(&[]), VertexId(1))])
                .unwrap();
        let r = refine_to_injective(&g, &injective, 1).unwrap();
        assert!(r.flow.is_zero());
        assert_eq!(r.h0, injective);
        assert!(r.gmap.iter().all(|(a, b)| a == b));

        let crowded = FiniteSetFunction::from_entries(
            2,
            &[
                (vs(&[]), VertexId(0)),
                (vs(&[0]), VertexId(0)),
                (vs(&[1]), VertexId(0)),
            ],
        )
        .unwrap();
        assert_eq!(
            refine_to_injective(&g, &crowded, 1).unwrap_err(),
            Error::NotSparseDistribution { witness: vs(&[0]) }
        );
    }

    #[test]
    fn verification_rejects() {
        let h =
            FiniteSetFunction::from_entries(2, &[(vs(&[0]), VertexId(0)), (vs(&[1]), VertexId(0))])
                .unwrap();
        let dup =
            FiniteSetFunction::from_entries(2, &[(vs(&[0]), VertexId(0)), (vs(&[1]), VertexId(0))])
                .unwrap();
        let gmap: VertexMap = [(VertexId(0), VertexId(0)), (VertexId(1), VertexId(0))].into();
        assert!(!verify_encoding(&h, &dup, &gmap));
        let short = FiniteSetFunction::from_entries(2, &[(vs(&[0]), VertexId(0))]).unwrap();
        assert!(!verify_encoding(&h, &short, &gmap));
        let good =
            FiniteSetFunction::from_entries(2, &[(vs(&[0]), VertexId(0)), (vs(&[1]), VertexId(1))])
                .unwrap();
        assert!(verify_encoding(&h, &good, &gmap));
    }

    fn random_graph() -> impl Strategy<Value = UndirectedGraph> {
        (1usize..=9).prop_flat_map(|n| {
            proptest::collection::btree_set((0..n, 0..n), 0..2 * n).prop_map(move |pairs| {
                let pairs: BTreeSet<(usize, usize)> = pairs
                    .into_iter()
                    .filter(|&(a, b)| a != b)
                    .map(|(a, b)| (a.min(b), a.max(b)))
                    .collect();
                UndirectedGraph::from_pairs(n, &pairs.into_iter().collect::<Vec<_>>()).unwrap()
            })
        })
    }

    fn subset(n: usize) -> impl Strategy<Value = Vec<VertexId>> {
        proptest::collection::btree_set(0..n, 0..=n)
            .prop_map(|s| s.into_iter().map(VertexId).collect())
    }

    proptest! {
        #[test]
        fn set_order_is_total(
            (g, x, y, z) in random_graph().prop_flat_map(|g| {
                let n = g.vertex_count();
                (Just(g), subset(n), subset(n), subset(n))
            })
        ) {
            let ctx = spanning_forest(&g).unwrap();
            prop_assert_eq!(ctx.set_cmp(&x, &y), ctx.set_cmp(&y, &x).reverse());
            prop_assert_eq!(ctx.set_cmp(&x, &y) == Ordering::Equal, x == y);
            if ctx.set_cmp(&x, &y) != Ordering::Greater && ctx.set_cmp(&y, &z) != Ordering::Greater {
                prop_assert_ne!(ctx.set_cmp(&x, &z), Ordering::Greater);
            }
            for u in g.vertices() {
                for v in g.vertices() {
                    if ctx.tree_leq(u, v) {
                        prop_assert_ne!(ctx.vertex_cmp(u, v), Ordering::Greater);
                    }
                    prop_assert_eq!(ctx.vertex_cmp(u, v) == Ordering::Equal, u == v);
                }
            }
            // spanning: one root per component, n − components edges
            let comps = g.hypergraph().connected_components().len();
            prop_assert_eq!(ctx.roots().len(), comps);
            prop_assert_eq!(ctx.forest_edges().len(), g.vertex_count() - comps);
        }

        #[test]
        fn refinements_verify(
            (g, sets, k) in random_graph().prop_flat_map(|g| {
                let n = g.vertex_count();
                (Just(g), proptest::collection::vec((subset(n), 0..n), 0..12), 1usize..3)
            })
        ) {
            let mut h = FiniteSetFunction::new(g.vertex_count());
            for (x, v) in &sets {
                let _ = h.insert(x, VertexId(*v));
            }
            match refine_to_injective(&g, &h, k) {
                Ok(r) => {
                    prop_assert!(verify_encoding(&h, &r.h0, &r.gmap));
                    let mut pre = alloc::vec![0usize; g.vertex_count()];
                    for &start in r.gmap.values() {
                        pre[start.0] += 1;
                    }
                    prop_assert_eq!(&pre[..], r.distribution.values());
                }
                Err(Error::NotSparseDistribution { .. }) => {
                    let d = flows::induced_distribution(&h, &g).unwrap();
                    prop_assert!(!flows::is_k_sparse_distribution_bruteforce_default(&g, &d, k).unwrap().is_sparse);
                }
                Err(e) => prop_assert!(false, "unexpected error {:?}", e),
            }
        }
    }
}
