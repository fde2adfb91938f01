//! k-sparsity and the orientation algorithms built on it.
//!
//! A hypergraph is k-sparse when every finite vertex set `X` spans at most
//! `k·|X|` edges. For finite hypergraphs this is equivalent to the existence of
//! an orientation with every preimage of size at most `k`, which is what
//! [`is_k_sparse`] decides through a bipartite capacity network, and what
//! [`bounded_orientation`] constructs by weight reduction.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, UndirectedGraph};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::maxflow::Network;
use crate::orientation::Orientation;

/// Vertex cap of the subset-enumeration oracles.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsityReport {
    pub k: usize,
    pub is_sparse: bool,
    /// A set `X` with `|E|_X| > k·|X|`; present exactly when not sparse.
    pub witness: Option<Vec<VertexId>>,
}

impl SparsityReport {
    fn sparse(k: usize) -> Self {
        Self {
            k,
            is_sparse: true,
            witness: None,
        }
    }

    fn violated(k: usize, witness: Vec<VertexId>) -> Self {
        Self {
            k,
            is_sparse: false,
            witness: Some(witness),
        }
    }
}

/// `|E|_X|` for the vertex set `x`.
pub fn induced_edge_count(h: &Hypergraph, x: &BTreeSet<VertexId>) -> usize {
    h.edge_ids()
        .filter(|&e| h.edge(e).iter().all(|v| x.contains(v)))
        .count()
}

/// Checks `|E|_X| ≤ k·|X|` for all `2^|V|` subsets; the reported witness is the
/// first violating subset in bitmask order.
pub fn is_k_sparse_bruteforce(h: &Hypergraph, k: usize, cap: usize) -> Result<SparsityReport> {
    let n = h.vertex_count();
    if n > cap.min(63) {
        return Err(Error::CapExceeded { vertices: n, cap });
    }
    let masks: Vec<u64> = h
        .edge_ids()
        .map(|e| h.edge(e).iter().fold(0u64, |m, v| m | 1 << v.0))
        .collect();
    for x in 0u64..1 << n {
        let inside = masks.iter().filter(|&&m| m & !x == 0).count();
        if inside > k * x.count_ones() as usize {
            let witness = (0..n).filter(|&v| x >> v & 1 == 1).map(VertexId).collect();
            return Ok(SparsityReport::violated(k, witness));
        }
    }
    Ok(SparsityReport::sparse(k))
}

/// Decides k-sparsity via the orientation characterisation.
///
/// Network: source → each edge (capacity 1), edge → each of its vertices
/// (capacity 1), vertex → sink (capacity `k`). The hypergraph is k-sparse iff
/// the maximum flow saturates every edge. Otherwise the vertices on the source
/// side of a minimum cut span more than `k` edges per vertex.
pub fn is_k_sparse(h: &Hypergraph, k: usize) -> SparsityReport {
    let (m, n) = (h.edge_count(), h.vertex_count());
    let source = 0;
    let sink = m + n + 1;
    let vertex_node = |v: VertexId| 1 + m + v.0;
    let mut net = Network::new(m + n + 2);
    for e in h.edge_ids() {
        net.add_arc(source, 1 + e.0, 1);
    }
    for e in h.edge_ids() {
        for &v in h.edge(e) {
            net.add_arc(1 + e.0, vertex_node(v), 1);
        }
    }
    for v in h.vertices() {
        net.add_arc(vertex_node(v), sink, k as i64);
    }
    if net.max_flow(source, sink) == m as i64 {
        return SparsityReport::sparse(k);
    }
    let side = net.source_side(source);
    let witness: Vec<VertexId> = h.vertices().filter(|&v| side[vertex_node(v)]).collect();
    debug_assert!({
        let x: BTreeSet<VertexId> = witness.iter().copied().collect();
        induced_edge_count(h, &x) > k * x.len()
    });
    SparsityReport::violated(k, witness)
}

fn require_sparse(h: &Hypergraph, k: usize) -> Result<()> {
    let report = is_k_sparse(h, k);
    match report.witness {
        None => Ok(()),
        Some(witness) => Err(Error::NotKSparse { witness }),
    }
}

/// `w(f) = Σ { |f⁻¹(a)| − k : |f⁻¹(a)| > k }`.
pub fn orientation_weight(o: &Orientation, k: usize) -> usize {
    o.preimage_counts()
        .into_iter()
        .map(|c| c.saturating_sub(k))
        .sum()
}

/// An orientation bounded by `k`, built by repeated rerouting.
pub fn bounded_orientation(h: &Hypergraph, k: usize) -> Result<Orientation> {
    bounded_orientation_traced(h, k).map(|(f, _)| f)
}

/// [`bounded_orientation`] together with the weight before every rerouting
/// step and after the last one.
///
/// Starting from the least-vertex orientation, each step takes the least
/// overloaded vertex `a`, closes `f⁻¹(a)` under "the edges oriented into any
/// covered vertex", picks the least underloaded vertex `b` of the closure and
/// shifts one unit of load from `a` to `b` along a shortest chain of edges
/// `e₀ … eₙ` with `b ∈ e₀`, `f(eᵢ) ∈ eᵢ₊₁` and `f(eₙ) = a`.
pub fn bounded_orientation_traced(h: &Hypergraph, k: usize) -> Result<(Orientation, Vec<usize>)> {
    require_sparse(h, k)?;
    let mut f = Orientation::least_vertex(h);
    let mut trace = alloc::vec![orientation_weight(&f, k)];
    loop {
        let counts = f.preimage_counts();
        let Some(a) = h.vertices().find(|v| counts[v.0] > k) else {
            break;
        };
        let mut preimages: Vec<Vec<EdgeId>> = alloc::vec![Vec::new(); h.vertex_count()];
        for e in h.edge_ids() {
            preimages[f.head(e).0].push(e);
        }

        // Breadth-first closure from `a`; `via[x]` is the edge through which x
        // was first reached, and that edge is oriented towards x's predecessor.
        let mut via: Vec<Option<EdgeId>> = alloc::vec![None; h.vertex_count()];
        let mut covered = alloc::vec![false; h.vertex_count()];
        covered[a.0] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(c) = queue.pop_front() {
            for &e in &preimages[c.0] {
                for &x in h.edge(e) {
                    if !covered[x.0] {
                        covered[x.0] = true;
                        via[x.0] = Some(e);
                        queue.push_back(x);
                    }
                }
            }
        }
        let Some(b) = h.vertices().find(|v| covered[v.0] && counts[v.0] < k) else {
            // Every covered vertex is saturated, so the closure spans more than
            // k edges per vertex.
            let witness = h.vertices().filter(|v| covered[v.0]).collect();
            return Err(Error::NotKSparse { witness });
        };

        let mut chain = Vec::new();
        let mut x = b;
        while x != a {
            let e = via[x.0].expect("every covered vertex other than a has a parent edge");
            chain.push(e);
            x = f.head(e);
        }
        let mut previous_head = b;
        for &e in &chain {
            let head = f.head(e);
            f.set(e, previous_head);
            previous_head = head;
        }

        let weight = orientation_weight(&f, k);
        let last = *trace.last().unwrap_or(&usize::MAX);
        assert!(weight < last, "rerouting must strictly decrease the weight");
        trace.push(weight);
    }
    Ok((f, trace))
}

/// `O_f(H)`: arcs `⟨a, b⟩` with `a ≠ b` whenever some edge contains `a` and is
/// oriented to `b`.
pub fn directed_quotient(h: &Hypergraph, o: &Orientation) -> DirectedGraph {
    let labels = h
        .vertices()
        .map(|v| h.vertex_label(v).map(Into::into))
        .collect();
    let mut g = DirectedGraph::with_labels(labels);
    for e in h.edge_ids() {
        let b = o.head(e);
        for &a in h.edge(e) {
            if a != b {
                g.add_arc(a, b).expect("edge vertices exist");
            }
        }
    }
    g
}

/// Vertices lying on a pair of opposite arcs of `O_f(H)`.
pub fn bad_vertices(h: &Hypergraph, o: &Orientation) -> BTreeSet<VertexId> {
    let q = directed_quotient(h, o);
    q.arcs()
        .filter(|&(a, b)| q.has_arc(b, a))
        .flat_map(|(a, b)| [a, b])
        .collect()
}

/// An orientation bounded by `m·k²` whose quotient `O_f(H)` is antisymmetric,
/// where `m ≥ 2` is the rank.
pub fn antisymmetric_orientation(h: &Hypergraph, k: usize) -> Result<Orientation> {
    antisymmetric_orientation_traced(h, k).map(|(f, _)| f)
}

/// [`antisymmetric_orientation`] with the number of bad vertices before every
/// elimination step and after the last one.
pub fn antisymmetric_orientation_traced(
    h: &Hypergraph,
    k: usize,
) -> Result<(Orientation, Vec<usize>)> {
    let rank = h.rank();
    if rank < 2 {
        return Err(Error::RankTooSmall { rank });
    }
    let start = bounded_orientation(h, k)?;
    Ok(eliminate_bad_vertices(h, start))
}

/// Removes bad vertices one at a time.
///
/// The next vertex `a` is the bad vertex of least degree in `h` (least id on
/// ties). With `X = f⁻¹(a)`, every edge containing `a` whose head lies in
/// `⋃X ∖ {a}` is redirected to `a`; the redirected edges join `X` and the step
/// repeats until no such edge remains. At rank 3 and above a single pass can
/// pull a new vertex into `⋃X` that `a` still points to, leaving `a` bad.
///
/// Afterwards `a` is not bad, and every arc avoiding `a` already existed, so
/// the set of bad vertices shrinks at every step.
pub fn eliminate_bad_vertices(h: &Hypergraph, mut f: Orientation) -> (Orientation, Vec<usize>) {
    let mut bad = bad_vertices(h, &f);
    let mut trace = alloc::vec![bad.len()];
    while let Some(&a) = bad.iter().min_by_key(|&&v| (h.degree(v), v)) {
        let mut absorbed: BTreeSet<EdgeId> = f.preimage(a).into_iter().collect();
        loop {
            let mut around = h.union_of(absorbed.iter().copied());
            around.remove(&a);
            let redirect: Vec<EdgeId> = h
                .incident_edges(a)
                .iter()
                .copied()
                .filter(|&e| around.contains(&f.head(e)))
                .collect();
            if redirect.is_empty() {
                break;
            }
            for e in redirect {
                f.set(e, a);
                absorbed.insert(e);
            }
        }
        let next = bad_vertices(h, &f);
        assert!(
            next.len() < bad.len() && next.is_subset(&bad),
            "elimination must shrink the set of bad vertices"
        );
        trace.push(next.len());
        bad = next;
    }
    (f, trace)
}

/// First arc-preserving map `g → target` in backtracking order (vertices of `g`
/// in ascending id order, candidate images in ascending id order).
pub fn find_homomorphism(g: &DirectedGraph, target: &DirectedGraph) -> Result<Vec<VertexId>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    if target.vertex_count() == 0 {
        return Err(Error::NoHomomorphism);
    }
    // For each vertex, the arcs to earlier-or-equal vertices, checked on assignment.
    let mut constraints: Vec<Vec<(VertexId, bool)>> = alloc::vec![Vec::new(); n];
    for (u, w) in g.arcs() {
        if u >= w {
            constraints[u.0].push((w, true));
        } else {
            constraints[w.0].push((u, false));
        }
    }
    let mut image: Vec<VertexId> = Vec::with_capacity(n);
    let mut next_candidate = alloc::vec![0usize; n];
    while image.len() < n {
        let v = image.len();
        let mut placed = false;
        while next_candidate[v] < target.vertex_count() {
            let candidate = VertexId(next_candidate[v]);
            next_candidate[v] += 1;
            let fits = constraints[v].iter().all(|&(other, outgoing)| {
                let other_image = if other.0 == v {
                    candidate
                } else {
                    image[other.0]
                };
                if outgoing {
                    target.has_arc(candidate, other_image)
                } else {
                    target.has_arc(other_image, candidate)
                }
            });
            if fits {
                image.push(candidate);
                placed = true;
                break;
            }
        }
        if !placed {
            next_candidate[v] = 0;
            if image.pop().is_none() {
                return Err(Error::NoHomomorphism);
            }
        }
    }
    Ok(image)
}

/// An orientation of an undirected graph with a homomorphism of the oriented
/// graph into a target, and the classes `P_t = hom⁻¹(t)` encoding it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HOrientation {
    pub orientation: Orientation,
    pub hom: Vec<VertexId>,
    pub classes: Vec<BTreeSet<VertexId>>,
}

impl HOrientation {
    pub fn from_parts(
        orientation: Orientation,
        hom: Vec<VertexId>,
        target: &DirectedGraph,
    ) -> Self {
        let mut classes = alloc::vec![BTreeSet::new(); target.vertex_count()];
        for (v, t) in hom.iter().enumerate() {
            classes[t.0].insert(VertexId(v));
        }
        Self {
            orientation,
            hom,
            classes,
        }
    }
}

/// A k-bounded orientation of `g` followed by a homomorphism search from the
/// oriented graph into `target`.
pub fn h_orientation(
    g: &UndirectedGraph,
    target: &DirectedGraph,
    k: usize,
) -> Result<HOrientation> {
    let orientation = bounded_orientation(g.hypergraph(), k)?;
    let oriented = directed_quotient(g.hypergraph(), &orientation);
    let hom = find_homomorphism(&oriented, target)?;
    Ok(HOrientation::from_parts(orientation, hom, target))
}

/// Result of [`check_h_orientation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HOrientationCheck {
    /// The classes partition `V(g)` and every edge is supported by an arc.
    pub encodes: bool,
    /// The orientation determined by the classes; present when `encodes` holds
    /// and the target is loop-free and antisymmetric.
    pub orientation: Option<Orientation>,
    /// Whether that orientation is bounded by the supplied `k`.
    pub bounded: Option<bool>,
}

/// Semantic check that `classes[t]` (one per target vertex) encode an
/// H-orientation of `g`.
pub fn check_h_orientation(
    g: &UndirectedGraph,
    target: &DirectedGraph,
    classes: &[BTreeSet<VertexId>],
    k: Option<usize>,
) -> Result<HOrientationCheck> {
    if classes.len() != target.vertex_count() {
        return Err(Error::MalformedPartition);
    }
    let mut class_of: Vec<Option<VertexId>> = alloc::vec![None; g.vertex_count()];
    let mut partition = true;
    for (t, class) in classes.iter().enumerate() {
        for &v in class {
            let slot = class_of.get_mut(v.0).ok_or(Error::MalformedPartition)?;
            if slot.is_some() {
                partition = false;
            }
            *slot = Some(VertexId(t));
        }
    }
    partition &= class_of.iter().all(Option::is_some);
    let rejected = HOrientationCheck {
        encodes: false,
        orientation: None,
        bounded: None,
    };
    if !partition {
        return Ok(rejected);
    }
    let class_of: Vec<VertexId> = class_of.into_iter().flatten().collect();
    let oriented = target.is_antisymmetric() && !target.has_loops();
    let mut heads = Vec::with_capacity(g.edge_count());
    for e in g.edge_ids() {
        let (v, w) = g.endpoints(e);
        let (i, j) = (class_of[v.0], class_of[w.0]);
        if target.has_arc(i, j) {
            heads.push(w);
        } else if target.has_arc(j, i) {
            heads.push(v);
        } else {
            return Ok(rejected);
        }
    }
    let orientation = if oriented {
        Some(Orientation::new(g.hypergraph(), heads)?)
    } else {
        None
    };
    let bounded = match (&orientation, k) {
        (Some(f), Some(k)) => Some(f.is_bounded_by(k)),
        _ => None,
    };
    Ok(HOrientationCheck {
        encodes: true,
        orientation,
        bounded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ids(v: &[usize]) -> Vec<VertexId> {
        v.iter().map(|&x| VertexId(x)).collect()
    }

    fn k4() -> Hypergraph {
        Hypergraph::from_edges(4, &[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]).unwrap()
    }

    fn k3() -> Hypergraph {
        Hypergraph::from_edges(3, &[[0, 1], [1, 2], [0, 2]]).unwrap()
    }

    /// Every orientation of `h`, by exhaustive product over edge choices.
    fn all_orientations(h: &Hypergraph) -> Vec<Orientation> {
        let mut out = vec![Vec::new()];
        for e in h.edge_ids() {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<VertexId>| {
                    h.edge(e).iter().map(move |&v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|a| Orientation::new(h, a).unwrap())
            .collect()
    }

    #[test]
    fn brute_force_examples() {
        let r = is_k_sparse_bruteforce(&k4(), 1, DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert!(!r.is_sparse);
        assert_eq!(r.witness, Some(ids(&[0, 1, 2, 3])));
        assert!(is_k_sparse_bruteforce(&k3(), 1, 20).unwrap().is_sparse);
        let edgeless = Hypergraph::from_edges::<[usize; 0]>(5, &[]).unwrap();
        assert!(is_k_sparse_bruteforce(&edgeless, 0, 20).unwrap().is_sparse);
        let big = Hypergraph::from_edges::<[usize; 0]>(21, &[]).unwrap();
        assert_eq!(
            is_k_sparse_bruteforce(&big, 1, 20),
            Err(Error::CapExceeded {
                vertices: 21,
                cap: 20
            })
        );
    }

    #[test]
    fn flow_decision_examples() {
        let r = is_k_sparse(&k4(), 1);
        assert!(!r.is_sparse);
        let x: BTreeSet<VertexId> = r.witness.unwrap().into_iter().collect();
        assert!(induced_edge_count(&k4(), &x) > x.len());
        assert!(is_k_sparse(&k4(), 2).is_sparse);
        assert!(is_k_sparse(&k4(), 6).is_sparse);
    }

    #[test]
    fn k4_at_two_by_enumeration() {
        // every X of size s spans at most s(s-1)/2 ≤ 2s edges
        assert!(is_k_sparse_bruteforce(&k4(), 2, 20).unwrap().is_sparse);
    }

    #[test]
    fn weight_examples() {
        let h = Hypergraph::from_edges(2, &[[0, 1], [0, 1]]).unwrap();
        let f = Orientation::new(&h, ids(&[0, 0])).unwrap();
        assert_eq!(orientation_weight(&f, 1), 1);
        assert_eq!(orientation_weight(&f, 2), 0);
        let star = Hypergraph::from_edges(4, &[[0, 1], [0, 2], [0, 3]]).unwrap();
        let f = Orientation::least_vertex(&star);
        assert_eq!(orientation_weight(&f, 1), 2);
    }

    #[test]
    fn triangle_bound_one_is_tight() {
        let h = k3();
        let best = all_orientations(&h)
            .iter()
            .map(Orientation::max_preimage)
            .min()
            .unwrap();
        assert_eq!(best, 1);
        let (f, trace) = bounded_orientation_traced(&h, 1).unwrap();
        assert_eq!(f.preimage_counts(), [1, 1, 1]);
        assert_eq!(trace, [1, 0]);
    }

    #[test]
    fn single_edge_keeps_least_vertex() {
        let h = Hypergraph::from_edges(2, &[[0, 1]]).unwrap();
        let (f, trace) = bounded_orientation_traced(&h, 1).unwrap();
        assert_eq!(f.head(EdgeId(0)), VertexId(0));
        assert_eq!(trace, [0]);
    }

    #[test]
    fn k4_is_rejected() {
        let err = bounded_orientation(&k4(), 1).unwrap_err();
        assert_eq!(err.code(), "NotKSparse");
    }

    #[test]
    fn quotient_examples() {
        let h = Hypergraph::from_edges(2, &[[0, 1]]).unwrap();
        let q = directed_quotient(&h, &Orientation::least_vertex(&h));
        assert_eq!(q.arcs().collect::<Vec<_>>(), [(VertexId(1), VertexId(0))]);

        let f = Orientation::new(&k3(), ids(&[1, 2, 0])).unwrap();
        let q = directed_quotient(&k3(), &f);
        assert_eq!(q.arc_count(), 3);
        assert!(q.is_antisymmetric());

        let par = Hypergraph::from_edges(2, &[[0, 1], [0, 1]]).unwrap();
        let f = Orientation::new(&par, ids(&[0, 1])).unwrap();
        let q = directed_quotient(&par, &f);
        assert!(q.has_arc(VertexId(1), VertexId(0)) && q.has_arc(VertexId(0), VertexId(1)));
    }

    #[test]
    fn antisymmetric_parallel_edges_merge() {
        let par = Hypergraph::from_edges(2, &[[0, 1], [0, 1]]).unwrap();
        let (f, trace) = antisymmetric_orientation_traced(&par, 1).unwrap();
        assert_eq!(f.head(EdgeId(0)), f.head(EdgeId(1)));
        assert_eq!(trace, [2, 0]);
        assert_eq!(directed_quotient(&par, &f).arc_count(), 1);
        assert!(f.max_preimage() <= 2);
    }

    #[test]
    fn antisymmetric_keeps_good_orientations() {
        let f = Orientation::new(&k3(), ids(&[1, 2, 0])).unwrap();
        let (g, trace) = eliminate_bad_vertices(&k3(), f.clone());
        assert_eq!(g, f);
        assert_eq!(trace, [0]);
        let edge = Hypergraph::from_edges(2, &[[0, 1]]).unwrap();
        let g = antisymmetric_orientation(&edge, 3).unwrap();
        assert_eq!(g, Orientation::least_vertex(&edge));
    }

    #[test]
    fn antisymmetric_rank_check() {
        let loops = Hypergraph::from_edges(2, &[[0], [1]]).unwrap();
        assert_eq!(
            antisymmetric_orientation(&loops, 1),
            Err(Error::RankTooSmall { rank: 1 })
        );
    }

    #[test]
    fn homomorphism_examples() {
        let g = DirectedGraph::from_arcs(2, &[(0, 1)]).unwrap();
        let t = DirectedGraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert_eq!(find_homomorphism(&g, &t).unwrap(), ids(&[0, 1]));

        let cycle = DirectedGraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let looped = DirectedGraph::from_arcs(1, &[(0, 0)]).unwrap();
        assert_eq!(find_homomorphism(&cycle, &looped).unwrap(), ids(&[0, 0, 0]));
        let bare = DirectedGraph::new(1);
        assert_eq!(find_homomorphism(&cycle, &bare), Err(Error::NoHomomorphism));
    }

    #[test]
    fn homomorphism_needs_backtracking() {
        // 3-cycle into the 3-cycle: 0↦0 forces 1↦1, 2↦2.
        let cycle = DirectedGraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let target =
            DirectedGraph::from_arcs(4, &[(0, 3), (3, 3), (0, 1), (1, 2), (2, 0)]).unwrap();
        let hom = find_homomorphism(&cycle, &target).unwrap();
        for (u, w) in cycle.arcs() {
            assert!(target.has_arc(hom[u.0], hom[w.0]));
        }
    }

    #[test]
    fn check_h_orientation_examples() {
        let g = UndirectedGraph::from_pairs(2, &[(0, 1)]).unwrap();
        let arc = DirectedGraph::from_arcs(2, &[(0, 1)]).unwrap();
        let classes = vec![BTreeSet::from([VertexId(0)]), BTreeSet::from([VertexId(1)])];
        let r = check_h_orientation(&g, &arc, &classes, Some(1)).unwrap();
        assert!(r.encodes);
        assert_eq!(r.orientation.unwrap().head(EdgeId(0)), VertexId(1));
        assert_eq!(r.bounded, Some(true));

        let none = DirectedGraph::new(2);
        assert!(
            !check_h_orientation(&g, &none, &classes, None)
                .unwrap()
                .encodes
        );

        let empty = UndirectedGraph::from_pairs(0, &[]).unwrap();
        let r = check_h_orientation(&empty, &arc, &[BTreeSet::new(), BTreeSet::new()], None);
        assert!(r.unwrap().encodes);

        assert_eq!(
            check_h_orientation(&g, &arc, &classes[..1], None),
            Err(Error::MalformedPartition)
        );
        let overlapping = vec![
            BTreeSet::from([VertexId(0)]),
            BTreeSet::from([VertexId(0), VertexId(1)]),
        ];
        assert!(
            !check_h_orientation(&g, &arc, &overlapping, None)
                .unwrap()
                .encodes
        );
    }

    #[test]
    fn h_orientation_round_trip() {
        // quadratic-residue tournament on 7 vertices: i → i+1, i+2, i+4
        let g = UndirectedGraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let arcs: Vec<(usize, usize)> = (0..7)
            .flat_map(|i| [1, 2, 4].map(|d| (i, (i + d) % 7)))
            .collect();
        let t = DirectedGraph::from_arcs(7, &arcs).unwrap();
        let ho = h_orientation(&g, &t, 1).unwrap();
        let r = check_h_orientation(&g, &t, &ho.classes, Some(1)).unwrap();
        assert!(r.encodes);
        assert_eq!(r.orientation.as_ref(), Some(&ho.orientation));
    }

    proptest::proptest! {
        #[test]
        fn flow_decision_matches_enumeration(
            n in 1usize..9,
            raw in proptest::collection::vec(proptest::collection::btree_set(0usize..9, 1..4), 0..20),
            k in 0usize..4,
        ) {
            let edges: Vec<Vec<usize>> = raw
                .into_iter()
                .map(|s| s.into_iter().filter(|&v| v < n).collect::<Vec<_>>())
                .filter(|e: &Vec<usize>| !e.is_empty())
                .collect();
            let h = Hypergraph::from_edges(n, &edges).unwrap();
            let fast = is_k_sparse(&h, k);
            let slow = is_k_sparse_bruteforce(&h, k, 20).unwrap();
            proptest::prop_assert_eq!(fast.is_sparse, slow.is_sparse);
            if let Some(w) = fast.witness {
                let x: BTreeSet<VertexId> = w.into_iter().collect();
                proptest::prop_assert!(induced_edge_count(&h, &x) > k * x.len());
            }
            if k > 0 && fast.is_sparse {
                let f = bounded_orientation(&h, k).unwrap();
                proptest::prop_assert!(f.is_bounded_by(k));
                if h.rank() >= 2 {
                    let g = antisymmetric_orientation(&h, k).unwrap();
                    proptest::prop_assert!(directed_quotient(&h, &g).is_antisymmetric());
                    proptest::prop_assert!(g.max_preimage() <= h.rank() * k * k);
                }
            }
        }
    }
}
