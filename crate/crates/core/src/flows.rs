//! Distributions on graphs, δ-flows, and the paths that realise them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::encoding::FiniteSetFunction;
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::hypergraph::{EdgeId, VertexId};
use crate::maxflow::Network;
use crate::sparsity::{SparsityReport, DEFAULT_BRUTE_FORCE_CAP};

/// A partial vertex-to-vertex map, as produced from a path family.
pub type VertexMap = BTreeMap<VertexId, VertexId>;

/// A demand `δ : V → ℕ` on the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Distribution {
    values: Vec<usize>,
}

impl Distribution {
    pub fn zero(n: usize) -> Self {
        Self {
            values: alloc::vec![0; n],
        }
    }

    pub fn from_values(values: Vec<usize>) -> Self {
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn get(&self, v: VertexId) -> usize {
        self.values.get(v.0).copied().unwrap_or(0)
    }

    pub fn set(&mut self, v: VertexId, value: usize) -> Result<()> {
        let slot = self.values.get_mut(v.0).ok_or(Error::UnknownVertex(v))?;
        *slot = value;
        Ok(())
    }

    /// `δ(V)`.
    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    /// `δ(X)`.
    pub fn sum_over(&self, xs: &[VertexId]) -> usize {
        xs.iter().map(|&v| self.get(v)).sum()
    }

    /// Vertices with nonzero demand, ascending.
    pub fn support(&self) -> Vec<VertexId> {
        self.values
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x > 0)
            .map(|(i, _)| VertexId(i))
            .collect()
    }

    fn check_len(&self, g: &UndirectedGraph) -> Result<()> {
        if self.values.len() != g.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: g.vertex_count(),
                found: self.values.len(),
            });
        }
        Ok(())
    }
}

/// An antisymmetric integer function on vertex pairs.
///
/// Only `f(u, v)` with `u < v` is stored, and only when nonzero; `f(v, u)` is
/// read off as its negation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Flow {
    vertex_count: usize,
    values: BTreeMap<(VertexId, VertexId), i64>,
}

impl Flow {
    pub fn zero(n: usize) -> Self {
        Self {
            vertex_count: n,
            values: BTreeMap::new(),
        }
    }

    /// Builds a flow from `(u, v, f(u, v))` triples, rejecting non-edges of `g`.
    /// A pair given twice keeps its last value.
    pub fn from_entries(
        g: &UndirectedGraph,
        entries: &[(VertexId, VertexId, i64)],
    ) -> Result<Self> {
        let mut f = Self::zero(g.vertex_count());
        for &(u, v, x) in entries {
            f.set(g, u, v, x)?;
        }
        Ok(f)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn value(&self, u: VertexId, v: VertexId) -> i64 {
        if u < v {
            self.values.get(&(u, v)).copied().unwrap_or(0)
        } else {
            -self.values.get(&(v, u)).copied().unwrap_or(0)
        }
    }

    /// Sets `f(u, v) = x` and therefore `f(v, u) = −x`.
    pub fn set(&mut self, g: &UndirectedGraph, u: VertexId, v: VertexId, x: i64) -> Result<()> {
        for w in [u, v] {
            if w.0 >= self.vertex_count {
                return Err(Error::UnknownVertex(w));
            }
        }
        if x != 0 && g.edge_between(u, v).is_none() {
            return Err(Error::FlowOffSupport { u, v });
        }
        self.put(u, v, x);
        Ok(())
    }

    fn put(&mut self, u: VertexId, v: VertexId, x: i64) {
        let (key, x) = if u < v { ((u, v), x) } else { ((v, u), -x) };
        if x == 0 {
            self.values.remove(&key);
        } else {
            self.values.insert(key, x);
        }
    }

    fn add(&mut self, u: VertexId, v: VertexId, x: i64) {
        let old = self.value(u, v);
        self.put(u, v, old + x);
    }

    /// Nonzero `(u, v, f(u, v))` with `u < v`, ascending.
    pub fn entries(&self) -> impl Iterator<Item = (VertexId, VertexId, i64)> + '_ {
        self.values.iter().map(|(&(u, v), &x)| (u, v, x))
    }

    /// Every `(u, v, f(u, v))` with `f(u, v) > 0`, ascending by `(u, v)`.
    pub fn positive_arcs(&self) -> Vec<(VertexId, VertexId, i64)> {
        let mut arcs: Vec<_> = self
            .entries()
            .map(|(u, v, x)| if x > 0 { (u, v, x) } else { (v, u, -x) })
            .collect();
        arcs.sort_unstable();
        arcs
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// `f(u, v) ≠ 0 ⇒ {u, v} ∈ E`.
    pub fn is_supported_on(&self, g: &UndirectedGraph) -> bool {
        self.vertex_count == g.vertex_count()
            && self
                .entries()
                .all(|(u, v, _)| g.edge_between(u, v).is_some())
    }

    fn check_support(&self, g: &UndirectedGraph) -> Result<()> {
        if self.vertex_count != g.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: g.vertex_count(),
                found: self.vertex_count,
            });
        }
        match self
            .entries()
            .find(|&(u, v, _)| g.edge_between(u, v).is_none())
        {
            Some((u, v, _)) => Err(Error::FlowOffSupport { u, v }),
            None => Ok(()),
        }
    }

    /// `d_f(v) = Σ_u f(v, u)`.
    pub fn defect(&self) -> Vec<i64> {
        let mut d = alloc::vec![0; self.vertex_count];
        for (u, v, x) in self.entries() {
            d[u.0] += x;
            d[v.0] -= x;
        }
        d
    }

    /// `max |f(u, v)|`, or 0 for the zero flow.
    pub fn edge_bound(&self) -> i64 {
        self.values.values().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// `max_v Σ_u |f(u, v)|`, or 0 for the zero flow.
    pub fn vertex_bound(&self) -> i64 {
        let mut load = alloc::vec![0; self.vertex_count];
        for (u, v, x) in self.entries() {
            load[u.0] += x.abs();
            load[v.0] += x.abs();
        }
        load.into_iter().max().unwrap_or(0)
    }

    /// `(edge_bound, vertex_bound)`.
    pub fn bounds(&self) -> (i64, i64) {
        (self.edge_bound(), self.vertex_bound())
    }
}

/// A multiset of vertex sequences with directed edge usage counts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathFamily {
    paths: Vec<Vec<VertexId>>,
    usage: BTreeMap<(VertexId, VertexId), usize>,
}

impl PathFamily {
    pub fn from_paths(paths: Vec<Vec<VertexId>>) -> Self {
        let mut usage = BTreeMap::new();
        for p in &paths {
            for w in p.windows(2) {
                *usage.entry((w[0], w[1])).or_insert(0) += 1;
            }
        }
        Self { paths, usage }
    }

    pub fn paths(&self) -> &[Vec<VertexId>] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// How many paths step from `u` to `v`.
    pub fn usage(&self, u: VertexId, v: VertexId) -> usize {
        self.usage.get(&(u, v)).copied().unwrap_or(0)
    }

    pub fn usages(&self) -> impl Iterator<Item = ((VertexId, VertexId), usize)> + '_ {
        self.usage.iter().map(|(&k, &x)| (k, x))
    }

    pub fn start_counts(&self, n: usize) -> Vec<usize> {
        self.endpoint_counts(n, |p| p.first())
    }

    pub fn end_counts(&self, n: usize) -> Vec<usize> {
        self.endpoint_counts(n, |p| p.last())
    }

    fn endpoint_counts(
        &self,
        n: usize,
        pick: impl Fn(&Vec<VertexId>) -> Option<&VertexId>,
    ) -> Vec<usize> {
        let mut counts = alloc::vec![0; n];
        for v in self.paths.iter().filter_map(pick) {
            if let Some(c) = counts.get_mut(v.0) {
                *c += 1;
            }
        }
        counts
    }
}

/// `B_G(Z)`: edges with exactly one endpoint in `z`, ascending.
pub fn border(g: &UndirectedGraph, z: &BTreeSet<VertexId>) -> Vec<EdgeId> {
    g.edge_ids()
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            z.contains(&u) != z.contains(&v)
        })
        .collect()
}

/// `δ(v) = |h⁻¹(v)|`.
pub fn induced_distribution(h: &FiniteSetFunction, g: &UndirectedGraph) -> Result<Distribution> {
    let mut d = Distribution::zero(g.vertex_count());
    for (_, v) in h.iter() {
        let slot = d.values.get_mut(v.0).ok_or(Error::UnknownVertex(v))?;
        *slot += 1;
    }
    Ok(d)
}

/// `δ(Z) ≤ |Z| + k·|B(Z)|` for every `Z`, by enumerating all subsets.
///
/// Subsets are visited in increasing bitmask order and the first violation is
/// the witness.
pub fn is_k_sparse_distribution_bruteforce(
    g: &UndirectedGraph,
    d: &Distribution,
    k: usize,
    cap: usize,
) -> Result<SparsityReport> {
    d.check_len(g)?;
    let n = g.vertex_count();
    if n > cap.min(63) {
        return Err(Error::CapExceeded {
            vertices: n,
            cap: cap.min(63),
        });
    }
    let ends: Vec<(usize, usize)> = g
        .edge_ids()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            (u.0, v.0)
        })
        .collect();
    for mask in 1u64..(1u64 << n) {
        let inside = |v: usize| mask >> v & 1 == 1;
        let demand: usize = (0..n).filter(|&v| inside(v)).map(|v| d.values[v]).sum();
        let size = mask.count_ones() as usize;
        let cut = ends
            .iter()
            .filter(|&&(u, v)| inside(u) != inside(v))
            .count();
        if demand > size + k * cut {
            return Ok(SparsityReport {
                k,
                is_sparse: false,
                witness: Some((0..n).filter(|&v| inside(v)).map(VertexId).collect()),
            });
        }
    }
    Ok(SparsityReport {
        k,
        is_sparse: true,
        witness: None,
    })
}

/// Brute force with [`DEFAULT_BRUTE_FORCE_CAP`].
pub fn is_k_sparse_distribution_bruteforce_default(
    g: &UndirectedGraph,
    d: &Distribution,
    k: usize,
) -> Result<SparsityReport> {
    is_k_sparse_distribution_bruteforce(g, d, k, DEFAULT_BRUTE_FORCE_CAP)
}

/// The δ-flow network after running max flow, with the handles of the graph
/// edges and whether every source arc is saturated.
struct Solved {
    net: Network,
    keys: Vec<(VertexId, VertexId, crate::maxflow::ArcKey)>,
    saturated: bool,
    source: usize,
}

fn solve_delta_network(g: &UndirectedGraph, d: &Distribution, k: usize) -> Result<Solved> {
    d.check_len(g)?;
    let n = g.vertex_count();
    let (s, t) = (n, n + 1);
    let mut net = Network::new(n + 2);
    let mut required = 0i64;
    for v in g.vertices() {
        let c = d.get(v).saturating_sub(1) as i64;
        if c > 0 {
            net.add_arc(s, v.0, c);
            required += c;
        }
    }
    let mut keys = Vec::new();
    for u in g.vertices() {
        for &(v, _) in g.neighbours(u) {
            if u < v {
                keys.push((u, v, net.add_edge(u.0, v.0, k as i64)));
            }
        }
    }
    for v in g.vertices() {
        if d.get(v) == 0 {
            net.add_arc(v.0, t, 1);
        }
    }
    let value = net.max_flow(s, t);
    Ok(Solved {
        net,
        keys,
        saturated: value == required,
        source: s,
    })
}

fn cut_witness(solved: &Solved, n: usize) -> Vec<VertexId> {
    let side = solved.net.source_side(solved.source);
    (0..n).filter(|&v| side[v]).map(VertexId).collect()
}

/// Decides `k`-sparsity of `d` by max flow: sparse iff the flow saturates every
/// source arc. Otherwise the source side of a minimum cut is a witness.
pub fn is_k_sparse_distribution(
    g: &UndirectedGraph,
    d: &Distribution,
    k: usize,
) -> Result<SparsityReport> {
    let solved = solve_delta_network(g, d, k)?;
    let witness = (!solved.saturated).then(|| cut_witness(&solved, g.vertex_count()));
    Ok(SparsityReport {
        k,
        is_sparse: witness.is_none(),
        witness,
    })
}

/// A δ-flow for `d` with `|f(u, v)| ≤ k` on every edge.
pub fn compute_delta_flow(g: &UndirectedGraph, d: &Distribution, k: usize) -> Result<Flow> {
    let solved = solve_delta_network(g, d, k)?;
    if !solved.saturated {
        return Err(Error::NotSparseDistribution {
            witness: cut_witness(&solved, g.vertex_count()),
        });
    }
    let mut f = Flow::zero(g.vertex_count());
    for &(u, v, key) in &solved.keys {
        f.put(u, v, solved.net.flow(key));
    }
    Ok(f)
}

/// For every `v`: `d_f(v) = δ(v) − 1`, or `δ(v) = 0` and `d_f(v) = 0`.
pub fn check_delta_flow(f: &Flow, d: &Distribution) -> bool {
    f.vertex_count() == d.len()
        && f.defect()
            .iter()
            .zip(d.values())
            .all(|(&df, &delta)| df == delta as i64 - 1 || (delta == 0 && df == 0))
}

/// A directed cycle `v₀ → v₁ → … → v₀` along arcs with positive flow, found by
/// depth-first search in least-id order.
pub fn find_positive_cycle(f: &Flow) -> Option<Vec<VertexId>> {
    let n = f.vertex_count();
    let mut out: Vec<Vec<VertexId>> = alloc::vec![Vec::new(); n];
    for (u, v, _) in f.positive_arcs() {
        out[u.0].push(v);
    }
    // 0 = unvisited, 1 = on the stack, 2 = done
    let mut state = alloc::vec![0u8; n];
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = alloc::vec![(start, 0)];
        state[start] = 1;
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if let Some(&w) = out[u].get(*next) {
                *next += 1;
                match state[w.0] {
                    0 => {
                        state[w.0] = 1;
                        stack.push((w.0, 0));
                    }
                    1 => {
                        let from = stack
                            .iter()
                            .position(|&(x, _)| x == w.0)
                            .expect("w is on the stack");
                        return Some(stack[from..].iter().map(|&(x, _)| VertexId(x)).collect());
                    }
                    _ => {}
                }
            } else {
                state[u] = 2;
                stack.pop();
            }
        }
    }
    None
}

pub fn is_acyclic(f: &Flow) -> bool {
    find_positive_cycle(f).is_none()
}

/// Repeatedly subtracts the least value around a positive cycle until none is
/// left. The defect is unchanged and no `|f(u, v)|` grows.
pub fn cancel_cycles(f: &Flow) -> Flow {
    let mut f = f.clone();
    while let Some(cycle) = find_positive_cycle(&f) {
        let arcs = || (0..cycle.len()).map(|i| (cycle[i], cycle[(i + 1) % cycle.len()]));
        let c = arcs()
            .map(|(u, v)| f.value(u, v))
            .min()
            .expect("cycles are nonempty");
        for (u, v) in arcs() {
            f.add(u, v, -c);
        }
    }
    f
}

/// Paths realising an acyclic δ-flow: `δ(v)` paths start at each `v`, at most
/// one ends at each vertex, and at most `f(u, v)` of them step from `u` to `v`.
///
/// The demands `(v, i)` for `i < δ(v)` are served in ascending order. A path
/// stops at the first vertex where no path has ended yet, and otherwise steps
/// to the least neighbour whose arc still has unused flow.
pub fn decompose_flow_paths(g: &UndirectedGraph, f: &Flow, d: &Distribution) -> Result<PathFamily> {
    d.check_len(g)?;
    f.check_support(g)?;
    if !check_delta_flow(f, d) {
        return Err(Error::InvalidFlow("not a δ-flow for the distribution"));
    }
    if !is_acyclic(f) {
        return Err(Error::InvalidFlow("flow has a positive cycle"));
    }
    let n = g.vertex_count();
    let mut ended = alloc::vec![false; n];
    let mut used: BTreeMap<(VertexId, VertexId), i64> = BTreeMap::new();
    let mut paths = Vec::with_capacity(d.total());
    for v in g.vertices() {
        for _ in 0..d.get(v) {
            let mut path = alloc::vec![v];
            let mut u = v;
            while ended[u.0] {
                if path.len() > n {
                    return Err(Error::InvalidFlow("path does not terminate"));
                }
                let w = g
                    .neighbours(u)
                    .iter()
                    .map(|&(w, _)| w)
                    .find(|&w| f.value(u, w) > used.get(&(u, w)).copied().unwrap_or(0))
                    .ok_or(Error::InvalidFlow("no arc with unused flow"))?;
                *used.entry((u, w)).or_insert(0) += 1;
                path.push(w);
                u = w;
            }
            ended[u.0] = true;
            paths.push(path);
        }
    }
    Ok(PathFamily::from_paths(paths))
}

/// Every vertex and every edge of `g` lies on at most `m` paths, and every
/// path walks along edges of `g`.
pub fn validate_path_family(g: &UndirectedGraph, p: &PathFamily, m: usize) -> bool {
    let mut on_vertex = alloc::vec![0usize; g.vertex_count()];
    let mut on_edge = alloc::vec![0usize; g.edge_count()];
    for path in p.paths() {
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for &v in path {
            if v.0 >= g.vertex_count() {
                return false;
            }
            vertices.insert(v);
        }
        for w in path.windows(2) {
            match g.edge_between(w[0], w[1]) {
                Some(e) => edges.insert(e),
                None => return false,
            };
        }
        for v in vertices {
            on_vertex[v.0] += 1;
        }
        for e in edges {
            on_edge[e.0] += 1;
        }
    }
    on_vertex.iter().chain(&on_edge).all(|&c| c <= m)
}

/// The map sending the end of every path of the decomposition of `f` to its
/// start, so that `|g⁻¹(v)| = δ(v)`.
pub fn function_from_flow(g: &UndirectedGraph, d: &Distribution, f: &Flow) -> Result<VertexMap> {
    f.check_support(g)?;
    if !check_delta_flow(f, d) {
        return Err(Error::InvalidFlow("not a δ-flow for the distribution"));
    }
    let family = decompose_flow_paths(g, &cancel_cycles(f), d)?;
    let mut map = VertexMap::new();
    for path in family.paths() {
        let (&start, &end) = (
            path.first().expect("paths are nonempty"),
            path.last().expect("paths are nonempty"),
        );
        if map.insert(end, start).is_some() {
            return Err(Error::InvalidFlow("two paths end at one vertex"));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(i: usize) -> VertexId {
        VertexId(i)
    }

    fn path_graph(n: usize) -> UndirectedGraph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        UndirectedGraph::from_pairs(n, &pairs).unwrap()
    }

    fn triangle_circulation() -> (UndirectedGraph, Flow) {
        let g = UndirectedGraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let f =
            Flow::from_entries(&g, &[(v(0), v(1), 1), (v(1), v(2), 1), (v(2), v(0), 1)]).unwrap();
        (g, f)
    }

    #[test]
    fn borders() {
        let g = path_graph(3);
        let z = |xs: &[usize]| xs.iter().map(|&x| v(x)).collect::<BTreeSet<_>>();
        assert_eq!(border(&g, &z(&[1])), [EdgeId(0), EdgeId(1)]);
        assert!(border(&g, &z(&[0, 1, 2])).is_empty());
        assert!(border(&g, &z(&[])).is_empty());
    }

    #[test]
    fn flow_storage_is_antisymmetric() {
        let g = path_graph(2);
        let mut f = Flow::zero(2);
        f.set(&g, v(1), v(0), 3).unwrap();
        assert_eq!(f.value(v(0), v(1)), -3);
        assert_eq!(f.entries().collect::<Vec<_>>(), [(v(0), v(1), -3)]);
        assert_eq!(
            f.set(&path_graph(3), v(0), v(2), 1),
            Err(Error::UnknownVertex(v(2)))
        );
        let g3 = path_graph(3);
        let mut f3 = Flow::zero(3);
        assert_eq!(
            f3.set(&g3, v(0), v(2), 1),
            Err(Error::FlowOffSupport { u: v(0), v: v(2) })
        );
        f3.set(&g3, v(0), v(1), 0).unwrap();
        assert!(f3.is_zero());
    }

    #[test]
    fn sparsity_examples() {
        let k2 = path_graph(2);
        let d = Distribution::from_values(alloc::vec![3, 0]);
        let brute = is_k_sparse_distribution_bruteforce_default(&k2, &d, 1).unwrap();
        assert_eq!(brute.witness, Some(alloc::vec![v(0)]));
        let flow = is_k_sparse_distribution(&k2, &d, 1).unwrap();
        assert_eq!(
            (flow.is_sparse, flow.witness),
            (false, Some(alloc::vec![v(0)]))
        );

        let p3 = path_graph(3);
        let d = Distribution::from_values(alloc::vec![2, 0, 0]);
        assert!(is_k_sparse_distribution(&p3, &d, 1).unwrap().is_sparse);
        assert!(
            is_k_sparse_distribution_bruteforce_default(&p3, &d, 1)
                .unwrap()
                .is_sparse
        );

        let ones = Distribution::from_values(alloc::vec![1; 3]);
        assert!(is_k_sparse_distribution(&p3, &ones, 1).unwrap().is_sparse);
        assert!(
            is_k_sparse_distribution(&p3, &Distribution::zero(3), 1)
                .unwrap()
                .is_sparse
        );

        let big = UndirectedGraph::from_pairs(21, &[]).unwrap();
        assert!(matches!(
            is_k_sparse_distribution_bruteforce_default(&big, &Distribution::zero(21), 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn delta_flow_examples() {
        let g = path_graph(2);
        assert!(compute_delta_flow(&g, &Distribution::zero(2), 1)
            .unwrap()
            .is_zero());
        let d = Distribution::from_values(alloc::vec![2, 0]);
        let f = compute_delta_flow(&g, &d, 1).unwrap();
        assert_eq!(f.value(v(0), v(1)), 1);
        assert_eq!(f.defect(), [1, -1]);
        assert!(check_delta_flow(&f, &d));

        let ones = Distribution::from_values(alloc::vec![1, 1]);
        assert!(compute_delta_flow(&g, &ones, 1).unwrap().is_zero());
        assert!(check_delta_flow(&Flow::zero(2), &ones));
        assert!(!check_delta_flow(
            &Flow::zero(2),
            &Distribution::from_values(alloc::vec![2, 2])
        ));

        let d = Distribution::from_values(alloc::vec![3, 0]);
        assert_eq!(
            compute_delta_flow(&g, &d, 1),
            Err(Error::NotSparseDistribution {
                witness: alloc::vec![v(0)]
            })
        );
    }

    #[test]
    fn defects_and_bounds() {
        let g = path_graph(2);
        assert_eq!(Flow::zero(3).defect(), [0, 0, 0]);
        assert_eq!(Flow::zero(3).bounds(), (0, 0));
        let unit = Flow::from_entries(&g, &[(v(0), v(1), 1)]).unwrap();
        assert_eq!(unit.defect(), [1, -1]);
        assert_eq!(unit.bounds(), (1, 1));
        let (_, circ) = triangle_circulation();
        assert_eq!(circ.defect(), [0, 0, 0]);
        assert_eq!(circ.bounds(), (1, 2));
    }

    #[test]
    fn cycle_canceling() {
        assert!(cancel_cycles(&Flow::zero(3)).is_zero());
        let (_, circ) = triangle_circulation();
        assert_eq!(
            find_positive_cycle(&circ),
            Some(alloc::vec![v(0), v(1), v(2)])
        );
        assert!(cancel_cycles(&circ).is_zero());
        let g = path_graph(2);
        let unit = Flow::from_entries(&g, &[(v(0), v(1), 1)]).unwrap();
        assert_eq!(cancel_cycles(&unit), unit);
    }

    #[test]
    fn decomposition_examples() {
        let g = path_graph(3);
        let ones = Distribution::from_values(alloc::vec![1; 3]);
        let family = decompose_flow_paths(&g, &Flow::zero(3), &ones).unwrap();
        assert_eq!(
            family.paths(),
            [alloc::vec![v(0)], alloc::vec![v(1)], alloc::vec![v(2)]]
        );
        assert!(validate_path_family(&g, &family, 1));

        let g = path_graph(2);
        let d = Distribution::from_values(alloc::vec![2, 0]);
        let f = Flow::from_entries(&g, &[(v(0), v(1), 1)]).unwrap();
        let family = decompose_flow_paths(&g, &f, &d).unwrap();
        assert_eq!(family.paths(), [alloc::vec![v(0)], alloc::vec![v(0), v(1)]]);
        assert_eq!(family.usage(v(0), v(1)), 1);

        assert!(
            decompose_flow_paths(&g, &Flow::zero(2), &Distribution::zero(2))
                .unwrap()
                .is_empty()
        );

        let twice = PathFamily::from_paths(alloc::vec![alloc::vec![v(0), v(1)]; 2]);
        assert!(!validate_path_family(&g, &twice, 1));
        assert!(validate_path_family(&g, &PathFamily::default(), 1));

        let (g, circ) = triangle_circulation();
        assert_eq!(
            decompose_flow_paths(&g, &circ, &Distribution::from_values(alloc::vec![1; 3])),
            Err(Error::InvalidFlow("flow has a positive cycle"))
        );
    }

    #[test]
    fn functions_from_flows() {
        let g = path_graph(3);
        let ones = Distribution::from_values(alloc::vec![1; 3]);
        let map = function_from_flow(&g, &ones, &Flow::zero(3)).unwrap();
        assert!(map.iter().all(|(a, b)| a == b) && map.len() == 3);

        let g = path_graph(2);
        let d = Distribution::from_values(alloc::vec![2, 0]);
        let f = compute_delta_flow(&g, &d, 1).unwrap();
        let map = function_from_flow(&g, &d, &f).unwrap();
        assert_eq!(
            map.into_iter().collect::<Vec<_>>(),
            [(v(0), v(0)), (v(1), v(0))]
        );

        assert!(
            function_from_flow(&g, &Distribution::zero(2), &Flow::zero(2))
                .unwrap()
                .is_empty()
        );
    }

    /// A random simple graph on `n ≤ 10` vertices with a random distribution.
    fn graph_and_distribution() -> impl Strategy<Value = (UndirectedGraph, Distribution)> {
        (1usize..=10).prop_flat_map(|n| {
            let pairs = proptest::collection::btree_set((0..n, 0..n), 0..2 * n);
            let demand = proptest::collection::vec(0usize..4, n);
            (pairs, demand).prop_map(move |(pairs, demand)| {
                let pairs: BTreeSet<(usize, usize)> = pairs
                    .into_iter()
                    .filter(|&(a, b)| a != b)
                    .map(|(a, b)| (a.min(b), a.max(b)))
                    .collect();
                let pairs: Vec<_> = pairs.into_iter().collect();
                (
                    UndirectedGraph::from_pairs(n, &pairs).unwrap(),
                    Distribution::from_values(demand),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn flow_sparsity_matches_enumeration((g, d) in graph_and_distribution(), k in 0usize..3) {
            let brute = is_k_sparse_distribution_bruteforce_default(&g, &d, k).unwrap();
            let flow = is_k_sparse_distribution(&g, &d, k).unwrap();
            prop_assert_eq!(brute.is_sparse, flow.is_sparse);
            if let Some(z) = flow.witness {
                let z: BTreeSet<VertexId> = z.into_iter().collect();
                let zs: Vec<VertexId> = z.iter().copied().collect();
                prop_assert!(d.sum_over(&zs) > z.len() + k * border(&g, &z).len());
            }
        }

        #[test]
        fn delta_flow_pipeline((g, d) in graph_and_distribution(), k in 1usize..4) {
            let Ok(f) = compute_delta_flow(&g, &d, k) else {
                prop_assert!(!is_k_sparse_distribution_bruteforce_default(&g, &d, k).unwrap().is_sparse);
                return Ok(());
            };
            prop_assert!(check_delta_flow(&f, &d));
            prop_assert!(f.is_supported_on(&g));
            prop_assert!(f.edge_bound() <= k as i64);
            prop_assert!(f.vertex_bound() <= g.max_degree() as i64 * f.edge_bound());
            prop_assert!(f.vertex_bound() >= f.edge_bound());

            let acyclic = cancel_cycles(&f);
            prop_assert_eq!(acyclic.defect(), f.defect());
            prop_assert!(is_acyclic(&acyclic));
            prop_assert!(acyclic.edge_bound() <= f.edge_bound());
            prop_assert!(acyclic.vertex_bound() <= f.vertex_bound());

            let family = decompose_flow_paths(&g, &acyclic, &d).unwrap();
            let n = g.vertex_count();
            prop_assert_eq!(family.start_counts(n), d.values());
            prop_assert!(family.end_counts(n).iter().all(|&c| c <= 1));
            for ((a, b), used) in family.usages() {
                prop_assert!(used as i64 <= acyclic.value(a, b).max(0));
            }
            prop_assert!(family.paths().iter().all(|p| p.len() <= n + 1));

            let map = function_from_flow(&g, &d, &f).unwrap();
            let mut pre = alloc::vec![0usize; n];
            for &start in map.values() {
                pre[start.0] += 1;
            }
            prop_assert_eq!(pre, d.values());
        }

        #[test]
        fn canceling_random_flows((g, _) in graph_and_distribution(), raw in proptest::collection::vec(-3i64..=3, 30)) {
            let entries: Vec<_> = g
                .edge_ids()
                .zip(raw)
                .map(|(e, x)| {
                    let (a, b) = g.endpoints(e);
                    (a, b, x)
                })
                .collect();
            let f = Flow::from_entries(&g, &entries).unwrap();
            let out = cancel_cycles(&f);
            prop_assert_eq!(out.defect(), f.defect());
            prop_assert!(is_acyclic(&out));
            prop_assert!(out.edge_bound() <= f.edge_bound());
            prop_assert!(out.vertex_bound() <= f.vertex_bound());
            prop_assert!(out.vertex_bound() >= out.edge_bound());
        }
    }
}
