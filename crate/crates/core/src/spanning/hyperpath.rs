//! Hyperpaths: edge sequences where exactly consecutive edges meet.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Hyperpath {
    edges: Vec<EdgeId>,
}

impl Hyperpath {
    /// Checks `eᵢ ∩ eₖ ≠ ∅ ⟺ |i − k| ≤ 1`.
    pub fn new(h: &Hypergraph, edges: Vec<EdgeId>) -> Result<Self> {
        for &e in &edges {
            h.check_edge(e)?;
        }
        if edges.is_empty() || !is_hyperpath(h, &edges) {
            return Err(Error::MalformedTree("not a hyperpath"));
        }
        Ok(Self { edges })
    }

    pub(crate) fn unchecked(edges: Vec<EdgeId>) -> Self {
        Self { edges }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn first(&self) -> EdgeId {
        self.edges[0]
    }

    pub fn last(&self) -> EdgeId {
        self.edges[self.edges.len() - 1]
    }

    pub fn into_edges(self) -> Vec<EdgeId> {
        self.edges
    }

    /// `u ∈ e₀ ∖ e₁` and `v ∈ eₙ ∖ eₙ₋₁`; for one edge, both lie in it.
    pub fn connects(&self, h: &Hypergraph, u: VertexId, v: VertexId) -> bool {
        let n = self.edges.len();
        let start = h.contains(self.edges[0], u) && (n == 1 || !h.contains(self.edges[1], u));
        let end = h.contains(self.edges[n - 1], v) && (n == 1 || !h.contains(self.edges[n - 2], v));
        start && end
    }
}

pub(crate) fn meets(h: &Hypergraph, a: EdgeId, b: EdgeId) -> bool {
    let (x, y) = (h.edge(a), h.edge(b));
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}

pub fn is_hyperpath(h: &Hypergraph, edges: &[EdgeId]) -> bool {
    edges.iter().enumerate().all(|(i, &a)| {
        edges[i + 1..]
            .iter()
            .enumerate()
            .all(|(d, &b)| meets(h, a, b) == (d == 0))
    })
}

/// Edges meeting `e` (other than `e`), ascending.
pub(crate) fn edge_neighbours(h: &Hypergraph, e: EdgeId) -> BTreeSet<EdgeId> {
    let mut out: BTreeSet<EdgeId> = h
        .edge(e)
        .iter()
        .flat_map(|&v| h.incident_edges(v).iter().copied())
        .collect();
    out.remove(&e);
    out
}

/// Shortest edge sequence from some edge in `sources` to an edge accepted by
/// `is_target`, searching breadth-first with least ids first.
fn edge_bfs(
    h: &Hypergraph,
    sources: &[EdgeId],
    is_target: impl Fn(EdgeId) -> bool,
) -> Option<Vec<EdgeId>> {
    let mut parent: Vec<Option<EdgeId>> = alloc::vec![None; h.edge_count()];
    let mut seen = alloc::vec![false; h.edge_count()];
    let mut queue = VecDeque::new();
    for &e in sources {
        seen[e.0] = true;
        queue.push_back(e);
    }
    while let Some(e) = queue.pop_front() {
        if is_target(e) {
            let mut path = alloc::vec![e];
            let mut x = e;
            while let Some(p) = parent[x.0] {
                path.push(p);
                x = p;
            }
            path.reverse();
            return Some(path);
        }
        for f in edge_neighbours(h, e) {
            if !seen[f.0] {
                seen[f.0] = true;
                parent[f.0] = Some(e);
                queue.push_back(f);
            }
        }
    }
    None
}

/// A shortest hyperpath connecting `u` and `v`.
///
/// If some edge contains both, the least such edge is returned alone; this is
/// also how `u = v` is handled.
pub fn find_hyperpath(h: &Hypergraph, u: VertexId, v: VertexId) -> Result<Hyperpath> {
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    let no_path = Error::NoHyperpath { from: u, to: v };
    if let Some(&e) = h.incident_edges(u).iter().find(|&&e| h.contains(e, v)) {
        return Ok(Hyperpath::unchecked(alloc::vec![e]));
    }
    edge_bfs(h, h.incident_edges(u), |e| h.contains(e, v))
        .map(Hyperpath::unchecked)
        .ok_or(no_path)
}

/// A shortest hyperpath `e₀ … eₙ` with `root ∈ e₀ ∖ e₁` and `eₙ = target`.
pub fn hyperpath_to_edge(h: &Hypergraph, root: VertexId, target: EdgeId) -> Result<Hyperpath> {
    h.check_vertex(root)?;
    h.check_edge(target)?;
    edge_bfs(h, h.incident_edges(root), |e| e == target)
        .map(Hyperpath::unchecked)
        .ok_or(Error::NoHyperpath {
            from: root,
            to: h.edge(target)[0],
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let h = Hypergraph::from_edges(4, &[&[0, 1][..], &[1, 2], &[0, 1, 2], &[3]]).unwrap();
        let p = find_hyperpath(&h, VertexId(0), VertexId(2)).unwrap();
        assert_eq!(p.edges(), [EdgeId(2)]);
        let chain = Hypergraph::from_edges(3, &[[0, 1], [1, 2]]).unwrap();
        let p = find_hyperpath(&chain, VertexId(0), VertexId(2)).unwrap();
        assert_eq!(p.edges(), [EdgeId(0), EdgeId(1)]);
        assert!(p.connects(&chain, VertexId(0), VertexId(2)));
        assert_eq!(
            find_hyperpath(&h, VertexId(0), VertexId(3)),
            Err(Error::NoHyperpath {
                from: VertexId(0),
                to: VertexId(3)
            })
        );
    }

    #[test]
    fn validates_sequences() {
        let h = Hypergraph::from_edges(4, &[[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        assert!(Hyperpath::new(&h, alloc::vec![EdgeId(0), EdgeId(1), EdgeId(2)]).is_ok());
        // a 4-cycle: first and last meet
        assert!(
            Hyperpath::new(&h, alloc::vec![EdgeId(0), EdgeId(1), EdgeId(2), EdgeId(3)]).is_err()
        );
        let p = hyperpath_to_edge(&h, VertexId(0), EdgeId(2)).unwrap();
        assert_eq!(p.edges(), [EdgeId(3), EdgeId(2)]);
    }

    proptest::proptest! {
        #[test]
        fn shortest_paths_are_hyperpaths(
            raw in proptest::collection::vec(proptest::collection::btree_set(0usize..15, 1..4), 1..20),
        ) {
            let edges: Vec<Vec<usize>> = raw.into_iter().map(|s| s.into_iter().collect()).collect();
            let h = Hypergraph::from_edges(15, &edges).unwrap();
            for u in h.vertices() {
                for v in h.vertices() {
                    if h.degree(u) == 0 {
                        continue;
                    }
                    match find_hyperpath(&h, u, v) {
                        Ok(p) => {
                            proptest::prop_assert!(is_hyperpath(&h, p.edges()));
                            proptest::prop_assert!(p.connects(&h, u, v));
                        }
                        Err(_) => {
                            let comps = h.connected_components();
                            let cu = comps.iter().position(|c| c.contains(&u));
                            let cv = comps.iter().position(|c| c.contains(&v));
                            proptest::prop_assert_ne!(cu, cv);
                        }
                    }
                }
            }
        }
    }
}
