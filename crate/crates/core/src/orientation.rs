//! Orientations: each edge picks one of its own vertices.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

/// A total map `f : E → V` with `f(e) ∈ e`.
///
/// The invariant is checked by every constructor, so holding an `Orientation`
/// for a hypergraph `h` means it is valid for `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    assignment: Vec<VertexId>,
    vertex_count: usize,
}

impl Orientation {
    pub fn new(h: &Hypergraph, assignment: Vec<VertexId>) -> Result<Self> {
        if assignment.len() != h.edge_count() {
            return Err(Error::LengthMismatch {
                expected: h.edge_count(),
                found: assignment.len(),
            });
        }
        for (e, &v) in h.edge_ids().zip(&assignment) {
            if !h.contains(e, v) {
                return Err(Error::NotIncident { edge: e, vertex: v });
            }
        }
        Ok(Self {
            assignment,
            vertex_count: h.vertex_count(),
        })
    }

    /// Every edge to its least incident vertex.
    pub fn least_vertex(h: &Hypergraph) -> Self {
        Self {
            assignment: h.edge_ids().map(|e| h.edge(e)[0]).collect(),
            vertex_count: h.vertex_count(),
        }
    }

    pub fn head(&self, e: EdgeId) -> VertexId {
        self.assignment[e.0]
    }

    pub fn assignment(&self) -> &[VertexId] {
        &self.assignment
    }

    pub fn edge_count(&self) -> usize {
        self.assignment.len()
    }

    /// Redirects `e` to `v`; the caller guarantees `v ∈ e`.
    pub(crate) fn set(&mut self, e: EdgeId, v: VertexId) {
        self.assignment[e.0] = v;
    }

    /// `|f⁻¹(v)|` for every vertex, zeros included.
    pub fn preimage_counts(&self) -> Vec<usize> {
        let mut counts = alloc::vec![0; self.vertex_count];
        for v in &self.assignment {
            counts[v.0] += 1;
        }
        counts
    }

    /// `f⁻¹(v)` in ascending edge order.
    pub fn preimage(&self, v: VertexId) -> Vec<EdgeId> {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(_, &w)| w == v)
            .map(|(e, _)| EdgeId(e))
            .collect()
    }

    pub fn max_preimage(&self) -> usize {
        self.preimage_counts().into_iter().max().unwrap_or(0)
    }

    pub fn is_bounded_by(&self, k: usize) -> bool {
        self.max_preimage() <= k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn checks_incidence() {
        let h = Hypergraph::from_edges(3, &[[0, 1]]).unwrap();
        assert_eq!(
            Orientation::new(&h, vec![VertexId(2)]),
            Err(Error::NotIncident {
                edge: EdgeId(0),
                vertex: VertexId(2)
            })
        );
        assert!(Orientation::new(&h, vec![]).is_err());
    }

    #[test]
    fn single_edge_counts() {
        let h = Hypergraph::from_edges(2, &[[0, 1]]).unwrap();
        let f = Orientation::new(&h, vec![VertexId(0)]).unwrap();
        assert_eq!(f.preimage_counts(), [1, 0]);
    }

    #[test]
    fn cyclic_triangle_counts() {
        let h = Hypergraph::from_edges(3, &[[0, 1], [1, 2], [2, 0]]).unwrap();
        let f = Orientation::new(&h, vec![VertexId(1), VertexId(2), VertexId(0)]).unwrap();
        assert_eq!(f.preimage_counts(), [1, 1, 1]);
        assert!(f.is_bounded_by(1));
    }

    #[test]
    fn empty_counts() {
        let h = Hypergraph::from_edges::<[usize; 0]>(3, &[]).unwrap();
        assert_eq!(Orientation::least_vertex(&h).preimage_counts(), [0, 0, 0]);
    }
}
