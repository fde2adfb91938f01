use hyperorient_core::encoding::{refine_to_injective, verify_encoding, FiniteSetFunction};
use hyperorient_core::flows::{compute_delta_flow, decompose_flow_paths, induced_distribution};
use hyperorient_core::spanning::{build_dfst, dfst_orientation, validate_dfst};
use hyperorient_core::sparsity::{antisymmetric_orientation, bounded_orientation, is_k_sparse};
use hyperorient_core::{Error, Hypergraph, UndirectedGraph, VertexId};

fn cycle(n: usize) -> UndirectedGraph {
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    UndirectedGraph::from_pairs(n, &pairs).unwrap()
}

#[test]
fn k4_orientations() {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let g = UndirectedGraph::from_pairs(4, &pairs).unwrap();
    let h = g.hypergraph();
    assert!(!is_k_sparse(h, 1).is_sparse);
    assert!(matches!(
        bounded_orientation(h, 1),
        Err(Error::NotKSparse { .. })
    ));

    let f = bounded_orientation(h, 2).unwrap();
    assert!(f.is_bounded_by(2));
    let f = antisymmetric_orientation(h, 2).unwrap();
    assert!(f.max_preimage() <= 2 * 2 * 2);
}

#[test]
fn dfst_of_a_hyperedge_fan() {
    let h = Hypergraph::from_edges(5, &[vec![0, 1, 2], vec![2, 3], vec![1, 3, 4]]).unwrap();
    let t = build_dfst(&h, VertexId(0)).unwrap();
    assert!(validate_dfst(&h, &t).is_empty());
    let f = dfst_orientation(&h).unwrap();
    for e in h.edge_ids() {
        assert!(h.contains(e, f.head(e)));
    }
}

#[test]
fn sets_on_a_cycle_encode_injectively() {
    let g = cycle(6);
    let mut h = FiniteSetFunction::new(6);
    let v = VertexId;
    h.insert(&[v(0), v(1)], v(0)).unwrap();
    h.insert(&[v(2)], v(0)).unwrap();
    h.insert(&[v(3), v(4), v(5)], v(0)).unwrap();
    h.insert(&[], v(3)).unwrap();

    let d = induced_distribution(&h, &g).unwrap();
    assert_eq!(d.values(), &[3, 0, 0, 1, 0, 0]);
    let f = compute_delta_flow(&g, &d, 1).unwrap();
    let paths = decompose_flow_paths(&g, &f, &d).unwrap();
    assert_eq!(paths.start_counts(6), d.values());
    assert!(paths.end_counts(6).iter().all(|&c| c <= 1));

    let r = refine_to_injective(&g, &h, 1).unwrap();
    assert!(verify_encoding(&h, &r.h0, &r.gmap));
    assert!(r.h0.is_injective());
}

#[test]
fn overloaded_vertex_is_rejected() {
    let g = cycle(4);
    let mut h = FiniteSetFunction::new(4);
    for s in [[0, 1], [1, 2], [2, 3], [0, 3], [0, 2]] {
        h.insert(&[VertexId(s[0]), VertexId(s[1])], VertexId(0))
            .unwrap();
    }
    let err = refine_to_injective(&g, &h, 1).unwrap_err();
    assert!(
        matches!(err, Error::NotSparseDistribution { .. }),
        "{err:?}"
    );
}
