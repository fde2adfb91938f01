//! Seeded random instances. Every generator is a pure function of the RNG state.

use std::collections::BTreeSet;

use hyperorient_core::encoding::FiniteSetFunction;
use hyperorient_core::flows::{self, Distribution, Flow};
use hyperorient_core::{EdgeId, Hypergraph, UndirectedGraph, VertexId};
use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One independent stream per `(seed, stream)` pair.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn random_edge(rng: &mut impl Rng, n: usize, rank: usize) -> Vec<usize> {
    let size = rng.gen_range(1..=rank.min(n));
    let mut members = (0..n).choose_multiple(rng, size);
    members.sort_unstable();
    members
}

/// `m` edges of size `1..=rank` over `n ≥ 1` vertices.
pub fn hypergraph(rng: &mut impl Rng, n: usize, rank: usize, m: usize) -> Hypergraph {
    let edges: Vec<Vec<usize>> = (0..m).map(|_| random_edge(rng, n, rank)).collect();
    Hypergraph::from_edges(n, &edges).expect("generated edges are valid")
}

/// A connected hypergraph: vertex `i > 0` first appears in an edge with some
/// earlier vertex, then `extra` random edges follow. Edge order is shuffled.
pub fn connected_hypergraph(rng: &mut impl Rng, n: usize, rank: usize, extra: usize) -> Hypergraph {
    let rank = rank.max(2);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for v in 1..n {
        let mut e = BTreeSet::from([v, rng.gen_range(0..v)]);
        let size = rng.gen_range(2..=rank.min(v + 1));
        while e.len() < size {
            e.insert(rng.gen_range(0..=v));
        }
        edges.push(e.into_iter().collect());
    }
    for _ in 0..extra {
        edges.push(random_edge(rng, n, rank));
    }
    edges.shuffle(rng);
    Hypergraph::from_edges(n.max(1), &edges).expect("generated edges are valid")
}

/// A simple graph with maximum degree at most `d`: random pairs are accepted
/// while both ends have spare degree.
pub fn bounded_degree_graph(rng: &mut impl Rng, n: usize, d: usize) -> UndirectedGraph {
    let mut degree = vec![0; n];
    let mut pairs = BTreeSet::new();
    if n >= 2 {
        for _ in 0..n * d * 2 {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let key = (u.min(v), u.max(v));
            if u != v && degree[u] < d && degree[v] < d && pairs.insert(key) {
                degree[u] += 1;
                degree[v] += 1;
            }
        }
    }
    UndirectedGraph::from_pairs(n, &pairs.into_iter().collect::<Vec<_>>())
        .expect("pairs are simple")
}

/// A simple graph with `m` attempted random pairs.
pub fn graph(rng: &mut impl Rng, n: usize, m: usize) -> UndirectedGraph {
    let mut pairs = BTreeSet::new();
    if n >= 2 {
        for _ in 0..m {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v {
                pairs.insert((u.min(v), u.max(v)));
            }
        }
    }
    UndirectedGraph::from_pairs(n, &pairs.into_iter().collect::<Vec<_>>())
        .expect("pairs are simple")
}

/// The `rows × cols` grid, vertices numbered row by row.
pub fn grid(rows: usize, cols: usize) -> UndirectedGraph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut pairs = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                pairs.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                pairs.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    UndirectedGraph::from_pairs(rows * cols, &pairs).expect("grid pairs are simple")
}

pub fn distribution(rng: &mut impl Rng, n: usize, max: usize) -> Distribution {
    Distribution::from_values((0..n).map(|_| rng.gen_range(0..=max)).collect())
}

/// A random distribution cut down until it is `k`-sparse: while a violating
/// set exists, one unit is removed from a random member with positive demand.
pub fn sparse_distribution(
    rng: &mut impl Rng,
    g: &UndirectedGraph,
    k: usize,
    max: usize,
) -> Distribution {
    let mut d = distribution(rng, g.vertex_count(), max);
    loop {
        let report = flows::is_k_sparse_distribution(g, &d, k).expect("lengths agree");
        let Some(witness) = report.witness else {
            return d;
        };
        let v = *witness
            .iter()
            .filter(|&&v| d.get(v) > 0)
            .choose(rng)
            .expect("a violating set has positive demand");
        d.set(v, d.get(v) - 1).expect("v is a vertex");
    }
}

/// A random integer circulation: unit-to-`max` flow pushed around random
/// cycles of `g`, found by random walks.
pub fn circulation(rng: &mut impl Rng, g: &UndirectedGraph, cycles: usize, max: i64) -> Flow {
    let mut f = Flow::zero(g.vertex_count());
    for _ in 0..cycles {
        let Some(start) = g.vertices().filter(|&v| g.degree(v) > 0).choose(rng) else {
            break;
        };
        let mut walk = vec![start];
        let mut pos: std::collections::BTreeMap<VertexId, usize> = [(start, 0)].into();
        let cycle = loop {
            let u = *walk.last().expect("walks are nonempty");
            let prev = walk.len().checked_sub(2).map(|i| walk[i]);
            let options: Vec<VertexId> = g
                .neighbours(u)
                .iter()
                .map(|&(w, _)| w)
                .filter(|&w| Some(w) != prev)
                .collect();
            let Some(&w) = options.choose(rng) else {
                break None;
            };
            if let Some(&i) = pos.get(&w) {
                break Some(walk[i..].to_vec());
            }
            pos.insert(w, walk.len());
            walk.push(w);
        };
        let Some(cycle) = cycle else { continue };
        let c = rng.gen_range(1..=max);
        for i in 0..cycle.len() {
            let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let old = f.value(u, v);
            f.set(g, u, v, old + c).expect("cycle arcs are edges");
        }
    }
    f
}

/// Up to `max_sets` random sets with random images, each accepted only if the
/// induced distribution stays `k`-sparse.
pub fn set_function(
    rng: &mut impl Rng,
    g: &UndirectedGraph,
    k: usize,
    max_sets: usize,
    max_set_size: usize,
) -> FiniteSetFunction {
    let n = g.vertex_count();
    let mut h = FiniteSetFunction::new(n);
    let mut d = Distribution::zero(n);
    for _ in 0..max_sets {
        let size = rng.gen_range(0..=max_set_size.min(n));
        let set: Vec<VertexId> = (0..n)
            .choose_multiple(rng, size)
            .into_iter()
            .map(VertexId)
            .collect();
        let image = VertexId(rng.gen_range(0..n));
        let mut sorted = set.clone();
        sorted.sort_unstable();
        if h.get(&sorted).is_some() {
            continue;
        }
        d.set(image, d.get(image) + 1).expect("image is a vertex");
        if flows::is_k_sparse_distribution(g, &d, k)
            .expect("lengths agree")
            .is_sparse
        {
            h.insert(&set, image).expect("fresh set");
        } else {
            d.set(image, d.get(image) - 1).expect("image is a vertex");
        }
    }
    h
}

/// A nonempty random subset of the edges, of size at most `max`.
pub fn edge_subset(rng: &mut impl Rng, h: &Hypergraph, max: usize) -> Vec<EdgeId> {
    let size = rng.gen_range(1..=max.min(h.edge_count()).max(1));
    let mut picked = h.edge_ids().choose_multiple(rng, size);
    picked.sort_unstable();
    picked
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic_and_valid() {
        let a = connected_hypergraph(&mut rng(5, 0), 12, 4, 6);
        let b = connected_hypergraph(&mut rng(5, 0), 12, 4, 6);
        assert_eq!(a, b);
        assert!(a.is_connected() && a.rank() <= 4);

        let g = bounded_degree_graph(&mut rng(1, 2), 30, 4);
        assert!(g.max_degree() <= 4);
        assert_eq!(grid(4, 5).edge_count(), 31);

        let g = graph(&mut rng(2, 0), 10, 20);
        let d = sparse_distribution(&mut rng(2, 1), &g, 1, 5);
        assert!(
            flows::is_k_sparse_distribution_bruteforce_default(&g, &d, 1)
                .unwrap()
                .is_sparse
        );

        let f = circulation(&mut rng(3, 0), &g, 5, 3);
        assert!(f.defect().iter().all(|&x| x == 0));

        let h = set_function(&mut rng(4, 0), &g, 1, 30, 4);
        let d = flows::induced_distribution(&h, &g).unwrap();
        assert!(
            flows::is_k_sparse_distribution(&g, &d, 1)
                .unwrap()
                .is_sparse
        );
    }
}
