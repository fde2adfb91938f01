//! Integral maximum flow by shortest augmenting paths.
//!
//! Arcs are explored in insertion order, so callers that insert arcs in
//! ascending id order get least-id tie-breaking among shortest paths.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    residual: i64,
    rev: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct Network {
    adjacency: Vec<Vec<Arc>>,
}

/// Handle to a stored arc or undirected edge: `(tail, slot)`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ArcKey {
    tail: usize,
    slot: usize,
    capacity: i64,
}

impl Network {
    pub(crate) fn new(nodes: usize) -> Self {
        Self {
            adjacency: alloc::vec![Vec::new(); nodes],
        }
    }

    fn push_pair(&mut self, u: usize, v: usize, forward: i64, backward: i64) -> ArcKey {
        let slot = self.adjacency[u].len();
        let rev = self.adjacency[v].len() + usize::from(u == v);
        self.adjacency[u].push(Arc {
            to: v,
            residual: forward,
            rev,
        });
        self.adjacency[v].push(Arc {
            to: u,
            residual: backward,
            rev: slot,
        });
        ArcKey {
            tail: u,
            slot,
            capacity: forward,
        }
    }

    /// Directed arc `u → v`.
    pub(crate) fn add_arc(&mut self, u: usize, v: usize, capacity: i64) -> ArcKey {
        self.push_pair(u, v, capacity, 0)
    }

    /// Undirected edge usable up to `capacity` in either direction.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize, capacity: i64) -> ArcKey {
        self.push_pair(u, v, capacity, capacity)
    }

    /// Net flow through the arc from its tail to its head.
    pub(crate) fn flow(&self, key: ArcKey) -> i64 {
        key.capacity - self.adjacency[key.tail][key.slot].residual
    }

    /// Maximum flow value from `s` to `t`.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let n = self.adjacency.len();
        let mut total = 0;
        loop {
            let mut prev: Vec<Option<(usize, usize)>> = alloc::vec![None; n];
            let mut seen = alloc::vec![false; n];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for (slot, arc) in self.adjacency[u].iter().enumerate() {
                    if arc.residual > 0 && !seen[arc.to] {
                        seen[arc.to] = true;
                        prev[arc.to] = Some((u, slot));
                        queue.push_back(arc.to);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let mut bottleneck = i64::MAX;
            let mut v = t;
            while let Some((u, slot)) = prev[v] {
                bottleneck = bottleneck.min(self.adjacency[u][slot].residual);
                v = u;
            }
            let mut v = t;
            while let Some((u, slot)) = prev[v] {
                let rev = self.adjacency[u][slot].rev;
                self.adjacency[u][slot].residual -= bottleneck;
                self.adjacency[v][rev].residual += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
    }

    /// Nodes reachable from `s` in the residual network: the source side of a
    /// minimum cut once [`Network::max_flow`] has run.
    pub(crate) fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = alloc::vec![false; self.adjacency.len()];
        seen[s] = true;
        let mut stack = alloc::vec![s];
        while let Some(u) = stack.pop() {
            for arc in &self.adjacency[u] {
                if arc.residual > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }
}
