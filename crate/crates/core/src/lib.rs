//! Constructive algorithms on finite sparse hypergraphs.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! - [`hypergraph`], [`graph`], [`orientation`]: the data model.
//! - [`sparsity`]: k-sparsity decisions, bounded and antisymmetric orientations,
//!   homomorphism-based H-orientations.
//! - [`spanning`]: hyperpaths, priority trees, depth-first spanning trees and the
//!   vertex orders derived from them.
//! - [`flows`]: distributions, δ-flows, cycle canceling and path decompositions.
//! - [`encoding`]: turning a finite-to-one set-to-vertex map into an injective one.
//!
//! All iteration is in ascending id order and every tie is broken by least id, so
//! every result is a deterministic function of its input.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod encoding;
mod error;
pub mod flows;
pub mod graph;
pub mod hypergraph;
mod maxflow;
pub mod order;
pub mod orientation;
pub mod spanning;
pub mod sparsity;

pub use error::{Error, Result};
pub use graph::{DirectedGraph, UndirectedGraph};
pub use hypergraph::{EdgeId, Hypergraph, HypergraphBuilder, VertexId};
pub use orientation::Orientation;
