//! Hyperpaths, priority trees and depth-first spanning trees, with the orders
//! and orientations derived from them.

pub mod dfst;
pub mod hyperpath;
pub mod priority;

pub use dfst::{
    aux_order, aux_preorder, auxiliary_nodes, b_set, build_dfst, dfst_forest, dfst_orientation,
    edge_ordering, neighbourhood_ordering, validate_dfst, BorderSet, DepthFirstSpanningTree,
    DfstNode, DfstViolation, NodeType,
};
pub use hyperpath::{find_hyperpath, hyperpath_to_edge, is_hyperpath, Hyperpath};
pub use priority::{
    branches, build_priority_tree, edge_order, is_branch, priority_tree_linear_order,
    priority_tree_preorder, vertex_equiv, EquivClass, PriorityStep, PriorityTree,
    DEFAULT_BRANCH_CAP,
};
