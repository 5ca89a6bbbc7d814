//! Spanning trees carrying alternating sign labelings.
//!
//! For a connected simple graph, [`solve`] finds a spanning tree and a
//! `+`/`-` labeling of its edges such that along the tree path joining the
//! endpoints of any non-tree edge, consecutive edges have opposite signs.
//! [`verify_alternating`] checks that property independently, and the
//! [`oracle`] module brute-forces small instances to cross-check both.

pub mod altsign;
pub mod bench;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod spantree;

pub use altsign::{
    assign_signs, find_improving_swap, monotone_spanning_tree, solve, verify_alternating,
    verify_alternating_edges, verify_monotone, Property, Sign, SignLabeling, Solution, SolveTrace,
    VerificationFailure, VerificationReport,
};
pub use error::{Error, Result};
pub use graph::{Edge, Family, Graph, NormalizationLog, VertexId};
pub use report::SolveReportDocument;
pub use spantree::{
    apply_swap, bfs_tree, delta_potential, fundamental_path, monotone_report, potential, MonotoneReport,
    RootedTree, SwapMove,
};
