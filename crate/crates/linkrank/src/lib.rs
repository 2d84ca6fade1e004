//! linkrank is a small link-analysis toolkit for ranking the nodes of a
//! directed graph. It bundles five algorithms over one graph core and
//! one fixed-point solver:
//!
//! - [`pagerank::pagerank`]: the additive recursion whose converged
//!   scores average 1, plus [`pagerank::normalized_pagerank`], the
//!   probability-distribution variant that sums to 1 every sweep;
//! - [`weighted::weighted_pagerank`]: rank split by in/out-link
//!   popularity weights instead of evenly;
//! - [`hits::hits`]: hub and authority scores on an induced subgraph,
//!   with root-set expansion;
//! - [`distance::distance_rank`]: shortest logarithmic distance from a
//!   seed set, smaller distance ranking higher;
//! - [`eigenrumor::eigenrumor`]: agent-to-object eigenvector scores for
//!   bipartite provision/evaluation links.
//!
//! [`compare`] turns score vectors into rankings and measures agreement
//! with Kendall's tau. [`report`] serializes runs as stable JSON and CSV
//! traces. The `linkrank` binary exposes all of it; see the crate
//! examples for library usage, one runnable example per capability.
//!
//! The sequential (Gauss-Seidel) sweep mode is the default because it
//! reproduces the worked iteration tables this toolkit is tested
//! against; the synchronous (Jacobi) mode matches textbook matrix
//! iteration. See [`solver`] for the exact contract.

pub mod cli;
pub mod compare;
pub mod distance;
pub mod eigenrumor;
mod error;
pub mod graph;
pub mod hits;
pub mod pagerank;
pub mod report;
pub mod solver;
pub mod weighted;

pub use compare::{kendall_tau, to_ranking, Ranking};
pub use distance::{distance_rank, DistanceVector};
pub use eigenrumor::{eigenrumor, AgentObjectGraph, EigenRumorScores};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, DirectedGraph, NodeId};
pub use hits::{expand_root_set, hits, HubAuthScores};
pub use pagerank::{normalized_pagerank, pagerank, DanglingPolicy};
pub use solver::{IterationTrace, RankVector, SolverConfig, UpdateMode};
pub use weighted::{weighted_pagerank, LinkWeightTable};
