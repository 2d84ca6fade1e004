//! PageRank in two variants.
//!
//! The additive form keeps the classic recursion
//! `PR(n) = (1-d) + d * sum over backlinks m of PR(m)/C(m)`, whose
//! converged scores average 1 on dangling-free graphs. The normalized
//! form is the random-surfer stationary distribution: scores sum to 1
//! after every sweep. On a dangling-free graph the two fixed points
//! differ exactly by the factor N, which the test suite exploits.

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId};
use crate::solver::{self, IterationTrace, RankVector, SolverConfig, UpdateMode};

/// What to do with the score of nodes that have no out-links.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DanglingPolicy {
    /// Dangling mass contributes nothing, the literal additive recursion.
    #[default]
    Drop,
    /// Each dangling node's score is shared equally among all N nodes
    /// every sweep, conserving total mass.
    Redistribute,
}

fn dangling_nodes(g: &DirectedGraph) -> Vec<usize> {
    g.node_ids()
        .filter(|&n| g.out_degree(n) == 0)
        .map(NodeId::index)
        .collect()
}

/// Additive PageRank over the shared solver chassis.
pub fn pagerank(
    g: &DirectedGraph,
    config: &SolverConfig,
    dangling: DanglingPolicy,
) -> Result<(RankVector, IterationTrace)> {
    let order: Vec<NodeId> = g.node_ids().collect();
    let dangling_idx = dangling_nodes(g);
    let n = g.node_count() as f64;
    let d = config.damping;
    let rule = |node: NodeId, scores: &[f64]| {
        let mut sum: f64 = g
            .backlinks(node)
            .iter()
            .map(|&m| scores[m.index()] / g.out_degree(m) as f64)
            .sum();
        if dangling == DanglingPolicy::Redistribute {
            sum += dangling_idx.iter().map(|&m| scores[m]).sum::<f64>() / n;
        }
        (1.0 - d) + d * sum
    };
    let (mut rank, trace) = solver::iterate(rule, &order, config)?;
    rank.algorithm = "pagerank".to_owned();
    Ok((rank, trace))
}

/// Probability-distribution PageRank: every snapshot sums to 1.
///
/// Dangling mass is always redistributed uniformly (the distribution
/// could not sum to 1 otherwise) and the initial state is uniform 1/N
/// regardless of `config.initial_value`. Synchronous updates are
/// required; a sequential request is rejected because in-sweep value
/// reuse breaks the per-sweep sum-to-1 invariant.
pub fn normalized_pagerank(
    g: &DirectedGraph,
    config: &SolverConfig,
) -> Result<(RankVector, IterationTrace)> {
    if config.update_mode == UpdateMode::Sequential {
        return Err(Error::SequentialUnsupported {
            algorithm: "normalized-pagerank",
        });
    }
    let order: Vec<NodeId> = g.node_ids().collect();
    let dangling_idx = dangling_nodes(g);
    let n = g.node_count() as f64;
    let d = config.damping;
    let rule = |node: NodeId, scores: &[f64]| {
        let linked: f64 = g
            .backlinks(node)
            .iter()
            .map(|&m| scores[m.index()] / g.out_degree(m) as f64)
            .sum();
        let dangling_mass: f64 = dangling_idx.iter().map(|&m| scores[m]).sum();
        (1.0 - d) / n + d * (linked + dangling_mass / n)
    };
    let cfg = SolverConfig {
        initial_value: 1.0 / n,
        ..config.clone()
    };
    let (mut rank, trace) = solver::iterate(rule, &order, &cfg)?;
    rank.algorithm = "normalized-pagerank".to_owned();
    Ok((rank, trace))
}
