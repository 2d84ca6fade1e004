//! Weighted PageRank: instead of splitting a page's rank evenly over its
//! out-links, each link (m, n) carries a popularity weight pair. The
//! in-weight is n's in-degree over the summed in-degrees of m's reference
//! list, the out-weight likewise with out-degrees. Both weight families
//! sum to 1 over each reference list, which keeps the recursion a
//! contraction for damping below 1.

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId};
use crate::solver::{self, IterationTrace, RankVector, SolverConfig};

/// In-degree popularity weight of the link (m, n).
///
/// Falls back to an equal split over m's reference list when the
/// denominator is zero, preserving the row-sum-1 invariant.
pub fn in_weight(g: &DirectedGraph, m: NodeId, n: NodeId) -> Result<f64> {
    require_edge(g, m, n)?;
    let refs = g.references(m);
    let denom: usize = refs.iter().map(|&p| g.in_degree(p)).sum();
    if denom == 0 {
        Ok(1.0 / refs.len() as f64)
    } else {
        Ok(g.in_degree(n) as f64 / denom as f64)
    }
}

/// Out-degree popularity weight of the link (m, n), same fallback.
pub fn out_weight(g: &DirectedGraph, m: NodeId, n: NodeId) -> Result<f64> {
    require_edge(g, m, n)?;
    let refs = g.references(m);
    let denom: usize = refs.iter().map(|&p| g.out_degree(p)).sum();
    if denom == 0 {
        Ok(1.0 / refs.len() as f64)
    } else {
        Ok(g.out_degree(n) as f64 / denom as f64)
    }
}

fn require_edge(g: &DirectedGraph, m: NodeId, n: NodeId) -> Result<()> {
    if g.has_edge(m, n) {
        Ok(())
    } else {
        Err(Error::NotAnEdge {
            from: g.label(m).to_owned(),
            to: g.label(n).to_owned(),
        })
    }
}

/// One weighted-rank update: `(1-d) + d * sum of rank * w_in * w_out`.
///
/// Exposed as a pure function so weight products from any source, not
/// just [`LinkWeightTable`], can be evaluated directly.
pub fn wpr_update(incoming: &[(f64, f64, f64)], damping: f64) -> f64 {
    let sum: f64 = incoming
        .iter()
        .map(|&(rank, w_in, w_out)| rank * w_in * w_out)
        .sum();
    (1.0 - damping) + damping * sum
}

/// Per-edge weight pairs, precomputed once from the static graph.
///
/// Entries are aligned with `g.backlinks(n)`: `incoming(n)[k]` is the
/// weight pair of the edge from `g.backlinks(n)[k]` into `n`.
#[derive(Debug, Clone)]
pub struct LinkWeightTable {
    by_target: Vec<Vec<(f64, f64)>>,
}

impl LinkWeightTable {
    pub fn new(g: &DirectedGraph) -> Self {
        // denominators per source node
        let sums: Vec<(usize, usize, usize)> = g
            .node_ids()
            .map(|m| {
                let refs = g.references(m);
                let in_sum = refs.iter().map(|&p| g.in_degree(p)).sum();
                let out_sum = refs.iter().map(|&p| g.out_degree(p)).sum();
                (in_sum, out_sum, refs.len())
            })
            .collect();
        let by_target = g
            .node_ids()
            .map(|n| {
                g.backlinks(n)
                    .iter()
                    .map(|&m| {
                        let (in_sum, out_sum, ref_count) = sums[m.index()];
                        let w_in = if in_sum == 0 {
                            1.0 / ref_count as f64
                        } else {
                            g.in_degree(n) as f64 / in_sum as f64
                        };
                        let w_out = if out_sum == 0 {
                            1.0 / ref_count as f64
                        } else {
                            g.out_degree(n) as f64 / out_sum as f64
                        };
                        (w_in, w_out)
                    })
                    .collect()
            })
            .collect();
        Self { by_target }
    }

    /// Weight pairs `(w_in, w_out)` of the edges into `n`, aligned with
    /// `backlinks(n)`.
    pub fn incoming(&self, n: NodeId) -> &[(f64, f64)] {
        &self.by_target[n.index()]
    }
}

/// Weighted PageRank over the shared solver chassis (sequential default).
pub fn weighted_pagerank(
    g: &DirectedGraph,
    config: &SolverConfig,
) -> Result<(RankVector, IterationTrace)> {
    let table = LinkWeightTable::new(g);
    let order: Vec<NodeId> = g.node_ids().collect();
    let d = config.damping;
    let rule = |node: NodeId, scores: &[f64]| {
        let incoming: Vec<(f64, f64, f64)> = g
            .backlinks(node)
            .iter()
            .zip(table.incoming(node))
            .map(|(&m, &(w_in, w_out))| (scores[m.index()], w_in, w_out))
            .collect();
        wpr_update(&incoming, d)
    };
    let (mut rank, trace) = solver::iterate(rule, &order, config)?;
    rank.algorithm = "wpr".to_owned();
    Ok((rank, trace))
}
