//! Rank-order comparison between algorithms.
//!
//! Scores become rankings (best first, near-ties broken by node index)
//! and rankings are compared with Kendall's tau over all node pairs.
//! Near-ties matter on small graphs where two pages can separate only in
//! the fourth decimal, so every ranking carries the number of tie-breaks
//! that were applied instead of hiding them.

use crate::error::{Error, Result};
use crate::graph::NodeId;
use crate::solver::RankVector;

/// Scores closer than this are treated as tied and ordered by index.
pub const TIE_EPSILON: f64 = 1e-9;

/// A permutation of the graph's nodes, best first.
#[derive(Debug, Clone)]
pub struct Ranking {
    pub order: Vec<NodeId>,
    pub algorithm: String,
    /// Number of adjacent near-tie pairs resolved by node index.
    pub tie_breaks: usize,
}

/// Order nodes by descending score, breaking near-ties (within
/// [`TIE_EPSILON`]) by ascending node index.
pub fn to_ranking(rank: &RankVector) -> Ranking {
    let mut order: Vec<usize> = (0..rank.scores.len()).collect();
    order.sort_by(|&a, &b| {
        rank.scores[b]
            .partial_cmp(&rank.scores[a])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.cmp(&b))
    });

    // regroup chains of near-equal scores and settle them by index
    let mut tie_breaks = 0;
    let mut start = 0;
    while start < order.len() {
        let mut end = start;
        while end + 1 < order.len()
            && (rank.scores[order[end]] - rank.scores[order[end + 1]]).abs() <= TIE_EPSILON
        {
            end += 1;
        }
        if end > start {
            order[start..=end].sort_unstable();
            tie_breaks += end - start;
        }
        start = end + 1;
    }

    Ranking {
        order: order.into_iter().map(NodeId).collect(),
        algorithm: rank.algorithm.clone(),
        tie_breaks,
    }
}

/// Kendall's tau over all unordered node pairs:
/// (concordant - discordant) / (n(n-1)/2). Requires both rankings to
/// cover the same node set. Degenerate rankings of fewer than two nodes
/// compare as identical (tau 1).
pub fn kendall_tau(x: &Ranking, y: &Ranking) -> Result<f64> {
    if x.order.len() != y.order.len() {
        return Err(Error::MismatchedNodeSets);
    }
    let n = x.order.len();
    let position = |ranking: &Ranking| -> Result<Vec<usize>> {
        let mut pos = vec![usize::MAX; n];
        for (p, node) in ranking.order.iter().enumerate() {
            if node.index() >= n || pos[node.index()] != usize::MAX {
                return Err(Error::MismatchedNodeSets);
            }
            pos[node.index()] = p;
        }
        Ok(pos)
    };
    let pos_x = position(x)?;
    let pos_y = position(y)?;
    if n < 2 {
        return Ok(1.0);
    }

    let mut concordant = 0i64;
    let mut discordant = 0i64;
    for u in 0..n {
        for v in (u + 1)..n {
            let dx = pos_x[u] as i64 - pos_x[v] as i64;
            let dy = pos_y[u] as i64 - pos_y[v] as i64;
            if dx * dy > 0 {
                concordant += 1;
            } else {
                discordant += 1;
            }
        }
    }
    let pairs = (n * (n - 1) / 2) as f64;
    Ok((concordant - discordant) as f64 / pairs)
}
