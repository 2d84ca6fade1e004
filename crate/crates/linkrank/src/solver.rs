//! Fixed-point iteration chassis: sweep modes, convergence detection and
//! per-sweep tracing shared by the score-propagation algorithms.
//!
//! Two sweep modes are supported. `Sequential` applies the update rule
//! node by node in the given order, each node reading values already
//! updated earlier in the same sweep (Gauss-Seidel). This is the mode
//! that reproduces hand-worked iteration tables. `Synchronous`
//! computes every node from the previous sweep's vector (Jacobi), which
//! is the mode matching dense matrix fixed-point oracles.

use crate::error::{Error, Result};
use crate::graph::NodeId;

/// How a sweep reads the score vector it updates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpdateMode {
    /// Gauss-Seidel: in-sweep value reuse, single-threaded by nature.
    Sequential,
    /// Jacobi: every node reads the previous sweep's vector.
    Synchronous,
}

/// Shared solver knobs. `damping` is interpreted by the algorithms that
/// use it; HITS ignores it.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub damping: f64,
    /// Convergence threshold on the L1 norm of the per-sweep change.
    pub tolerance: f64,
    pub max_iterations: usize,
    pub update_mode: UpdateMode,
    pub initial_value: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            damping: 0.85,
            tolerance: 1e-8,
            max_iterations: 100,
            update_mode: UpdateMode::Sequential,
            initial_value: 1.0,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.damping) || !self.damping.is_finite() {
            return Err(Error::InvalidConfig {
                reason: format!("damping must lie in [0, 1], got {}", self.damping),
            });
        }
        if self.tolerance <= 0.0 || !self.tolerance.is_finite() {
            return Err(Error::InvalidConfig {
                reason: format!("tolerance must be positive, got {}", self.tolerance),
            });
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig {
                reason: "max_iterations must be at least 1".into(),
            });
        }
        if !self.initial_value.is_finite() {
            return Err(Error::InvalidConfig {
                reason: format!("initial value must be finite, got {}", self.initial_value),
            });
        }
        Ok(())
    }
}

/// Per-node scores plus run metadata. Hitting `max_iterations` is a
/// reported status, not an error: partial rankings are still rankings.
#[derive(Debug, Clone)]
pub struct RankVector {
    /// One score per node, indexed by `NodeId::index`.
    pub scores: Vec<f64>,
    pub algorithm: String,
    pub converged: bool,
    pub iterations_used: usize,
}

/// Full score vector after every sweep (snapshot 0 is the initial state)
/// and the L1 change of each sweep.
#[derive(Debug, Clone, Default)]
pub struct IterationTrace {
    pub snapshots: Vec<Vec<f64>>,
    pub deltas: Vec<f64>,
}

pub fn l1_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

pub fn l2_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Run `rule` to a fixed point over the nodes in `node_order`, which must
/// be a permutation of the graph's dense index space.
///
/// Stops when the L1 change of a sweep drops below `config.tolerance`
/// (converged) or after `config.max_iterations` sweeps (not converged,
/// not an error). A non-finite score aborts the run.
pub fn iterate<F>(
    rule: F,
    node_order: &[NodeId],
    config: &SolverConfig,
) -> Result<(RankVector, IterationTrace)>
where
    F: Fn(NodeId, &[f64]) -> f64,
{
    config.validate()?;
    let n = node_order.len();
    let mut scores = vec![config.initial_value; n];
    let mut trace = IterationTrace {
        snapshots: vec![scores.clone()],
        deltas: Vec::new(),
    };
    let mut converged = false;
    let mut iterations_used = 0;

    for sweep in 1..=config.max_iterations {
        let prev = scores.clone();
        match config.update_mode {
            UpdateMode::Sequential => {
                for &node in node_order {
                    let value = rule(node, &scores);
                    if !value.is_finite() {
                        return Err(Error::NonFiniteScore {
                            node: node.index(),
                            sweep,
                        });
                    }
                    scores[node.index()] = value;
                }
            }
            UpdateMode::Synchronous => {
                let mut next = prev.clone();
                for &node in node_order {
                    let value = rule(node, &prev);
                    if !value.is_finite() {
                        return Err(Error::NonFiniteScore {
                            node: node.index(),
                            sweep,
                        });
                    }
                    next[node.index()] = value;
                }
                scores = next;
            }
        }
        let delta = l1_distance(&scores, &prev);
        trace.snapshots.push(scores.clone());
        trace.deltas.push(delta);
        iterations_used = sweep;
        if delta < config.tolerance {
            converged = true;
            break;
        }
    }

    Ok((
        RankVector {
            scores,
            algorithm: "fixed-point".to_owned(),
            converged,
            iterations_used,
        },
        trace,
    ))
}
