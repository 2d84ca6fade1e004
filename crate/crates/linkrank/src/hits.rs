//! Hubs and authorities over an induced subgraph.
//!
//! The sampling step grows a root set into a base set (every successor,
//! plus a capped number of predecessors per root, picked in index
//! order). The iterative step alternates the two half-sweeps: authority
//! scores from hub scores over backlinks, then hub scores from the fresh
//! authority scores over references, L2-normalizing after each half.
//! With that normalization the converged authority vector is a principal
//! eigenvector of AᵀA and the hub vector of AAᵀ for the induced
//! adjacency A, which is what the oracle tests check. Damping does not
//! apply here; only tolerance and max_iterations are read from the
//! config.

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId};
use crate::solver::{l1_distance, l2_norm, SolverConfig};

/// Hub and authority scores, full graph length; entries outside the
/// working node set stay zero. Each vector has unit L2 norm after every
/// sweep.
#[derive(Debug, Clone)]
pub struct HubAuthScores {
    pub hub: Vec<f64>,
    pub authority: Vec<f64>,
    pub iterations_used: usize,
    pub converged: bool,
}

/// Grow a root set into the base set: each root brings in all of its
/// successors and up to `per_node_cap` predecessors (chosen in index
/// order). Returns the set in index order.
pub fn expand_root_set(g: &DirectedGraph, roots: &[NodeId], per_node_cap: usize) -> Vec<NodeId> {
    let mut in_set = vec![false; g.node_count()];
    for &r in roots {
        in_set[r.index()] = true;
    }
    for &r in roots {
        for &succ in g.references(r) {
            in_set[succ.index()] = true;
        }
        for &pred in g.backlinks(r).iter().take(per_node_cap) {
            in_set[pred.index()] = true;
        }
    }
    g.node_ids().filter(|n| in_set[n.index()]).collect()
}

fn membership(g: &DirectedGraph, nodes: &[NodeId]) -> Vec<bool> {
    let mut in_set = vec![false; g.node_count()];
    for &n in nodes {
        in_set[n.index()] = true;
    }
    in_set
}

/// Pre-normalization authority half-sweep: each working node sums the
/// hub scores of its in-set backlinks.
pub fn authority_update(g: &DirectedGraph, nodes: &[NodeId], hub: &[f64]) -> Vec<f64> {
    let in_set = membership(g, nodes);
    let mut authority = vec![0.0; g.node_count()];
    for &p in nodes {
        // fold from +0.0: an empty sum::<f64>() is -0.0
        authority[p.index()] = g
            .backlinks(p)
            .iter()
            .filter(|q| in_set[q.index()])
            .fold(0.0, |acc, q| acc + hub[q.index()]);
    }
    authority
}

/// Pre-normalization hub half-sweep: each working node sums the
/// authority scores of its in-set references.
pub fn hub_update(g: &DirectedGraph, nodes: &[NodeId], authority: &[f64]) -> Vec<f64> {
    let in_set = membership(g, nodes);
    let mut hub = vec![0.0; g.node_count()];
    for &p in nodes {
        hub[p.index()] = g
            .references(p)
            .iter()
            .filter(|q| in_set[q.index()])
            .fold(0.0, |acc, q| acc + authority[q.index()]);
    }
    hub
}

fn normalized(v: Vec<f64>) -> Result<Vec<f64>> {
    let norm = l2_norm(&v);
    if norm == 0.0 {
        return Err(Error::DegenerateVector {
            vector: "hub/authority",
        });
    }
    Ok(v.into_iter().map(|x| x / norm).collect())
}

/// Iterate hubs and authorities on the subgraph induced by `nodes`.
///
/// All working-set weights start at 1. Stops when the L1 change of the
/// concatenated (hub, authority) pair drops below `config.tolerance`.
pub fn hits(g: &DirectedGraph, nodes: &[NodeId], config: &SolverConfig) -> Result<HubAuthScores> {
    config.validate()?;
    if nodes.is_empty() {
        return Err(Error::EmptyNodeSet);
    }
    let in_set = membership(g, nodes);
    let induced_edges = nodes
        .iter()
        .flat_map(|&p| g.references(p))
        .filter(|q| in_set[q.index()])
        .count();
    if induced_edges == 0 {
        return Err(Error::NoEdgesInSubgraph);
    }

    let mut hub = vec![0.0; g.node_count()];
    let mut authority = vec![0.0; g.node_count()];
    for &n in nodes {
        hub[n.index()] = 1.0;
        authority[n.index()] = 1.0;
    }

    let mut converged = false;
    let mut iterations_used = 0;
    for sweep in 1..=config.max_iterations {
        let new_authority = normalized(authority_update(g, nodes, &hub))?;
        let new_hub = normalized(hub_update(g, nodes, &new_authority))?;
        let delta =
            l1_distance(&new_authority, &authority) + l1_distance(&new_hub, &hub);
        authority = new_authority;
        hub = new_hub;
        iterations_used = sweep;
        if delta < config.tolerance {
            converged = true;
            break;
        }
    }

    Ok(HubAuthScores {
        hub,
        authority,
        iterations_used,
        converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_pages() -> DirectedGraph {
        DirectedGraph::from_pairs(
            &[
                ("A", "B"),
                ("A", "C"),
                ("B", "A"),
                ("B", "C"),
                ("B", "D"),
                ("C", "A"),
                ("C", "B"),
                ("C", "D"),
                ("D", "A"),
            ],
            false,
        )
        .unwrap()
    }

    /// Three hubs pointing at P, which points at two sinks.
    fn star() -> DirectedGraph {
        DirectedGraph::from_pairs(
            &[
                ("Q1", "P"),
                ("Q2", "P"),
                ("Q3", "P"),
                ("P", "R1"),
                ("P", "R2"),
            ],
            false,
        )
        .unwrap()
    }

    fn all_nodes(g: &DirectedGraph) -> Vec<NodeId> {
        g.node_ids().collect()
    }

    #[test]
    fn root_set_expansion_covers_neighbors() {
        let g = four_pages();
        let roots = vec![g.node("A").unwrap()];
        let base = expand_root_set(&g, &roots, 50);
        assert_eq!(base.len(), 4);
    }

    #[test]
    fn root_set_expansion_respects_predecessor_cap() {
        let g = DirectedGraph::from_pairs(&[("X", "Y"), ("Y", "Z")], false).unwrap();
        let roots = vec![g.node("Y").unwrap()];
        let labels = |ids: Vec<NodeId>| -> Vec<String> {
            ids.iter().map(|&n| g.label(n).to_owned()).collect()
        };
        assert_eq!(labels(expand_root_set(&g, &roots, 50)), vec!["X", "Y", "Z"]);
        assert_eq!(labels(expand_root_set(&g, &roots, 0)), vec!["Y", "Z"]);
    }

    #[test]
    fn star_first_half_sweep_sums_unit_hubs() {
        let g = star();
        let nodes = all_nodes(&g);
        let unit = vec![1.0; g.node_count()];
        let authority = authority_update(&g, &nodes, &unit);
        let p = g.node("P").unwrap();
        assert_eq!(authority[p.index()], 3.0);
        // and the hub half-sweep mirrors it from authority scores
        let hub = hub_update(&g, &nodes, &unit);
        assert_eq!(hub[p.index()], 2.0);
    }

    #[test]
    fn single_edge_splits_roles_completely() {
        let g = DirectedGraph::from_pairs(&[("X", "Y")], false).unwrap();
        let scores = hits(&g, &all_nodes(&g), &SolverConfig::default()).unwrap();
        assert!(scores.converged);
        let x = g.node("X").unwrap().index();
        let y = g.node("Y").unwrap().index();
        assert!((scores.hub[x] - 1.0).abs() < 1e-12);
        assert!(scores.hub[y].abs() < 1e-12);
        assert!((scores.authority[y] - 1.0).abs() < 1e-12);
        assert!(scores.authority[x].abs() < 1e-12);
    }

    #[test]
    fn unit_norms_after_every_sweep() {
        let g = four_pages();
        let nodes = all_nodes(&g);
        let mut hub = vec![1.0; 4];
        for _ in 0..20 {
            let authority = normalized(authority_update(&g, &nodes, &hub)).unwrap();
            hub = normalized(hub_update(&g, &nodes, &authority)).unwrap();
            assert!((l2_norm(&authority) - 1.0).abs() < 1e-12);
            assert!((l2_norm(&hub) - 1.0).abs() < 1e-12);
            assert!(authority.iter().chain(&hub).all(|&v| v >= 0.0));
        }
    }

    #[test]
    fn degree_zero_nodes_keep_zero_scores() {
        // S has no in-links, T has no out-links
        let g = DirectedGraph::from_pairs(&[("S", "M"), ("M", "T"), ("S", "T")], false).unwrap();
        let scores = hits(&g, &all_nodes(&g), &SolverConfig::default()).unwrap();
        let s = g.node("S").unwrap().index();
        let t = g.node("T").unwrap().index();
        assert_eq!(scores.authority[s], 0.0);
        assert_eq!(scores.hub[t], 0.0);
    }

    #[test]
    fn complete_digraph_is_uniform() {
        let k = 4usize;
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    pairs.push((format!("v{i}"), format!("v{j}")));
                }
            }
        }
        let g = DirectedGraph::from_pairs(&pairs, false).unwrap();
        let scores = hits(&g, &all_nodes(&g), &SolverConfig::default()).unwrap();
        let expected = 1.0 / (k as f64).sqrt();
        for n in 0..k {
            assert!((scores.hub[n] - expected).abs() < 1e-9);
            assert!((scores.authority[n] - expected).abs() < 1e-9);
        }
    }

    #[test]
    fn empty_or_edgeless_working_set_is_rejected() {
        let g = DirectedGraph::from_pairs(&[("X", "Y")], false).unwrap();
        assert!(matches!(
            hits(&g, &[], &SolverConfig::default()),
            Err(Error::EmptyNodeSet)
        ));
        // {X} alone induces no edges
        let only_x = vec![g.node("X").unwrap()];
        assert!(matches!(
            hits(&g, &only_x, &SolverConfig::default()),
            Err(Error::NoEdgesInSubgraph)
        ));
    }

    #[test]
    fn restricting_the_working_set_changes_the_induced_graph() {
        // within {X, Y} the edge Y -> Z is invisible
        let g = DirectedGraph::from_pairs(&[("X", "Y"), ("Y", "Z")], false).unwrap();
        let subset = vec![g.node("X").unwrap(), g.node("Y").unwrap()];
        let scores = hits(&g, &subset, &SolverConfig::default()).unwrap();
        let z = g.node("Z").unwrap().index();
        assert_eq!(scores.authority[z], 0.0);
        assert_eq!(scores.hub[z], 0.0);
        let y = g.node("Y").unwrap().index();
        assert!((scores.authority[y] - 1.0).abs() < 1e-12);
    }
}
