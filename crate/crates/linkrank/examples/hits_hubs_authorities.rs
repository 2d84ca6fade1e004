//! Hubs and authorities: root-set expansion plus the alternating
//! half-sweep iteration. A good hub points at good authorities; a good
//! authority is pointed at by good hubs.
//!
//! Run with: cargo run --example hits_hubs_authorities

use linkrank::{expand_root_set, hits, DirectedGraph, SolverConfig};

fn main() -> linkrank::Result<()> {
    // a query-ish neighborhood: three index pages link to a survey, the
    // survey links out to two primary sources, one index also links to a
    // mirror of the survey
    let graph = DirectedGraph::from_pairs(
        &[
            ("idx1", "survey"),
            ("idx2", "survey"),
            ("idx3", "survey"),
            ("survey", "paper1"),
            ("survey", "paper2"),
            ("idx1", "mirror"),
            ("mirror", "paper1"),
        ],
        false,
    )?;

    // sampling step: grow a root set into the base set
    let roots = vec![graph.try_node("survey")?];
    let base = expand_root_set(&graph, &roots, 50);
    let base_labels: Vec<&str> = base.iter().map(|&n| graph.label(n)).collect();
    println!("root {{survey}} expands to base set {base_labels:?}\n");

    let config = SolverConfig {
        tolerance: 1e-12,
        max_iterations: 1000,
        ..SolverConfig::default()
    };
    let scores = hits(&graph, &base, &config)?;
    println!(
        "iterative step converged after {} sweeps\n",
        scores.iterations_used
    );
    println!("{:>8} {:>12} {:>12}", "page", "hub", "authority");
    for node in &base {
        println!(
            "{:>8} {:>12.8} {:>12.8}",
            graph.label(*node),
            scores.hub[node.index()],
            scores.authority[node.index()]
        );
    }
    println!("\nthe survey is the authority; the index pages are the hubs.");
    Ok(())
}
