//! Run additive PageRank over a small four-page web graph and print the
//! per-sweep iteration table, the way the classic worked examples
//! tabulate it. Also shows the normalized variant and how the two fixed
//! points relate by the factor N on dangling-free graphs.
//!
//! Run with: cargo run --example pagerank_iteration_table

use linkrank::{
    normalized_pagerank, pagerank, DanglingPolicy, DirectedGraph, SolverConfig, UpdateMode,
};

const EDGES: &str = "\
# four interlinked pages
A B
A C
B A
B C
B D
C A
C B
C D
D A
";

fn main() -> linkrank::Result<()> {
    let graph = DirectedGraph::from_edge_list(EDGES, false)?;

    let config = SolverConfig {
        max_iterations: 40,
        ..SolverConfig::default()
    };
    let (rank, trace) = pagerank(&graph, &config, DanglingPolicy::Drop)?;

    println!("additive PageRank, damping 0.85, sequential sweeps in order A,B,C,D\n");
    print!("{:>5}", "sweep");
    for label in graph.labels() {
        print!("{label:>12}");
    }
    println!("{:>12}", "L1 delta");
    for (k, snapshot) in trace.snapshots.iter().enumerate().take(20) {
        print!("{k:>5}");
        for value in snapshot {
            print!("{value:>12.7}");
        }
        if k == 0 {
            println!("{:>12}", "-");
        } else {
            println!("{:>12.2e}", trace.deltas[k - 1]);
        }
    }

    let n = graph.node_count() as f64;
    let mean = rank.scores.iter().sum::<f64>() / n;
    println!(
        "\nafter {} sweeps (converged: {}), the scores average {mean:.6}",
        rank.iterations_used, rank.converged
    );

    let sync = SolverConfig {
        update_mode: UpdateMode::Synchronous,
        max_iterations: 500,
        ..SolverConfig::default()
    };
    let (normalized, _) = normalized_pagerank(&graph, &sync)?;
    println!("\nnormalized variant (scores sum to 1, random-surfer distribution):");
    for node in graph.node_ids() {
        println!(
            "  {}: {:.7}   (additive / N = {:.7})",
            graph.label(node),
            normalized.scores[node.index()],
            rank.scores[node.index()] / n
        );
    }
    Ok(())
}
