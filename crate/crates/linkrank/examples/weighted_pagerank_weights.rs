//! Inspect the popularity weights behind weighted PageRank and run the
//! full iteration. Each link (m, n) carries an in-weight (n's share of
//! the in-degrees over m's reference list) and an out-weight (same with
//! out-degrees); rank flows along the product instead of an even split.
//!
//! Run with: cargo run --example weighted_pagerank_weights

use linkrank::weighted::{in_weight, out_weight};
use linkrank::{to_ranking, weighted_pagerank, DirectedGraph, SolverConfig};

fn main() -> linkrank::Result<()> {
    let graph = DirectedGraph::from_pairs(
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
    )?;

    println!("per-link popularity weights:\n");
    println!("{:>8} {:>10} {:>10} {:>10}", "link", "w_in", "w_out", "product");
    for m in graph.node_ids() {
        for &n in graph.references(m) {
            let w_in = in_weight(&graph, m, n)?;
            let w_out = out_weight(&graph, m, n)?;
            println!(
                "{:>8} {w_in:>10.6} {w_out:>10.6} {:>10.6}",
                format!("{} -> {}", graph.label(m), graph.label(n)),
                w_in * w_out
            );
        }
    }

    let (rank, trace) = weighted_pagerank(&graph, &SolverConfig::default())?;
    println!(
        "\nconverged in {} sweeps; first sweep was {:?}",
        rank.iterations_used,
        trace.snapshots[1]
            .iter()
            .map(|v| (v * 1e7).round() / 1e7)
            .collect::<Vec<_>>()
    );
    let ranking = to_ranking(&rank);
    println!("\nranking (best first, {} near-tie(s) broken by index):", ranking.tie_breaks);
    for node in &ranking.order {
        println!(
            "  {}  {:.10}",
            graph.label(*node),
            rank.scores[node.index()]
        );
    }
    Ok(())
}
