//! Run several algorithms over the same graph and measure how much the
//! resulting orders agree, using Kendall's tau over all node pairs.
//!
//! Run with: cargo run --example compare_rankings

use linkrank::{
    distance_rank, hits, kendall_tau, normalized_pagerank, pagerank, to_ranking,
    weighted_pagerank, DanglingPolicy, DirectedGraph, RankVector, Ranking, SolverConfig,
    UpdateMode,
};

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

    let sequential = SolverConfig {
        max_iterations: 500,
        ..SolverConfig::default()
    };
    let synchronous = SolverConfig {
        update_mode: UpdateMode::Synchronous,
        max_iterations: 500,
        ..SolverConfig::default()
    };

    let mut rankings: Vec<Ranking> = Vec::new();
    let (pr, _) = pagerank(&graph, &sequential, DanglingPolicy::Drop)?;
    rankings.push(to_ranking(&pr));
    let (npr, _) = normalized_pagerank(&graph, &synchronous)?;
    rankings.push(to_ranking(&npr));
    let (wpr, _) = weighted_pagerank(&graph, &sequential)?;
    rankings.push(to_ranking(&wpr));

    let all: Vec<_> = graph.node_ids().collect();
    let ha = hits(&graph, &all, &synchronous)?;
    rankings.push(to_ranking(&RankVector {
        scores: ha.authority,
        algorithm: "hits".to_owned(),
        converged: ha.converged,
        iterations_used: ha.iterations_used,
    }));

    let (_, dr) = distance_rank(&graph, &[graph.try_node("A")?])?;
    rankings.push(to_ranking(&dr));

    for ranking in &rankings {
        let labels: Vec<&str> = ranking.order.iter().map(|&n| graph.label(n)).collect();
        println!(
            "{:<20} {:?}  ({} near-tie(s) broken by index)",
            ranking.algorithm, labels, ranking.tie_breaks
        );
    }

    println!("\npairwise Kendall tau:");
    print!("{:>20}", "");
    for r in &rankings {
        print!("{:>20}", r.algorithm);
    }
    println!();
    for a in &rankings {
        print!("{:>20}", a.algorithm);
        for b in &rankings {
            print!("{:>20.4}", kendall_tau(a, b)?);
        }
        println!();
    }
    Ok(())
}
