//! Distance-seeded ranking: pages close to a trusted seed set rank high.
//! An edge out of page i costs log10(out_degree(i)), so hops through
//! link farms are expensive and single-link chains are free.
//!
//! Run with: cargo run --example distance_seeded_ranking

use linkrank::{distance_rank, DirectedGraph};

fn main() -> linkrank::Result<()> {
    let graph = DirectedGraph::from_pairs(
        &[
            ("home", "docs"),
            ("home", "blog"),
            ("docs", "api"),
            ("blog", "post1"),
            ("blog", "post2"),
            ("post1", "api"),
            ("orphan", "island"),
        ],
        false,
    )?;

    let seeds = vec![graph.try_node("home")?];
    let (distances, rank) = distance_rank(&graph, &seeds)?;

    println!("{:>8} {:>12} {:>10}", "page", "distance", "score");
    for node in graph.node_ids() {
        let d = distances.distance[node.index()];
        let shown = if d.is_finite() {
            format!("{d:.6}")
        } else {
            "unreachable".to_owned()
        };
        println!(
            "{:>8} {shown:>12} {:>10.6}",
            graph.label(node),
            rank.scores[node.index()]
        );
    }
    println!("\nhome is the seed (distance 0); the orphan pages score 0.");
    Ok(())
}
