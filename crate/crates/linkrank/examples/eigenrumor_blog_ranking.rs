//! Agent-to-object ranking for a blog corpus. Bloggers carry hub and
//! authority scores; entries are scored from who authored them (P
//! edges) and who linked to them (E edges). A brand-new entry with no
//! in-links still scores when its author has earned authority, which is
//! the point of ranking through agents instead of page-to-page links.
//!
//! Run with: cargo run --example eigenrumor_blog_ranking

use linkrank::{eigenrumor, AgentObjectGraph, SolverConfig};

const LINKS: &str = "\
# blogger  kind  entry   (P = authored, E = linked to)
alice  P  intro-to-graphs
carol  P  rank-survey
bob    P  crawl-notes
carol  P  fresh-draft
bob    E  intro-to-graphs
carol  E  intro-to-graphs
alice  E  rank-survey
bob    E  rank-survey
carol  E  crawl-notes
";

fn main() -> linkrank::Result<()> {
    let bg = AgentObjectGraph::parse(LINKS)?;
    let config = SolverConfig {
        tolerance: 1e-12,
        max_iterations: 5000,
        ..SolverConfig::default()
    };
    let scores = eigenrumor(&bg, 0.5, &config)?;

    println!(
        "{} bloggers, {} entries; converged after {} sweeps\n",
        bg.agent_count(),
        bg.object_count(),
        scores.iterations_used
    );

    let mut entries: Vec<usize> = (0..bg.object_count()).collect();
    entries.sort_by(|&a, &b| {
        scores.object_score[b]
            .partial_cmp(&scores.object_score[a])
            .unwrap()
    });
    println!("entries by score:");
    for o in entries {
        println!("  {:<18} {:.8}", bg.object_label(o), scores.object_score[o]);
    }

    println!("\nbloggers (authority = quality of what they author, hub = of what they link to):");
    for a in 0..bg.agent_count() {
        println!(
            "  {:<8} authority {:.8}   hub {:.8}",
            bg.agent_label(a),
            scores.agent_authority[a],
            scores.agent_hub[a]
        );
    }

    let fresh = bg.object("fresh-draft").expect("present in the corpus");
    println!(
        "\nfresh-draft has no in-links yet, but carol's authority gives it {:.8}",
        scores.object_score[fresh]
    );
    Ok(())
}
