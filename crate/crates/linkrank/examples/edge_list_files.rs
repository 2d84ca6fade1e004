//! The two file formats the toolkit reads: whitespace-separated edge
//! lists for page graphs, and three-field agent/object lines for the
//! bipartite ranking. Both skip blank lines and '#' comments and report
//! malformed lines by number.
//!
//! Run with: cargo run --example edge_list_files

use linkrank::{parse_edge_list, AgentObjectGraph, DirectedGraph};

fn main() {
    let pairs = parse_edge_list("# a comment\n\nhome docs\nhome\tblog\ndocs api\n").unwrap();
    println!("parsed {} pairs: {pairs:?}", pairs.len());

    let graph = DirectedGraph::from_pairs(&pairs, false).unwrap();
    println!(
        "{} nodes, {} edges; labels in first-appearance order: {:?}",
        graph.node_count(),
        graph.edge_count(),
        graph.labels().collect::<Vec<_>>()
    );

    // malformed input carries the offending line number
    let err = parse_edge_list("home docs\nblog\n").unwrap_err();
    println!("\nbad unipartite line: {err}");

    let err = AgentObjectGraph::parse("alice P post\nbob X post\n").unwrap_err();
    println!("bad bipartite line:  {err}");

    // self-loops are rejected unless opted in
    let err = DirectedGraph::from_pairs(&[("a", "a")], false).unwrap_err();
    println!("self-loop:           {err}");
    let g = DirectedGraph::from_pairs(&[("a", "a")], true).unwrap();
    println!("opted in:            {} edge kept", g.edge_count());
}
