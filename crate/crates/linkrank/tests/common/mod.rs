//! Independent oracles for the acceptance suite.
//!
//! Everything here recomputes expected values from raw edge lists with
//! its own label-keyed bookkeeping (dense synchronous iteration, power
//! method, exhaustive path enumeration). None of it calls into the
//! library's graph, solver or weight code, so agreement between the two
//! paths is meaningful.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Scores = BTreeMap<String, f64>;

pub fn four_pages_edges() -> Vec<(String, String)> {
    [
        ("A", "B"),
        ("A", "C"),
        ("B", "A"),
        ("B", "C"),
        ("B", "D"),
        ("C", "A"),
        ("C", "B"),
        ("C", "D"),
        ("D", "A"),
    ]
    .iter()
    .map(|&(a, b)| (a.to_owned(), b.to_owned()))
    .collect()
}

/// Label-keyed adjacency derived straight from an edge list.
pub struct Adjacency {
    pub nodes: Vec<String>,
    pub out_nbrs: BTreeMap<String, Vec<String>>,
    pub in_nbrs: BTreeMap<String, Vec<String>>,
}

impl Adjacency {
    pub fn new(edges: &[(String, String)]) -> Self {
        let mut seen = BTreeSet::new();
        let mut nodes = Vec::new();
        let mut out_nbrs: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let mut in_nbrs: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let mut dedup = BTreeSet::new();
        for (src, dst) in edges {
            for label in [src, dst] {
                if seen.insert(label.clone()) {
                    nodes.push(label.clone());
                    out_nbrs.entry(label.clone()).or_default();
                    in_nbrs.entry(label.clone()).or_default();
                }
            }
            if dedup.insert((src.clone(), dst.clone())) {
                out_nbrs.get_mut(src).unwrap().push(dst.clone());
                in_nbrs.get_mut(dst).unwrap().push(src.clone());
            }
        }
        Self {
            nodes,
            out_nbrs,
            in_nbrs,
        }
    }

    pub fn out_degree(&self, n: &str) -> usize {
        self.out_nbrs[n].len()
    }

    pub fn in_degree(&self, n: &str) -> usize {
        self.in_nbrs[n].len()
    }
}

fn l1(a: &Scores, b: &Scores) -> f64 {
    a.iter().map(|(k, v)| (v - b[k]).abs()).sum()
}

/// Dense synchronous fixed point of the additive recursion,
/// iterated to 1e-14.
pub fn oracle_pagerank(edges: &[(String, String)], damping: f64, redistribute: bool) -> Scores {
    let adj = Adjacency::new(edges);
    let n = adj.nodes.len() as f64;
    let mut x: Scores = adj.nodes.iter().map(|l| (l.clone(), 1.0)).collect();
    for _ in 0..200_000 {
        let dangling_mass: f64 = adj
            .nodes
            .iter()
            .filter(|l| adj.out_degree(l) == 0)
            .map(|l| x[l])
            .sum();
        let next: Scores = adj
            .nodes
            .iter()
            .map(|node| {
                let mut sum: f64 = adj.in_nbrs[node]
                    .iter()
                    .map(|m| x[m] / adj.out_degree(m) as f64)
                    .sum();
                if redistribute {
                    sum += dangling_mass / n;
                }
                (node.clone(), (1.0 - damping) + damping * sum)
            })
            .collect();
        let delta = l1(&next, &x);
        x = next;
        if delta < 1e-14 {
            break;
        }
    }
    x
}

/// Dense synchronous fixed point of the probability-distribution
/// variant, iterated to 1e-14. Dangling mass is always spread uniformly.
pub fn oracle_normalized_pagerank(edges: &[(String, String)], damping: f64) -> Scores {
    let adj = Adjacency::new(edges);
    let n = adj.nodes.len() as f64;
    let mut x: Scores = adj.nodes.iter().map(|l| (l.clone(), 1.0 / n)).collect();
    for _ in 0..200_000 {
        let dangling_mass: f64 = adj
            .nodes
            .iter()
            .filter(|l| adj.out_degree(l) == 0)
            .map(|l| x[l])
            .sum();
        let next: Scores = adj
            .nodes
            .iter()
            .map(|node| {
                let linked: f64 = adj.in_nbrs[node]
                    .iter()
                    .map(|m| x[m] / adj.out_degree(m) as f64)
                    .sum();
                (
                    node.clone(),
                    (1.0 - damping) / n + damping * (linked + dangling_mass / n),
                )
            })
            .collect();
        let delta = l1(&next, &x);
        x = next;
        if delta < 1e-14 {
            break;
        }
    }
    x
}

fn oracle_in_weight(adj: &Adjacency, m: &str, n: &str) -> f64 {
    let refs = &adj.out_nbrs[m];
    let denom: usize = refs.iter().map(|p| adj.in_degree(p)).sum();
    if denom == 0 {
        1.0 / refs.len() as f64
    } else {
        adj.in_degree(n) as f64 / denom as f64
    }
}

fn oracle_out_weight(adj: &Adjacency, m: &str, n: &str) -> f64 {
    let refs = &adj.out_nbrs[m];
    let denom: usize = refs.iter().map(|p| adj.out_degree(p)).sum();
    if denom == 0 {
        1.0 / refs.len() as f64
    } else {
        adj.out_degree(n) as f64 / denom as f64
    }
}

/// Dense synchronous fixed point of the popularity-weighted recursion,
/// weights rebuilt from raw degrees, iterated to 1e-14.
pub fn oracle_weighted_pagerank(edges: &[(String, String)], damping: f64) -> Scores {
    let adj = Adjacency::new(edges);
    let mut x: Scores = adj.nodes.iter().map(|l| (l.clone(), 1.0)).collect();
    for _ in 0..200_000 {
        let next: Scores = adj
            .nodes
            .iter()
            .map(|node| {
                let sum: f64 = adj.in_nbrs[node]
                    .iter()
                    .map(|m| {
                        x[m] * oracle_in_weight(&adj, m, node) * oracle_out_weight(&adj, m, node)
                    })
                    .sum();
                (node.clone(), (1.0 - damping) + damping * sum)
            })
            .collect();
        let delta = l1(&next, &x);
        x = next;
        if delta < 1e-14 {
            break;
        }
    }
    x
}

/// Power method on the dense products AᵀA (authorities) and AAᵀ (hubs),
/// 1000 iterations, L2-normalized each step.
pub fn oracle_hits(edges: &[(String, String)]) -> (Scores, Scores) {
    let adj = Adjacency::new(edges);
    let labels = &adj.nodes;
    let n = labels.len();
    let index: BTreeMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut a = vec![vec![0.0f64; n]; n];
    let mut dedup = BTreeSet::new();
    for (src, dst) in edges {
        if dedup.insert((src.clone(), dst.clone())) {
            a[index[src.as_str()]][index[dst.as_str()]] = 1.0;
        }
    }
    let matvec = |m: &dyn Fn(usize, usize) -> f64, v: &[f64]| -> Vec<f64> {
        (0..n)
            .map(|i| (0..n).map(|j| m(i, j) * v[j]).sum())
            .collect()
    };
    let ata = |i: usize, j: usize| -> f64 { (0..n).map(|k| a[k][i] * a[k][j]).sum() };
    let aat = |i: usize, j: usize| -> f64 { (0..n).map(|k| a[i][k] * a[j][k]).sum() };
    let power = |m: &dyn Fn(usize, usize) -> f64| -> Vec<f64> {
        let mut v = vec![1.0; n];
        for _ in 0..1000 {
            let next = matvec(m, &v);
            let norm = next.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 {
                return next;
            }
            v = next.into_iter().map(|x| x / norm).collect();
        }
        v
    };
    let authority = power(&ata);
    let hub = power(&aat);
    let pack = |v: Vec<f64>| -> Scores {
        labels
            .iter()
            .cloned()
            .zip(v)
            .collect()
    };
    (pack(hub), pack(authority))
}

/// Exhaustive shortest logarithmic distance: enumerate every simple path
/// from every seed. Only viable on small graphs.
pub fn oracle_distances(edges: &[(String, String)], seeds: &[&str]) -> Scores {
    let adj = Adjacency::new(edges);
    let mut best: Scores = adj
        .nodes
        .iter()
        .map(|l| (l.clone(), f64::INFINITY))
        .collect();

    fn dfs(
        adj: &Adjacency,
        node: &str,
        dist: f64,
        visited: &mut Vec<String>,
        best: &mut Scores,
    ) {
        if dist < best[node] {
            best.insert(node.to_owned(), dist);
        }
        let out_deg = adj.out_degree(node);
        if out_deg == 0 {
            return;
        }
        let step = (out_deg as f64).log10();
        for succ in &adj.out_nbrs[node] {
            if !visited.iter().any(|v| v == succ) {
                visited.push(succ.clone());
                dfs(adj, succ, dist + step, visited, best);
                visited.pop();
            }
        }
    }

    for seed in seeds {
        let mut visited = vec![(*seed).to_owned()];
        dfs(&adj, seed, 0.0, &mut visited, &mut best);
    }
    best
}

/// Dense reimplementation of the agent/object recursion, label-keyed,
/// iterated to 1e-13. Returns (object scores, agent authority, agent hub).
pub fn oracle_eigenrumor(
    provision: &[(String, String)],
    evaluation: &[(String, String)],
    mixing: f64,
) -> (Scores, Scores, Scores) {
    let mut agents = Vec::new();
    let mut objects = Vec::new();
    for (a, o) in provision.iter().chain(evaluation) {
        if !agents.contains(a) {
            agents.push(a.clone());
        }
        if !objects.contains(o) {
            objects.push(o.clone());
        }
    }
    let na = agents.len() as f64;
    let no = objects.len() as f64;
    let mut r: Scores = objects
        .iter()
        .map(|o| (o.clone(), 1.0 / no.sqrt()))
        .collect();
    let mut auth: Scores = agents
        .iter()
        .map(|a| (a.clone(), 1.0 / na.sqrt()))
        .collect();
    let mut hub: Scores = auth.clone();

    let normalize = |v: Scores| -> Scores {
        let norm = v.values().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            v
        } else {
            v.into_iter().map(|(k, x)| (k, x / norm)).collect()
        }
    };

    for _ in 0..100_000 {
        let mut r_next: Scores = objects.iter().map(|o| (o.clone(), 0.0)).collect();
        for (a, o) in provision {
            *r_next.get_mut(o).unwrap() += mixing * auth[a];
        }
        for (a, o) in evaluation {
            *r_next.get_mut(o).unwrap() += (1.0 - mixing) * hub[a];
        }
        let r_next = normalize(r_next);

        let mut a_next: Scores = agents.iter().map(|a| (a.clone(), 0.0)).collect();
        for (a, o) in provision {
            *a_next.get_mut(a).unwrap() += r_next[o];
        }
        let a_next = normalize(a_next);

        let mut h_next: Scores = agents.iter().map(|a| (a.clone(), 0.0)).collect();
        for (a, o) in evaluation {
            *h_next.get_mut(a).unwrap() += r_next[o];
        }
        let h_next = normalize(h_next);

        let delta = l1(&r_next, &r) + l1(&a_next, &auth) + l1(&h_next, &hub);
        r = r_next;
        auth = a_next;
        hub = h_next;
        if delta < 1e-13 {
            break;
        }
    }
    (r, auth, hub)
}

/// Seeded random simple digraph with 4 to 10 nodes; every ordered pair
/// becomes an edge with probability 0.35. Guaranteed non-empty.
pub fn random_graph(seed: u64) -> Vec<(String, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n: usize = rng.gen_range(4..=10);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(0.35) {
                edges.push((format!("n{i}"), format!("n{j}")));
            }
        }
    }
    if edges.is_empty() {
        edges.push(("n0".to_owned(), "n1".to_owned()));
    }
    edges
}

/// The fixed seed list shipped with the repo.
pub fn load_oracle_seeds() -> Vec<u64> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/oracle_seeds.txt");
    let text = std::fs::read_to_string(path).expect("seed list must ship with the repo");
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse().expect("seed lines are integers"))
        .collect()
}

pub fn data_file(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}
