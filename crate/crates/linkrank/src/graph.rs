//! Immutable directed-graph data model shared by every ranking algorithm.
//!
//! Nodes are string labels mapped to dense indices in first-appearance
//! order. That order doubles as the default sweep order of the sequential
//! solvers, so it is part of the contract, not an implementation detail.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// Dense node handle, valid only for the graph that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub(crate) usize);

impl NodeId {
    /// Position of the node in the graph's dense 0..N-1 index space.
    pub fn index(self) -> usize {
        self.0
    }
}

/// A simple digraph: deduplicated edges, in- and out-adjacency kept in
/// node-index order, immutable once built.
#[derive(Debug, Clone)]
pub struct DirectedGraph {
    labels: Vec<String>,
    label_index: HashMap<String, NodeId>,
    out_adj: Vec<Vec<NodeId>>,
    in_adj: Vec<Vec<NodeId>>,
    edge_count: usize,
}

/// Parse an edge-list document: one `src dst` pair per line, fields split
/// on runs of horizontal whitespace, `#` lines and blank lines skipped.
/// Pair order (and therefore node first-appearance order) is preserved.
pub fn parse_edge_list(text: &str) -> Result<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::EdgeLineArity {
                line: idx + 1,
                found: fields.len(),
            });
        }
        pairs.push((fields[0].to_owned(), fields[1].to_owned()));
    }
    Ok(pairs)
}

impl DirectedGraph {
    /// Build a graph from ordered `(src, dst)` label pairs.
    ///
    /// Duplicate pairs are dropped silently. Self-loops are rejected
    /// unless `allow_self_loops` is set. An empty pair list is rejected:
    /// a graph with no edges ranks nothing meaningful.
    pub fn from_pairs<S: AsRef<str>>(pairs: &[(S, S)], allow_self_loops: bool) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyEdgeList);
        }
        let mut labels: Vec<String> = Vec::new();
        let mut label_index: HashMap<String, NodeId> = HashMap::new();
        let mut intern = |label: &str, labels: &mut Vec<String>| -> Result<NodeId> {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if let Some(&id) = label_index.get(label) {
                return Ok(id);
            }
            let id = NodeId(labels.len());
            labels.push(label.to_owned());
            label_index.insert(label.to_owned(), id);
            Ok(id)
        };

        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
        for (src, dst) in pairs {
            let (src, dst) = (src.as_ref(), dst.as_ref());
            if src == dst && !allow_self_loops {
                return Err(Error::SelfLoop {
                    label: src.to_owned(),
                });
            }
            let u = intern(src, &mut labels)?;
            let v = intern(dst, &mut labels)?;
            if seen.insert((u.0, v.0)) {
                edges.push((u, v));
            }
        }

        let n = labels.len();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            out_adj[u.0].push(v);
            in_adj[v.0].push(u);
        }
        for list in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            list.sort_unstable();
        }

        Ok(Self {
            labels,
            label_index,
            out_adj,
            in_adj,
            edge_count: edges.len(),
        })
    }

    /// Parse an edge-list document and build the graph in one step.
    pub fn from_edge_list(text: &str, allow_self_loops: bool) -> Result<Self> {
        Self::from_pairs(&parse_edge_list(text)?, allow_self_loops)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Nodes in index order, which is first-appearance order.
    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.labels.len()).map(NodeId)
    }

    pub fn label(&self, n: NodeId) -> &str {
        &self.labels[n.0]
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    /// Look up a node by label.
    pub fn node(&self, label: &str) -> Option<NodeId> {
        self.label_index.get(label).copied()
    }

    /// Look up a node by label, rejecting unknown labels.
    pub fn try_node(&self, label: &str) -> Result<NodeId> {
        self.node(label).ok_or_else(|| Error::UnknownLabel {
            label: label.to_owned(),
        })
    }

    /// Pages linking to `n`, in node-index order.
    pub fn backlinks(&self, n: NodeId) -> &[NodeId] {
        &self.in_adj[n.0]
    }

    /// Pages `m` links to (its reference list), in node-index order.
    pub fn references(&self, m: NodeId) -> &[NodeId] {
        &self.out_adj[m.0]
    }

    pub fn in_degree(&self, n: NodeId) -> usize {
        self.in_adj[n.0].len()
    }

    pub fn out_degree(&self, n: NodeId) -> usize {
        self.out_adj[n.0].len()
    }

    pub fn has_edge(&self, from: NodeId, to: NodeId) -> bool {
        self.out_adj[from.0].binary_search(&to).is_ok()
    }

    /// All edges as `(src, dst)` pairs, grouped by source in index order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, succ)| succ.iter().map(move |&v| (NodeId(u), v)))
    }
}
