use thiserror::Error;

/// Errors shared by graph construction, the solvers and the ranking
/// algorithms.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge list is empty; nothing to rank")]
    EmptyEdgeList,

    #[error("node label must be a non-empty string")]
    EmptyLabel,

    #[error("self-loop on node {label:?} (pass allow_self_loops to accept)")]
    SelfLoop { label: String },

    #[error("line {line}: expected 2 whitespace-separated fields, found {found}")]
    EdgeLineArity { line: usize, found: usize },

    #[error("line {line}: expected 3 fields (agent, P|E, object), found {found}")]
    BipartiteLineArity { line: usize, found: usize },

    #[error("line {line}: unknown edge kind {token:?} (expected P or E)")]
    UnknownEdgeKind { line: usize, token: String },

    #[error("unknown node label {label:?}")]
    UnknownLabel { label: String },

    #[error("no edge from {from:?} to {to:?}")]
    NotAnEdge { from: String, to: String },

    #[error("invalid solver configuration: {reason}")]
    InvalidConfig { reason: String },

    #[error("non-finite score at node index {node} during sweep {sweep}")]
    NonFiniteScore { node: usize, sweep: usize },

    #[error("{algorithm} requires synchronous updates; sequential mode was requested")]
    SequentialUnsupported { algorithm: &'static str },

    #[error("working node set is empty")]
    EmptyNodeSet,

    #[error("induced subgraph has no edges; hub/authority normalization is undefined")]
    NoEdgesInSubgraph,

    #[error("seed set is empty")]
    EmptySeeds,

    #[error("bipartite graph has no provision edges")]
    NoProvisionEdges,

    #[error("update produced an all-zero {vector} vector; scores are undefined")]
    DegenerateVector { vector: &'static str },

    #[error("rankings cover different node sets")]
    MismatchedNodeSets,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
