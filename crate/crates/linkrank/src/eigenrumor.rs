//! Agent-to-object eigenvector ranking.
//!
//! Agents (bloggers) carry hub and authority scores; objects (blog
//! entries) are scored from the agents that provision (author) and
//! evaluate (link to) them. With provisioning incidence P and evaluation
//! incidence E, each synchronous sweep computes
//!
//! ```text
//! r <- mixing * (P' a) + (1 - mixing) * (E' h)   then L2-normalize
//! a <- P r                                        then L2-normalize
//! h <- E r                                        then L2-normalize
//! ```
//!
//! and stops when the L1 change of the concatenated (r, a, h) triple
//! falls below the tolerance.
//!
//! This is a reconstruction of the EigenRumor idea (Fujimura et al.):
//! the model's ingredients are agents, objects, agent-side hub and
//! authority scores and an eigenvector calculation, and the recursion
//! here is the minimal system with the behavior that motivates the
//! model: a freshly provisioned object with no evaluation in-links
//! still scores above zero when its author carries authority. The
//! original scoring constants are not reproduced, so numeric outputs
//! are verified against an independent dense oracle in the tests, not
//! against external tables.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::solver::{l1_distance, l2_norm, SolverConfig};

/// Bipartite store of agent-to-object links with two edge kinds.
/// Provision and evaluation are separate namespaces; the same pair may
/// appear in both.
#[derive(Debug, Clone)]
pub struct AgentObjectGraph {
    agent_labels: Vec<String>,
    object_labels: Vec<String>,
    agent_index: HashMap<String, usize>,
    object_index: HashMap<String, usize>,
    provision: Vec<(usize, usize)>,
    evaluation: Vec<(usize, usize)>,
}

impl AgentObjectGraph {
    /// Build from `(agent, object)` label pairs. Duplicates within each
    /// edge kind are dropped; at least one provision edge is required.
    pub fn from_pairs<S: AsRef<str>>(
        provision: &[(S, S)],
        evaluation: &[(S, S)],
    ) -> Result<Self> {
        if provision.is_empty() {
            return Err(Error::NoProvisionEdges);
        }
        let mut graph = Self {
            agent_labels: Vec::new(),
            object_labels: Vec::new(),
            agent_index: HashMap::new(),
            object_index: HashMap::new(),
            provision: Vec::new(),
            evaluation: Vec::new(),
        };
        let mut seen: HashSet<(bool, usize, usize)> = HashSet::new();
        for (is_provision, pairs) in [(true, provision), (false, evaluation)] {
            for (agent, object) in pairs {
                let a = graph.intern_agent(agent.as_ref())?;
                let o = graph.intern_object(object.as_ref())?;
                if seen.insert((is_provision, a, o)) {
                    if is_provision {
                        graph.provision.push((a, o));
                    } else {
                        graph.evaluation.push((a, o));
                    }
                }
            }
        }
        Ok(graph)
    }

    /// Parse the bipartite edge-list format: one `agent P|E object` line
    /// per edge (tab- or space-separated), `#` comments and blank lines
    /// skipped. `P` marks provision, `E` evaluation.
    pub fn parse(text: &str) -> Result<Self> {
        let mut provision = Vec::new();
        let mut evaluation = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::BipartiteLineArity {
                    line: idx + 1,
                    found: fields.len(),
                });
            }
            let pair = (fields[0].to_owned(), fields[2].to_owned());
            match fields[1] {
                "P" => provision.push(pair),
                "E" => evaluation.push(pair),
                other => {
                    return Err(Error::UnknownEdgeKind {
                        line: idx + 1,
                        token: other.to_owned(),
                    })
                }
            }
        }
        Self::from_pairs(&provision, &evaluation)
    }

    fn intern_agent(&mut self, label: &str) -> Result<usize> {
        if label.is_empty() {
            return Err(Error::EmptyLabel);
        }
        if let Some(&i) = self.agent_index.get(label) {
            return Ok(i);
        }
        let i = self.agent_labels.len();
        self.agent_labels.push(label.to_owned());
        self.agent_index.insert(label.to_owned(), i);
        Ok(i)
    }

    fn intern_object(&mut self, label: &str) -> Result<usize> {
        if label.is_empty() {
            return Err(Error::EmptyLabel);
        }
        if let Some(&i) = self.object_index.get(label) {
            return Ok(i);
        }
        let i = self.object_labels.len();
        self.object_labels.push(label.to_owned());
        self.object_index.insert(label.to_owned(), i);
        Ok(i)
    }

    pub fn agent_count(&self) -> usize {
        self.agent_labels.len()
    }

    pub fn object_count(&self) -> usize {
        self.object_labels.len()
    }

    pub fn agent_label(&self, i: usize) -> &str {
        &self.agent_labels[i]
    }

    pub fn object_label(&self, i: usize) -> &str {
        &self.object_labels[i]
    }

    pub fn object(&self, label: &str) -> Option<usize> {
        self.object_index.get(label).copied()
    }

    pub fn agent(&self, label: &str) -> Option<usize> {
        self.agent_index.get(label).copied()
    }

    /// Provision edges as (agent index, object index) pairs.
    pub fn provision_edges(&self) -> &[(usize, usize)] {
        &self.provision
    }

    pub fn evaluation_edges(&self) -> &[(usize, usize)] {
        &self.evaluation
    }
}

/// Converged (or best-effort) scores. All three vectors have unit L2
/// norm after every sweep, except that the hub vector is identically
/// zero when there are no evaluation edges and mixing is 1; that state
/// is reported with `hub_degenerate` set instead of an error.
#[derive(Debug, Clone)]
pub struct EigenRumorScores {
    pub object_score: Vec<f64>,
    pub agent_authority: Vec<f64>,
    pub agent_hub: Vec<f64>,
    pub converged: bool,
    pub iterations_used: usize,
    pub hub_degenerate: bool,
}

fn matvec_transpose(edges: &[(usize, usize)], agent_vec: &[f64], objects: usize) -> Vec<f64> {
    let mut out = vec![0.0; objects];
    for &(a, o) in edges {
        out[o] += agent_vec[a];
    }
    out
}

fn matvec(edges: &[(usize, usize)], object_vec: &[f64], agents: usize) -> Vec<f64> {
    let mut out = vec![0.0; agents];
    for &(a, o) in edges {
        out[a] += object_vec[o];
    }
    out
}

fn normalize_or(v: Vec<f64>, vector: &'static str) -> Result<Vec<f64>> {
    let norm = l2_norm(&v);
    if norm == 0.0 {
        return Err(Error::DegenerateVector { vector });
    }
    Ok(v.into_iter().map(|x| x / norm).collect())
}

/// One synchronous sweep: a fresh (r, a, h) triple from the previous
/// agent vectors (the object vector is rebuilt, not read).
///
/// A hub update that comes out all-zero is tolerated (returned as zeros)
/// only when mixing is exactly 1, where evaluation plays no role in the
/// object scores.
pub fn sweep(
    bg: &AgentObjectGraph,
    mixing: f64,
    agent_authority: &[f64],
    agent_hub: &[f64],
) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    let no = bg.object_count();
    let na = bg.agent_count();
    let provisioned = matvec_transpose(&bg.provision, agent_authority, no);
    let evaluated = matvec_transpose(&bg.evaluation, agent_hub, no);
    let r_raw: Vec<f64> = provisioned
        .iter()
        .zip(&evaluated)
        .map(|(p, e)| mixing * p + (1.0 - mixing) * e)
        .collect();
    let r = normalize_or(r_raw, "object score")?;
    let a = normalize_or(matvec(&bg.provision, &r, na), "agent authority")?;
    let h_raw = matvec(&bg.evaluation, &r, na);
    let h = if l2_norm(&h_raw) == 0.0 {
        if mixing == 1.0 {
            h_raw
        } else {
            return Err(Error::DegenerateVector {
                vector: "agent hub",
            });
        }
    } else {
        normalize_or(h_raw, "agent hub")?
    };
    Ok((r, a, h))
}

/// Iterate the agent/object recursion to a fixed point.
///
/// `mixing` weighs provisioning against evaluation influence in the
/// object update and must lie in [0, 1]. Damping from the config is
/// ignored; tolerance and max_iterations apply.
pub fn eigenrumor(
    bg: &AgentObjectGraph,
    mixing: f64,
    config: &SolverConfig,
) -> Result<EigenRumorScores> {
    if !(0.0..=1.0).contains(&mixing) || !mixing.is_finite() {
        return Err(Error::InvalidConfig {
            reason: format!("mixing must lie in [0, 1], got {mixing}"),
        });
    }
    config.validate()?;
    let na = bg.agent_count();
    let no = bg.object_count();
    let mut agent_authority = vec![1.0 / (na as f64).sqrt(); na];
    let mut agent_hub = vec![1.0 / (na as f64).sqrt(); na];
    let mut object_score = vec![1.0 / (no as f64).sqrt(); no];

    let mut converged = false;
    let mut iterations_used = 0;
    for sweep_no in 1..=config.max_iterations {
        let (r, a, h) = sweep(bg, mixing, &agent_authority, &agent_hub)?;
        let delta = l1_distance(&r, &object_score)
            + l1_distance(&a, &agent_authority)
            + l1_distance(&h, &agent_hub);
        object_score = r;
        agent_authority = a;
        agent_hub = h;
        iterations_used = sweep_no;
        if delta < config.tolerance {
            converged = true;
            break;
        }
    }

    let hub_degenerate = agent_hub.iter().all(|&x| x == 0.0);
    Ok(EigenRumorScores {
        object_score,
        agent_authority,
        agent_hub,
        converged,
        iterations_used,
        hub_degenerate,
    })
}
