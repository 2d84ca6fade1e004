//! Run reports and trace export.
//!
//! The JSON report is schema-stable: top-level keys are exactly
//! `algorithm`, `config`, `converged`, `iterations` and `scores`, with
//! scores keyed by node label and rounded to 10 significant digits so
//! that downstream comparisons are not limited by formatting. The config
//! echo carries everything needed to reproduce the run. The trace CSV
//! has the header `iteration,node,value` and one row per node per
//! snapshot, snapshot 0 (the initial state) included.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::solver::IterationTrace;

/// Significant digits used for every score serialized by the reports.
pub const SCORE_DIGITS: i32 = 10;

/// Round to `digits` significant digits. The rounded value prints
/// minimally under serde_json, so equal runs serialize to equal bytes.
pub fn round_sig(value: f64, digits: i32) -> f64 {
    if value == 0.0 || !value.is_finite() {
        return value;
    }
    let magnitude = value.abs().log10().floor() as i32;
    let factor = 10f64.powi(digits - 1 - magnitude);
    (value * factor).round() / factor
}

/// Echo of the flags that determine a run, sufficient to replay it.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub algo: String,
    pub graph: String,
    pub damping: f64,
    pub tol: f64,
    pub max_iter: usize,
    pub mode: Option<String>,
    pub init: f64,
    pub seeds: Option<String>,
    pub roots: Option<String>,
    pub mixing: Option<f64>,
}

/// One algorithm run, ready for serialization.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub algorithm: String,
    pub config: ConfigEcho,
    pub converged: bool,
    pub iterations: usize,
    pub scores: BTreeMap<String, f64>,
}

impl RunReport {
    pub fn new(
        algorithm: impl Into<String>,
        config: ConfigEcho,
        converged: bool,
        iterations: usize,
        labelled_scores: impl IntoIterator<Item = (String, f64)>,
    ) -> Self {
        let scores = labelled_scores
            .into_iter()
            .map(|(label, score)| (label, round_sig(score, SCORE_DIGITS)))
            .collect();
        Self {
            algorithm: algorithm.into(),
            config,
            converged,
            iterations,
            scores,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Tabular `node,score` form of the same scores.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut csv = csv::Writer::from_writer(writer);
        csv.write_record(["node", "score"]).map_err(csv_error)?;
        for (label, score) in &self.scores {
            csv.write_record([label.as_str(), &format_score(*score)])
                .map_err(csv_error)?;
        }
        csv.flush()?;
        Ok(())
    }
}

/// Pairwise rank-agreement report for `compare`.
#[derive(Debug, Clone, Serialize)]
pub struct CompareReport {
    pub graph: String,
    pub config: CompareConfigEcho,
    pub algorithms: Vec<String>,
    pub rankings: BTreeMap<String, Vec<String>>,
    pub tie_breaks: BTreeMap<String, usize>,
    pub tau: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompareConfigEcho {
    pub damping: f64,
    pub tol: f64,
    pub max_iter: usize,
    pub mode: Option<String>,
    pub init: f64,
    pub seeds: Option<String>,
}

impl CompareReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

fn format_score(score: f64) -> String {
    // shortest representation of the already-rounded value
    serde_json::Number::from_f64(score)
        .map(|n| n.to_string())
        .unwrap_or_else(|| score.to_string())
}

fn csv_error(err: csv::Error) -> crate::error::Error {
    crate::error::Error::Io(std::io::Error::other(err.to_string()))
}

/// Write a per-sweep trace as `iteration,node,value` rows. Row count is
/// (iterations + 1) * node count: snapshot 0 is the initial state.
pub fn write_trace_csv<W: Write>(
    writer: W,
    trace: &IterationTrace,
    labels: &[&str],
) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(["iteration", "node", "value"])
        .map_err(csv_error)?;
    for (iteration, snapshot) in trace.snapshots.iter().enumerate() {
        for (label, value) in labels.iter().zip(snapshot) {
            csv.write_record([
                &iteration.to_string(),
                *label,
                &format_score(round_sig(*value, SCORE_DIGITS)),
            ])
            .map_err(csv_error)?;
        }
    }
    csv.flush()?;
    Ok(())
}
