//! Command-line front door: parse graphs, run algorithms, emit reports.
//!
//! Exit codes: 0 for a completed run (converged or not; scripts branch
//! on the `converged` field), 2 for usage errors (unknown flags or
//! algorithms, missing or misapplied flags), 1 for data errors (file or
//! parse failures, unknown labels), each with a one-line diagnostic on
//! standard error.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::compare::{kendall_tau, to_ranking, Ranking};
use crate::distance::distance_rank;
use crate::eigenrumor::{eigenrumor, AgentObjectGraph};
use crate::error::Error;
use crate::graph::{DirectedGraph, NodeId};
use crate::hits::{expand_root_set, hits};
use crate::pagerank::{normalized_pagerank, pagerank, DanglingPolicy};
use crate::report::{
    write_trace_csv, CompareConfigEcho, CompareReport, ConfigEcho, RunReport,
};
use crate::solver::{IterationTrace, RankVector, SolverConfig, UpdateMode};
use crate::weighted::weighted_pagerank;

#[derive(Debug, Parser)]
#[command(
    name = "linkrank",
    version,
    about = "Rank the nodes of a directed graph with link-analysis algorithms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one ranking algorithm over a graph file
    Rank(RankArgs),
    /// Run several algorithms and report pairwise rank agreement
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Pagerank,
    NormalizedPagerank,
    Wpr,
    Hits,
    Distance,
    Eigenrumor,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Pagerank => "pagerank",
            Algo::NormalizedPagerank => "normalized-pagerank",
            Algo::Wpr => "wpr",
            Algo::Hits => "hits",
            Algo::Distance => "distance",
            Algo::Eigenrumor => "eigenrumor",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Sequential,
    Synchronous,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct RankArgs {
    /// Algorithm to run
    #[arg(long, value_enum)]
    algo: Algo,
    /// Edge-list file (bipartite agent/object format for eigenrumor)
    #[arg(long)]
    graph: PathBuf,
    /// Damping factor (ignored by hits and distance)
    #[arg(long, default_value_t = 0.85)]
    damping: f64,
    /// Convergence tolerance on the per-sweep L1 change
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Sweep budget; exceeding it reports converged=false, not an error
    #[arg(long = "max-iter", default_value_t = 100)]
    max_iter: usize,
    /// Sweep mode (default sequential; normalized-pagerank requires and
    /// defaults to synchronous)
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Initial per-node score
    #[arg(long, default_value_t = 1.0)]
    init: f64,
    /// Comma-separated seed labels (distance only, required there)
    #[arg(long)]
    seeds: Option<String>,
    /// Comma-separated root labels (hits only; default: all nodes)
    #[arg(long)]
    roots: Option<String>,
    /// Weight of provisioning vs evaluation influence (eigenrumor only)
    #[arg(long)]
    mixing: Option<f64>,
    /// Report format on standard output
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write a per-sweep trace CSV to this path
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// Edge-list file shared by all algorithms
    #[arg(long)]
    graph: PathBuf,
    /// Two or more comma-separated algorithm names
    #[arg(long, value_enum, value_delimiter = ',')]
    algos: Vec<Algo>,
    #[arg(long, default_value_t = 0.85)]
    damping: f64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long = "max-iter", default_value_t = 100)]
    max_iter: usize,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[arg(long, default_value_t = 1.0)]
    init: f64,
    /// Comma-separated seed labels, required when distance is compared
    #[arg(long)]
    seeds: Option<String>,
}

enum CliError {
    Usage(String),
    Data(String),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::InvalidConfig { .. } | Error::SequentialUnsupported { .. } => {
                CliError::Usage(err.to_string())
            }
            other => CliError::Data(other.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn data(msg: impl Into<String>) -> CliError {
    CliError::Data(msg.into())
}

/// Parse arguments from the process environment and run. Returns the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Rank(args) => cmd_rank(&args),
        Command::Compare(args) => cmd_compare(&args),
    };
    match outcome {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn split_labels(raw: &str) -> Vec<String> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_owned)
        .collect()
}

fn resolve_labels(g: &DirectedGraph, raw: &str) -> Result<Vec<NodeId>, CliError> {
    let labels = split_labels(raw);
    labels
        .iter()
        .map(|l| g.try_node(l).map_err(CliError::from))
        .collect()
}

fn solver_config(
    damping: f64,
    tol: f64,
    max_iter: usize,
    mode: UpdateMode,
    init: f64,
) -> SolverConfig {
    SolverConfig {
        damping,
        tolerance: tol,
        max_iterations: max_iter,
        update_mode: mode,
        initial_value: init,
    }
}

fn mode_name(mode: UpdateMode) -> &'static str {
    match mode {
        UpdateMode::Sequential => "sequential",
        UpdateMode::Synchronous => "synchronous",
    }
}

/// Resolve the effective sweep mode for one algorithm. Only the solver
/// family reads it; normalized-pagerank insists on synchronous.
fn resolve_mode(algo: Algo, requested: Option<Mode>) -> Result<Option<UpdateMode>, CliError> {
    match algo {
        Algo::Pagerank | Algo::Wpr => Ok(Some(match requested {
            Some(Mode::Synchronous) => UpdateMode::Synchronous,
            _ => UpdateMode::Sequential,
        })),
        Algo::NormalizedPagerank => match requested {
            Some(Mode::Sequential) => Err(usage(
                "normalized-pagerank requires synchronous updates; drop --mode sequential",
            )),
            _ => Ok(Some(UpdateMode::Synchronous)),
        },
        Algo::Hits | Algo::Distance | Algo::Eigenrumor => Ok(None),
    }
}

fn check_flag_applicability(args: &RankArgs) -> Result<(), CliError> {
    if args.seeds.is_some() && args.algo != Algo::Distance {
        return Err(usage("--seeds only applies to --algo distance"));
    }
    if args.algo == Algo::Distance && args.seeds.is_none() {
        return Err(usage("--algo distance requires --seeds"));
    }
    if args.roots.is_some() && args.algo != Algo::Hits {
        return Err(usage("--roots only applies to --algo hits"));
    }
    if args.mixing.is_some() && args.algo != Algo::Eigenrumor {
        return Err(usage("--mixing only applies to --algo eigenrumor"));
    }
    if args.trace.is_some() && matches!(args.algo, Algo::Hits | Algo::Eigenrumor) {
        return Err(usage(format!(
            "--trace is not available for --algo {}; it applies to the single-score algorithms",
            args.algo.name()
        )));
    }
    Ok(())
}

fn read_graph_file(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| data(format!("cannot read {}: {e}", path.display())))
}

fn labelled_scores(g: &DirectedGraph, scores: &[f64]) -> Vec<(String, f64)> {
    g.node_ids()
        .map(|n| (g.label(n).to_owned(), scores[n.index()]))
        .collect()
}

fn cmd_rank(args: &RankArgs) -> Result<(), CliError> {
    check_flag_applicability(args)?;
    let mode = resolve_mode(args.algo, args.mode)?;
    let text = read_graph_file(&args.graph)?;

    let mut echo = ConfigEcho {
        algo: args.algo.name().to_owned(),
        graph: args.graph.display().to_string(),
        damping: args.damping,
        tol: args.tol,
        max_iter: args.max_iter,
        mode: mode.map(|m| mode_name(m).to_owned()),
        init: args.init,
        seeds: args.seeds.clone(),
        roots: args.roots.clone(),
        mixing: None,
    };

    let (report, trace) = match args.algo {
        Algo::Eigenrumor => {
            let bg = AgentObjectGraph::parse(&text)?;
            let mixing = args.mixing.unwrap_or(0.5);
            echo.mixing = Some(mixing);
            let cfg = solver_config(
                args.damping,
                args.tol,
                args.max_iter,
                UpdateMode::Synchronous,
                args.init,
            );
            let scores = eigenrumor(&bg, mixing, &cfg)?;
            let labelled = (0..bg.object_count())
                .map(|o| (bg.object_label(o).to_owned(), scores.object_score[o]));
            (
                RunReport::new(
                    args.algo.name(),
                    echo,
                    scores.converged,
                    scores.iterations_used,
                    labelled,
                ),
                None,
            )
        }
        _ => {
            let g = DirectedGraph::from_edge_list(&text, false)?;
            let (rank, trace) = run_on_graph(&g, args, mode)?;
            (
                RunReport::new(
                    args.algo.name(),
                    echo,
                    rank.converged,
                    rank.iterations_used,
                    labelled_scores(&g, &rank.scores),
                ),
                trace.map(|t| (t, g)),
            )
        }
    };

    if let (Some(path), Some((trace, g))) = (&args.trace, &trace) {
        let file = fs::File::create(path)
            .map_err(|e| data(format!("cannot write {}: {e}", path.display())))?;
        let labels: Vec<&str> = g.labels().collect();
        write_trace_csv(io::BufWriter::new(file), trace, &labels)?;
    }

    match args.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => report.write_csv(io::stdout().lock())?,
    }
    Ok(())
}

/// Run one of the page-graph algorithms; eigenrumor is handled apart
/// because it reads a different file format.
fn run_on_graph(
    g: &DirectedGraph,
    args: &RankArgs,
    mode: Option<UpdateMode>,
) -> Result<(RankVector, Option<IterationTrace>), CliError> {
    match args.algo {
        Algo::Pagerank => {
            let cfg = solver_config(
                args.damping,
                args.tol,
                args.max_iter,
                mode.unwrap_or(UpdateMode::Sequential),
                args.init,
            );
            let (rank, trace) = pagerank(g, &cfg, DanglingPolicy::Drop)?;
            Ok((rank, Some(trace)))
        }
        Algo::NormalizedPagerank => {
            let cfg = solver_config(
                args.damping,
                args.tol,
                args.max_iter,
                UpdateMode::Synchronous,
                args.init,
            );
            let (rank, trace) = normalized_pagerank(g, &cfg)?;
            Ok((rank, Some(trace)))
        }
        Algo::Wpr => {
            let cfg = solver_config(
                args.damping,
                args.tol,
                args.max_iter,
                mode.unwrap_or(UpdateMode::Sequential),
                args.init,
            );
            let (rank, trace) = weighted_pagerank(g, &cfg)?;
            Ok((rank, Some(trace)))
        }
        Algo::Hits => {
            let cfg = solver_config(
                args.damping,
                args.tol,
                args.max_iter,
                UpdateMode::Synchronous,
                args.init,
            );
            let working: Vec<NodeId> = match &args.roots {
                Some(raw) => {
                    let roots = resolve_labels(g, raw)?;
                    if roots.is_empty() {
                        return Err(usage("--roots requires at least one label"));
                    }
                    expand_root_set(g, &roots, usize::MAX)
                }
                None => g.node_ids().collect(),
            };
            let scores = hits(g, &working, &cfg)?;
            Ok((
                RankVector {
                    scores: scores.authority,
                    algorithm: "hits".to_owned(),
                    converged: scores.converged,
                    iterations_used: scores.iterations_used,
                },
                None,
            ))
        }
        Algo::Distance => {
            let raw = args.seeds.as_deref().expect("checked by flag validation");
            let seeds = resolve_labels(g, raw)?;
            if seeds.is_empty() {
                return Err(usage("--seeds requires at least one label"));
            }
            let (_, rank) = distance_rank(g, &seeds)?;
            let trace = IterationTrace {
                snapshots: vec![rank.scores.clone()],
                deltas: Vec::new(),
            };
            Ok((rank, Some(trace)))
        }
        Algo::Eigenrumor => unreachable!("handled by cmd_rank"),
    }
}

fn cmd_compare(args: &CompareArgs) -> Result<(), CliError> {
    if args.algos.len() < 2 {
        return Err(usage("--algos needs at least two comma-separated names"));
    }
    if args.algos.contains(&Algo::Eigenrumor) {
        return Err(usage(
            "eigenrumor ranks objects of a bipartite graph and cannot be compared with page rankings",
        ));
    }
    if args.seeds.is_some() && !args.algos.contains(&Algo::Distance) {
        return Err(usage("--seeds only applies when distance is compared"));
    }
    let text = read_graph_file(&args.graph)?;
    let g = DirectedGraph::from_edge_list(&text, false)?;

    let mut rankings: Vec<Ranking> = Vec::new();
    for &algo in &args.algos {
        let mode = resolve_mode(algo, args.mode)?;
        let rank_args = RankArgs {
            algo,
            graph: args.graph.clone(),
            damping: args.damping,
            tol: args.tol,
            max_iter: args.max_iter,
            mode: args.mode,
            init: args.init,
            seeds: args.seeds.clone(),
            roots: None,
            mixing: None,
            format: Format::Json,
            trace: None,
        };
        if algo == Algo::Distance && args.seeds.is_none() {
            return Err(usage("comparing distance requires --seeds"));
        }
        let (rank, _) = run_on_graph(&g, &rank_args, mode)?;
        rankings.push(to_ranking(&rank));
    }

    let n = rankings.len();
    let mut tau = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            tau[i][j] = kendall_tau(&rankings[i], &rankings[j])?;
        }
    }

    let mut ranking_labels = BTreeMap::new();
    let mut tie_breaks = BTreeMap::new();
    for (algo, ranking) in args.algos.iter().zip(&rankings) {
        let labels: Vec<String> = ranking
            .order
            .iter()
            .map(|&node| g.label(node).to_owned())
            .collect();
        ranking_labels.insert(algo.name().to_owned(), labels);
        tie_breaks.insert(algo.name().to_owned(), ranking.tie_breaks);
    }

    let report = CompareReport {
        graph: args.graph.display().to_string(),
        config: CompareConfigEcho {
            damping: args.damping,
            tol: args.tol,
            max_iter: args.max_iter,
            mode: args.mode.map(|m| {
                match m {
                    Mode::Sequential => "sequential",
                    Mode::Synchronous => "synchronous",
                }
                .to_owned()
            }),
            init: args.init,
            seeds: args.seeds.clone(),
        },
        algorithms: args.algos.iter().map(|a| a.name().to_owned()).collect(),
        rankings: ranking_labels,
        tie_breaks,
        tau,
    };
    println!("{}", report.to_json());
    Ok(())
}
