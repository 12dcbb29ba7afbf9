//! Command-line front end: argument parsing and CSV output.

use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use crate::centrality::{compute, MetricKind, MetricSpec};
use crate::experiments::{
    run_correlation_experiment, run_distribution_experiment, run_scaling_benchmark, AlphaGrid, ExperimentConfig,
    ScalingConfig,
};
use crate::graph::read_edge_list;
use crate::randgen::{Family, Topology, WeightConfig};
use crate::Graph64;

/// Directory used for output files when no explicit path is given.
pub const OUT_DIR_ENV: &str = "DISTINCTIVENESS_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "distinctiveness",
    version,
    about = "Distinctiveness, Beta and Gamma centrality"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score every node of an edge-list graph.
    Compute(ComputeArgs),
    /// Replication experiments on random graphs.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
    /// Runtime scaling of each metric with graph size.
    Bench(BenchArgs),
}

#[derive(Debug, Subcommand)]
pub enum ExperimentCommand {
    /// Mean Spearman correlation between metric pairs across an alpha grid.
    Corr(CorrArgs),
    /// Normalized score distributions and Ruzicka similarities on one graph.
    Dist(DistArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Whitespace-separated edge list: `u v [weight]` per line.
    #[arg(long, short)]
    pub input: PathBuf,
    /// d1..d5, beta, gamma, degree or strength.
    #[arg(long, short)]
    pub metric: MetricKind,
    /// Distinctiveness exponent (default 1).
    #[arg(long, conflicts_with_all = ["beta", "gamma"])]
    pub alpha: Option<f64>,
    /// Beta centrality attenuation (default 0).
    #[arg(long, conflicts_with = "gamma", allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Gamma centrality exponent (default 0).
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    /// Read edge weights from the third column.
    #[arg(long)]
    pub weighted: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NetworkArgs {
    /// sf (preferential attachment), sw (small world) or er (Erdos-Renyi).
    #[arg(long, default_value = "sf")]
    pub topology: Family,
    /// Edges added per node in scale-free graphs.
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// Lattice neighbors per side in small-world graphs.
    #[arg(long, default_value_t = 2)]
    pub nei: usize,
    /// Rewiring (sw, default 0.05) or edge (er, default 0.1) probability.
    #[arg(long)]
    pub p: Option<f64>,
    /// Draw integer edge weights uniformly from the weight range.
    #[arg(long, conflicts_with = "unweighted")]
    pub weighted: bool,
    /// All edge weights 1 (default).
    #[arg(long)]
    pub unweighted: bool,
    #[arg(long, default_value_t = 1)]
    pub weight_low: u32,
    #[arg(long, default_value_t = 20)]
    pub weight_high: u32,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

fn build_topology(family: Family, m: usize, nei: usize, p: Option<f64>, default_er_p: f64) -> Topology {
    match family {
        Family::ScaleFree => Topology::ScaleFree { m },
        Family::SmallWorld => Topology::SmallWorld {
            nei,
            p: p.unwrap_or(0.05),
        },
        Family::ErdosRenyi => Topology::ErdosRenyi {
            p: p.unwrap_or(default_er_p),
        },
    }
}

impl NetworkArgs {
    fn weights(&self) -> WeightConfig {
        WeightConfig {
            weighted: self.weighted,
            low: self.weight_low,
            high: self.weight_high,
        }
    }

    fn experiment(&self, n: usize, reps: usize, alpha_grid: AlphaGrid, jobs: Option<usize>) -> ExperimentConfig {
        ExperimentConfig {
            topology: build_topology(self.topology, self.m, self.nei, self.p, 0.1),
            n,
            reps,
            alpha_grid,
            weights: self.weights(),
            base_seed: self.seed,
            jobs: jobs.unwrap_or(0),
        }
    }
}

#[derive(Debug, Args)]
pub struct CorrArgs {
    #[command(flatten)]
    pub network: NetworkArgs,
    #[arg(long, default_value_t = 300)]
    pub n: usize,
    #[arg(long, default_value_t = 20)]
    pub reps: usize,
    /// `start:step:end`, both ends inclusive.
    #[arg(long, default_value = "0.5:0.25:3")]
    pub alpha_grid: AlphaGrid,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[command(flatten)]
    pub network: NetworkArgs,
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    #[arg(long, default_value = "1:1:3")]
    pub alpha_grid: AlphaGrid,
    #[arg(long, default_value_t = 100)]
    pub bins: usize,
    /// Receives `scores.csv` and `ruzicka.csv`.
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = "er")]
    pub topology: Family,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long, default_value_t = 2)]
    pub nei: usize,
    /// Rewiring (sw, default 0.05) or edge (er, default 0.2) probability.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, value_delimiter = ',', default_value = "200,400,800,1600")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, value_delimiter = ',', default_value = "d1,d2,d3,d4,d5,gamma,beta")]
    pub metrics: Vec<MetricKind>,
    #[arg(long)]
    pub weighted: bool,
    #[arg(long, default_value_t = 1)]
    pub weight_low: u32,
    #[arg(long, default_value_t = 20)]
    pub weight_high: u32,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Minimum duration of one timing sample, in milliseconds.
    #[arg(long, default_value_t = 20)]
    pub min_sample_ms: u64,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Fixed six decimals; negative zero prints as zero.
pub fn format_float(x: f64) -> String {
    let text = format!("{x:.6}");
    if text == "-0.000000" {
        "0.000000".to_owned()
    } else {
        text
    }
}

fn env_dir() -> Option<PathBuf> {
    std::env::var_os(OUT_DIR_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

fn resolve_output(explicit: Option<PathBuf>, default_name: &str) -> Option<PathBuf> {
    explicit.or_else(|| env_dir().map(|dir| dir.join(default_name)))
}

/// Writes the finished CSV in one go, to stdout when no path is given.
fn emit(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
            }
            fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn csv_bytes<I, R>(header: &[&str], rows: I) -> Result<Vec<u8>>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row)?;
    }
    Ok(writer.into_inner().map_err(|e| e.into_error())?)
}

fn metric_spec(args: &ComputeArgs) -> Result<MetricSpec<f64>> {
    let kind = args.metric;
    let stray = |flag: &str| bail!("--{flag} does not apply to metric {kind}");
    match kind {
        MetricKind::Beta => {
            if args.alpha.is_some() {
                return stray("alpha");
            }
            Ok(MetricSpec::beta(args.beta.unwrap_or(0.0)))
        }
        MetricKind::Gamma => {
            if args.alpha.is_some() {
                return stray("alpha");
            }
            Ok(MetricSpec::gamma(args.gamma.unwrap_or(0.0)))
        }
        _ => {
            if args.beta.is_some() {
                return stray("beta");
            }
            if args.gamma.is_some() {
                return stray("gamma");
            }
            if !kind.is_distinctiveness() && args.alpha.is_some() {
                return stray("alpha");
            }
            Ok(MetricSpec::new(kind, args.alpha.unwrap_or(1.0)))
        }
    }
}

pub fn cmd_compute(args: ComputeArgs) -> Result<()> {
    let spec = metric_spec(&args)?;
    let file = File::open(&args.input).with_context(|| format!("opening {}", args.input.display()))?;
    let (graph, labels): (Graph64, _) = read_edge_list(BufReader::new(file), args.weighted)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let scores = compute(&graph, spec).with_context(|| format!("computing {}", spec.kind))?;
    let rows = labels
        .iter()
        .zip(scores.scores())
        .map(|(label, &score)| [label.to_owned(), format_float(score)]);
    let bytes = csv_bytes(&["node", "score"], rows)?;
    emit(resolve_output(args.output, "scores.csv").as_deref(), &bytes)
}

pub fn cmd_experiment_corr(args: CorrArgs) -> Result<()> {
    let cfg = args.network.experiment(args.n, args.reps, args.alpha_grid, args.jobs);
    let records = run_correlation_experiment(&cfg)?;
    let rows = records.iter().map(|r| {
        [
            r.topology.code().to_owned(),
            r.weighted.to_string(),
            format_float(r.alpha),
            r.metric_a.name().to_owned(),
            r.metric_b.name().to_owned(),
            format_float(r.mean_spearman),
            format_float(r.sd_spearman),
            r.reps_used.to_string(),
            r.reps_skipped.to_string(),
        ]
    });
    let header = [
        "topology",
        "weighted",
        "alpha",
        "metric_a",
        "metric_b",
        "mean_spearman",
        "sd_spearman",
        "reps_used",
        "reps_skipped",
    ];
    let bytes = csv_bytes(&header, rows)?;
    emit(resolve_output(args.output, "correlations.csv").as_deref(), &bytes)
}

pub fn cmd_experiment_dist(args: DistArgs) -> Result<()> {
    let cfg = args.network.experiment(args.n, 1, args.alpha_grid, None);
    let output = run_distribution_experiment(&cfg, args.bins)?;
    let scores = csv_bytes(
        &["alpha", "metric", "node", "normalized_score"],
        output.scores.iter().map(|s| {
            [
                format_float(s.alpha),
                s.metric.name().to_owned(),
                s.node.to_string(),
                format_float(s.normalized_score),
            ]
        }),
    )?;
    let ruzicka = csv_bytes(
        &["alpha", "metric_a", "metric_b", "mode", "ruzicka"],
        output.ruzicka.iter().map(|r| {
            [
                format_float(r.alpha),
                r.metric_a.name().to_owned(),
                r.metric_b.name().to_owned(),
                r.mode.name().to_owned(),
                r.ruzicka.map(format_float).unwrap_or_default(),
            ]
        }),
    )?;
    let dir = args.output_dir.or_else(env_dir).unwrap_or_else(|| PathBuf::from("."));
    emit(Some(&dir.join("scores.csv")), &scores)?;
    emit(Some(&dir.join("ruzicka.csv")), &ruzicka)
}

pub fn cmd_bench(args: BenchArgs) -> Result<()> {
    let cfg = ScalingConfig {
        topology: build_topology(args.topology, args.m, args.nei, args.p, 0.2),
        sizes: args.sizes,
        reps: args.reps,
        weights: WeightConfig {
            weighted: args.weighted,
            low: args.weight_low,
            high: args.weight_high,
        },
        base_seed: args.seed,
        alpha: args.alpha,
        metrics: args.metrics,
        min_sample: Duration::from_millis(args.min_sample_ms),
    };
    let records = run_scaling_benchmark(&cfg)?;
    let rows = records.iter().map(|r| {
        [
            r.metric.name().to_owned(),
            r.n.to_string(),
            format!("{:.9}", r.median_runtime_seconds),
            format_float(r.loglog_slope),
        ]
    });
    let bytes = csv_bytes(&["metric", "n", "median_runtime_seconds", "loglog_slope"], rows)?;
    emit(resolve_output(args.output, "scaling.csv").as_deref(), &bytes)
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Experiment(ExperimentCommand::Corr(args)) => cmd_experiment_corr(args),
        Command::Experiment(ExperimentCommand::Dist(args)) => cmd_experiment_dist(args),
        Command::Bench(args) => cmd_bench(args),
    }
}
