//! Replication harness: correlation sweeps, score distributions and
//! runtime scaling on seeded random graphs.
//!
//! Everything here runs in `f64`.

mod correlation;
mod distribution;
mod scaling;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::centrality::{
    beta_centrality_with, d1, d2, d3, d4, d5, dominant_eigenvalue, gamma_centrality, harmonize, BetaOptions,
    CentralityError, MetricKind,
};
use crate::randgen::{assign_weights, derive_seed, generate, GeneratorConfig, GeneratorError, Topology, WeightConfig};
use crate::stats::StatsError;
use crate::{Graph64, ScoreVector64};

pub use correlation::{run_correlation_experiment, CorrelationRecord};
pub use distribution::{run_distribution_experiment, DistributionOutput, NormalizedScore, RuzickaMode, RuzickaRecord};
pub use scaling::{fit_loglog_slope, run_scaling_benchmark, ScalingConfig, ScalingRecord};

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid experiment configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Centrality(#[from] CentralityError),
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error("every replication was skipped for ({metric_a}, {metric_b}) at alpha = {alpha}")]
    AllSkipped {
        alpha: f64,
        metric_a: MetricKind,
        metric_b: MetricKind,
    },
    #[error("timer resolution too coarse: {metric} at n = {n} measured zero elapsed time")]
    TimerResolution { metric: MetricKind, n: usize },
    #[error("failed to build worker pool: {0}")]
    ThreadPool(String),
}

/// Inclusive arithmetic grid `start:step:end`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaGrid(Vec<f64>);

impl AlphaGrid {
    /// End points are included when reached within `1e-12`.
    pub fn new(start: f64, step: f64, end: f64) -> Result<Self, ExperimentError> {
        if !(start.is_finite() && step.is_finite() && end.is_finite()) {
            return Err(ExperimentError::InvalidConfig(
                "alpha grid bounds must be finite".into(),
            ));
        }
        if start <= 0.0 {
            return Err(ExperimentError::InvalidConfig(format!(
                "alpha grid must start above 0, got {start}"
            )));
        }
        if step <= 0.0 {
            return Err(ExperimentError::InvalidConfig(format!(
                "alpha grid step must be positive, got {step}"
            )));
        }
        if end + 1e-12 < start {
            return Err(ExperimentError::InvalidConfig(format!(
                "alpha grid end {end} is below start {start}"
            )));
        }
        let count = ((end - start) / step + 1e-12).floor() as usize + 1;
        Ok(Self((0..count).map(|i| start + i as f64 * step).collect()))
    }

    pub fn from_values(values: Vec<f64>) -> Result<Self, ExperimentError> {
        if values.is_empty() {
            return Err(ExperimentError::InvalidConfig("alpha grid is empty".into()));
        }
        if values.iter().any(|&a| !(a.is_finite() && a > 0.0)) {
            return Err(ExperimentError::InvalidConfig(
                "alpha values must be finite and positive".into(),
            ));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ExperimentError::InvalidConfig(
                "alpha values must be strictly increasing".into(),
            ));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }
}

impl Default for AlphaGrid {
    /// 0.5 to 3.0 in steps of 0.25.
    fn default() -> Self {
        Self::new(0.5, 0.25, 3.0).expect("default grid is valid")
    }
}

impl FromStr for AlphaGrid {
    type Err = ExperimentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, step, end] = parts.as_slice() else {
            return Err(ExperimentError::InvalidConfig(format!(
                "alpha grid must look like start:step:end, got {s:?}"
            )));
        };
        let parse = |text: &str| {
            text.trim()
                .parse::<f64>()
                .map_err(|_| ExperimentError::InvalidConfig(format!("bad number {text:?} in alpha grid")))
        };
        Self::new(parse(start)?, parse(step)?, parse(end)?)
    }
}

impl fmt::Display for AlphaGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let values: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", values.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub topology: Topology,
    pub n: usize,
    pub reps: usize,
    pub alpha_grid: AlphaGrid,
    pub weights: WeightConfig,
    pub base_seed: u64,
    /// Worker threads for replications; 0 means all available cores.
    pub jobs: usize,
}

impl ExperimentConfig {
    /// Desk-scale defaults: 300 nodes, 20 replications, the default grid.
    pub fn new(topology: Topology, weights: WeightConfig, base_seed: u64) -> Self {
        Self {
            topology,
            n: 300,
            reps: 20,
            alpha_grid: AlphaGrid::default(),
            weights,
            base_seed,
            jobs: 0,
        }
    }

    pub fn weighted(&self) -> bool {
        self.weights.weighted
    }

    pub fn validate(&self) -> Result<(), ExperimentError> {
        if self.reps == 0 {
            return Err(ExperimentError::InvalidConfig("reps must be at least 1".into()));
        }
        GeneratorConfig::new(self.topology, self.n, self.base_seed).validate()?;
        Ok(())
    }

    /// Graph for replication `rep`; seeds depend only on `(base_seed, rep)`.
    pub fn replicate_graph(&self, rep: usize) -> Result<Graph64, ExperimentError> {
        let stream = 2 * rep as u64;
        let generator = GeneratorConfig::new(self.topology, self.n, derive_seed(self.base_seed, stream));
        let graph = generate(&generator)?;
        if self.weights.weighted {
            Ok(assign_weights(
                &graph,
                &self.weights,
                derive_seed(self.base_seed, stream + 1),
            )?)
        } else {
            Ok(graph)
        }
    }

    pub(crate) fn thread_pool(&self) -> Result<rayon::ThreadPool, ExperimentError> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| ExperimentError::ThreadPool(e.to_string()))
    }
}

/// Metrics compared on unweighted graphs, in output order.
pub const UNWEIGHTED_PANEL: [MetricKind; 5] = [
    MetricKind::D2,
    MetricKind::D3,
    MetricKind::D5,
    MetricKind::Beta,
    MetricKind::Gamma,
];

/// Metrics compared on weighted graphs, in output order.
pub const WEIGHTED_PANEL: [MetricKind; 5] = [
    MetricKind::D1,
    MetricKind::D3,
    MetricKind::D4,
    MetricKind::Beta,
    MetricKind::Gamma,
];

pub fn panel_metrics(weighted: bool) -> [MetricKind; 5] {
    if weighted {
        WEIGHTED_PANEL
    } else {
        UNWEIGHTED_PANEL
    }
}

/// Scores of every panel metric at one alpha, with Beta and Gamma
/// parameters harmonized to alpha.
#[derive(Debug, Clone)]
pub struct MetricPanel {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub scores: Vec<ScoreVector64>,
}

impl MetricPanel {
    pub fn get(&self, kind: MetricKind) -> Option<&ScoreVector64> {
        self.scores.iter().find(|s| s.metric().kind == kind)
    }

    pub fn kinds(&self) -> impl Iterator<Item = MetricKind> + '_ {
        self.scores.iter().map(|s| s.metric().kind)
    }
}

pub fn metric_panel(graph: &Graph64, alpha: f64, weighted: bool) -> Result<MetricPanel, ExperimentError> {
    let lambda1 = dominant_eigenvalue(graph)?;
    metric_panel_with_lambda(graph, alpha, lambda1, weighted)
}

/// As [`metric_panel`] with the largest adjacency eigenvalue supplied.
pub fn metric_panel_with_lambda(
    graph: &Graph64,
    alpha: f64,
    lambda1: f64,
    weighted: bool,
) -> Result<MetricPanel, ExperimentError> {
    let harmonized = harmonize(alpha, lambda1);
    let beta_options = BetaOptions {
        lambda1: Some(lambda1),
        ..BetaOptions::default()
    };
    let scores = panel_metrics(weighted)
        .into_iter()
        .map(|kind| match kind {
            MetricKind::D1 => d1(graph, alpha),
            MetricKind::D2 => d2(graph, alpha),
            MetricKind::D3 => d3(graph, alpha),
            MetricKind::D4 => d4(graph, alpha),
            MetricKind::D5 => d5(graph, alpha),
            MetricKind::Beta => beta_centrality_with(graph, harmonized.beta, &beta_options),
            MetricKind::Gamma => gamma_centrality(graph, harmonized.gamma),
            MetricKind::Degree | MetricKind::Strength => unreachable!("not a panel metric"),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MetricPanel {
        alpha,
        beta: harmonized.beta,
        gamma: harmonized.gamma,
        scores,
    })
}
