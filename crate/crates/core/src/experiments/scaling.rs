use std::hint::black_box;
use std::time::{Duration, Instant};

use super::ExperimentError;
use crate::centrality::{
    beta_centrality_with, d1, d2, d3, d4, d5, dominant_eigenvalue, gamma_centrality, harmonize, BetaOptions,
    CentralityError, MetricKind,
};
use crate::randgen::{assign_weights, derive_seed, generate, GeneratorConfig, Topology, WeightConfig};
use crate::{Graph64, ScoreVector64};

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingConfig {
    pub topology: Topology,
    /// Strictly increasing, at least three sizes.
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub weights: WeightConfig,
    pub base_seed: u64,
    /// Alpha for D1 to D5; Beta and Gamma use the harmonized parameters.
    pub alpha: f64,
    pub metrics: Vec<MetricKind>,
    /// Fast metrics are repeated until one sample takes at least this long.
    pub min_sample: Duration,
}

impl ScalingConfig {
    /// Dense Erdos-Renyi graphs (p = 0.2) at 200, 400, 800 and 1600 nodes.
    pub fn new(base_seed: u64) -> Self {
        Self {
            topology: Topology::ErdosRenyi { p: 0.2 },
            sizes: vec![200, 400, 800, 1600],
            reps: 5,
            weights: WeightConfig::unweighted(),
            base_seed,
            alpha: 1.0,
            metrics: vec![
                MetricKind::D1,
                MetricKind::D2,
                MetricKind::D3,
                MetricKind::D4,
                MetricKind::D5,
                MetricKind::Gamma,
                MetricKind::Beta,
            ],
            min_sample: Duration::from_millis(20),
        }
    }

    fn validate(&self) -> Result<(), ExperimentError> {
        let invalid = |msg: String| Err(ExperimentError::InvalidConfig(msg));
        if self.sizes.len() < 3 {
            return invalid(format!("need at least 3 sizes, got {}", self.sizes.len()));
        }
        if self.sizes.windows(2).any(|w| w[0] >= w[1]) {
            return invalid("sizes must be strictly increasing".into());
        }
        if self.reps == 0 {
            return invalid("reps must be at least 1".into());
        }
        if self.metrics.is_empty() {
            return invalid("no metrics to time".into());
        }
        if let Some(kind) = self
            .metrics
            .iter()
            .find(|k| matches!(k, MetricKind::Degree | MetricKind::Strength))
        {
            return invalid(format!("{kind} is precomputed and cannot be timed"));
        }
        if !(self.alpha.is_finite() && self.alpha > 0.0) {
            return invalid(format!("alpha must be finite and positive, got {}", self.alpha));
        }
        for &n in &self.sizes {
            GeneratorConfig::new(self.topology, n, self.base_seed).validate()?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingRecord {
    pub metric: MetricKind,
    pub n: usize,
    pub median_runtime_seconds: f64,
    /// Slope of log(time) against log(n) over every size of this metric.
    pub loglog_slope: f64,
}

/// Ordinary least squares slope of `ln y` on `ln x`.
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> f64 {
    let k = points.len() as f64;
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let mx = logs.iter().fold(0.0, |acc, p| acc + p.0) / k;
    let my = logs.iter().fold(0.0, |acc, p| acc + p.1) / k;
    let (sxy, sxx) = logs.iter().fold((0.0, 0.0), |(sxy, sxx), &(x, y)| {
        (sxy + (x - mx) * (y - my), sxx + (x - mx) * (x - mx))
    });
    sxy / sxx
}

struct Prepared {
    graph: Graph64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    beta_options: BetaOptions<f64>,
}

impl Prepared {
    fn run(&self, kind: MetricKind) -> Result<ScoreVector64, CentralityError> {
        let g = &self.graph;
        match kind {
            MetricKind::D1 => d1(g, self.alpha),
            MetricKind::D2 => d2(g, self.alpha),
            MetricKind::D3 => d3(g, self.alpha),
            MetricKind::D4 => d4(g, self.alpha),
            MetricKind::D5 => d5(g, self.alpha),
            MetricKind::Gamma => gamma_centrality(g, self.gamma),
            MetricKind::Beta => beta_centrality_with(g, self.beta, &self.beta_options),
            MetricKind::Degree | MetricKind::Strength => unreachable!("rejected by validation"),
        }
    }

    /// Mean time per call, repeating fast calls to get above timer noise.
    fn time(&self, kind: MetricKind, min_sample: Duration) -> Result<f64, CentralityError> {
        let start = Instant::now();
        black_box(self.run(kind)?);
        let first = start.elapsed();
        if first >= min_sample {
            return Ok(first.as_secs_f64());
        }
        let per_call = first.max(Duration::from_micros(1));
        let iterations = (min_sample.as_nanos() / per_call.as_nanos()).clamp(1, 100_000) as u32;
        let start = Instant::now();
        for _ in 0..iterations {
            black_box(self.run(kind)?);
        }
        Ok(start.elapsed().as_secs_f64() / f64::from(iterations))
    }
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    }
}

/// Times every configured metric on seeded graphs of each size.
///
/// Graph generation, degrees, strengths and the largest eigenvalue are
/// prepared outside the timed region. Beta timing includes building and
/// factoring the dense system. Runs on the calling thread only.
pub fn run_scaling_benchmark(cfg: &ScalingConfig) -> Result<Vec<ScalingRecord>, ExperimentError> {
    cfg.validate()?;
    let mut medians = vec![vec![0.0; cfg.sizes.len()]; cfg.metrics.len()];
    for (si, &n) in cfg.sizes.iter().enumerate() {
        let mut samples = vec![Vec::with_capacity(cfg.reps); cfg.metrics.len()];
        for rep in 0..cfg.reps {
            let stream = 2 * (si * cfg.reps + rep) as u64;
            let generator = GeneratorConfig::new(cfg.topology, n, derive_seed(cfg.base_seed, stream));
            let mut graph: Graph64 = generate(&generator)?;
            if cfg.weights.weighted {
                graph = assign_weights(&graph, &cfg.weights, derive_seed(cfg.base_seed, stream + 1))?;
            }
            let lambda1 = dominant_eigenvalue(&graph)?;
            let harmonized = harmonize(cfg.alpha, lambda1);
            let prepared = Prepared {
                graph,
                alpha: cfg.alpha,
                beta: harmonized.beta,
                gamma: harmonized.gamma,
                beta_options: BetaOptions {
                    lambda1: Some(lambda1),
                    ..BetaOptions::default()
                },
            };
            for (mi, &kind) in cfg.metrics.iter().enumerate() {
                samples[mi].push(prepared.time(kind, cfg.min_sample)?);
            }
        }
        for (mi, &kind) in cfg.metrics.iter().enumerate() {
            let m = median(&mut samples[mi]);
            if m <= 0.0 {
                return Err(ExperimentError::TimerResolution { metric: kind, n });
            }
            medians[mi][si] = m;
        }
    }

    let mut records = Vec::with_capacity(cfg.metrics.len() * cfg.sizes.len());
    for (mi, &metric) in cfg.metrics.iter().enumerate() {
        let points: Vec<(f64, f64)> = cfg
            .sizes
            .iter()
            .map(|&n| n as f64)
            .zip(medians[mi].iter().copied())
            .collect();
        let slope = fit_loglog_slope(&points);
        records.extend(cfg.sizes.iter().zip(&medians[mi]).map(|(&n, &t)| ScalingRecord {
            metric,
            n,
            median_runtime_seconds: t,
            loglog_slope: slope,
        }));
    }
    Ok(records)
}
