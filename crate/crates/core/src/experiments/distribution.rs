use std::fmt;

use super::{metric_panel, ExperimentConfig, ExperimentError};
use crate::centrality::MetricKind;
use crate::randgen::Family;
use crate::stats::{histogram, normalize_minmax, ruzicka, Histogram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuzickaMode {
    /// Compares normalized scores node by node.
    NodeAligned,
    /// Compares binned distributions of normalized scores.
    Histogram,
}

impl RuzickaMode {
    pub fn name(self) -> &'static str {
        match self {
            RuzickaMode::NodeAligned => "node-aligned",
            RuzickaMode::Histogram => "histogram",
        }
    }
}

impl fmt::Display for RuzickaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedScore {
    pub alpha: f64,
    pub metric: MetricKind,
    pub node: usize,
    pub normalized_score: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuzickaRecord {
    pub topology: Family,
    pub weighted: bool,
    pub alpha: f64,
    pub metric_a: MetricKind,
    pub metric_b: MetricKind,
    pub mode: RuzickaMode,
    /// `None` when both sides are identically zero.
    pub ruzicka: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistributionOutput {
    pub scores: Vec<NormalizedScore>,
    pub ruzicka: Vec<RuzickaRecord>,
}

/// Min-max normalized panel scores on the replication-0 graph, with
/// Ruzicka similarities for every pair (diagonal included) in both modes.
pub fn run_distribution_experiment(cfg: &ExperimentConfig, bins: usize) -> Result<DistributionOutput, ExperimentError> {
    cfg.validate()?;
    if bins == 0 {
        return Err(ExperimentError::InvalidConfig("bins must be at least 1".into()));
    }
    let graph = cfg.replicate_graph(0)?;
    let mut output = DistributionOutput {
        scores: Vec::new(),
        ruzicka: Vec::new(),
    };
    for &alpha in cfg.alpha_grid.values() {
        let panel = metric_panel(&graph, alpha, cfg.weighted())?;
        let kinds: Vec<MetricKind> = panel.kinds().collect();
        let normalized: Vec<Vec<f64>> = panel.scores.iter().map(|s| normalize_minmax(s.scores())).collect();
        let hists: Vec<Histogram<f64>> = normalized
            .iter()
            .map(|x| histogram(x, bins))
            .collect::<Result<_, _>>()?;

        for (kind, values) in kinds.iter().zip(&normalized) {
            output
                .scores
                .extend(values.iter().enumerate().map(|(node, &v)| NormalizedScore {
                    alpha,
                    metric: *kind,
                    node,
                    normalized_score: v,
                }));
        }
        for mode in [RuzickaMode::NodeAligned, RuzickaMode::Histogram] {
            for i in 0..kinds.len() {
                for j in i..kinds.len() {
                    let (p, q) = match mode {
                        RuzickaMode::NodeAligned => (&normalized[i][..], &normalized[j][..]),
                        RuzickaMode::Histogram => (hists[i].masses(), hists[j].masses()),
                    };
                    output.ruzicka.push(RuzickaRecord {
                        topology: cfg.topology.family(),
                        weighted: cfg.weighted(),
                        alpha,
                        metric_a: kinds[i],
                        metric_b: kinds[j],
                        mode,
                        ruzicka: ruzicka(p, q).ok(),
                    });
                }
            }
        }
    }
    Ok(output)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::randgen::{Topology, WeightConfig};

    #[test]
    fn unweighted_sw_distribution() {
        let cfg = ExperimentConfig {
            n: 200,
            alpha_grid: "1:1:3".parse().unwrap(),
            ..ExperimentConfig::new(Topology::SmallWorld { nei: 2, p: 0.1 }, WeightConfig::unweighted(), 5)
        };
        let out = run_distribution_experiment(&cfg, 100).unwrap();
        assert_eq!(out.scores.len(), 3 * 5 * 200);
        assert_eq!(out.ruzicka.len(), 3 * 2 * 15);
        for s in &out.scores {
            assert!((0.0..=1.0).contains(&s.normalized_score));
        }
        for r in &out.ruzicka {
            if r.metric_a == r.metric_b {
                assert_eq!(r.ruzicka, Some(1.0));
            }
            if let Some(v) = r.ruzicka {
                assert!((0.0..=1.0).contains(&v));
            }
        }
        let d5_gamma = out
            .ruzicka
            .iter()
            .find(|r| {
                r.metric_a == MetricKind::D5 && r.metric_b == MetricKind::Gamma && r.mode == RuzickaMode::NodeAligned
            })
            .unwrap();
        assert_eq!(d5_gamma.ruzicka, Some(1.0));
    }

    #[test]
    fn rejects_zero_bins() {
        let cfg = ExperimentConfig::new(Topology::ScaleFree { m: 2 }, WeightConfig::unweighted(), 1);
        assert!(run_distribution_experiment(&cfg, 0).is_err());
    }
}
