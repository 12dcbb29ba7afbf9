use rayon::prelude::*;

use super::{metric_panel_with_lambda, panel_metrics, ExperimentConfig, ExperimentError};
use crate::centrality::{dominant_eigenvalue, MetricKind};
use crate::randgen::Family;
use crate::stats::spearman;

/// Mean Spearman correlation of one metric pair at one alpha.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationRecord {
    pub topology: Family,
    pub weighted: bool,
    pub alpha: f64,
    pub metric_a: MetricKind,
    pub metric_b: MetricKind,
    pub mean_spearman: f64,
    /// Sample standard deviation across replications; 0 with one replication.
    pub sd_spearman: f64,
    pub reps_used: usize,
    pub reps_skipped: usize,
}

/// Unordered metric pairs, each oriented in panel order.
pub(crate) fn panel_pairs(weighted: bool) -> Vec<(MetricKind, MetricKind)> {
    let panel = panel_metrics(weighted);
    let mut pairs = Vec::new();
    for (i, &a) in panel.iter().enumerate() {
        for &b in &panel[i + 1..] {
            pairs.push((a, b));
        }
    }
    pairs
}

/// Per-alpha correlations for one replication. `None` at an alpha where
/// some pair is undefined (a constant score vector); the whole replication
/// is then left out of that alpha's averages.
type Replication = Vec<Option<Vec<f64>>>;

fn replicate(
    cfg: &ExperimentConfig,
    rep: usize,
    pairs: &[(MetricKind, MetricKind)],
) -> Result<Replication, ExperimentError> {
    let graph = cfg.replicate_graph(rep)?;
    let lambda1 = dominant_eigenvalue(&graph)?;
    cfg.alpha_grid
        .values()
        .iter()
        .map(|&alpha| {
            let panel = metric_panel_with_lambda(&graph, alpha, lambda1, cfg.weighted())?;
            let mut row = Vec::with_capacity(pairs.len());
            for &(a, b) in pairs {
                let x = panel.get(a).expect("pair drawn from panel").scores();
                let y = panel.get(b).expect("pair drawn from panel").scores();
                match spearman(x, y) {
                    Ok(rho) => row.push(rho),
                    Err(_) => return Ok(None),
                }
            }
            Ok(Some(row))
        })
        .collect()
}

fn mean_and_sd(values: &[f64]) -> (f64, f64) {
    let k = values.len() as f64;
    let mean = values.iter().fold(0.0, |acc, v| acc + v) / k;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let ss = values.iter().fold(0.0, |acc, v| acc + (v - mean) * (v - mean));
    (mean, (ss / (k - 1.0)).sqrt())
}

/// Runs `cfg.reps` seeded replications and averages the Spearman
/// correlation of every panel pair at every alpha.
///
/// Replications run in parallel but are combined in replication order, so
/// the output does not depend on `cfg.jobs`. Rows are sorted by alpha, then
/// by metric names.
pub fn run_correlation_experiment(cfg: &ExperimentConfig) -> Result<Vec<CorrelationRecord>, ExperimentError> {
    cfg.validate()?;
    let pairs = panel_pairs(cfg.weighted());
    let pool = cfg.thread_pool()?;
    let replications: Vec<Replication> = pool.install(|| {
        (0..cfg.reps)
            .into_par_iter()
            .map(|rep| replicate(cfg, rep, &pairs))
            .collect::<Result<_, _>>()
    })?;

    let mut records = Vec::with_capacity(cfg.alpha_grid.values().len() * pairs.len());
    for (ai, &alpha) in cfg.alpha_grid.values().iter().enumerate() {
        let used: Vec<&Vec<f64>> = replications.iter().filter_map(|rep| rep[ai].as_ref()).collect();
        for (pi, &(metric_a, metric_b)) in pairs.iter().enumerate() {
            if used.is_empty() {
                return Err(ExperimentError::AllSkipped {
                    alpha,
                    metric_a,
                    metric_b,
                });
            }
            let values: Vec<f64> = used.iter().map(|row| row[pi]).collect();
            let (mean, sd) = mean_and_sd(&values);
            records.push(CorrelationRecord {
                topology: cfg.topology.family(),
                weighted: cfg.weighted(),
                alpha,
                metric_a,
                metric_b,
                mean_spearman: mean.clamp(-1.0, 1.0),
                sd_spearman: sd,
                reps_used: used.len(),
                reps_skipped: cfg.reps - used.len(),
            });
        }
    }
    records.sort_by(|x, y| {
        x.alpha
            .total_cmp(&y.alpha)
            .then_with(|| x.metric_a.name().cmp(y.metric_a.name()))
            .then_with(|| x.metric_b.name().cmp(y.metric_b.name()))
    });
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::AlphaGrid;
    use crate::randgen::{Topology, WeightConfig};

    fn small(topology: Topology, weights: WeightConfig) -> ExperimentConfig {
        ExperimentConfig {
            n: 60,
            reps: 4,
            alpha_grid: "1:1:3".parse().unwrap(),
            jobs: 2,
            ..ExperimentConfig::new(topology, weights, 11)
        }
    }

    fn find(records: &[CorrelationRecord], alpha: f64, a: MetricKind, b: MetricKind) -> &CorrelationRecord {
        records
            .iter()
            .find(|r| r.alpha == alpha && r.metric_a == a && r.metric_b == b)
            .unwrap()
    }

    #[test]
    fn pairs_cover_panel() {
        let pairs = panel_pairs(false);
        assert_eq!(pairs.len(), 10);
        assert!(pairs.contains(&(MetricKind::D5, MetricKind::Gamma)));
        assert!(!pairs.iter().any(|&(a, b)| a == MetricKind::D1 || b == MetricKind::D1));
        assert!(panel_pairs(true).contains(&(MetricKind::D1, MetricKind::D3)));
    }

    #[test]
    fn mean_sd() {
        assert_eq!(mean_and_sd(&[0.5]), (0.5, 0.0));
        let (m, s) = mean_and_sd(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m, 2.5);
        assert!((s - (5.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn d5_gamma_identity_on_unweighted_graphs() {
        let cfg = small(Topology::SmallWorld { nei: 2, p: 0.2 }, WeightConfig::unweighted());
        let records = run_correlation_experiment(&cfg).unwrap();
        assert_eq!(records.len(), 3 * 10);
        for alpha in [1.0, 2.0, 3.0] {
            let r = find(&records, alpha, MetricKind::D5, MetricKind::Gamma);
            assert_eq!(r.mean_spearman, 1.0);
            assert_eq!(r.sd_spearman, 0.0);
            assert_eq!(r.reps_used + r.reps_skipped, 4);
        }
        for r in &records {
            assert!((-1.0..=1.0).contains(&r.mean_spearman));
            assert!(r.sd_spearman >= 0.0);
        }
    }

    #[test]
    fn single_replication_has_zero_sd() {
        let cfg = ExperimentConfig {
            reps: 1,
            ..small(Topology::ScaleFree { m: 2 }, WeightConfig::uniform(1, 20))
        };
        let records = run_correlation_experiment(&cfg).unwrap();
        assert!(records.iter().all(|r| r.sd_spearman == 0.0 && r.reps_used == 1));
    }

    #[test]
    fn output_is_sorted_and_independent_of_jobs() {
        let cfg = small(Topology::ErdosRenyi { p: 0.1 }, WeightConfig::uniform(1, 20));
        let a = run_correlation_experiment(&ExperimentConfig { jobs: 1, ..cfg.clone() }).unwrap();
        let b = run_correlation_experiment(&ExperimentConfig { jobs: 4, ..cfg }).unwrap();
        assert_eq!(a, b);
        for w in a.windows(2) {
            let key = |r: &CorrelationRecord| (r.alpha, r.metric_a.name(), r.metric_b.name());
            assert!(key(&w[0]) < key(&w[1]));
        }
    }

    #[test]
    fn d2_gamma_correlation_weakens_with_alpha() {
        let cfg = ExperimentConfig {
            alpha_grid: AlphaGrid::from_values(vec![1.0, 3.0]).unwrap(),
            reps: 5,
            ..ExperimentConfig::new(Topology::ScaleFree { m: 2 }, WeightConfig::unweighted(), 3)
        };
        let records = run_correlation_experiment(&cfg).unwrap();
        let low = find(&records, 1.0, MetricKind::D2, MetricKind::Gamma).mean_spearman;
        let high = find(&records, 3.0, MetricKind::D2, MetricKind::Gamma).mean_spearman;
        assert!(high.abs() < low.abs(), "{low} -> {high}");
    }

    #[test]
    fn rejects_zero_reps() {
        let cfg = ExperimentConfig {
            reps: 0,
            ..small(Topology::ScaleFree { m: 2 }, WeightConfig::unweighted())
        };
        assert!(matches!(
            run_correlation_experiment(&cfg),
            Err(ExperimentError::InvalidConfig(_))
        ));
    }
}
