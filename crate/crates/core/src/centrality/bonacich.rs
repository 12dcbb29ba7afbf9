//! Beta (Bonacich) and Gamma centrality.

use super::dense::{solve_in_place, ZeroPivot};
use super::spectral::dominant_eigenvalue;
use super::{accumulate, CentralityError, MetricKind, MetricSpec, ScoreVector, DEFAULT_DENSE_CAP};
use crate::graph::Graph;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaOptions<T> {
    /// Largest node count for which `I - beta * A` is materialized.
    pub dense_cap: usize,
    /// Precomputed largest adjacency eigenvalue; computed on demand if unset.
    pub lambda1: Option<T>,
}

impl<T> Default for BetaOptions<T> {
    fn default() -> Self {
        Self {
            dense_cap: DEFAULT_DENSE_CAP,
            lambda1: None,
        }
    }
}

/// Solves `(I - beta * A) x = A * 1`.
pub fn beta_centrality<T: Scalar>(graph: &Graph<T>, beta: T) -> Result<ScoreVector<T>, CentralityError> {
    beta_centrality_with(graph, beta, &BetaOptions::default())
}

pub fn beta_centrality_with<T: Scalar>(
    graph: &Graph<T>,
    beta: T,
    options: &BetaOptions<T>,
) -> Result<ScoreVector<T>, CentralityError> {
    let spec = MetricSpec::beta(beta);
    if !beta.is_finite() {
        return Err(CentralityError::InvalidParameter {
            metric: MetricKind::Beta,
            value: beta.to_f64_lossy(),
            reason: "beta must be finite",
        });
    }
    let n = graph.node_count();
    if graph.edge_count() == 0 {
        return Ok(ScoreVector::new(vec![T::zero(); n], spec, graph));
    }
    // First term of the series; no walks beyond length one contribute.
    if beta == T::zero() {
        return Ok(ScoreVector::new(graph.strengths().to_vec(), spec, graph));
    }
    if n > options.dense_cap {
        return Err(CentralityError::DenseCapExceeded {
            node_count: n,
            cap: options.dense_cap,
        });
    }
    let lambda1 = match options.lambda1 {
        Some(value) => value,
        None => dominant_eigenvalue(graph)?,
    };
    let radius = beta.abs() * lambda1;
    if radius.is_nan() || radius >= T::one() {
        return Err(CentralityError::SpectralRadius {
            beta: beta.to_f64_lossy(),
            lambda1: lambda1.to_f64_lossy(),
        });
    }

    let mut system = vec![T::zero(); n * n];
    for row in 0..n {
        system[row * n + row] = T::one();
        for (col, w) in graph.neighbors(row) {
            system[row * n + col] = -beta * w;
        }
    }
    let mut scores = graph.strengths().to_vec();
    solve_in_place(&mut system, &mut scores).map_err(|ZeroPivot(column)| CentralityError::Singular { column })?;
    if let Some(node) = scores.iter().position(|s| !s.is_finite()) {
        return Err(CentralityError::NonFinite {
            metric: MetricKind::Beta,
            node,
            term: "(I - beta * A)^-1 * A * 1",
        });
    }
    Ok(ScoreVector::new(scores, spec, graph))
}

/// `GC(i) = sum_j w_ij * s_j^gamma` where `s_j` is the strength of `j`.
pub fn gamma_centrality<T: Scalar>(graph: &Graph<T>, gamma: T) -> Result<ScoreVector<T>, CentralityError> {
    let spec = MetricSpec::gamma(gamma);
    if !gamma.is_finite() {
        return Err(CentralityError::InvalidParameter {
            metric: MetricKind::Gamma,
            value: gamma.to_f64_lossy(),
            reason: "gamma must be finite",
        });
    }
    // Every neighbor has strength >= its edge weight > 0; isolates are never
    // powered.
    let powered: Vec<T> = graph
        .strengths()
        .iter()
        .zip(graph.degrees())
        .map(|(&s, &degree)| if degree == 0 { T::zero() } else { s.powf(gamma) })
        .collect();
    accumulate(graph, spec, "w_ij * s_j^gamma", |_, j, w| Ok(w * powered[j]))
}
