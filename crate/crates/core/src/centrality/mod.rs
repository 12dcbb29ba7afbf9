//! Distinctiveness (D1 to D5), Beta and Gamma centrality.
//!
//! Every metric is a pure function of an immutable [`Graph`]. Scores are not
//! normalized. Isolated nodes score exactly zero under every metric and no
//! logarithm or reciprocal of a zero degree is ever evaluated. Per-node sums
//! always run over neighbors in increasing index order, so results are
//! reproducible bit for bit.

mod bonacich;
mod dense;
mod distinctiveness;
mod spectral;

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::Scalar;

pub use bonacich::{beta_centrality, beta_centrality_with, gamma_centrality, BetaOptions};
pub use distinctiveness::{d1, d2, d3, d4, d5};
pub use spectral::{dominant_eigenvalue, dominant_eigenvalue_with, PowerIteration};

/// Default node limit for the dense Beta solve.
pub const DEFAULT_DENSE_CAP: usize = 5_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetricKind {
    D1,
    D2,
    D3,
    D4,
    D5,
    Beta,
    Gamma,
    Degree,
    Strength,
}

impl MetricKind {
    pub const ALL: [MetricKind; 9] = [
        MetricKind::D1,
        MetricKind::D2,
        MetricKind::D3,
        MetricKind::D4,
        MetricKind::D5,
        MetricKind::Beta,
        MetricKind::Gamma,
        MetricKind::Degree,
        MetricKind::Strength,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MetricKind::D1 => "d1",
            MetricKind::D2 => "d2",
            MetricKind::D3 => "d3",
            MetricKind::D4 => "d4",
            MetricKind::D5 => "d5",
            MetricKind::Beta => "beta",
            MetricKind::Gamma => "gamma",
            MetricKind::Degree => "degree",
            MetricKind::Strength => "strength",
        }
    }

    pub fn is_distinctiveness(self) -> bool {
        matches!(
            self,
            MetricKind::D1 | MetricKind::D2 | MetricKind::D3 | MetricKind::D4 | MetricKind::D5
        )
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown metric {0:?}")]
pub struct UnknownMetric(pub String);

impl FromStr for MetricKind {
    type Err = UnknownMetric;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lowered = s.to_ascii_lowercase();
        MetricKind::ALL
            .into_iter()
            .find(|kind| kind.name() == lowered)
            .ok_or_else(|| UnknownMetric(s.to_owned()))
    }
}

/// A metric together with its tuning parameter.
///
/// `param` is alpha for D1 to D5, beta for Beta, gamma for Gamma and is
/// ignored for Degree and Strength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricSpec<T> {
    pub kind: MetricKind,
    pub param: T,
}

impl<T: Scalar> MetricSpec<T> {
    pub fn new(kind: MetricKind, param: T) -> Self {
        Self { kind, param }
    }

    pub fn d1(alpha: T) -> Self {
        Self::new(MetricKind::D1, alpha)
    }
    pub fn d2(alpha: T) -> Self {
        Self::new(MetricKind::D2, alpha)
    }
    pub fn d3(alpha: T) -> Self {
        Self::new(MetricKind::D3, alpha)
    }
    pub fn d4(alpha: T) -> Self {
        Self::new(MetricKind::D4, alpha)
    }
    pub fn d5(alpha: T) -> Self {
        Self::new(MetricKind::D5, alpha)
    }
    pub fn beta(beta: T) -> Self {
        Self::new(MetricKind::Beta, beta)
    }
    pub fn gamma(gamma: T) -> Self {
        Self::new(MetricKind::Gamma, gamma)
    }
    pub fn degree() -> Self {
        Self::new(MetricKind::Degree, T::zero())
    }
    pub fn strength() -> Self {
        Self::new(MetricKind::Strength, T::zero())
    }
}

/// Per-node scores of one metric on one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector<T> {
    scores: Vec<T>,
    metric: MetricSpec<T>,
    graph_fingerprint: u64,
}

impl<T: Scalar> ScoreVector<T> {
    pub(crate) fn new(scores: Vec<T>, metric: MetricSpec<T>, graph: &Graph<T>) -> Self {
        debug_assert_eq!(scores.len(), graph.node_count());
        Self {
            scores,
            metric,
            graph_fingerprint: graph.fingerprint(),
        }
    }

    pub fn scores(&self) -> &[T] {
        &self.scores
    }

    pub fn into_scores(self) -> Vec<T> {
        self.scores
    }

    pub fn metric(&self) -> MetricSpec<T> {
        self.metric
    }

    pub fn graph_fingerprint(&self) -> u64 {
        self.graph_fingerprint
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

impl<T> Index<usize> for ScoreVector<T> {
    type Output = T;

    fn index(&self, node: usize) -> &T {
        &self.scores[node]
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CentralityError {
    #[error("{metric} needs at least {required} nodes, graph has {node_count}")]
    TooFewNodes {
        metric: MetricKind,
        node_count: usize,
        required: usize,
    },
    #[error("{context} is undefined on a graph without edges")]
    Edgeless { context: &'static str },
    #[error("invalid {metric} parameter {value}: {reason}")]
    InvalidParameter {
        metric: MetricKind,
        value: f64,
        reason: &'static str,
    },
    #[error("beta = {beta} violates |beta| * lambda1 < 1 (lambda1 = {lambda1})")]
    SpectralRadius { beta: f64, lambda1: f64 },
    #[error("dense Beta solve needs {node_count} x {node_count} storage, above the cap of {cap} nodes")]
    DenseCapExceeded { node_count: usize, cap: usize },
    #[error("I - beta * A is singular (zero pivot in column {column})")]
    Singular { column: usize },
    #[error("{metric}: non-finite value at node {node} in term {term}")]
    NonFinite {
        metric: MetricKind,
        node: usize,
        term: &'static str,
    },
    #[error("D3 denominator {value} < 1 on edge ({node}, {neighbor})")]
    DenominatorBelowOne { node: usize, neighbor: usize, value: f64 },
    #[error("power iteration did not converge in {iterations} iterations (relative residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },
}

/// Gamma and Beta parameters matched to a Distinctiveness alpha.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Harmonized<T> {
    pub gamma: T,
    pub beta: T,
}

/// Maps alpha to `gamma = -alpha` and `beta = (2 / e^alpha - 1) / lambda1`.
///
/// For every `alpha > 0` the resulting beta satisfies `|beta| * lambda1 < 1`.
/// `lambda1` must be positive.
pub fn harmonize<T: Scalar>(alpha: T, lambda1: T) -> Harmonized<T> {
    debug_assert!(lambda1 > T::zero());
    let two = T::lit(2.0);
    Harmonized {
        gamma: -alpha,
        beta: (two / alpha.exp() - T::one()) / lambda1,
    }
}

/// Computes the metric named by `spec`.
pub fn compute<T: Scalar>(graph: &Graph<T>, spec: MetricSpec<T>) -> Result<ScoreVector<T>, CentralityError> {
    match spec.kind {
        MetricKind::D1 => d1(graph, spec.param),
        MetricKind::D2 => d2(graph, spec.param),
        MetricKind::D3 => d3(graph, spec.param),
        MetricKind::D4 => d4(graph, spec.param),
        MetricKind::D5 => d5(graph, spec.param),
        MetricKind::Beta => beta_centrality(graph, spec.param),
        MetricKind::Gamma => gamma_centrality(graph, spec.param),
        MetricKind::Degree => Ok(ScoreVector::new(
            graph.degrees().iter().map(|&d| T::from_count(d)).collect(),
            MetricSpec::degree(),
            graph,
        )),
        MetricKind::Strength => Ok(ScoreVector::new(
            graph.strengths().to_vec(),
            MetricSpec::strength(),
            graph,
        )),
    }
}

/// Sums `term(node, neighbor, weight)` over the neighbors of every node.
pub(crate) fn accumulate<T, F>(
    graph: &Graph<T>,
    spec: MetricSpec<T>,
    term_name: &'static str,
    mut term: F,
) -> Result<ScoreVector<T>, CentralityError>
where
    T: Scalar,
    F: FnMut(usize, usize, T) -> Result<T, CentralityError>,
{
    let mut scores = Vec::with_capacity(graph.node_count());
    for node in 0..graph.node_count() {
        let mut total = T::zero();
        for (neighbor, weight) in graph.neighbors(node) {
            total += term(node, neighbor, weight)?;
        }
        if !total.is_finite() {
            return Err(CentralityError::NonFinite {
                metric: spec.kind,
                node,
                term: term_name,
            });
        }
        scores.push(total);
    }
    Ok(ScoreVector::new(scores, spec, graph))
}
