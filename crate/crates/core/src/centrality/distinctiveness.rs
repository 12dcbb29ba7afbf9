//! The five Distinctiveness metrics.
//!
//! D1, D2 and D5 penalize neighbors by their binary degree `g_j` even on
//! weighted graphs; D3 and D4 use the alpha-powered weighted strength.
//! Logarithms are base 10.

use super::{accumulate, CentralityError, MetricKind, MetricSpec, ScoreVector};
use crate::graph::Graph;
use crate::scalar::Scalar;

fn require_nodes<T: Scalar>(graph: &Graph<T>, metric: MetricKind, required: usize) -> Result<(), CentralityError> {
    if graph.node_count() < required {
        return Err(CentralityError::TooFewNodes {
            metric,
            node_count: graph.node_count(),
            required,
        });
    }
    Ok(())
}

fn require_alpha<T: Scalar>(metric: MetricKind, alpha: T) -> Result<(), CentralityError> {
    if alpha.is_finite() && alpha > T::zero() {
        Ok(())
    } else {
        Err(CentralityError::InvalidParameter {
            metric,
            value: alpha.to_f64_lossy(),
            reason: "alpha must be finite and strictly positive",
        })
    }
}

/// `log10((n - 1) / g_j^alpha)` for every node with `g_j > 0`; zero for
/// isolates, which never appear as anyone's neighbor.
fn log_penalties<T: Scalar>(graph: &Graph<T>, metric: MetricKind, alpha: T) -> Result<Vec<T>, CentralityError> {
    let log_reach = T::from_count(graph.node_count() - 1).log10();
    graph
        .degrees()
        .iter()
        .enumerate()
        .map(|(node, &degree)| {
            if degree == 0 {
                return Ok(T::zero());
            }
            let value = log_reach - alpha * T::from_count(degree).log10();
            if value.is_finite() {
                Ok(value)
            } else {
                Err(CentralityError::NonFinite {
                    metric,
                    node,
                    term: "log10((n - 1) / g^alpha)",
                })
            }
        })
        .collect()
}

/// `D1(i) = sum_j w_ij * log10((n - 1) / g_j^alpha)`.
pub fn d1<T: Scalar>(graph: &Graph<T>, alpha: T) -> Result<ScoreVector<T>, CentralityError> {
    let spec = MetricSpec::d1(alpha);
    require_nodes(graph, spec.kind, 2)?;
    require_alpha(spec.kind, alpha)?;
    let penalty = log_penalties(graph, spec.kind, alpha)?;
    accumulate(graph, spec, "w_ij * log10((n - 1) / g_j^alpha)", |_, j, w| {
        Ok(w * penalty[j])
    })
}

/// `D2(i) = sum_j log10((n - 1) / g_j^alpha)` over the neighbors of `i`.
pub fn d2<T: Scalar>(graph: &Graph<T>, alpha: T) -> Result<ScoreVector<T>, CentralityError> {
    let spec = MetricSpec::d2(alpha);
    require_nodes(graph, spec.kind, 2)?;
    require_alpha(spec.kind, alpha)?;
    let penalty = log_penalties(graph, spec.kind, alpha)?;
    accumulate(graph, spec, "log10((n - 1) / g_j^alpha)", |_, j, _| Ok(penalty[j]))
}

/// `D3(i) = sum_j w_ij * log10(W / (s_j - w_ij^alpha + 1))` where `W` is the
/// total edge weight and `s_j` the alpha-powered strength of `j`.
pub fn d3<T: Scalar>(graph: &Graph<T>, alpha: T) -> Result<ScoreVector<T>, CentralityError> {
    let spec = MetricSpec::d3(alpha);
    require_nodes(graph, spec.kind, 2)?;
    require_alpha(spec.kind, alpha)?;
    if graph.edge_count() == 0 {
        return Err(CentralityError::Edgeless { context: "d3" });
    }
    let total = graph.total_weight();
    let powered = graph.alpha_strengths(alpha);
    accumulate(graph, spec, "w_ij * log10(W / (s_j - w_ij^alpha + 1))", |i, j, w| {
        // w_ij^alpha is one of the summands of powered[j].
        let denominator = powered[j] - w.powf(alpha) + T::one();
        if denominator.is_nan() || denominator < T::one() {
            return Err(CentralityError::DenominatorBelowOne {
                node: i,
                neighbor: j,
                value: denominator.to_f64_lossy(),
            });
        }
        Ok(w * (total / denominator).log10())
    })
}

/// `D4(i) = sum_j w_ij * w_ij^alpha / s_j` with `s_j` the alpha-powered
/// strength of `j`.
pub fn d4<T: Scalar>(graph: &Graph<T>, alpha: T) -> Result<ScoreVector<T>, CentralityError> {
    let spec = MetricSpec::d4(alpha);
    require_nodes(graph, spec.kind, 2)?;
    require_alpha(spec.kind, alpha)?;
    let powered = graph.alpha_strengths(alpha);
    accumulate(graph, spec, "w_ij * w_ij^alpha / s_j", |_, j, w| {
        Ok(w * w.powf(alpha) / powered[j])
    })
}

/// `D5(i) = sum_j 1 / g_j^alpha` over the neighbors of `i`.
pub fn d5<T: Scalar>(graph: &Graph<T>, alpha: T) -> Result<ScoreVector<T>, CentralityError> {
    let spec = MetricSpec::d5(alpha);
    require_nodes(graph, spec.kind, 1)?;
    require_alpha(spec.kind, alpha)?;
    // Same expression as Gamma's `strength^gamma` with gamma = -alpha, so the
    // two agree bit for bit on unweighted graphs.
    let neg_alpha = -alpha;
    let inverse: Vec<T> = graph
        .degrees()
        .iter()
        .map(|&degree| {
            if degree == 0 {
                T::zero()
            } else {
                T::from_count(degree).powf(neg_alpha)
            }
        })
        .collect();
    accumulate(graph, spec, "1 / g_j^alpha", |_, j, _| Ok(inverse[j]))
}
