//! Largest eigenvalue of the weighted adjacency matrix by power iteration.
//!
//! The first pass starts from the uniform vector. On bipartite graphs the
//! spectrum is symmetric, the iterates oscillate between two vectors and the
//! Rayleigh quotient settles on a wrong value while the residual stays large.
//! That stall is detected and the iteration restarts once from a seeded random
//! positive vector on `A + shift * I`, which separates `lambda1` from
//! `-lambda1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CentralityError;
use crate::graph::Graph;
use crate::scalar::Scalar;

const RESTART_SEED: u64 = 0x5eed_1a3b_d0e5_c0de;
const STALL_WINDOW: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerIteration {
    /// Relative tolerance on successive Rayleigh quotients.
    pub tolerance: f64,
    /// Iteration cap shared by both passes.
    pub max_iterations: usize,
}

impl Default for PowerIteration {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            max_iterations: 10_000,
        }
    }
}

enum Outcome<T> {
    Converged { value: T },
    Failed { iterations: usize, residual: f64 },
}

pub fn dominant_eigenvalue<T: Scalar>(graph: &Graph<T>) -> Result<T, CentralityError> {
    dominant_eigenvalue_with(graph, &PowerIteration::default())
}

pub fn dominant_eigenvalue_with<T: Scalar>(graph: &Graph<T>, options: &PowerIteration) -> Result<T, CentralityError> {
    if graph.edge_count() == 0 {
        return Err(CentralityError::Edgeless {
            context: "dominant eigenvalue",
        });
    }
    let n = graph.node_count();
    let uniform = vec![T::one() / T::from_count(n).sqrt(); n];
    let used = match iterate(graph, uniform, T::zero(), options, options.max_iterations) {
        Outcome::Converged { value } => return Ok(value),
        Outcome::Failed { iterations, .. } => iterations,
    };

    let max_strength = graph.strengths().iter().copied().fold(T::zero(), T::max);
    let shift = max_strength / T::lit(2.0);
    let mut rng = ChaCha8Rng::seed_from_u64(RESTART_SEED);
    let start: Vec<T> = (0..n).map(|_| T::lit(rng.random_range(0.5..1.5))).collect();
    let remaining = options.max_iterations.saturating_sub(used).max(1);
    match iterate(graph, start, shift, options, remaining) {
        Outcome::Converged { value } => Ok(value - shift),
        Outcome::Failed { iterations, residual } => Err(CentralityError::NonConvergence {
            iterations: used + iterations,
            residual,
        }),
    }
}

fn norm<T: Scalar>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt()
}

fn iterate<T: Scalar>(graph: &Graph<T>, mut x: Vec<T>, shift: T, options: &PowerIteration, cap: usize) -> Outcome<T> {
    let tolerance = T::tolerance(options.tolerance);
    let residual_tolerance = tolerance.sqrt();
    let scale = norm(&x);
    x.iter_mut().for_each(|v| *v /= scale);

    let mut y = vec![T::zero(); x.len()];
    let mut previous = T::nan();
    let mut stalled = 0usize;
    let mut residual = f64::INFINITY;

    for iteration in 1..=cap {
        for (node, out) in y.iter_mut().enumerate() {
            *out = graph
                .neighbors(node)
                .fold(shift * x[node], |acc, (j, w)| acc + w * x[j]);
        }
        let quotient = x.iter().zip(&y).fold(T::zero(), |acc, (&a, &b)| acc + a * b);
        let magnitude = norm(&y);
        if magnitude == T::zero() || !magnitude.is_finite() {
            return Outcome::Failed {
                iterations: iteration,
                residual,
            };
        }
        let relative_residual = x
            .iter()
            .zip(&y)
            .fold(T::zero(), |acc, (&a, &b)| {
                let r = b - quotient * a;
                acc + r * r
            })
            .sqrt()
            / quotient.abs();
        residual = relative_residual.to_f64_lossy();

        let settled = (quotient - previous).abs() <= tolerance * quotient.abs();
        if settled && relative_residual <= residual_tolerance {
            return Outcome::Converged { value: quotient };
        }
        stalled = if settled { stalled + 1 } else { 0 };
        if stalled >= STALL_WINDOW {
            return Outcome::Failed {
                iterations: iteration,
                residual,
            };
        }

        previous = quotient;
        for (xi, &yi) in x.iter_mut().zip(&y) {
            *xi = yi / magnitude;
        }
    }
    Outcome::Failed {
        iterations: cap,
        residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph<f64> {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::from_unweighted_edges(n, edges).unwrap()
    }

    /// Largest root of det(A - x I) located by bisection on a dense
    /// determinant, independent of power iteration.
    fn brute_force_lambda1(g: &Graph<f64>) -> f64 {
        let n = g.node_count();
        let det = |x: f64| {
            let mut m = vec![0.0; n * n];
            for (u, v, w) in g.edges() {
                m[u * n + v] = w;
                m[v * n + u] = w;
            }
            for i in 0..n {
                m[i * n + i] -= x;
            }
            let mut det = 1.0;
            for c in 0..n {
                let p = (c..n)
                    .max_by(|&a, &b| m[a * n + c].abs().total_cmp(&m[b * n + c].abs()))
                    .unwrap();
                if m[p * n + c] == 0.0 {
                    return 0.0;
                }
                if p != c {
                    for k in 0..n {
                        m.swap(c * n + k, p * n + k);
                    }
                    det = -det;
                }
                det *= m[c * n + c];
                for r in c + 1..n {
                    let f = m[r * n + c] / m[c * n + c];
                    for k in c..n {
                        m[r * n + k] -= f * m[c * n + k];
                    }
                }
            }
            det
        };
        // Above the max row sum the determinant has sign (-1)^n; scan down
        // for the first sign change.
        let upper = g.strengths().iter().copied().fold(0.0, f64::max) + 1.0;
        let steps = 20_000;
        let mut hi = upper;
        let mut f_hi = det(hi);
        for s in 1..=steps {
            let lo = upper * (1.0 - s as f64 / steps as f64);
            let f_lo = det(lo);
            if f_lo == 0.0 {
                return lo;
            }
            if f_lo.signum() != f_hi.signum() {
                let (mut a, mut b) = (lo, hi);
                for _ in 0..200 {
                    let mid = 0.5 * (a + b);
                    if det(mid).signum() == det(a).signum() {
                        a = mid;
                    } else {
                        b = mid;
                    }
                }
                return 0.5 * (a + b);
            }
            hi = lo;
            f_hi = f_lo;
        }
        panic!("no root found");
    }

    #[test]
    fn complete_graph_spectrum() {
        for n in 2..=7 {
            let lambda = dominant_eigenvalue(&complete(n)).unwrap();
            assert!((lambda - (n as f64 - 1.0)).abs() < 1e-9, "K{n}: {lambda}");
        }
        for n in 2..=5 {
            let g = complete(n);
            assert!((brute_force_lambda1(&g) - (n as f64 - 1.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn single_edge() {
        let g = Graph::<f64>::from_unweighted_edges(2, [(0, 1)]).unwrap();
        assert!((dominant_eigenvalue(&g).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bipartite_star_needs_restart() {
        let g = Graph::<f64>::from_unweighted_edges(5, (1..5).map(|l| (0, l))).unwrap();
        let lambda = dominant_eigenvalue(&g).unwrap();
        assert!((lambda - 2.0).abs() < 1e-9, "{lambda}");
        assert!((brute_force_lambda1(&g) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn weighted_and_disconnected_match_brute_force() {
        let g = Graph::from_edges(
            7,
            [
                (0, 1, 2.0),
                (1, 2, 0.5),
                (2, 0, 3.0),
                (2, 3, 1.0),
                (4, 5, 6.0),
                (5, 6, 1.5),
            ],
        )
        .unwrap();
        let lambda = dominant_eigenvalue(&g).unwrap();
        let oracle = brute_force_lambda1(&g);
        assert!((lambda - oracle).abs() < 1e-8 * oracle, "{lambda} vs {oracle}");
    }

    #[test]
    fn path_graphs_are_bipartite_too() {
        for n in [3usize, 4, 10] {
            let g = Graph::<f64>::from_unweighted_edges(n, (1..n).map(|i| (i - 1, i))).unwrap();
            let expected = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
            let lambda = dominant_eigenvalue(&g).unwrap();
            assert!((lambda - expected).abs() < 1e-8, "P{n}: {lambda} vs {expected}");
        }
    }

    #[test]
    fn edgeless_is_an_error() {
        assert!(matches!(
            dominant_eigenvalue(&Graph::<f64>::empty(3)),
            Err(CentralityError::Edgeless { .. })
        ));
    }

    #[test]
    fn reports_non_convergence() {
        let g = Graph::<f64>::from_unweighted_edges(5, (1..5).map(|l| (0, l))).unwrap();
        let options = PowerIteration {
            tolerance: 1e-10,
            max_iterations: 3,
        };
        assert!(matches!(
            dominant_eigenvalue_with(&g, &options),
            Err(CentralityError::NonConvergence { .. })
        ));
    }
}
