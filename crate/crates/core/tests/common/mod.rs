//! Brute-force reference implementations on dense matrices.

#![allow(dead_code)]

use distinctiveness::Graph64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Dense {
    pub n: usize,
    pub w: Vec<Vec<f64>>,
}

impl Dense {
    pub fn from_graph(graph: &Graph64) -> Self {
        let n = graph.node_count();
        let mut w = vec![vec![0.0; n]; n];
        for (u, v, weight) in graph.edges() {
            w[u][v] = weight;
            w[v][u] = weight;
        }
        Self { n, w }
    }

    fn degree(&self, j: usize) -> f64 {
        self.w[j].iter().filter(|&&x| x > 0.0).count() as f64
    }

    fn alpha_strength(&self, j: usize, alpha: f64) -> f64 {
        self.w[j].iter().filter(|&&x| x > 0.0).map(|x| x.powf(alpha)).sum()
    }

    fn total_weight(&self) -> f64 {
        let mut total = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                total += self.w[i][j];
            }
        }
        total
    }

    fn row_sum(&self, term: impl Fn(usize, usize, f64) -> f64) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| self.w[i][j] > 0.0)
                    .map(|j| term(i, j, self.w[i][j]))
                    .sum()
            })
            .collect()
    }

    pub fn d1(&self, alpha: f64) -> Vec<f64> {
        let n1 = (self.n - 1) as f64;
        self.row_sum(|_, j, w| w * (n1 / self.degree(j).powf(alpha)).log10())
    }

    pub fn d2(&self, alpha: f64) -> Vec<f64> {
        let n1 = (self.n - 1) as f64;
        self.row_sum(|_, j, _| (n1 / self.degree(j).powf(alpha)).log10())
    }

    pub fn d3(&self, alpha: f64) -> Vec<f64> {
        let total = self.total_weight();
        self.row_sum(|_, j, w| w * (total / (self.alpha_strength(j, alpha) - w.powf(alpha) + 1.0)).log10())
    }

    pub fn d4(&self, alpha: f64) -> Vec<f64> {
        self.row_sum(|_, j, w| w * w.powf(alpha) / self.alpha_strength(j, alpha))
    }

    pub fn d5(&self, alpha: f64) -> Vec<f64> {
        self.row_sum(|_, j, _| self.degree(j).powf(-alpha))
    }

    pub fn gamma(&self, gamma: f64) -> Vec<f64> {
        let strength: Vec<f64> = (0..self.n).map(|j| self.w[j].iter().sum()).collect();
        self.row_sum(|_, j, w| w * strength[j].powf(gamma))
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.w
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `sum_k beta^k A^k (A 1)`, summed until the next term is below `tol`.
    pub fn beta_neumann(&self, beta: f64, tol: f64) -> Vec<f64> {
        let mut term = self.apply(&vec![1.0; self.n]);
        let mut total = term.clone();
        for _ in 0..100_000 {
            term = self.apply(&term).into_iter().map(|t| beta * t).collect();
            for (acc, t) in total.iter_mut().zip(&term) {
                *acc += t;
            }
            if term.iter().all(|t| t.abs() < tol) {
                return total;
            }
        }
        panic!("Neumann series did not reach {tol}");
    }

    /// Largest eigenvalue by bisection, counting positive pivots of the
    /// unpivoted elimination of `A - x I`.
    pub fn largest_eigenvalue(&self) -> f64 {
        let bound: f64 = self.w.iter().map(|r| r.iter().sum::<f64>()).fold(0.0, f64::max);
        let (mut lo, mut hi) = (-bound - 1.0, bound + 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if self.count_above(mid) > 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Number of eigenvalues greater than `x` (Sylvester inertia).
    fn count_above(&self, x: f64) -> usize {
        let n = self.n;
        let mut m: Vec<Vec<f64>> = self.w.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= x;
        }
        let mut positive = 0;
        for k in 0..n {
            let mut pivot = m[k][k];
            if pivot == 0.0 {
                pivot = 1e-300;
            }
            if pivot > 0.0 {
                positive += 1;
            }
            let (upper, lower) = m.split_at_mut(k + 1);
            let pivot_row = &upper[k];
            for row in lower {
                let factor = row[k] / pivot;
                if factor != 0.0 {
                    for (x, p) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                        *x -= factor * p;
                    }
                }
            }
        }
        positive
    }
}

/// Random weighted graph with `2..=max_n` nodes and integer weights 1..=20.
pub fn random_weighted_graph(seed: u64, max_n: usize) -> Graph64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(2..=max_n);
    let p = rng.random_range(0.05..0.6);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v, f64::from(rng.random_range(1..=20u32))));
            }
        }
    }
    if edges.is_empty() {
        edges.push((0, 1, 3.0));
    }
    Graph64::from_edges(n, edges).unwrap()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Absolute difference scaled by `max(1, |expected|)`.
pub fn max_rel_diff(actual: &[f64], expected: &[f64]) -> f64 {
    assert_eq!(actual.len(), expected.len());
    actual
        .iter()
        .zip(expected)
        .map(|(x, y)| (x - y).abs() / y.abs().max(1.0))
        .fold(0.0, f64::max)
}
