//! Immutable sparse undirected graph with positive edge weights.
//!
//! Adjacency is stored in compressed sparse row form. Every undirected edge
//! appears once in the row of each endpoint, rows are sorted by neighbor
//! index, and per-node degree and strength are computed once at
//! construction. Unweighted graphs carry weight exactly `1` on every edge.

mod edgelist;
mod labels;

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::scalar::Scalar;

pub use edgelist::{read_edge_list, write_edge_list, EdgeListError};
pub use labels::NodeLabelMap;

/// Left-to-right sum starting from `+0`, so empty sums print as `0`.
fn sum<T: Scalar>(values: impl Iterator<Item = T>) -> T {
    values.fold(T::zero(), |acc, v| acc + v)
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("node index {index} out of range for graph with {node_count} nodes")]
    NodeOutOfRange { index: usize, node_count: usize },
    #[error("self-loop on node {node}")]
    SelfLoop { node: usize },
    #[error("duplicate edge between nodes {u} and {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) has weight {weight}; weights must be finite and strictly positive")]
    InvalidWeight { u: usize, v: usize, weight: f64 },
}

#[derive(Debug, Clone)]
pub struct Graph<T> {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Vec<T>,
    degrees: Vec<usize>,
    strengths: Vec<T>,
    total_weight: T,
    edge_count: usize,
    fingerprint: u64,
}

impl<T: Scalar> Graph<T> {
    /// Graph with `node_count` isolated nodes.
    pub fn empty(node_count: usize) -> Self {
        Self::from_edges(node_count, std::iter::empty()).expect("edgeless graph is valid")
    }

    /// Builds a graph from undirected weighted edges `(u, v, w)`.
    ///
    /// Each unordered pair may be listed once, in either orientation.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, T)>,
    {
        let mut canonical: Vec<(usize, usize, T)> = Vec::new();
        for (u, v, w) in edges {
            for index in [u, v] {
                if index >= node_count {
                    return Err(GraphError::NodeOutOfRange { index, node_count });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { node: u });
            }
            if !(w.is_finite() && w > T::zero()) {
                return Err(GraphError::InvalidWeight {
                    u,
                    v,
                    weight: w.to_f64_lossy(),
                });
            }
            canonical.push((u.min(v), u.max(v), w));
        }
        canonical.sort_unstable_by_key(|&(u, v, _)| (u, v));
        if let Some(pair) = canonical
            .windows(2)
            .find(|pair| (pair[0].0, pair[0].1) == (pair[1].0, pair[1].1))
        {
            return Err(GraphError::DuplicateEdge {
                u: pair[0].0,
                v: pair[0].1,
            });
        }

        let mut degrees = vec![0usize; node_count];
        for &(u, v, _) in &canonical {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        offsets.push(0);
        for &d in &degrees {
            offsets.push(offsets.last().copied().unwrap_or(0) + d);
        }

        // Canonical edges are sorted by (min, max): the first pass fills each
        // row with its smaller neighbors in increasing order, the second with
        // its larger neighbors in increasing order.
        let slots = 2 * canonical.len();
        let mut targets = vec![0usize; slots];
        let mut weights = vec![T::zero(); slots];
        let mut cursor = offsets[..node_count].to_vec();
        let mut push = |row: usize, col: usize, w: T| {
            targets[cursor[row]] = col;
            weights[cursor[row]] = w;
            cursor[row] += 1;
        };
        for &(u, v, w) in &canonical {
            push(v, u, w);
        }
        for &(u, v, w) in &canonical {
            push(u, v, w);
        }

        let strengths = (0..node_count)
            .map(|row| sum(weights[offsets[row]..offsets[row + 1]].iter().copied()))
            .collect();
        let total_weight = sum(canonical.iter().map(|&(_, _, w)| w));

        let mut hasher = DefaultHasher::new();
        node_count.hash(&mut hasher);
        for &(u, v, w) in &canonical {
            (u, v, w.to_f64_lossy().to_bits()).hash(&mut hasher);
        }

        Ok(Self {
            offsets,
            targets,
            weights,
            degrees,
            strengths,
            total_weight,
            edge_count: canonical.len(),
            fingerprint: hasher.finish(),
        })
    }

    /// Builds a graph whose edges all carry weight exactly one.
    pub fn from_unweighted_edges<I>(node_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges(node_count, edges.into_iter().map(|(u, v)| (u, v, T::one())))
    }

    pub fn node_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Number of distinct neighbors of `node`, ignoring weights.
    pub fn degree(&self, node: usize) -> Result<usize, GraphError> {
        self.check(node).map(|_| self.degrees[node])
    }

    /// Sum of the weights of the edges incident to `node`.
    pub fn strength(&self, node: usize) -> Result<T, GraphError> {
        self.check(node).map(|_| self.strengths[node])
    }

    /// Sum of `w^alpha` over the edges incident to `node`.
    pub fn alpha_strength(&self, node: usize, alpha: T) -> Result<T, GraphError> {
        self.check(node)?;
        Ok(sum(self.neighbors(node).map(|(_, w)| w.powf(alpha))))
    }

    /// `alpha_strength` for every node at once.
    pub fn alpha_strengths(&self, alpha: T) -> Vec<T> {
        (0..self.node_count())
            .map(|node| sum(self.neighbors(node).map(|(_, w)| w.powf(alpha))))
            .collect()
    }

    /// Sum of the weights of all distinct edges.
    pub fn total_weight(&self) -> T {
        self.total_weight
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn strengths(&self) -> &[T] {
        &self.strengths
    }

    /// Neighbors of `node` with edge weights, in increasing neighbor order.
    ///
    /// Panics if `node` is out of range.
    pub fn neighbors(&self, node: usize) -> impl ExactSizeIterator<Item = (usize, T)> + '_ {
        let range = self.offsets[node]..self.offsets[node + 1];
        self.targets[range.clone()]
            .iter()
            .copied()
            .zip(self.weights[range].iter().copied())
    }

    /// Every edge once as `(u, v, w)` with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&(v, _)| v > u)
                .map(move |(v, w)| (u, v, w))
        })
    }

    /// True when every edge weight is exactly one.
    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|&w| w == T::one())
    }

    /// Hash of the node count and the weighted edge set.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Same topology with new weights drawn from `weight(u, v)` for each
    /// canonical edge, visited in `edges()` order.
    pub fn reweighted<F>(&self, mut weight: F) -> Result<Self, GraphError>
    where
        F: FnMut(usize, usize) -> T,
    {
        let edges: Vec<_> = self.edges().map(|(u, v, _)| (u, v, weight(u, v))).collect();
        Self::from_edges(self.node_count(), edges)
    }

    /// Relabels node `i` as `permutation[i]`.
    pub fn permuted(&self, permutation: &[usize]) -> Result<Self, GraphError> {
        if let Some(&index) = permutation.iter().find(|&&p| p >= self.node_count()) {
            return Err(GraphError::NodeOutOfRange {
                index,
                node_count: self.node_count(),
            });
        }
        let edges: Vec<_> = self
            .edges()
            .map(|(u, v, w)| (permutation[u], permutation[v], w))
            .collect();
        Self::from_edges(self.node_count(), edges)
    }

    fn check(&self, node: usize) -> Result<(), GraphError> {
        if node < self.node_count() {
            Ok(())
        } else {
            Err(GraphError::NodeOutOfRange {
                index: node,
                node_count: self.node_count(),
            })
        }
    }
}

impl<T: Scalar> PartialEq for Graph<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node_count() == other.node_count() && self.edges().eq(other.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn star(leaves: usize) -> Graph<f64> {
        Graph::from_unweighted_edges(leaves + 1, (1..=leaves).map(|leaf| (0, leaf))).unwrap()
    }

    fn path3() -> Graph<f64> {
        Graph::from_unweighted_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn triangle() -> Graph<f64> {
        Graph::from_unweighted_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(star(4).degree(0), Ok(4));
        assert_eq!(Graph::<f64>::empty(3).degree(1), Ok(0));
        assert_eq!(path3().degree(1), Ok(2));
        assert_eq!(
            path3().degree(3),
            Err(GraphError::NodeOutOfRange {
                index: 3,
                node_count: 3
            })
        );
    }

    #[test]
    fn strength_examples() {
        assert_eq!(triangle().strength(2), Ok(2.0));
        let g = Graph::from_edges(2, [(0, 1, 5.0)]).unwrap();
        assert_eq!(g.strength(0), Ok(5.0));
        let mut with_isolate = Graph::from_edges(3, [(0, 1, 5.0)]).unwrap();
        assert_eq!(with_isolate.strength(2), Ok(0.0));
        with_isolate = with_isolate.reweighted(|_, _| 2.5).unwrap();
        assert_eq!(with_isolate.strength(1), Ok(2.5));
        assert!(triangle().strength(9).is_err());
    }

    #[test]
    fn alpha_strength_examples() {
        let g = Graph::from_edges(3, [(0, 1, 2.0), (0, 2, 3.0)]).unwrap();
        assert_eq!(g.alpha_strength(0, 1.0), Ok(5.0));
        assert_eq!(g.alpha_strength(0, 2.0), Ok(13.0));
        assert_eq!(star(4).alpha_strength(0, 2.7), Ok(4.0));
        assert!(g.alpha_strength(3, 1.0).is_err());
    }

    #[test]
    fn total_weight_examples() {
        assert_eq!(triangle().total_weight(), 3.0);
        assert_eq!(Graph::from_edges(2, [(1, 0, 7.0)]).unwrap().total_weight(), 7.0);
        assert_eq!(Graph::<f64>::empty(0).total_weight(), 0.0);
    }

    #[test]
    fn construction_rejects_invalid_edges() {
        assert_eq!(
            Graph::<f64>::from_unweighted_edges(2, [(1, 1)]).unwrap_err(),
            GraphError::SelfLoop { node: 1 }
        );
        assert_eq!(
            Graph::<f64>::from_unweighted_edges(3, [(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge { u: 0, v: 1 }
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 1, 0.0)]),
            Err(GraphError::InvalidWeight { .. })
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 1, f64::NAN)]),
            Err(GraphError::InvalidWeight { .. })
        ));
        assert!(matches!(
            Graph::<f64>::from_unweighted_edges(2, [(0, 2)]),
            Err(GraphError::NodeOutOfRange { index: 2, .. })
        ));
    }

    #[test]
    fn rows_are_symmetric_and_sorted() {
        let g = Graph::from_edges(4, [(3, 0, 1.5), (2, 0, 2.0), (1, 0, 4.0), (2, 3, 1.0)]).unwrap();
        let row0: Vec<_> = g.neighbors(0).collect();
        assert_eq!(row0, vec![(1, 4.0), (2, 2.0), (3, 1.5)]);
        for u in 0..4 {
            for (v, w) in g.neighbors(u) {
                assert!(g.neighbors(v).any(|(x, wx)| x == u && wx == w));
            }
        }
        assert!(!g.is_unweighted());
        assert!(triangle().is_unweighted());
    }

    #[test]
    fn fingerprint_tracks_weights() {
        let a = Graph::from_edges(2, [(0, 1, 1.0)]).unwrap();
        let b = Graph::from_edges(2, [(1, 0, 1.0)]).unwrap();
        let c = Graph::from_edges(2, [(0, 1, 2.0)]).unwrap();
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_ne!(a.fingerprint(), c.fingerprint());
    }

    fn arb_graph() -> impl Strategy<Value = Graph<f64>> {
        (1usize..30).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n, 1u32..20), 0..80).prop_map(move |raw| {
                let mut seen = std::collections::HashSet::new();
                let edges: Vec<_> = raw
                    .into_iter()
                    .filter(|&(u, v, _)| u != v && seen.insert((u.min(v), u.max(v))))
                    .map(|(u, v, w)| (u, v, f64::from(w) * 0.5))
                    .collect();
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn handshake_identities(g in arb_graph()) {
            let degree_sum: usize = g.degrees().iter().sum();
            prop_assert_eq!(degree_sum, 2 * g.edge_count());
            let strength_sum: f64 = g.strengths().iter().sum();
            prop_assert!((strength_sum - 2.0 * g.total_weight()).abs() <= 1e-9 * g.total_weight().max(1.0));
            for j in 0..g.node_count() {
                let a1 = g.alpha_strength(j, 1.0).unwrap();
                prop_assert!((a1 - g.strength(j).unwrap()).abs() <= 1e-12);
            }
        }

        #[test]
        fn permutation_preserves_degree_multiset(g in arb_graph(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..g.node_count()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = g.permuted(&perm).unwrap();
            for (i, &image) in perm.iter().enumerate() {
                prop_assert_eq!(g.degree(i), h.degree(image));
            }
            prop_assert_eq!(g.edge_count(), h.edge_count());
        }
    }
}
