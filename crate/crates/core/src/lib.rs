//! Distinctiveness, Beta and Gamma centrality on sparse weighted graphs.
//!
//! The numeric core is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix the precision used by the experiment harness and the CLI.

pub mod centrality;
pub mod cli;
pub mod experiments;
pub mod graph;
pub mod randgen;
pub mod scalar;
pub mod stats;

pub use centrality::{
    beta_centrality, compute, d1, d2, d3, d4, d5, dominant_eigenvalue, gamma_centrality, harmonize, CentralityError,
    MetricKind, MetricSpec, ScoreVector,
};
pub use graph::{read_edge_list, write_edge_list, EdgeListError, Graph, GraphError, NodeLabelMap};
pub use scalar::Scalar;

pub type Graph64 = Graph<f64>;
pub type Graph32 = Graph<f32>;
pub type ScoreVector64 = ScoreVector<f64>;
pub type ScoreVector32 = ScoreVector<f32>;
pub type MetricSpec64 = MetricSpec<f64>;
pub type MetricSpec32 = MetricSpec<f32>;
