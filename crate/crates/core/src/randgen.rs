//! Seeded random graph generators and random edge weights.
//!
//! All randomness comes from [`ChaCha8Rng`] seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`. Integers are drawn with
//! `Rng::random_range` and coin flips with `Rng::random_bool`, so a graph is
//! a pure function of its configuration on every platform.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Topology {
    /// Preferential attachment; each new node adds `m` edges.
    ScaleFree { m: usize },
    /// Ring lattice with `nei` neighbors per side, rewired with probability `p`.
    SmallWorld { nei: usize, p: f64 },
    /// Every pair present independently with probability `p`.
    ErdosRenyi { p: f64 },
}

impl Topology {
    pub fn family(&self) -> Family {
        match self {
            Topology::ScaleFree { .. } => Family::ScaleFree,
            Topology::SmallWorld { .. } => Family::SmallWorld,
            Topology::ErdosRenyi { .. } => Family::ErdosRenyi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    ScaleFree,
    SmallWorld,
    ErdosRenyi,
}

impl Family {
    /// Short name used in CSV output and on the command line.
    pub fn code(self) -> &'static str {
        match self {
            Family::ScaleFree => "sf",
            Family::SmallWorld => "sw",
            Family::ErdosRenyi => "er",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Family {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "sf" | "scale-free" | "scalefree" | "pa" => Ok(Family::ScaleFree),
            "sw" | "small-world" | "smallworld" => Ok(Family::SmallWorld),
            "er" | "erdos-renyi" | "gnp" => Ok(Family::ErdosRenyi),
            _ => Err(GeneratorError::UnknownFamily(s.to_owned())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    pub topology: Topology,
    pub n: usize,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(topology: Topology, n: usize, seed: u64) -> Self {
        Self { topology, n, seed }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn validate(&self) -> Result<(), GeneratorError> {
        if self.n < 3 {
            return Err(GeneratorError::TooFewNodes { n: self.n });
        }
        match self.topology {
            Topology::ScaleFree { m: 0 } => Err(GeneratorError::ZeroAttachment),
            Topology::SmallWorld { nei, .. } if nei == 0 || self.n <= 2 * nei => {
                Err(GeneratorError::Neighborhood { nei, n: self.n })
            }
            Topology::SmallWorld { p, .. } | Topology::ErdosRenyi { p } if !(0.0..=1.0).contains(&p) => {
                Err(GeneratorError::Probability { p })
            }
            _ => Ok(()),
        }
    }
}

/// Uniform integer edge weights in `low..=high`, or all ones when
/// `weighted` is off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightConfig {
    pub weighted: bool,
    pub low: u32,
    pub high: u32,
}

impl WeightConfig {
    pub fn unweighted() -> Self {
        Self {
            weighted: false,
            low: 1,
            high: 20,
        }
    }

    pub fn uniform(low: u32, high: u32) -> Self {
        Self {
            weighted: true,
            low,
            high,
        }
    }
}

impl Default for WeightConfig {
    fn default() -> Self {
        Self::unweighted()
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("generators need n >= 3, got {n}")]
    TooFewNodes { n: usize },
    #[error("edges per new node must be at least 1")]
    ZeroAttachment,
    #[error("ring lattice needs nei >= 1 and n > 2 * nei (nei = {nei}, n = {n})")]
    Neighborhood { nei: usize, n: usize },
    #[error("probability {p} outside [0, 1]")]
    Probability { p: f64 },
    #[error("weight range {low}..={high} must satisfy 1 <= low <= high")]
    WeightRange { low: u32, high: u32 },
    #[error("expected a {expected:?} configuration, got {actual:?}")]
    WrongFamily { expected: Family, actual: Family },
    #[error("unknown topology {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Mixes a base seed with a stream index (SplitMix64 finalizer), giving
/// independent seeds for replications regardless of execution order.
pub fn derive_seed(base: u64, stream: u64) -> u64 {
    let mut z = base.wrapping_add(stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Generates an unweighted graph of the configured family.
pub fn generate<T: Scalar>(cfg: &GeneratorConfig) -> Result<Graph<T>, GeneratorError> {
    match cfg.topology.family() {
        Family::ScaleFree => gen_scale_free(cfg),
        Family::SmallWorld => gen_small_world(cfg),
        Family::ErdosRenyi => gen_erdos_renyi(cfg),
    }
}

fn expect_family(cfg: &GeneratorConfig, expected: Family) -> Result<(), GeneratorError> {
    let actual = cfg.topology.family();
    if actual != expected {
        return Err(GeneratorError::WrongFamily { expected, actual });
    }
    cfg.validate()
}

/// Preferential attachment grown from a single node.
///
/// Node `t` (0-based) attaches to `min(m, t)` distinct earlier nodes, each
/// drawn with probability proportional to `degree + 1`; repeated draws of an
/// already chosen node are discarded, which samples without replacement.
pub fn gen_scale_free<T: Scalar>(cfg: &GeneratorConfig) -> Result<Graph<T>, GeneratorError> {
    expect_family(cfg, Family::ScaleFree)?;
    let Topology::ScaleFree { m } = cfg.topology else {
        unreachable!()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    // Node v appears degree(v) + 1 times.
    let mut urn: Vec<usize> = vec![0];
    let mut edges = Vec::with_capacity(m * cfg.n);
    let mut chosen = Vec::with_capacity(m);
    for node in 1..cfg.n {
        chosen.clear();
        if node <= m {
            chosen.extend(0..node);
        } else {
            while chosen.len() < m {
                let candidate = urn[rng.random_range(0..urn.len())];
                if !chosen.contains(&candidate) {
                    chosen.push(candidate);
                }
            }
        }
        urn.push(node);
        for &target in &chosen {
            edges.push((node, target));
            urn.push(node);
            urn.push(target);
        }
    }
    Ok(Graph::from_unweighted_edges(cfg.n, edges)?)
}

/// One-dimensional ring lattice with `nei` neighbors on each side, then each
/// lattice edge `(u, v)` is rewired with probability `p` to `(u, x)` for a
/// uniform `x`, redrawing `x` until it is neither `u` nor a current neighbor
/// of `u`. The edge count stays `n * nei`.
pub fn gen_small_world<T: Scalar>(cfg: &GeneratorConfig) -> Result<Graph<T>, GeneratorError> {
    expect_family(cfg, Family::SmallWorld)?;
    let Topology::SmallWorld { nei, p } = cfg.topology else {
        unreachable!()
    };
    let n = cfg.n;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (1..=nei).map(move |k| (u, (u + k) % n))).collect();
    let mut adjacency: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for &(u, v) in &edges {
        adjacency[u].insert(v);
        adjacency[v].insert(u);
    }
    for edge in edges.iter_mut() {
        if !rng.random_bool(p) {
            continue;
        }
        let (u, old) = *edge;
        adjacency[u].remove(&old);
        adjacency[old].remove(&u);
        // u has at most n - 2 neighbors now, so a free endpoint exists.
        let target = loop {
            let x = rng.random_range(0..n);
            if x != u && !adjacency[u].contains(&x) {
                break x;
            }
        };
        adjacency[u].insert(target);
        adjacency[target].insert(u);
        *edge = (u, target);
    }
    Ok(Graph::from_unweighted_edges(n, edges)?)
}

/// G(n, p): each unordered pair independently with probability `p`.
pub fn gen_erdos_renyi<T: Scalar>(cfg: &GeneratorConfig) -> Result<Graph<T>, GeneratorError> {
    expect_family(cfg, Family::ErdosRenyi)?;
    let Topology::ErdosRenyi { p } = cfg.topology else {
        unreachable!()
    };
    let n = cfg.n;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_unweighted_edges(n, edges)?)
}

/// Replaces every edge weight, visiting edges in canonical order.
pub fn assign_weights<T: Scalar>(
    graph: &Graph<T>,
    weights: &WeightConfig,
    seed: u64,
) -> Result<Graph<T>, GeneratorError> {
    if !weights.weighted {
        return Ok(graph.reweighted(|_, _| T::one())?);
    }
    if weights.low == 0 || weights.low > weights.high {
        return Err(GeneratorError::WeightRange {
            low: weights.low,
            high: weights.high,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = weights.low..=weights.high;
    Ok(graph.reweighted(|_, _| T::lit(f64::from(rng.random_range(range.clone()))))?)
}
