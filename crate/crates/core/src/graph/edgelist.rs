//! Whitespace-separated edge-list text format.
//!
//! One edge per line as `u v` or `u v w`. Blank lines and lines starting
//! with `#` are skipped. Labels are arbitrary tokens and are mapped to
//! indices in order of first appearance.

use std::collections::HashSet;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use super::{Graph, GraphError, NodeLabelMap};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("failed to read edge list: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: expected `u v` or `u v w`, found {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: missing weight column in a weighted edge list")]
    MissingWeight { line: usize },
    #[error("line {line}: weight {weight:?} is not a finite positive number")]
    NonPositiveWeight { line: usize, weight: String },
    #[error("line {line}: self-loop on {label:?}")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge {u:?} -- {v:?}")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses an edge list.
///
/// With `weighted` set, every line needs a weight column. Otherwise a weight
/// column is still validated but every edge gets weight one.
pub fn read_edge_list<T, R>(source: R, weighted: bool) -> Result<(Graph<T>, NodeLabelMap), EdgeListError>
where
    T: Scalar,
    R: BufRead,
{
    let mut labels = NodeLabelMap::new();
    let mut seen = HashSet::new();
    let mut edges = Vec::new();

    for (number, line) in source.lines().enumerate() {
        let line = line?;
        let number = number + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let (u, v, raw_weight) = match tokens.as_slice() {
            [u, v] => (*u, *v, None),
            [u, v, w] => (*u, *v, Some(*w)),
            _ => {
                return Err(EdgeListError::Malformed {
                    line: number,
                    content: line.clone(),
                })
            }
        };
        let weight = match raw_weight {
            Some(text) => {
                let parsed = text.parse::<f64>().ok().filter(|w| w.is_finite() && *w > 0.0);
                match parsed {
                    Some(w) => w,
                    None => {
                        return Err(EdgeListError::NonPositiveWeight {
                            line: number,
                            weight: text.to_owned(),
                        })
                    }
                }
            }
            None if weighted => return Err(EdgeListError::MissingWeight { line: number }),
            None => 1.0,
        };
        if u == v {
            return Err(EdgeListError::SelfLoop {
                line: number,
                label: u.to_owned(),
            });
        }
        let (iu, iv) = (labels.intern(u), labels.intern(v));
        if !seen.insert((iu.min(iv), iu.max(iv))) {
            return Err(EdgeListError::DuplicateEdge {
                line: number,
                u: u.to_owned(),
                v: v.to_owned(),
            });
        }
        let weight = if weighted { T::lit(weight) } else { T::one() };
        edges.push((iu, iv, weight));
    }

    let graph = Graph::from_edges(labels.len(), edges)?;
    Ok((graph, labels))
}

/// Writes every edge once, in canonical order, using the given labels.
pub fn write_edge_list<T, W>(graph: &Graph<T>, labels: &NodeLabelMap, weighted: bool, mut sink: W) -> io::Result<()>
where
    T: Scalar,
    W: Write,
{
    let name = |index: usize| {
        labels
            .label(index)
            .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, format!("node {index} has no label")))
    };
    for (u, v, w) in graph.edges() {
        if weighted {
            writeln!(sink, "{} {} {}", name(u)?, name(v)?, w)?;
        } else {
            writeln!(sink, "{} {}", name(u)?, name(v)?)?;
        }
    }
    Ok(())
}
