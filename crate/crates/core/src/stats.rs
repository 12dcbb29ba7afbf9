//! Rank correlation, normalization and distribution similarity for score
//! vectors.

use std::cmp::Ordering;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("need at least {required} values, got {len}")]
    TooShort { len: usize, required: usize },
    #[error("correlation undefined: {side} has zero rank variance")]
    ZeroVariance { side: &'static str },
    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },
    #[error("negative value {value} at index {index}")]
    Negative { index: usize, value: f64 },
    #[error("Ruzicka index undefined: both inputs are all zero")]
    BothZero,
    #[error("value {value} at index {index} lies outside [0, 1]")]
    OutOfRange { index: usize, value: f64 },
    #[error("histogram needs at least one bin")]
    NoBins,
}

/// Average ranks (1-based), with tied values sharing the mean of their
/// positions.
#[derive(Debug, Clone, PartialEq)]
pub struct RankVector<T> {
    ranks: Vec<T>,
}

impl<T: Scalar> RankVector<T> {
    pub fn from_values(values: &[T]) -> Result<Self, StatsError> {
        check_finite(values)?;
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap_or(Ordering::Equal));

        let mut ranks = vec![T::zero(); values.len()];
        let mut start = 0;
        while start < order.len() {
            let mut end = start + 1;
            while end < order.len() && values[order[end]] == values[order[start]] {
                end += 1;
            }
            // Positions start+1 ..= end share their mean.
            let rank = T::from_count(start + 1 + end) / T::lit(2.0);
            for &index in &order[start..end] {
                ranks[index] = rank;
            }
            start = end;
        }
        Ok(Self { ranks })
    }

    pub fn ranks(&self) -> &[T] {
        &self.ranks
    }
}

fn check_finite<T: Scalar>(values: &[T]) -> Result<(), StatsError> {
    match values.iter().position(|v| !v.is_finite()) {
        Some(index) => Err(StatsError::NonFinite { index }),
        None => Ok(()),
    }
}

fn check_lengths<T>(x: &[T], y: &[T]) -> Result<(), StatsError> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(())
}

fn pearson<T: Scalar>(x: &[T], y: &[T]) -> Result<T, StatsError> {
    let n = T::from_count(x.len());
    let mean_x = x.iter().fold(T::zero(), |acc, &v| acc + v) / n;
    let mean_y = y.iter().fold(T::zero(), |acc, &v| acc + v) / n;
    let (mut sxx, mut syy, mut sxy) = (T::zero(), T::zero(), T::zero());
    for (&a, &b) in x.iter().zip(y) {
        let (dx, dy) = (a - mean_x, b - mean_y);
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == T::zero() {
        return Err(StatsError::ZeroVariance { side: "x" });
    }
    if syy == T::zero() {
        return Err(StatsError::ZeroVariance { side: "y" });
    }
    let r = sxy / (sxx * syy).sqrt();
    Ok(r.max(-T::one()).min(T::one()))
}

/// Spearman's rank correlation: Pearson correlation of average ranks.
pub fn spearman<T: Scalar>(x: &[T], y: &[T]) -> Result<T, StatsError> {
    check_lengths(x, y)?;
    if x.len() < 2 {
        return Err(StatsError::TooShort {
            len: x.len(),
            required: 2,
        });
    }
    let rx = RankVector::from_values(x)?;
    let ry = RankVector::from_values(y)?;
    pearson(rx.ranks(), ry.ranks())
}

/// Rescales to `[0, 1]`; a constant input maps to all zeros.
pub fn normalize_minmax<T: Scalar>(x: &[T]) -> Vec<T> {
    let Some(&first) = x.first() else {
        return Vec::new();
    };
    let (min, max) = x.iter().fold((first, first), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let range = max - min;
    if range == T::zero() {
        return vec![T::zero(); x.len()];
    }
    x.iter().map(|&v| (v - min) / range).collect()
}

/// Ruzicka similarity `sum(min(p, q)) / sum(max(p, q))` of nonnegative
/// vectors.
pub fn ruzicka<T: Scalar>(p: &[T], q: &[T]) -> Result<T, StatsError> {
    check_lengths(p, q)?;
    check_finite(p)?;
    check_finite(q)?;
    for values in [p, q] {
        if let Some(index) = values.iter().position(|&v| v < T::zero()) {
            return Err(StatsError::Negative {
                index,
                value: values[index].to_f64_lossy(),
            });
        }
    }
    let (mut lower, mut upper) = (T::zero(), T::zero());
    for (&a, &b) in p.iter().zip(q) {
        lower += a.min(b);
        upper += a.max(b);
    }
    if upper == T::zero() {
        return Err(StatsError::BothZero);
    }
    Ok(lower / upper)
}

/// Equal-width histogram over `[0, 1]` with probability masses.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram<T> {
    bin_edges: Vec<T>,
    masses: Vec<T>,
}

impl<T: Scalar> Histogram<T> {
    pub fn bin_edges(&self) -> &[T] {
        &self.bin_edges
    }

    pub fn masses(&self) -> &[T] {
        &self.masses
    }
}

/// Bins values in `[0, 1]` into `bins` equal-width bins, each closed on the
/// left; the last bin is also closed on the right.
pub fn histogram<T: Scalar>(x: &[T], bins: usize) -> Result<Histogram<T>, StatsError> {
    if bins == 0 {
        return Err(StatsError::NoBins);
    }
    if x.is_empty() {
        return Err(StatsError::TooShort { len: 0, required: 1 });
    }
    let width = T::from_count(bins);
    let mut counts = vec![0usize; bins];
    for (index, &value) in x.iter().enumerate() {
        if !(value >= T::zero() && value <= T::one()) {
            return Err(StatsError::OutOfRange {
                index,
                value: value.to_f64_lossy(),
            });
        }
        let bin = (value * width).floor().to_usize().unwrap_or(0).min(bins - 1);
        counts[bin] += 1;
    }
    let total = T::from_count(x.len());
    Ok(Histogram {
        bin_edges: (0..=bins).map(|i| T::from_count(i) / width).collect(),
        masses: counts.into_iter().map(|c| T::from_count(c) / total).collect(),
    })
}
