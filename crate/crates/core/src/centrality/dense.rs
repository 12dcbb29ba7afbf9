//! Dense row-major linear solve by Gaussian elimination with partial pivoting.

use crate::scalar::Scalar;

/// Column at which elimination met an exactly zero pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct ZeroPivot(pub usize);

/// Solves `matrix * x = rhs` in place, leaving `x` in `rhs`.
///
/// `matrix` is `n x n` row-major and is overwritten by its upper triangular
/// factor.
pub(crate) fn solve_in_place<T: Scalar>(matrix: &mut [T], rhs: &mut [T]) -> Result<(), ZeroPivot> {
    let n = rhs.len();
    assert_eq!(matrix.len(), n * n, "matrix must be n x n");

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&a, &b| {
                matrix[a * n + col]
                    .abs()
                    .partial_cmp(&matrix[b * n + col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap_or(col);
        if matrix[pivot_row * n + col] == T::zero() {
            return Err(ZeroPivot(col));
        }
        if pivot_row != col {
            let (upper, lower) = matrix.split_at_mut(pivot_row * n);
            upper[col * n..(col + 1) * n].swap_with_slice(&mut lower[..n]);
            rhs.swap(col, pivot_row);
        }

        let (head, tail) = matrix.split_at_mut((col + 1) * n);
        let pivot_slice = &head[col * n + col..(col + 1) * n];
        let pivot = pivot_slice[0];
        let pivot_rhs = rhs[col];
        for (offset, row) in tail.chunks_exact_mut(n).enumerate() {
            let factor = row[col] / pivot;
            if factor == T::zero() {
                continue;
            }
            for (x, &p) in row[col..].iter_mut().zip(pivot_slice) {
                *x -= factor * p;
            }
            rhs[col + 1 + offset] -= factor * pivot_rhs;
        }
    }

    for row in (0..n).rev() {
        let coefficients = &matrix[row * n..(row + 1) * n];
        let mut acc = rhs[row];
        for (k, &c) in coefficients.iter().enumerate().skip(row + 1) {
            acc -= c * rhs[k];
        }
        rhs[row] = acc / coefficients[row];
    }
    Ok(())
}
