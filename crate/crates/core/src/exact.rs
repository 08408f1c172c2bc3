//! Exact linear algebra for the word-expansion system: fraction-free
//! (Bareiss) elimination over big integers with rational back-substitution.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum SolveError {
    /// Some row reduces to `0 = nonzero`: the right-hand side is outside the
    /// column span.
    Inconsistent,
    /// The columns are linearly dependent, so no unique solution exists.
    RankDeficient,
}

/// Solves the (generally overdetermined) system `A·x = b` exactly, where
/// `rows` holds the rows of the augmented matrix `[A | b]`, each of length
/// `ncols + 1`. Requires `A` to have full column rank and the system to be
/// consistent; every residual row is checked, so a unique solution is
/// returned only when *all* equations hold.
pub(crate) fn solve_full_rank(
    mut rows: Vec<Vec<BigInt>>,
    ncols: usize,
) -> Result<Vec<BigRational>, SolveError> {
    debug_assert!(rows.iter().all(|r| r.len() == ncols + 1));
    let width = ncols + 1;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        // Choose the pivot with the smallest nonzero magnitude to keep the
        // fraction-free intermediates small.
        let pivot_idx = rows
            .iter()
            .enumerate()
            .skip(col)
            .filter(|(_, r)| !r[col].is_zero())
            .min_by_key(|(_, r)| r[col].abs())
            .map(|(i, _)| i);
        let Some(pivot_idx) = pivot_idx else {
            return Err(SolveError::RankDeficient);
        };
        if rows.len() <= col {
            return Err(SolveError::RankDeficient);
        }
        rows.swap(col, pivot_idx);
        let pivot_row = rows[col].clone();
        let pivot = pivot_row[col].clone();
        let mut i = col + 1;
        while i < rows.len() {
            let factor = rows[i][col].clone();
            for j in 0..width {
                let updated = (&pivot * &rows[i][j] - &factor * &pivot_row[j]) / &prev;
                rows[i][j] = updated;
            }
            debug_assert!(rows[i][col].is_zero());
            if rows[i][..ncols].iter().all(|v| v.is_zero()) {
                if !rows[i][ncols].is_zero() {
                    return Err(SolveError::Inconsistent);
                }
                // Fully reduced and trivially satisfied: drop the row.
                rows.swap_remove(i);
            } else {
                i += 1;
            }
        }
        prev = pivot;
    }
    if rows.len() < ncols {
        return Err(SolveError::RankDeficient);
    }
    // Every surviving row beyond the pivot block must be 0 = 0; the loop
    // above removed such rows as they appeared, so any leftover is a
    // contradiction or a dependency that escaped reduction.
    if rows.len() > ncols {
        return Err(SolveError::Inconsistent);
    }

    // The pivot block is upper triangular in column order; back-substitute
    // with exact rationals.
    let mut solution = vec![BigRational::zero(); ncols];
    for col in (0..ncols).rev() {
        let mut acc = BigRational::from_integer(rows[col][ncols].clone());
        for j in col + 1..ncols {
            acc -= BigRational::from_integer(rows[col][j].clone()) * &solution[j];
        }
        solution[col] = acc / BigRational::from_integer(rows[col][col].clone());
    }
    Ok(solution)
}
