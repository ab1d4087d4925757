//! Cross-checks the incremental echelon span against an independent dense
//! fraction-free elimination, and checks insertion-order invariance.

use pbwdeg::linalg::{rat, EchelonSpan, SparseVector};
use proptest::prelude::*;

/// Rank by dense fraction-free (Bareiss) elimination over i128. Entries are
/// small, so intermediate products stay far below the i128 range for the
/// matrix sizes generated here.
fn bareiss_rank(rows: usize, cols: usize, data: &[i128]) -> usize {
    let mut m: Vec<Vec<i128>> = (0..rows)
        .map(|r| data[r * cols..(r + 1) * cols].to_vec())
        .collect();
    let mut rank = 0;
    let mut prev = 1i128;
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot_row) = (row..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, pivot_row);
        for r in 0..rows {
            if r == row {
                continue;
            }
            for c in 0..cols {
                if c == col {
                    continue;
                }
                m[r][c] = (m[r][c] * m[row][col] - m[r][col] * m[row][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[row][col];
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

fn span_rank(cols: usize, data: &[i128], order: &[usize]) -> usize {
    let mut span: EchelonSpan<usize> = EchelonSpan::new();
    for &r in order {
        let v = SparseVector::from_terms((0..cols).map(|c| (c, rat(data[r * cols + c] as i64))));
        span.insert(v);
    }
    span.dim()
}

proptest! {
    #[test]
    fn rank_matches_dense_fraction_free_elimination(
        rows in 1usize..=12,
        cols in 1usize..=12,
        seed in proptest::collection::vec(-6i128..=6, 144),
    ) {
        let data = &seed[..rows * cols];
        let order: Vec<usize> = (0..rows).collect();
        prop_assert_eq!(span_rank(cols, data, &order), bareiss_rank(rows, cols, data));
    }

    #[test]
    fn dimension_is_insertion_order_invariant(
        rows in 2usize..=12,
        cols in 2usize..=12,
        seed in proptest::collection::vec(-5i128..=5, 144),
        shuffle in proptest::collection::vec(0usize..1000, 16),
    ) {
        let data = &seed[..rows * cols];
        let forward: Vec<usize> = (0..rows).collect();
        // a deterministic permutation of the row order from the seed
        let mut permuted = forward.clone();
        for (step, &s) in shuffle.iter().enumerate().take(rows) {
            permuted.swap(step % rows, s % rows);
        }
        prop_assert_eq!(
            span_rank(cols, data, &forward),
            span_rank(cols, data, &permuted)
        );
    }
}

#[test]
fn membership_after_reduction_round_trip() {
    // rows of a rank-2 matrix; any linear combination must reduce to zero
    let rows = [
        vec![(0usize, rat(1)), (1, rat(2)), (2, rat(-1))],
        vec![(0, rat(3)), (2, rat(5))],
    ];
    let mut span = EchelonSpan::new();
    for r in &rows {
        assert!(span.insert(SparseVector::from_terms(r.clone())));
    }
    // 2*row0 - row1
    let combo = SparseVector::from_terms(vec![(0usize, rat(-1)), (1, rat(4)), (2, rat(-7))]);
    assert!(span.contains(combo));
    assert_eq!(span.dim(), 2);
}
