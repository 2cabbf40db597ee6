use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith normal form `s = u · a · v` together with its unimodular witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// `rows × rows`, unimodular.
    pub u: IntMatrix,
    /// `rows × cols`, diagonal.
    pub s: IntMatrix,
    /// `cols × cols`, unimodular.
    pub v: IntMatrix,
    /// The `min(rows, cols)` diagonal entries of `s`: nonnegative, each
    /// nonzero entry dividing the next, zeros last.
    pub diagonal: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }
}

/// Diagonalizes `a` with elementary integer row and column operations.
///
/// Each step moves a nonzero entry of least absolute value in the remaining
/// submatrix to the pivot, clears its row and column by Euclidean
/// reduction, and folds in any row whose entries the pivot does not divide.
/// Row operations are mirrored into `u` and column operations into `v`.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&s, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut cleared = true;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -s[(i, t)].div_floor(&s[(t, t)]);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                cleared &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -s[(t, j)].div_floor(&s[(t, t)]);
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                cleared &= s[(t, j)].is_zero();
            }

            if !cleared {
                // a remainder smaller than the pivot survived; promote it
                let line = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = min_abs_entry(&s, line).expect("pivot is nonzero");
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
                s.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }

            let pivot = s[(t, t)].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    let diagonal = (0..rows.min(cols)).map(|i| s[(i, i)].clone()).collect();
    SnfResult { u, s, v, diagonal }
}

fn min_abs_entry(
    m: &IntMatrix,
    positions: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    positions
        .filter(|&p| !m[p].is_zero())
        .min_by(|&p, &q| m[p].magnitude().cmp(m[q].magnitude()))
}
