use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every intermediate division is exact, so no rationals appear. The
/// determinant of the 0×0 matrix is 1.
pub fn determinant(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::input(format!(
            "determinant of a non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }

    let mut m = a.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            m.swap_rows(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                debug_assert!((&value % &prev).is_zero());
                m[(i, j)] = value / &prev;
            }
        }
        prev = m[(k, k)].clone();
    }

    let det = m[(n - 1, n - 1)].clone();
    Ok(if negate { -det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    /// Laplace expansion along the first row.
    fn cofactor_det(a: &IntMatrix) -> BigInt {
        let n = a.rows();
        if n == 0 {
            return BigInt::one();
        }
        (0..n)
            .map(|j| {
                let term = &a[(0, j)] * cofactor_det(&a.minor(0, j));
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn small_cases() {
        assert_eq!(determinant(&m(&[vec![1, -1], vec![-1, 1]])).unwrap(), 0.into());
        assert_eq!(determinant(&m(&[vec![2, -1], vec![-1, 2]])).unwrap(), 3.into());
        assert_eq!(determinant(&IntMatrix::zeros(0, 0)).unwrap(), 1.into());
        assert_eq!(determinant(&m(&[vec![0, 1], vec![1, 0]])).unwrap(), (-1).into());
        assert!(determinant(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn needs_row_swap_midway() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 7], vec![1, 3, 1]]);
        assert_eq!(determinant(&a).unwrap(), cofactor_det(&a));
    }

    fn small_square() -> impl Strategy<Value = IntMatrix> {
        (0usize..=5).prop_flat_map(|n| {
            proptest::collection::vec(-9i64..=9, n * n).prop_map(move |v| {
                IntMatrix::from_fn(n, n, |i, j| v[i * n + j].into())
            })
        })
    }

    proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(a in small_square()) {
            prop_assert_eq!(determinant(&a).unwrap(), cofactor_det(&a));
        }

        #[test]
        fn agrees_on_low_rank(rows in proptest::collection::vec(-3i64..=3, 12)) {
            // third row is the sum of the first two, fourth an arbitrary row
            let mut r: Vec<Vec<i64>> = rows.chunks(4).map(<[i64]>::to_vec).collect();
            r[2] = (0..4).map(|j| r[0][j] + r[1][j]).collect();
            r.push(vec![1, 0, -1, 2]);
            let a = IntMatrix::from_rows(&r).unwrap();
            prop_assert_eq!(determinant(&a).unwrap(), BigInt::zero());
        }
    }
}
