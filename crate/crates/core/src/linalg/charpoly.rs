use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{determinant, IntMatrix, IntPoly};
use crate::error::{Error, Result};

/// `det(xI - a)` as an exact integer polynomial.
///
/// The polynomial is sampled at `x = 0, 1, …, m` with Bareiss determinants
/// and rebuilt from its forward differences in the falling-factorial basis:
///
/// ```text
/// f(x) = Σ_j (Δ^j f(0) / j!) · x(x-1)…(x-j+1)
/// ```
///
/// `Δ^j f(0)` is divisible by `j!` for every integer polynomial, so each
/// division is exact.
pub fn char_poly(a: &IntMatrix) -> Result<IntPoly> {
    if !a.is_square() {
        return Err(Error::input(format!(
            "characteristic polynomial of a non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let m = a.rows();

    let mut diffs = (0..=m)
        .map(|t| {
            let shifted = IntMatrix::from_fn(m, m, |i, j| {
                let entry = -&a[(i, j)];
                if i == j {
                    entry + t
                } else {
                    entry
                }
            });
            determinant(&shifted)
        })
        .collect::<Result<Vec<BigInt>>>()?;

    let mut result = IntPoly::zero();
    let mut falling = IntPoly::one();
    let mut factorial = BigInt::one();
    for j in 0..=m {
        if j > 0 {
            factorial *= j;
            falling = &falling * &IntPoly::linear(&BigInt::from(j - 1));
        }
        let (coefficient, remainder) = diffs[0].div_rem(&factorial);
        debug_assert!(remainder.is_zero(), "inexact interpolation step");
        result = &result + &(&falling * &IntPoly::constant(coefficient));

        // next row of the forward difference table
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }
    Ok(result)
}
