//! Exact big-integer linear algebra.
//!
//! Nothing here touches floating point. The determinant is fraction-free
//! (Bareiss), the characteristic polynomial is interpolated from integer
//! determinants, and the Smith normal form carries its unimodular witnesses.

mod charpoly;
mod det;
mod matrix;
mod poly;
mod snf;

pub use charpoly::char_poly;
pub use det::determinant;
pub use matrix::IntMatrix;
pub use poly::IntPoly;
pub use snf::{smith_normal_form, SnfResult};
