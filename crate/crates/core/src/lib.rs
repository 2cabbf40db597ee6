//! Chip-firing groups of finite graphs.
//!
//! The crate computes `Pic⁰(Γ) = Div⁰(Γ) / im Δ(Γ)` (also known as the
//! Jacobian, sandpile group or critical group) of a finite simple graph with
//! exact integer arithmetic, builds graph joins and iterated cones
//! `Γ_n = Γ * K_n`, and checks the structural statements about the cone
//! sequence `0 → (ℤ/(n+k))^{n−1} → Pic⁰(Γ_n) → H_n → 0` on concrete inputs.
//!
//! Modules, bottom-up:
//!
//! * [`linalg`]: big-integer matrices, Smith normal form, Bareiss
//!   determinant, characteristic polynomials.
//! * [`graph`]: the immutable [`Graph`] model, constructors and the
//!   edge-list text format.
//! * [`group`]: finite abelian groups in invariant-factor form.
//! * [`sandpile`]: Laplacians, divisors, critical groups, class orders and
//!   subgroup/quotient computations.
//! * [`theorems`]: verification reports and brute-force oracles.
//! * [`sample`]: reproducible random graph and tree generators.
//!
//! ```
//! use chipfire::{graph::goel_graph, theorems::verify_cone_theorem};
//!
//! let report = verify_cone_theorem(&goel_graph(), 3)?;
//! assert_eq!(report.pic0.to_string(), "Z/144 + Z/8208");
//! assert!(report.holds() && !report.splits);
//! # Ok::<(), chipfire::Error>(())
//! ```

pub mod error;
pub mod graph;
pub mod group;
pub mod linalg;
pub mod sample;
pub mod sandpile;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use group::CriticalGroup;
pub use linalg::{IntMatrix, IntPoly, SnfResult};
pub use sandpile::{Direction, Divisor, Jacobian};
pub use theorems::{ConeSequenceReport, JoinOrderReport, TreeBoundReport};

pub use num_bigint::BigInt;
