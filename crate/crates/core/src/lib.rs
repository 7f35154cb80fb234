//! Exact lattice-point statistics of composition polytopes.
//!
//! A composition `σ = (r_1, …, r_k)` of `n` defines the polytope of points
//! `x ∈ ℝⁿ_{≥0}` with `x_1 + ⋯ + x_{s_i} ≤ s_i` for every partial sum `s_i`.
//! This crate computes its h-vector, γ-vector, Ehrhart polynomial,
//! h*-polynomial and the zeta polynomial of its lattice-point poset, each by
//! more than one independent route, and checks the identities relating them.

pub mod composition;
pub mod ehrhart_zeta;
pub mod error;
pub mod lattice_enum;
pub mod limits;
pub mod polynomial;
pub mod verify;

pub use composition::{all_compositions, Composition};
pub use error::{Error, Result};
pub use limits::Limits;
pub use polynomial::{ExactPolynomial, RealRootReport};
