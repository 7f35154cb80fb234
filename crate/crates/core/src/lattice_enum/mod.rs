//! Lattice points of `Q_σ`, their recording tuples and lattice paths, and the
//! h- and γ-vectors computed from their combinatorial definitions.

mod encoding;
mod path;
mod points;

pub use encoding::{closure_violations, decode, encode, realize, HTuple};
pub use path::{gamma_path, lies_weakly_below, to_path, LatticePath, Step};
pub use points::{
    enumerate_points, for_each_dilate_point, for_each_point, gamma_direct, h_vector, GammaVector, HVector, LatticePoint,
};

/// Visits every point of `ℕⁿ` with coordinate sum at most `n`.
#[cfg(test)]
pub(crate) fn visit_all_sum_at_most(n: usize, f: impl FnMut(&[usize])) {
    points::visit_capped(&vec![n; n], f);
}
