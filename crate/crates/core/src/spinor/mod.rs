//! Diagonal quadratic forms over a totally real field, their special
//! orthogonal groups and the spinor norm `δ: SO(f)(k) -> k*/(k*)^2`.
//!
//! The spinor norm is computed from an explicit Cartan–Dieudonné
//! decomposition `g = τ_{v_1} ... τ_{v_m}` as the class of `∏ f(v_i)`.

mod form;
mod isometry;
mod matrix;
mod normalizer;
mod sampling;

pub use form::{admissibility, admissibility_check, reflect, Admissibility, DiagonalForm};
pub use isometry::{
    cartan_dieudonne_decompose, cartan_dieudonne_decompose_with_order, compose_reflections,
    decompose_orthogonal, orthogonal_spinor_norm, so0_membership, spinor_norm, FlaggedSpinorNorm,
    Isometry, ReflectionDecomposition,
};
pub use matrix::{Matrix, Vector};
pub use normalizer::{normalizer_index_check, stabilizes_standard_lattice, NormalizerReport};
pub use sampling::IsometrySampler;
