//! Exact arithmetic over Q and real quadratic fields.
//!
//! Everything here is exact: signs at real embeddings are decided by integer
//! comparisons, never by floating point.

mod elem;
mod field;
pub mod rational;
mod square_class;

pub use elem::{FieldElem, QuadFieldElem, Sign};
pub use field::{Embedding, FieldKind, TotallyRealField};
pub use rational::Rational;
pub use square_class::SquareClass;

use crate::error::Result;

/// Exact sign of `x` at the given real place of `field`.
pub fn sign_at(field: &TotallyRealField, x: &FieldElem, place: usize) -> Result<Sign> {
    field.sign_at(x, place)
}

/// Square test in `field`.
pub fn is_square(field: &TotallyRealField, x: &FieldElem) -> Result<bool> {
    field.is_square(x)
}

/// True iff `x` is positive at every real place other than `Id`.
pub fn in_k_infinity_star(field: &TotallyRealField, x: &FieldElem) -> Result<bool> {
    field.in_k_infinity_star(x)
}
