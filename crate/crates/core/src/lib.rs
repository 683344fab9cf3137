//! Exact number-theoretic invariants of arithmetic groups `SO(f)` for
//! admissible quadratic forms over Q and real quadratic fields.
//!
//! - [`exact_arith`]: rationals, Q(sqrt d), exact signs at real places, square classes.
//! - [`field_invariants`]: fundamental units, class numbers via reduced
//!   indefinite forms, unit sign index and the restricted 2-class number.
//! - [`spinor`]: diagonal forms, reflection decompositions, spinor norms,
//!   `SO_0` membership and the normalizer index check.
//! - [`growth_bound`]: the Euler characteristic lower bound and its growth.

mod bigfloat;
pub mod error;
pub mod exact_arith;
pub mod field_invariants;
pub mod growth_bound;
pub mod spinor;

pub use error::{Error, Result};
pub use exact_arith::{
    FieldElem, FieldKind, QuadFieldElem, Rational, Sign, SquareClass, TotallyRealField,
};
pub use field_invariants::{
    restricted_class_number, BinaryQuadraticForm, FieldInvariants, FormCycle,
    RestrictedClassNumber, SuppliedInvariants, UnitGroupData,
};
pub use growth_bound::{
    euler_char_bound, superexponential_certificate, GrowthBoundValue, GrowthCertificate,
};
pub use spinor::{DiagonalForm, Isometry, Matrix, NormalizerReport, ReflectionDecomposition};
