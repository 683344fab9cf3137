use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::elem::FieldElem;
use super::field::TotallyRealField;
use super::rational::{common_denominator, square_decomposition, squarefree_kernel, Rational};
use crate::error::{Error, Result};

/// A class in k*/(k*)^2.
///
/// Over Q the representative is always the signed squarefree integer of the
/// class. Over Q(sqrt d) no canonical representative exists here; the
/// representative is only stripped of square rational content, and equality
/// is decided by a square test on the quotient.
#[derive(Debug, Clone)]
pub struct SquareClass {
    field: TotallyRealField,
    representative: FieldElem,
}

impl SquareClass {
    pub fn new(field: TotallyRealField, x: FieldElem) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::ZeroArgument("square class"));
        }
        if !field.contains(&x) {
            return Err(Error::FieldMismatch(format!("{x} does not lie in {field}")));
        }
        let representative = strip_square_content(&field.lift(x)?);
        Ok(SquareClass {
            field,
            representative: field.lift(representative)?,
        })
    }

    pub fn trivial(field: TotallyRealField) -> Self {
        SquareClass {
            field,
            representative: field.one(),
        }
    }

    pub fn field(&self) -> &TotallyRealField {
        &self.field
    }

    pub fn representative(&self) -> &FieldElem {
        &self.representative
    }

    pub fn is_trivial(&self) -> bool {
        self.representative
            .is_square()
            .expect("representatives are nonzero")
    }

    /// Whether `x` lies in this class.
    pub fn contains(&self, x: &FieldElem) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroArgument("square class membership"));
        }
        let x = self.field.lift(x.clone())?;
        (&x / &self.representative).is_square()
    }

    pub fn mul(&self, other: &SquareClass) -> Result<SquareClass> {
        if self.field.kind() != other.field.kind() {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        SquareClass::new(self.field, &self.representative * &other.representative)
    }

    /// k∞* membership of the class. Squares are positive at every real
    /// place, so the answer does not depend on the representative.
    pub fn in_k_infinity_star(&self) -> bool {
        self.field
            .in_k_infinity_star(&self.representative)
            .expect("representatives are nonzero")
    }
}

impl PartialEq for SquareClass {
    fn eq(&self, other: &Self) -> bool {
        self.field.kind() == other.field.kind()
            && (&self.representative / &other.representative)
                .is_square()
                .expect("representatives are nonzero")
    }
}

impl Eq for SquareClass {}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.representative.fmt(f)
    }
}

/// Multiplies `x` by a rational square so that its coordinates become
/// integers with squarefree content. Over Q this yields the squarefree kernel.
fn strip_square_content(x: &FieldElem) -> FieldElem {
    let [a, b] = [x.rational_part().clone(), x.irrational_part()];
    let den = common_denominator([&a, &b]);
    let den2 = Rational::from_integer(&den * &den);
    let (a, b) = ((a * &den2).to_integer(), (b * &den2).to_integer());
    if b.is_zero() {
        return FieldElem::Rational(Rational::from_integer(squarefree_kernel(&a)))
            .lift(x.radicand())
            .expect("same field");
    }
    let content = a.gcd(&b);
    let (square, _) = square_decomposition(&content);
    let s2 = BigInt::from(&square * &square);
    let scaled = |n: BigInt| Rational::from_integer(n / &s2);
    FieldElem::Quadratic(super::QuadFieldElem::new(
        scaled(a),
        scaled(b),
        x.radicand().expect("nonzero irrational part"),
    ))
}
