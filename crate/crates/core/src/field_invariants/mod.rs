//! Class numbers, units and the restricted 2-class number of a totally real field.
//!
//! For a totally real field `k` with unit group `U` and `U∞` the units that
//! are positive at every real place other than `Id`,
//!
//! ```text
//! h∞,2 = 2^([k:Q] - 1) * h₂ / [U : U∞]
//! ```
//!
//! where `h₂` is the order of the 2-part of the class group. The class
//! number `c(P)` of every coherent collection of parahorics divides `h∞,2`,
//! so `h∞,2 = 1` certifies `c(P) = 1`.
//!
//! Q and real quadratic fields are computed end to end. For fields of higher
//! degree the caller supplies `h` and unit sign vectors, see
//! [`SuppliedInvariants`].

mod forms;
mod oracle;
mod units;

pub use forms::{
    form_cycles, fundamental_discriminant, narrow_class_number, reduced_forms, BinaryQuadraticForm,
    FormCycle,
};
pub use oracle::{
    analytic_class_number_evaluation, analytic_class_number_oracle, kronecker, AnalyticEvaluation,
    ORACLE_PRECISION_BITS, ORACLE_RESIDUAL_BOUND,
};
pub use units::{fundamental_unit, unit_index_from_signs, UnitGroupData};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact_arith::rational::two_adic_valuation;
use crate::exact_arith::{FieldKind, Sign, TotallyRealField};

/// The invariant bundle of Q or a real quadratic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldInvariants {
    pub field: TotallyRealField,
    pub h: u64,
    pub h2: u64,
    pub h_plus: u64,
    pub units: UnitGroupData,
    pub h_inf_2: u64,
    pub uniqueness_certified: bool,
}

/// Class number `h`. For Q(sqrt d): `h+` if the fundamental unit has norm
/// -1, `h+/2` otherwise.
pub fn class_number(field: &TotallyRealField) -> Result<u64> {
    Ok(class_numbers(field)?.0)
}

/// `(h, h+)`.
fn class_numbers(field: &TotallyRealField) -> Result<(u64, u64)> {
    match field.kind() {
        FieldKind::Rationals => Ok((1, 1)),
        FieldKind::RealQuadratic(d) => {
            let h_plus = narrow_class_number(d)?;
            let unit = fundamental_unit(d)?;
            let h = if unit.norm().is_negative() {
                h_plus
            } else {
                if h_plus % 2 != 0 {
                    return Err(Error::Internal(format!(
                        "odd narrow class number {h_plus} with a totally positive unit (d = {d})"
                    )));
                }
                h_plus / 2
            };
            Ok((h, h_plus))
        }
    }
}

/// Order of the 2-Sylow subgroup of an abelian group of order `h`.
pub fn two_class_number(h: u64) -> Result<u64> {
    if h == 0 {
        return Err(Error::InvalidArgument(
            "class number must be positive".into(),
        ));
    }
    Ok(1 << two_adic_valuation(h))
}

/// `[U : U∞]` for a field of degree at most 2.
pub fn unit_index_infinity(field: &TotallyRealField) -> Result<u64> {
    Ok(UnitGroupData::of(field)?.unit_index_infinity)
}

/// `2^(degree - 1) * h2 / unit_index`, required to be an integer.
pub fn restricted_two_class_number(degree: usize, h2: u64, unit_index: u64) -> Result<u64> {
    if degree == 0 || degree > 63 {
        return Err(Error::UnsupportedDegree(degree));
    }
    if unit_index == 0 || !unit_index.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "unit index {unit_index} is not a power of two"
        )));
    }
    let numerator = (1u64 << (degree - 1))
        .checked_mul(h2)
        .ok_or_else(|| Error::InvalidArgument("h2 too large".into()))?;
    if numerator % unit_index != 0 {
        return Err(Error::Internal(format!(
            "h∞,2 = {numerator}/{unit_index} is not an integer"
        )));
    }
    Ok(numerator / unit_index)
}

/// Full invariant bundle, with `uniqueness_certified` set iff `h∞,2 = 1`.
pub fn restricted_class_number(field: &TotallyRealField) -> Result<FieldInvariants> {
    let (h, h_plus) = class_numbers(field)?;
    let h2 = two_class_number(h)?;
    let units = UnitGroupData::of(field)?;
    let h_inf_2 = restricted_two_class_number(field.degree(), h2, units.unit_index_infinity)?;
    Ok(FieldInvariants {
        field: *field,
        h,
        h2,
        h_plus,
        units,
        h_inf_2,
        uniqueness_certified: h_inf_2 == 1,
    })
}

/// Caller-provided data for a totally real field of any degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuppliedInvariants {
    pub degree: usize,
    pub id_place: usize,
    pub h: u64,
    /// Sign vectors at all real places of a set of units generating `U`
    /// modulo squares. `-1` is added automatically.
    pub unit_signs: Vec<Vec<Sign>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedClassNumber {
    pub degree: usize,
    pub h: u64,
    pub h2: u64,
    pub unit_index_infinity: u64,
    pub h_inf_2: u64,
    pub uniqueness_certified: bool,
}

impl SuppliedInvariants {
    pub fn evaluate(&self) -> Result<RestrictedClassNumber> {
        let mut signs = vec![vec![Sign::Negative; self.degree]];
        for v in &self.unit_signs {
            if v.len() != self.degree {
                return Err(Error::DimensionMismatch {
                    expected: self.degree,
                    got: v.len(),
                });
            }
            signs.push(v.clone());
        }
        let h2 = two_class_number(self.h)?;
        let unit_index_infinity = unit_index_from_signs(&signs, self.id_place)?;
        let h_inf_2 = restricted_two_class_number(self.degree, h2, unit_index_infinity)?;
        Ok(RestrictedClassNumber {
            degree: self.degree,
            h: self.h,
            h2,
            unit_index_infinity,
            h_inf_2,
            uniqueness_certified: h_inf_2 == 1,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_part_of_class_number() {
        assert_eq!(two_class_number(1).unwrap(), 1);
        assert_eq!(two_class_number(2).unwrap(), 2);
        assert_eq!(two_class_number(12).unwrap(), 4);
        assert!(two_class_number(0).is_err());
    }

    #[test]
    fn class_number_examples() {
        assert_eq!(class_number(&TotallyRealField::rationals()).unwrap(), 1);
        let k5 = TotallyRealField::real_quadratic(5).unwrap();
        assert_eq!(class_number(&k5).unwrap(), 1);
        let k10 = TotallyRealField::real_quadratic(10).unwrap();
        assert_eq!(class_number(&k10).unwrap(), 2);
    }

    #[test]
    fn restricted_class_number_examples() {
        let q = restricted_class_number(&TotallyRealField::rationals()).unwrap();
        assert_eq!(
            (q.h, q.h2, q.units.unit_index_infinity, q.h_inf_2),
            (1, 1, 1, 1)
        );
        assert!(q.uniqueness_certified);

        let k5 = restricted_class_number(&TotallyRealField::real_quadratic(5).unwrap()).unwrap();
        assert_eq!(
            (k5.h, k5.h2, k5.units.unit_index_infinity, k5.h_inf_2),
            (1, 1, 2, 1)
        );
        assert_eq!(k5.units.unit_norm, Some(-1));
        assert!(k5.uniqueness_certified);

        let k10 = restricted_class_number(&TotallyRealField::real_quadratic(10).unwrap()).unwrap();
        assert_eq!(k10.h_inf_2, 2);
        assert!(!k10.uniqueness_certified);
    }

    #[test]
    fn formula_integrality_guard() {
        assert_eq!(restricted_two_class_number(2, 1, 2).unwrap(), 1);
        assert_eq!(restricted_two_class_number(1, 1, 1).unwrap(), 1);
        assert!(matches!(
            restricted_two_class_number(1, 1, 2),
            Err(Error::Internal(_))
        ));
        assert!(restricted_two_class_number(2, 1, 3).is_err());
    }

    #[test]
    fn supplied_cubic_data() {
        use Sign::{Negative as N, Positive as P};
        // Totally real cubic with h = 1 and units of mixed signature at the non-Id places.
        let data = SuppliedInvariants {
            degree: 3,
            id_place: 0,
            h: 1,
            unit_signs: vec![vec![P, N, P], vec![N, P, P]],
        };
        let r = data.evaluate().unwrap();
        assert_eq!(r.unit_index_infinity, 4);
        assert_eq!(r.h_inf_2, 1);
        assert!(r.uniqueness_certified);

        // Only totally positive units besides -1: index 2, h∞,2 = 2.
        let data = SuppliedInvariants {
            unit_signs: vec![vec![P, P, P]],
            ..data
        };
        assert_eq!(data.evaluate().unwrap().h_inf_2, 2);

        let bad = SuppliedInvariants {
            degree: 3,
            id_place: 0,
            h: 1,
            unit_signs: vec![vec![P, N]],
        };
        assert!(bad.evaluate().is_err());
    }
}
