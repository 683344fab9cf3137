//! The normalizer index check for the two fields with known Θ-data.
//!
//! For `k = Q` and `k = Q(sqrt 5)` the Θ-fixed part of the image of the
//! spinor norm has two classes, `{1, -1}` and `{1, (1 - sqrt 5)/2}`, and the
//! normalizer of the principal arithmetic subgroup has index 2 over it. The
//! witness `g = diag(-1, -1, 1, ..., 1)` realizes the nontrivial coset. The
//! Θ-sets are taken as given; the Θ-action is not recomputed.

use num_traits::{One, Signed};

use super::form::{admissibility_check, DiagonalForm};
use super::isometry::{so0_membership, spinor_norm, Isometry};
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::exact_arith::{FieldElem, FieldKind, SquareClass, TotallyRealField};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerReport {
    pub field: TotallyRealField,
    pub n: usize,
    pub form: DiagonalForm,
    /// Cardinality of the Θ-fixed set below.
    pub index_gamma_lambda: u64,
    pub theta_set: Vec<SquareClass>,
    pub theta_set_in_k_infinity_star: bool,
    pub witness: Isometry,
    pub witness_preserves_form: bool,
    pub witness_stabilizes_lattice: bool,
    pub witness_in_so0: bool,
    pub witness_spinor_class: SquareClass,
    pub witness_class_in_theta_set: bool,
}

/// The positive coefficient at `Id` and the nontrivial Θ-class.
fn theta_data(field: &TotallyRealField) -> Result<(FieldElem, FieldElem)> {
    match field.kind() {
        FieldKind::Rationals => Ok((field.one(), field.from_i64(-1))),
        FieldKind::RealQuadratic(5) => {
            let phi = field.parse_elem("1/2+1/2*sqrt(5)")?;
            let psi = phi.conjugate();
            // With Id at the conjugate place the roles of phi and its conjugate swap.
            Ok(if field.id_place() == 0 {
                (phi, psi)
            } else {
                (psi, phi)
            })
        }
        _ => Err(Error::ThetaDataUnavailable),
    }
}

pub fn normalizer_index_check(field: &TotallyRealField, n: usize) -> Result<NormalizerReport> {
    let (a0, theta) = theta_data(field)?;
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "n must be even and at least 4, got {n}"
        )));
    }
    let mut coefficients = vec![field.from_i64(-1); n + 1];
    coefficients[0] = a0;
    let form = DiagonalForm::new(*field, coefficients)?;
    if !admissibility_check(&form) {
        return Err(Error::Internal(format!("{form} is not admissible")));
    }

    let theta_set = vec![
        SquareClass::trivial(*field),
        SquareClass::new(*field, theta)?,
    ];
    let theta_set_in_k_infinity_star = theta_set.iter().all(SquareClass::in_k_infinity_star);

    let mut diag = vec![field.one(); n + 1];
    diag[0] = field.from_i64(-1);
    diag[1] = field.from_i64(-1);
    let matrix = Matrix::diagonal(*field, &diag)?;
    let gram = form.gram();
    let witness_preserves_form = matrix.transpose().mul(&gram)?.mul(&matrix)? == gram;
    let witness_stabilizes_lattice = stabilizes_standard_lattice(&matrix);
    let witness = Isometry::new(form.clone(), matrix)?;
    let witness_in_so0 = so0_membership(&witness)?;
    let witness_spinor_class = spinor_norm(&witness);
    let witness_class_in_theta_set = theta_set.contains(&witness_spinor_class);

    Ok(NormalizerReport {
        field: *field,
        n,
        form,
        index_gamma_lambda: theta_set.len() as u64,
        theta_set,
        theta_set_in_k_infinity_star,
        witness,
        witness_preserves_form,
        witness_stabilizes_lattice,
        witness_in_so0,
        witness_spinor_class,
        witness_class_in_theta_set,
    })
}

/// Integral entries and a unit determinant.
pub fn stabilizes_standard_lattice(m: &Matrix) -> bool {
    if !m.entries().all(FieldElem::is_integral) {
        return false;
    }
    let det = m.det();
    det.is_integral() && det.norm().abs().is_one()
}
