use orbinv_core::exact_arith::rational::is_squarefree;
use orbinv_core::field_invariants::{analytic_class_number_oracle, restricted_class_number};
use orbinv_core::growth_bound::float_to_decimal;
use orbinv_core::spinor::{
    decompose_orthogonal, normalizer_index_check, orthogonal_spinor_norm, so0_membership,
};
use orbinv_core::{
    euler_char_bound, superexponential_certificate, DiagonalForm, Error, FieldElem,
    FieldInvariants, Isometry, Matrix, Result, TotallyRealField,
};
use rayon::prelude::*;
use serde_json::value::RawValue;

use crate::args::{DecomposeArgs, FieldArgs, GrowthArgs, IsometryArgs, NormalizerArgs, SweepArgs};
use crate::report::*;

pub fn field(args: &FieldArgs) -> Result<TotallyRealField> {
    args.field
        .parse::<TotallyRealField>()?
        .with_id_place(args.id_place)
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.rows().iter().map(|row| strings(row)).collect()
}

pub fn field_invariants(args: &FieldArgs) -> Result<FieldInvariantsDoc> {
    Ok(invariants_doc(&restricted_class_number(&field(args)?)?))
}

fn invariants_doc(inv: &FieldInvariants) -> FieldInvariantsDoc {
    FieldInvariantsDoc {
        field: inv.field.to_string(),
        h: inv.h.to_string(),
        h2: inv.h2.to_string(),
        h_plus: inv.h_plus.to_string(),
        fundamental_unit: inv
            .units
            .fundamental_unit
            .clone()
            .map(|e| FieldElem::from(e).to_string()),
        unit_norm: inv.units.unit_norm.map(|n| n.to_string()),
        unit_index_infinity: inv.units.unit_index_infinity.to_string(),
        h_inf_2: inv.h_inf_2.to_string(),
        uniqueness_certified: inv.uniqueness_certified,
    }
}

/// Accepts element strings and, for convenience, JSON integers.
fn parse_matrix(field: &TotallyRealField, json: &str) -> Result<Matrix> {
    let bad = |detail: String| Error::InvalidArgument(format!("--matrix: {detail}"));
    let rows: Vec<Vec<serde_json::Value>> =
        serde_json::from_str(json).map_err(|e| bad(e.to_string()))?;
    let rows = rows
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| match x {
                    serde_json::Value::String(s) => field.parse_elem(&s),
                    serde_json::Value::Number(n) if n.is_i64() => {
                        Ok(field.from_i64(n.as_i64().expect("checked")))
                    }
                    other => Err(bad(format!("entry {other} is not an element string"))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(*field, rows)
}

fn parse_isometry(args: &IsometryArgs) -> Result<(DiagonalForm, Matrix)> {
    let k = field(&args.field)?;
    let form = DiagonalForm::parse(k, &args.form)?;
    let matrix = parse_matrix(&k, &args.matrix)?;
    if matrix.dim() != form.dim() {
        return Err(Error::DimensionMismatch {
            expected: form.dim(),
            got: matrix.dim(),
        });
    }
    Ok((form, matrix))
}

pub fn spinor_norm(args: &IsometryArgs) -> Result<SpinorNormDoc> {
    let (form, matrix) = parse_isometry(args)?;
    let norm = orthogonal_spinor_norm(&form, &matrix)?;
    let in_so0 = if norm.special {
        match so0_membership(&Isometry::new(form, matrix)?) {
            Ok(inside) => Some(inside),
            Err(Error::NotAdmissible) => None,
            Err(e) => return Err(e),
        }
    } else {
        Some(false)
    };
    Ok(SpinorNormDoc {
        spinor_class: norm.class.to_string(),
        in_k_infinity_star: norm.class.in_k_infinity_star(),
        in_so0,
        decomposition_length: norm.decomposition_length.to_string(),
        special: norm.special,
    })
}

fn parse_order(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("--order: bad index {t:?}")))
        })
        .collect()
}

pub fn decompose(args: &DecomposeArgs) -> Result<DecompositionDoc> {
    let (form, matrix) = parse_isometry(&args.isometry)?;
    let order = match &args.order {
        Some(s) => parse_order(s)?,
        None => (0..form.dim()).collect(),
    };
    let dec = decompose_orthogonal(&form, &matrix, &order)?;
    Ok(DecompositionDoc {
        field: form.field().to_string(),
        form: strings(form.coefficients()),
        order: strings(&order),
        vectors: dec.vectors.iter().map(|v| strings(v)).collect(),
        values: strings(&dec.values),
        decomposition_length: dec.len().to_string(),
        spinor_class: dec.spinor_class(&form).to_string(),
        special: dec.len() % 2 == 0,
    })
}

pub fn check_normalizer(args: &NormalizerArgs) -> Result<NormalizerDoc> {
    let report = normalizer_index_check(&field(&args.field)?, args.n)?;
    Ok(NormalizerDoc {
        field: report.field.to_string(),
        n: report.n.to_string(),
        form: strings(report.form.coefficients()),
        index_gamma_lambda: report.index_gamma_lambda.to_string(),
        theta_set: strings(&report.theta_set),
        theta_set_in_k_infinity_star: report.theta_set_in_k_infinity_star,
        witness: matrix_rows(report.witness.matrix()),
        witness_preserves_form: report.witness_preserves_form,
        witness_stabilizes_lattice: report.witness_stabilizes_lattice,
        witness_in_so0: report.witness_in_so0,
        witness_spinor_class: report.witness_spinor_class.to_string(),
        witness_class_in_theta_set: report.witness_class_in_theta_set,
    })
}

fn json_number(decimal: String) -> Result<Box<RawValue>> {
    RawValue::from_string(decimal)
        .map_err(|e| Error::Internal(format!("float is not a JSON number: {e}")))
}

pub enum GrowthDoc {
    Value(GrowthBoundDoc),
    Certificate(CertificateDoc),
}

pub fn growth_bound(args: &GrowthArgs) -> Result<GrowthDoc> {
    if let Some(r_max) = args.certify {
        let cert = superexponential_certificate(r_max, args.precision)?;
        let rows = cert
            .rows
            .iter()
            .map(|row| {
                Ok(CertificateRowDoc {
                    r: row.r.to_string(),
                    numerator: row.value.exact_numerator.to_string(),
                    pi_power: row.value.pi_power.to_string(),
                    float_value: json_number(row.value.float_decimal()?)?,
                    ratio_numerator: row.ratio_numerator.as_ref().map(ToString::to_string),
                    ratio_pi_power: row.ratio_pi_power.map(|p| p.to_string()),
                    ratio_value: row
                        .ratio_value
                        .as_ref()
                        .map(|x| json_number(float_to_decimal(x)?))
                        .transpose()?,
                    ratio_identity_holds: row.ratio_identity_holds,
                    increasing: row.increasing,
                    factorial_ratio_increasing: row.factorial_ratio_increasing,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(GrowthDoc::Certificate(CertificateDoc {
            r_max: cert.r_max.to_string(),
            precision_bits: cert.precision_bits.to_string(),
            ratio_identity_holds: cert.ratio_identity_holds,
            r0: cert.r0.map(|r| r.to_string()),
            r0_factorial_ratio: cert.r0_factorial_ratio.map(|r| r.to_string()),
            status: cert.status(),
            rows,
        }));
    }
    let r = args.r.expect("clap requires --r without --certify");
    let value = euler_char_bound(r, args.degree, args.precision)?;
    Ok(GrowthDoc::Value(GrowthBoundDoc {
        r: value.r.to_string(),
        degree: value.degree.to_string(),
        numerator: value.exact_numerator.to_string(),
        pi_power: value.pi_power.to_string(),
        float_value: json_number(value.float_decimal()?)?,
        precision_bits: value.precision_bits.to_string(),
    }))
}

pub fn sweep(args: &SweepArgs) -> Result<SweepDoc> {
    if args.dmin < 2 || args.dmin > args.dmax {
        return Err(Error::InvalidArgument(format!(
            "need 2 <= dmin <= dmax, got dmin = {}, dmax = {}",
            args.dmin, args.dmax
        )));
    }
    let ds: Vec<u64> = (args.dmin..=args.dmax)
        .filter(|&d| is_squarefree(d))
        .collect();
    let rows = ds
        .par_iter()
        .map(|&d| {
            let inv = restricted_class_number(&TotallyRealField::real_quadratic(d)?)?;
            let oracle_h = analytic_class_number_oracle(d)?;
            Ok(SweepRowDoc {
                d: d.to_string(),
                invariants: invariants_doc(&inv),
                oracle_h: oracle_h.to_string(),
                oracle_agreement: oracle_h == inv.h,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepDoc {
        range: strings(&ds),
        all_agree: rows.iter().all(|row| row.oracle_agreement),
        rows,
    })
}
