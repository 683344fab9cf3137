//! JSON documents. Field order is output order; integers are decimal strings.

use serde::Serialize;
use serde_json::value::RawValue;

#[derive(Debug, Serialize)]
pub struct FieldInvariantsDoc {
    pub field: String,
    pub h: String,
    pub h2: String,
    pub h_plus: String,
    pub fundamental_unit: Option<String>,
    pub unit_norm: Option<String>,
    pub unit_index_infinity: String,
    pub h_inf_2: String,
    pub uniqueness_certified: bool,
}

#[derive(Debug, Serialize)]
pub struct SpinorNormDoc {
    pub spinor_class: String,
    pub in_k_infinity_star: bool,
    /// Null when the form is not admissible.
    pub in_so0: Option<bool>,
    pub decomposition_length: String,
    pub special: bool,
}

#[derive(Debug, Serialize)]
pub struct DecompositionDoc {
    pub field: String,
    pub form: Vec<String>,
    pub order: Vec<String>,
    pub vectors: Vec<Vec<String>>,
    pub values: Vec<String>,
    pub decomposition_length: String,
    pub spinor_class: String,
    pub special: bool,
}

#[derive(Debug, Serialize)]
pub struct NormalizerDoc {
    pub field: String,
    pub n: String,
    pub form: Vec<String>,
    pub index_gamma_lambda: String,
    pub theta_set: Vec<String>,
    pub theta_set_in_k_infinity_star: bool,
    pub witness: Vec<Vec<String>>,
    pub witness_preserves_form: bool,
    pub witness_stabilizes_lattice: bool,
    pub witness_in_so0: bool,
    pub witness_spinor_class: String,
    pub witness_class_in_theta_set: bool,
}

#[derive(Debug, Serialize)]
pub struct GrowthBoundDoc {
    pub r: String,
    pub degree: String,
    pub numerator: String,
    pub pi_power: String,
    pub float_value: Box<RawValue>,
    pub precision_bits: String,
}

#[derive(Debug, Serialize)]
pub struct CertificateDoc {
    pub r_max: String,
    pub precision_bits: String,
    pub ratio_identity_holds: bool,
    pub r0: Option<String>,
    pub r0_factorial_ratio: Option<String>,
    pub status: &'static str,
    pub rows: Vec<CertificateRowDoc>,
}

#[derive(Debug, Serialize)]
pub struct CertificateRowDoc {
    pub r: String,
    pub numerator: String,
    pub pi_power: String,
    pub float_value: Box<RawValue>,
    pub ratio_numerator: Option<String>,
    pub ratio_pi_power: Option<String>,
    pub ratio_value: Option<Box<RawValue>>,
    pub ratio_identity_holds: Option<bool>,
    pub increasing: Option<bool>,
    pub factorial_ratio_increasing: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct SweepDoc {
    pub range: Vec<String>,
    pub all_agree: bool,
    pub rows: Vec<SweepRowDoc>,
}

#[derive(Debug, Serialize)]
pub struct SweepRowDoc {
    pub d: String,
    #[serde(flatten)]
    pub invariants: FieldInvariantsDoc,
    pub oracle_h: String,
    pub oracle_agreement: bool,
}

#[derive(Debug, Serialize)]
pub struct ErrorDoc {
    pub error: &'static str,
    pub detail: String,
}
