//! Shared inputs for the criterion benches.

use orbinv_core::exact_arith::rational::is_squarefree;
use orbinv_core::spinor::{DiagonalForm, Isometry, IsometrySampler};
use orbinv_core::TotallyRealField;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn squarefree_range(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&d| is_squarefree(d)).collect()
}

/// `<phi, -1, ..., -1>` over Q(sqrt 5), or the standard Lorentzian form over Q.
pub fn admissible_form(over_q5: bool, n: usize) -> DiagonalForm {
    if !over_q5 {
        return DiagonalForm::standard_lorentzian(TotallyRealField::rationals(), n)
            .expect("n >= 2");
    }
    let k = TotallyRealField::real_quadratic(5).expect("5 is squarefree");
    let mut coefficients = vec![k.from_i64(-1); n + 1];
    coefficients[0] = k.parse_elem("1/2+1/2*sqrt(5)").expect("valid element");
    DiagonalForm::new(k, coefficients).expect("nonzero coefficients")
}

pub fn sample_isometries(form: &DiagonalForm, count: usize, seed: u64) -> Vec<Isometry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sampler = IsometrySampler::default();
    (0..count)
        .map(|_| sampler.isometry(form, &mut rng).expect("valid sampler"))
        .collect()
}
