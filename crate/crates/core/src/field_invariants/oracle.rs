//! Class numbers of real quadratic fields from the analytic class number formula.
//!
//! For a fundamental discriminant `D > 0` with character `χ = (D/·)` and
//! fundamental unit `ε`,
//!
//! ```text
//! h = -1/(2 log ε) * Σ_{a=1}^{D-1} χ(a) log sin(π a / D)
//! ```
//!
//! and since `χ` is even the sum folds onto `a < D/2`. This path shares
//! nothing with the reduced-form enumeration except the fundamental unit.

use astro_float::BigFloat;
use num_integer::Integer;

use super::forms::fundamental_discriminant;
use super::units::fundamental_unit;
use crate::bigfloat::{self, RM};
use crate::error::{Error, Result};

/// Working precision in bits (about 77 decimal digits).
pub const ORACLE_PRECISION_BITS: usize = 256;

/// Maximum allowed distance from the evaluated value to the nearest integer.
pub const ORACLE_RESIDUAL_BOUND: f64 = 1e-10;

/// Kronecker symbol `(D/n)` for `n > 0`.
pub fn kronecker(disc: i64, n: u64) -> i8 {
    assert!(n > 0);
    let mut n = n;
    let mut result = 1i8;
    while n % 2 == 0 {
        n /= 2;
        if disc % 2 == 0 {
            return 0;
        }
        if !matches!(disc.rem_euclid(8), 1 | 7) {
            result = -result;
        }
    }
    result * jacobi(disc.rem_euclid(n as i64) as u64, n)
}

/// Jacobi symbol `(a/n)` for odd `n > 0`.
fn jacobi(a: u64, n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let (mut a, mut n) = (a % n, n);
    let mut result = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// The analytic value of `h` together with its distance to the nearest integer.
#[derive(Debug, Clone)]
pub struct AnalyticEvaluation {
    pub rounded: u64,
    pub value: String,
    pub residual: String,
    pub within_bound: bool,
}

pub fn analytic_class_number_evaluation(d: u64) -> Result<AnalyticEvaluation> {
    let disc = fundamental_discriminant(d)?;
    let unit = fundamental_unit(d)?;
    let p = ORACLE_PRECISION_BITS;
    let mut cc = bigfloat::consts()?;

    let pi = cc.pi(p, RM);
    let disc_f = bigfloat::from_u64(disc, p);
    let mut sum = BigFloat::new(p);
    for a in 1..=(disc - 1) / 2 {
        let chi = kronecker(disc as i64, a);
        if chi == 0 {
            continue;
        }
        let angle = pi.mul(&bigfloat::from_u64(a, p), p, RM).div(&disc_f, p, RM);
        let term = angle.sin(p, RM, &mut cc).ln(p, RM, &mut cc);
        sum = if chi > 0 {
            sum.add(&term, p, RM)
        } else {
            sum.sub(&term, p, RM)
        };
    }

    // ε = (x + y sqrt d) / w with integers x, y, w
    let den = unit.a.denom().lcm(unit.b.denom());
    let x = unit.a.numer() * (&den / unit.a.denom());
    let y = unit.b.numer() * (&den / unit.b.denom());
    let to_f = |n: &num_bigint::BigInt| -> Result<BigFloat> {
        let mag = bigfloat::from_biguint(n.magnitude(), p);
        Ok(if n.sign() == num_bigint::Sign::Minus {
            mag.neg()
        } else {
            mag
        })
    };
    let sqrt_d = bigfloat::from_u64(d, p).sqrt(p, RM);
    let epsilon = to_f(&x)?
        .add(&to_f(&y)?.mul(&sqrt_d, p, RM), p, RM)
        .div(&to_f(&den)?, p, RM);
    let log_eps = epsilon.ln(p, RM, &mut cc);

    let h = bigfloat::check(sum.div(&log_eps, p, RM).neg(), "analytic class number")?;
    let nearest = h.round(0, RM);
    let residual = h.sub(&nearest, p, RM).abs();
    let bound = BigFloat::from_f64(ORACLE_RESIDUAL_BOUND, p);
    let rounded = bigfloat::to_bigint(&nearest)
        .and_then(|n| u64::try_from(n).ok())
        .ok_or_else(|| {
            Error::Internal(format!(
                "class number estimate for d = {d} is not a positive integer"
            ))
        })?;
    Ok(AnalyticEvaluation {
        rounded,
        value: bigfloat::to_decimal(&h, &mut cc)?,
        residual: bigfloat::to_decimal(&residual, &mut cc)?,
        within_bound: residual.cmp(&bound).is_some_and(|c| c < 0),
    })
}

/// Class number of Q(sqrt d) from the analytic formula, rounded to the
/// nearest integer. Errors if the rounding residual is not below
/// [`ORACLE_RESIDUAL_BOUND`].
pub fn analytic_class_number_oracle(d: u64) -> Result<u64> {
    let eval = analytic_class_number_evaluation(d)?;
    if !eval.within_bound || eval.rounded == 0 {
        return Err(Error::InsufficientPrecision(eval.residual));
    }
    Ok(eval.rounded)
}
