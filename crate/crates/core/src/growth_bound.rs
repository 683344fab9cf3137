//! The Euler characteristic lower bound
//!
//! ```text
//! B(r) = (∏_{i=1}^r (2i-1)! / (2π)^(2i))^degree
//! ```
//!
//! for `SO(1, 2r)` over a field of the given degree, up to an unspecified
//! positive constant (taken to be 1 here), and a certificate of its
//! super-exponential growth. Values are kept exactly as an integer numerator
//! and a power of `2π`; a binary float evaluation carries its precision.

use astro_float::BigFloat;
use num_bigint::BigUint;
use num_traits::One;

use crate::bigfloat::{self, RM};
use crate::error::{Error, Result};

/// Guard bits added to the working precision.
pub const GUARD_BITS: usize = 32;

/// Smallest accepted precision.
pub const MIN_PRECISION_BITS: usize = 64;

/// `exact_numerator / (2π)^pi_power`.
#[derive(Debug, Clone)]
pub struct GrowthBoundValue {
    pub r: u64,
    pub degree: u64,
    pub exact_numerator: BigUint,
    pub pi_power: u64,
    pub float_value: BigFloat,
    pub precision_bits: usize,
}

impl GrowthBoundValue {
    /// Decimal scientific notation of the float value.
    pub fn float_decimal(&self) -> Result<String> {
        float_to_decimal(&self.float_value)
    }
}

/// Decimal scientific notation of a finite float, usable as a JSON number.
pub fn float_to_decimal(x: &BigFloat) -> Result<String> {
    let mut cc = bigfloat::consts()?;
    bigfloat::to_decimal(&bigfloat::check(x.clone(), "value")?, &mut cc)
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `(∏_{i=1}^r (2i-1)!)^degree` and `degree * (r^2 + r)`.
pub fn exact_parts(r: u64, degree: u64) -> Result<(BigUint, u64)> {
    if r == 0 || degree == 0 {
        return Err(Error::InvalidArgument(format!(
            "r and degree must be positive, got r = {r}, degree = {degree}"
        )));
    }
    let pi_power = r
        .checked_mul(r + 1)
        .and_then(|x| x.checked_mul(degree))
        .ok_or_else(|| Error::InvalidArgument("2π exponent overflows".into()))?;
    let base = (1..=r).fold(BigUint::one(), |acc, i| acc * factorial(2 * i - 1));
    let degree_u32 = u32::try_from(degree)
        .map_err(|_| Error::InvalidArgument(format!("degree {degree} too large")))?;
    Ok((base.pow(degree_u32), pi_power))
}

pub fn euler_char_bound(r: u64, degree: u64, precision_bits: usize) -> Result<GrowthBoundValue> {
    if precision_bits < MIN_PRECISION_BITS {
        return Err(Error::InvalidArgument(format!(
            "precision must be at least {MIN_PRECISION_BITS} bits, got {precision_bits}"
        )));
    }
    let (exact_numerator, pi_power) = exact_parts(r, degree)?;
    let float_value = evaluate(&exact_numerator, pi_power, precision_bits)?;
    Ok(GrowthBoundValue {
        r,
        degree,
        exact_numerator,
        pi_power,
        float_value,
        precision_bits,
    })
}

/// `numerator / (2π)^pi_power` rounded to `precision_bits`.
fn evaluate(numerator: &BigUint, pi_power: u64, precision_bits: usize) -> Result<BigFloat> {
    let wp = precision_bits + GUARD_BITS;
    let mut cc = bigfloat::consts()?;
    let two_pi = cc.pi(wp, RM).mul(&BigFloat::from_u8(2, wp), wp, RM);
    let denominator = pow(&two_pi, pi_power, wp);
    let num = bigfloat::from_biguint(numerator, wp);
    let mut value = bigfloat::check(num.div(&denominator, wp, RM), "growth bound")?;
    value
        .set_precision(precision_bits, RM)
        .map_err(|e| Error::Internal(format!("rounding: {e:?}")))?;
    Ok(value)
}

fn pow(x: &BigFloat, mut e: u64, p: usize) -> BigFloat {
    let mut base = x.clone();
    let mut acc = BigFloat::from_u8(1, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base, p, RM);
        }
        base = base.mul(&base, p, RM);
        e >>= 1;
    }
    acc
}

/// One row of the growth certificate (degree 1).
#[derive(Debug, Clone)]
pub struct CertificateRow {
    pub r: u64,
    pub value: GrowthBoundValue,
    /// `(2r+1)!`, the exact numerator of `B(r+1)/B(r)`; absent for `r = r_max`.
    pub ratio_numerator: Option<BigUint>,
    /// `2r + 2`.
    pub ratio_pi_power: Option<u64>,
    pub ratio_value: Option<BigFloat>,
    /// `B(r+1) (2π)^(2r+2) = B(r) (2r+1)!` on exact parts.
    pub ratio_identity_holds: Option<bool>,
    /// `B(r+1) > B(r)`.
    pub increasing: Option<bool>,
    /// `B(r+1)/(2r+1)! > B(r)/(2r-1)!`.
    pub factorial_ratio_increasing: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct GrowthCertificate {
    pub r_max: u64,
    pub precision_bits: usize,
    pub rows: Vec<CertificateRow>,
    pub ratio_identity_holds: bool,
    /// Least `r_0 < r_max` with `B` strictly increasing on `[r_0, r_max]`.
    pub r0: Option<u64>,
    /// Least `r_1 < r_max` with `B(r)/(2r-1)!` strictly increasing on `[r_1, r_max]`.
    pub r0_factorial_ratio: Option<u64>,
}

impl GrowthCertificate {
    pub fn threshold_reached(&self) -> bool {
        self.r0.is_some()
    }

    pub fn status(&self) -> &'static str {
        if self.threshold_reached() {
            "threshold reached"
        } else {
            "threshold not reached"
        }
    }
}

pub fn superexponential_certificate(
    r_max: u64,
    precision_bits: usize,
) -> Result<GrowthCertificate> {
    if r_max < 3 {
        return Err(Error::InvalidArgument(format!(
            "r_max must be at least 3, got {r_max}"
        )));
    }
    let values = (1..=r_max)
        .map(|r| euler_char_bound(r, 1, precision_bits))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(values.len());
    for (idx, value) in values.iter().enumerate() {
        let r = value.r;
        let row = match values.get(idx + 1) {
            None => CertificateRow {
                r,
                value: value.clone(),
                ratio_numerator: None,
                ratio_pi_power: None,
                ratio_value: None,
                ratio_identity_holds: None,
                increasing: None,
                factorial_ratio_increasing: None,
            },
            Some(next) => {
                let ratio_numerator = factorial(2 * r + 1);
                let ratio_pi_power = 2 * r + 2;
                let identity = next.exact_numerator == &value.exact_numerator * &ratio_numerator
                    && next.pi_power == value.pi_power + ratio_pi_power;
                let ratio_value = evaluate(&ratio_numerator, ratio_pi_power, precision_bits)?;
                let one = BigFloat::from_u8(1, precision_bits);
                // B(r+1)/(2r+1)! over B(r)/(2r-1)! is (2r-1)!/(2π)^(2r+2)
                let factorial_ratio =
                    evaluate(&factorial(2 * r - 1), ratio_pi_power, precision_bits)?;
                CertificateRow {
                    r,
                    value: value.clone(),
                    increasing: Some(ratio_value.cmp(&one).is_some_and(|c| c > 0)),
                    factorial_ratio_increasing: Some(
                        factorial_ratio.cmp(&one).is_some_and(|c| c > 0),
                    ),
                    ratio_numerator: Some(ratio_numerator),
                    ratio_pi_power: Some(ratio_pi_power),
                    ratio_value: Some(ratio_value),
                    ratio_identity_holds: Some(identity),
                }
            }
        };
        rows.push(row);
    }
    let ratio_identity_holds = rows
        .iter()
        .all(|row| row.ratio_identity_holds != Some(false));
    let r0 = tail_threshold(&rows, |row| row.increasing);
    let r0_factorial_ratio = tail_threshold(&rows, |row| row.factorial_ratio_increasing);
    Ok(GrowthCertificate {
        r_max,
        precision_bits,
        rows,
        ratio_identity_holds,
        r0,
        r0_factorial_ratio,
    })
}

/// Least `r` such that the flag holds for every row from `r` up to the last comparison.
fn tail_threshold(
    rows: &[CertificateRow],
    flag: impl Fn(&CertificateRow) -> Option<bool>,
) -> Option<u64> {
    let mut threshold = None;
    for row in rows.iter().rev() {
        match flag(row) {
            None => continue,
            Some(true) => threshold = Some(row.r),
            Some(false) => break,
        }
    }
    threshold
}
