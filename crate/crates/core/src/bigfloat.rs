//! Glue between exact integers and `astro_float` binary floats.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign as FloatSign, WORD_BIT_SIZE};
use num_bigint::{BigInt, BigUint, Sign as IntSign};
use num_traits::Zero;

use crate::error::{Error, Result};

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

pub(crate) fn consts() -> Result<Consts> {
    Consts::new().map_err(|e| Error::Internal(format!("constants cache: {e:?}")))
}

pub(crate) fn check(x: BigFloat, what: &str) -> Result<BigFloat> {
    if x.is_nan() || x.is_inf() {
        Err(Error::Internal(format!("{what} is not finite")))
    } else {
        Ok(x)
    }
}

/// `n` rounded to `p` bits.
pub(crate) fn from_biguint(n: &BigUint, p: usize) -> BigFloat {
    if n.is_zero() {
        return BigFloat::new(p);
    }
    let bits = n.bits() as usize;
    let words = bits.div_ceil(WORD_BIT_SIZE);
    // Left-align the integer in whole words so the top bit is set.
    let aligned = n << (words * WORD_BIT_SIZE - bits);
    let mut m: Vec<u64> = aligned.to_u64_digits();
    m.resize(words, 0);
    let mut x = BigFloat::from_words(&m, FloatSign::Pos, bits as i32);
    x.set_precision(p, RM).expect("precision is valid");
    x
}

pub(crate) fn from_u64(n: u64, p: usize) -> BigFloat {
    BigFloat::from_u64(n, p)
}

/// Exact integer value of an integral float.
pub(crate) fn to_bigint(x: &BigFloat) -> Option<BigInt> {
    if x.is_zero() {
        return Some(BigInt::zero());
    }
    let (words, _, sign, exp, _) = x.as_raw_parts()?;
    let total = (words.len() * WORD_BIT_SIZE) as i64;
    let mantissa = BigUint::from_slice(
        &words
            .iter()
            .flat_map(|w| [*w as u32, (*w >> 32) as u32])
            .collect::<Vec<_>>(),
    );
    let shift = exp as i64 - total;
    let magnitude = if shift >= 0 {
        mantissa << shift as usize
    } else {
        let s = (-shift) as usize;
        if !(&mantissa & ((BigUint::from(1u8) << s) - 1u8)).is_zero() {
            return None;
        }
        mantissa >> s
    };
    let sign = if sign == FloatSign::Neg {
        IntSign::Minus
    } else {
        IntSign::Plus
    };
    Some(BigInt::from_biguint(sign, magnitude))
}

/// Decimal scientific notation, e.g. `2.5330295910584442860969865802431909726e-2`.
pub(crate) fn to_decimal(x: &BigFloat, cc: &mut Consts) -> Result<String> {
    x.format(Radix::Dec, RM, cc)
        .map_err(|e| Error::Internal(format!("float formatting: {e:?}")))
}
