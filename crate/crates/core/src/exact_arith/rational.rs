//! Rationals and the integer helpers the rest of the crate leans on.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator; zero is `0/1`.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form `p/q`, always with an explicit denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer `p`. The denominator must be nonzero;
/// non-reduced input is accepted and normalized.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::parse("rational", s);
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a rational, if there is one.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let num = integer_sqrt_exact(q.numer())?;
    let den = integer_sqrt_exact(q.denom())?;
    Some(Rational::new(num, den))
}

/// Splits `n != 0` as `n = sign * s^2 * m` with `m > 0` squarefree, returning `(s, sign * m)`.
///
/// Primes up to the cube root of the unfactored part are removed by trial
/// division; what remains has at most two prime factors and is either a
/// prime square or squarefree.
pub fn square_decomposition(n: &BigInt) -> (BigUint, BigInt) {
    assert!(!n.is_zero(), "square decomposition of zero");
    let sign = n.sign();
    let mut rest = n.magnitude().clone();
    let mut square = BigUint::one();
    let mut core = BigUint::one();

    let mut p = BigUint::from(2u32);
    while &p * &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            square *= &p;
        }
        if e % 2 == 1 {
            core *= &p;
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        square *= r;
    } else {
        core *= rest;
    }
    (square, BigInt::from_biguint(sign, core))
}

/// Signed squarefree kernel: the unique squarefree integer in the square class of `n`.
pub fn squarefree_kernel(n: &BigInt) -> BigInt {
    square_decomposition(n).1
}

pub fn is_squarefree(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let (s, _) = square_decomposition(&BigInt::from(d));
    s.is_one()
}

/// 2-adic valuation of a positive integer.
pub fn two_adic_valuation(n: u64) -> u32 {
    assert!(n > 0);
    n.trailing_zeros()
}

/// Least common multiple of the denominators.
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn text_form_always_carries_denominator() {
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(format_rational(&rational(-6, 4)), "-3/2");
        assert_eq!(format_rational(&Rational::zero()), "0/1");
        assert_eq!(parse_rational("-3/2").unwrap(), rational(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("2/-4").unwrap(), rational(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&rational(9, 4)), Some(rational(3, 2)));
        assert_eq!(rational_sqrt(&rational(8, 9)), None);
        assert_eq!(rational_sqrt(&rational(-9, 4)), None);
        assert_eq!(rational_sqrt(&Rational::zero()), Some(Rational::zero()));
    }

    #[test]
    fn square_decomposition_matches_brute_force() {
        for n in -500i64..=500 {
            if n == 0 {
                continue;
            }
            let (s, m) = square_decomposition(&BigInt::from(n));
            let s = BigInt::from(s);
            assert_eq!(&s * &s * &m, BigInt::from(n), "n = {n}");
            let m = m.abs().to_u64().unwrap();
            let brute_sqf = (2..=m).all(|p| m % (p * p) != 0);
            assert!(brute_sqf, "kernel of {n} not squarefree");
        }
        // Two large prime factors left after trial division.
        let p = BigInt::from(1_000_003u64);
        let (s, m) = square_decomposition(&(&p * &p * 6));
        assert_eq!(BigInt::from(s), p);
        assert_eq!(m, BigInt::from(6));
    }

    #[test]
    fn squarefree_predicate() {
        let sqf: Vec<u64> = (1..=30).filter(|&d| is_squarefree(d)).collect();
        assert_eq!(
            sqf,
            vec![1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30]
        );
        assert!(!is_squarefree(0));
    }
}
