//! Elements of Q and of real quadratic fields Q(sqrt d).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{format_rational, parse_rational, rational_sqrt, Rational};
use crate::error::{Error, Result};

/// Sign of a nonzero real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    fn of(q: &Rational) -> Option<Sign> {
        match q.cmp(&Rational::zero()) {
            Ordering::Greater => Some(Sign::Positive),
            Ordering::Less => Some(Sign::Negative),
            Ordering::Equal => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// `a + b*sqrt(d)` with `d` squarefree and at least 2.
///
/// The constructor does not re-check `d`; values are built through
/// [`TotallyRealField`](super::TotallyRealField), which does.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadFieldElem {
    pub a: Rational,
    pub b: Rational,
    pub d: u64,
}

impl QuadFieldElem {
    pub(crate) fn new(a: Rational, b: Rational, d: u64) -> Self {
        QuadFieldElem { a, b, d }
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * BigInt::from(self.d)
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    pub fn conjugate(&self) -> Self {
        QuadFieldElem::new(self.a.clone(), -&self.b, self.d)
    }

    /// Sign of the real number `a + s*b*sqrt(d)` where `s` is the sign `sqrt(d)` is sent to.
    ///
    /// Exact: the signs of `a` and `b` are split into cases and `a^2` is
    /// compared with `b^2 d` when they disagree.
    pub fn sign_under(&self, sqrt_sign: Sign) -> Option<Sign> {
        let b = match sqrt_sign {
            Sign::Positive => self.b.clone(),
            Sign::Negative => -&self.b,
        };
        match (Sign::of(&self.a), Sign::of(&b)) {
            (None, None) => None,
            (Some(s), None) | (None, Some(s)) => Some(s),
            (Some(sa), Some(sb)) if sa == sb => Some(sa),
            (Some(sa), Some(sb)) => {
                let a2 = &self.a * &self.a;
                let b2d = &b * &b * BigInt::from(self.d);
                // a^2 == b^2 d is impossible for nonsquare d unless both vanish.
                if a2 > b2d {
                    Some(sa)
                } else {
                    Some(sb)
                }
            }
        }
    }

    /// A square root in the same field, if one exists.
    ///
    /// With `y = u + v sqrt(d)` and `y^2 = x` one has `u^2 + d v^2 = a`,
    /// `u^2 - d v^2 = c` where `c^2 = N(x)`; so `N(x)` must be a rational
    /// square and `u^2 = (a+c)/2`, `v^2 = (a-c)/(2d)` must be rational squares
    /// for one choice of the sign of `c`. The candidate is verified by squaring.
    pub fn sqrt(&self) -> Option<QuadFieldElem> {
        let c0 = rational_sqrt(&self.norm())?;
        let two = Rational::from_integer(BigInt::from(2));
        let two_d = Rational::from_integer(BigInt::from(2 * self.d));
        for c in [c0.clone(), -c0] {
            let Some(u) = rational_sqrt(&((&self.a + &c) / &two)) else {
                continue;
            };
            let Some(v) = rational_sqrt(&((&self.a - &c) / &two_d)) else {
                continue;
            };
            for v in [v.clone(), -v] {
                let y = QuadFieldElem::new(u.clone(), v, self.d);
                if &y * &y == *self {
                    return Some(y);
                }
            }
        }
        None
    }

    /// Membership in the maximal order: trace and norm are integers.
    pub fn is_integral(&self) -> bool {
        self.trace().is_integer() && self.norm().is_integer()
    }
}

impl<'a> Mul<&'a QuadFieldElem> for &'a QuadFieldElem {
    type Output = QuadFieldElem;
    fn mul(self, rhs: &QuadFieldElem) -> QuadFieldElem {
        assert_eq!(
            self.d, rhs.d,
            "arithmetic between different quadratic fields"
        );
        // Rational entries are common in matrices; skip the cross terms.
        if self.b.is_zero() {
            return QuadFieldElem::new(&self.a * &rhs.a, &self.a * &rhs.b, self.d);
        }
        if rhs.b.is_zero() {
            return QuadFieldElem::new(&self.a * &rhs.a, &self.b * &rhs.a, self.d);
        }
        let d = BigInt::from(self.d);
        QuadFieldElem::new(
            &self.a * &rhs.a + &self.b * &rhs.b * d,
            &self.a * &rhs.b + &self.b * &rhs.a,
            self.d,
        )
    }
}

impl fmt::Display for QuadFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}+{}*sqrt({})",
            format_rational(&self.a),
            format_rational(&self.b),
            self.d
        )
    }
}

/// An element of Q or of some Q(sqrt d).
///
/// Rationals combine freely with quadratic elements; two quadratic elements
/// must share `d` (the arithmetic operators panic otherwise, as they would on a
/// dimension mismatch). Equality compares real values.
#[derive(Debug, Clone)]
pub enum FieldElem {
    Rational(Rational),
    Quadratic(QuadFieldElem),
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        FieldElem::Rational(Rational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        FieldElem::Rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn rational_part(&self) -> &Rational {
        match self {
            FieldElem::Rational(q) => q,
            FieldElem::Quadratic(x) => &x.a,
        }
    }

    /// Coefficient of `sqrt(d)`; zero for rationals.
    pub fn irrational_part(&self) -> Rational {
        match self {
            FieldElem::Rational(_) => Rational::zero(),
            FieldElem::Quadratic(x) => x.b.clone(),
        }
    }

    /// The `d` of the quadratic field this element is tagged with.
    pub fn radicand(&self) -> Option<u64> {
        match self {
            FieldElem::Rational(_) => None,
            FieldElem::Quadratic(x) => Some(x.d),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_zero(),
            FieldElem::Quadratic(x) => x.a.is_zero() && x.b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.rational_part().is_one() && self.irrational_part().is_zero()
    }

    /// Field norm down to Q (the element itself for rationals).
    pub fn norm(&self) -> Rational {
        match self {
            FieldElem::Rational(q) => q.clone(),
            FieldElem::Quadratic(x) => x.norm(),
        }
    }

    pub fn conjugate(&self) -> Self {
        match self {
            FieldElem::Rational(q) => FieldElem::Rational(q.clone()),
            FieldElem::Quadratic(x) => FieldElem::Quadratic(x.conjugate()),
        }
    }

    /// Sign with `sqrt(d)` sent to `sqrt_sign * sqrt(d)`; `None` for zero.
    pub fn sign_under(&self, sqrt_sign: Sign) -> Option<Sign> {
        match self {
            FieldElem::Rational(q) => Sign::of(q),
            FieldElem::Quadratic(x) => x.sign_under(sqrt_sign),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            _ if self.is_zero() => Err(Error::ZeroArgument("inverse")),
            FieldElem::Rational(q) => Ok(FieldElem::Rational(q.recip())),
            FieldElem::Quadratic(x) => {
                let n = x.norm();
                Ok(FieldElem::Quadratic(QuadFieldElem::new(
                    &x.a / &n,
                    -&x.b / &n,
                    x.d,
                )))
            }
        }
    }

    /// Square test inside the field the element is tagged with.
    pub fn is_square(&self) -> Result<bool> {
        Ok(self.sqrt()?.is_some())
    }

    pub fn sqrt(&self) -> Result<Option<Self>> {
        if self.is_zero() {
            return Err(Error::ZeroArgument("square test"));
        }
        Ok(match self {
            FieldElem::Rational(q) => rational_sqrt(q).map(FieldElem::Rational),
            FieldElem::Quadratic(x) => x.sqrt().map(FieldElem::Quadratic),
        })
    }

    /// Algebraic integer test (ring of integers of the tagged field).
    pub fn is_integral(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_integer(),
            FieldElem::Quadratic(x) => x.is_integral(),
        }
    }

    /// Re-tags the element as a member of Q(sqrt d) (or Q for `None`).
    ///
    /// Fails if a quadratic element is moved to a different field.
    pub fn lift(self, radicand: Option<u64>) -> Result<Self> {
        match (self, radicand) {
            (FieldElem::Rational(q), Some(d)) => Ok(FieldElem::Quadratic(QuadFieldElem::new(
                q,
                Rational::zero(),
                d,
            ))),
            (FieldElem::Quadratic(x), Some(d)) if x.d == d => Ok(FieldElem::Quadratic(x)),
            (FieldElem::Quadratic(x), None) if x.b.is_zero() => Ok(FieldElem::Rational(x.a)),
            (x @ FieldElem::Rational(_), None) => Ok(x),
            (x, target) => Err(Error::FieldMismatch(format!(
                "{x} does not lie in {}",
                match target {
                    Some(d) => format!("Q(sqrt {d})"),
                    None => "Q".to_string(),
                }
            ))),
        }
    }

    fn parts(&self) -> (&Rational, Option<(&Rational, u64)>) {
        match self {
            FieldElem::Rational(q) => (q, None),
            FieldElem::Quadratic(x) => (&x.a, Some((&x.b, x.d))),
        }
    }

    fn combine(
        &self,
        rhs: &FieldElem,
        rat: impl Fn(&Rational, &Rational) -> Rational,
    ) -> FieldElem {
        match (self.parts(), rhs.parts()) {
            ((a, None), (c, None)) => FieldElem::Rational(rat(a, c)),
            ((a, x), (c, y)) => {
                let d = match (x, y) {
                    (Some((_, d1)), Some((_, d2))) => {
                        assert_eq!(d1, d2, "arithmetic between different quadratic fields");
                        d1
                    }
                    (Some((_, d)), None) | (None, Some((_, d))) => d,
                    (None, None) => unreachable!(),
                };
                let zero = Rational::zero();
                let b = x.map_or(&zero, |(b, _)| b);
                let e = y.map_or(&zero, |(e, _)| e);
                FieldElem::Quadratic(QuadFieldElem::new(rat(a, c), rat(b, e), d))
            }
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        let (a, x) = self.parts();
        let (c, y) = other.parts();
        if a != c {
            return false;
        }
        let zero = Rational::zero();
        match (x, y) {
            (Some((b, d1)), Some((e, d2))) => b == e && (b.is_zero() || d1 == d2),
            (Some((b, _)), None) | (None, Some((b, _))) => *b == zero,
            (None, None) => true,
        }
    }
}

impl Eq for FieldElem {}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.combine(rhs, |x, y| x + y)
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.combine(rhs, |x, y| x - y)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rational(p), FieldElem::Rational(q)) => FieldElem::Rational(p * q),
            (FieldElem::Rational(p), FieldElem::Quadratic(x))
            | (FieldElem::Quadratic(x), FieldElem::Rational(p)) => {
                FieldElem::Quadratic(QuadFieldElem::new(&x.a * p, &x.b * p, x.d))
            }
            (FieldElem::Quadratic(x), FieldElem::Quadratic(y)) => FieldElem::Quadratic(x * y),
        }
    }
}

impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(q) => FieldElem::Rational(-q),
            FieldElem::Quadratic(x) => FieldElem::Quadratic(QuadFieldElem::new(-&x.a, -&x.b, x.d)),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl From<Rational> for FieldElem {
    fn from(q: Rational) -> Self {
        FieldElem::Rational(q)
    }
}

impl From<QuadFieldElem> for FieldElem {
    fn from(x: QuadFieldElem) -> Self {
        FieldElem::Quadratic(x)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(q) => f.write_str(&format_rational(q)),
            FieldElem::Quadratic(x) => x.fmt(f),
        }
    }
}

/// Parses `p/q` (a rational) or `p/q+r/s*sqrt(d)` (a quadratic element).
///
/// The radicand is only checked to be a positive integer here; field
/// membership is checked by [`TotallyRealField::parse_elem`](super::TotallyRealField::parse_elem).
impl FromStr for FieldElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some(rest) = s.strip_suffix(')') else {
            return parse_rational(s).map(FieldElem::Rational);
        };
        let err = || Error::parse("field element", s);
        let (head, radicand) = rest.rsplit_once("*sqrt(").ok_or_else(err)?;
        let (a, b) = head.split_once('+').ok_or_else(err)?;
        let d: u64 = radicand.parse().map_err(|_| err())?;
        if d < 2 {
            return Err(err());
        }
        let a = parse_rational(a).map_err(|_| err())?;
        let b = parse_rational(b).map_err(|_| err())?;
        Ok(FieldElem::Quadratic(QuadFieldElem::new(a, b, d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, rational};

    fn q5(a: Rational, b: Rational) -> FieldElem {
        FieldElem::Quadratic(QuadFieldElem::new(a, b, 5))
    }

    #[test]
    fn golden_ratio_signs() {
        let phi = q5(rational(1, 2), rational(1, 2));
        assert_eq!(phi.sign_under(Sign::Positive), Some(Sign::Positive));
        assert_eq!(phi.sign_under(Sign::Negative), Some(Sign::Negative));
        let x = q5(int(1), int(1));
        assert_eq!(x.sign_under(Sign::Negative), Some(Sign::Negative));
        assert_eq!(FieldElem::zero().sign_under(Sign::Positive), None);
    }

    #[test]
    fn inverse_and_norm() {
        let phi = q5(rational(1, 2), rational(1, 2));
        assert_eq!(phi.norm(), int(-1));
        let inv = phi.inv().unwrap();
        assert_eq!(&phi * &inv, FieldElem::one());
        assert!(FieldElem::zero().inv().is_err());
    }

    #[test]
    fn squares_in_quadratic_fields() {
        let x = FieldElem::Quadratic(QuadFieldElem::new(int(3), int(2), 2));
        assert!(x.is_square().unwrap());
        assert!(!q5(int(0), int(1)).is_square().unwrap());
        // 5 is a square in Q(sqrt 5) but not in Q.
        assert!(q5(int(5), int(0)).is_square().unwrap());
        assert!(!FieldElem::from_i64(5).is_square().unwrap());
        assert!(FieldElem::Rational(rational(9, 4)).is_square().unwrap());
        assert!(FieldElem::zero().is_square().is_err());
    }

    #[test]
    fn mixed_equality_compares_values() {
        assert_eq!(q5(int(2), int(0)), FieldElem::from_i64(2));
        assert_ne!(q5(int(2), int(1)), FieldElem::from_i64(2));
        let sqrt2 = FieldElem::Quadratic(QuadFieldElem::new(int(0), int(1), 2));
        assert_ne!(sqrt2, q5(int(0), int(1)));
    }

    #[test]
    fn text_encoding() {
        let x = q5(rational(1, 2), rational(-1, 2));
        assert_eq!(x.to_string(), "1/2+-1/2*sqrt(5)");
        assert_eq!("1/2+-1/2*sqrt(5)".parse::<FieldElem>().unwrap(), x);
        assert_eq!(
            "-3/7".parse::<FieldElem>().unwrap(),
            FieldElem::Rational(rational(-3, 7))
        );
        for bad in [
            "1/2+1/2*sqrt(1)",
            "1/2*sqrt(5)",
            "1/2+1/2*sqrt(x)",
            "sqrt(5)",
            "1/2+",
        ] {
            assert!(bad.parse::<FieldElem>().is_err(), "{bad}");
        }
    }

    #[test]
    fn integrality() {
        assert!(q5(rational(1, 2), rational(1, 2)).is_integral());
        assert!(!q5(rational(1, 2), int(1)).is_integral());
        let half_sqrt3 =
            FieldElem::Quadratic(QuadFieldElem::new(rational(1, 2), rational(1, 2), 3));
        assert!(!half_sqrt3.is_integral());
    }
}
