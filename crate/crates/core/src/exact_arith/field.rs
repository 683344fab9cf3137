use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::elem::{FieldElem, QuadFieldElem, Sign};
use super::rational::{is_squarefree, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    /// Q(sqrt d), d squarefree and at least 2.
    RealQuadratic(u64),
}

/// A real embedding, identified by where it sends `sqrt(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Embedding {
    pub index: usize,
    pub sqrt_sign: Sign,
}

/// Q or a real quadratic field, with a distinguished real place `Id`.
///
/// Places are ordered: place 0 sends `sqrt(d)` to the positive root, place 1
/// to the negative root. `Id` defaults to place 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TotallyRealField {
    kind: FieldKind,
    id_place: usize,
}

impl TotallyRealField {
    pub fn rationals() -> Self {
        TotallyRealField {
            kind: FieldKind::Rationals,
            id_place: 0,
        }
    }

    /// Q(sqrt d). Non-squarefree `d` is rejected rather than reduced.
    pub fn real_quadratic(d: u64) -> Result<Self> {
        if d < 2 || !is_squarefree(d) {
            return Err(Error::NotSquarefree(d.to_string()));
        }
        Ok(TotallyRealField {
            kind: FieldKind::RealQuadratic(d),
            id_place: 0,
        })
    }

    pub fn with_id_place(self, id_place: usize) -> Result<Self> {
        self.check_place(id_place)?;
        Ok(TotallyRealField { id_place, ..self })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn id_place(&self) -> usize {
        self.id_place
    }

    pub fn radicand(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Rationals => None,
            FieldKind::RealQuadratic(d) => Some(d),
        }
    }

    pub fn degree(&self) -> usize {
        match self.kind {
            FieldKind::Rationals => 1,
            FieldKind::RealQuadratic(_) => 2,
        }
    }

    pub fn places(&self) -> Vec<Embedding> {
        [Sign::Positive, Sign::Negative]
            .into_iter()
            .take(self.degree())
            .enumerate()
            .map(|(index, sqrt_sign)| Embedding { index, sqrt_sign })
            .collect()
    }

    /// Real places other than `Id`.
    pub fn non_id_places(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.degree()).filter(move |&p| p != self.id_place)
    }

    fn check_place(&self, place: usize) -> Result<()> {
        if place < self.degree() {
            Ok(())
        } else {
            Err(Error::InvalidPlace {
                place,
                degree: self.degree(),
            })
        }
    }

    pub fn contains(&self, x: &FieldElem) -> bool {
        match (x, self.kind) {
            (FieldElem::Rational(_), _) => true,
            (FieldElem::Quadratic(q), FieldKind::RealQuadratic(d)) => q.d == d,
            (FieldElem::Quadratic(q), FieldKind::Rationals) => q.b.is_zero(),
        }
    }

    /// Brings `x` into this field's representation; rationals get the field tag.
    pub fn lift(&self, x: FieldElem) -> Result<FieldElem> {
        x.lift(self.radicand())
    }

    pub fn elem(&self, a: Rational, b: Rational) -> Result<FieldElem> {
        match self.kind {
            FieldKind::Rationals if b.is_zero() => Ok(FieldElem::Rational(a)),
            FieldKind::Rationals => {
                Err(Error::FieldMismatch("Q has no irrational part".to_string()))
            }
            FieldKind::RealQuadratic(d) => Ok(FieldElem::Quadratic(QuadFieldElem::new(a, b, d))),
        }
    }

    pub fn from_rational(&self, q: Rational) -> FieldElem {
        self.lift(FieldElem::Rational(q))
            .expect("rationals lie in every field")
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    /// Parses the text encoding and lifts into this field.
    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        let x: FieldElem = s.parse()?;
        if !self.contains(&x) {
            return Err(Error::FieldMismatch(format!("{s} does not lie in {self}")));
        }
        self.lift(x)
    }

    /// Exact sign of `x` at a real place.
    pub fn sign_at(&self, x: &FieldElem, place: usize) -> Result<Sign> {
        self.check_place(place)?;
        if !self.contains(x) {
            return Err(Error::FieldMismatch(format!("{x} does not lie in {self}")));
        }
        let embedding = self.places()[place];
        x.sign_under(embedding.sqrt_sign).ok_or(Error::SignOfZero)
    }

    pub fn sign_vector(&self, x: &FieldElem) -> Result<Vec<Sign>> {
        (0..self.degree()).map(|p| self.sign_at(x, p)).collect()
    }

    /// Whether `x` is a square of some element of this field.
    pub fn is_square(&self, x: &FieldElem) -> Result<bool> {
        if !self.contains(x) {
            return Err(Error::FieldMismatch(format!("{x} does not lie in {self}")));
        }
        self.lift(x.clone())?.is_square()
    }

    /// Membership in k∞*: positive at every real place except `Id`.
    pub fn in_k_infinity_star(&self, x: &FieldElem) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroArgument("k∞* membership"));
        }
        for place in self.non_id_places() {
            if !self.sign_at(x, place)?.is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for TotallyRealField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => f.write_str("Q"),
            FieldKind::RealQuadratic(d) => write!(f, "Q(sqrt {d})"),
        }
    }
}

/// Accepts `Q`, `Q(sqrt D)`, `Q(sqrt(D))`, `Q(sqrtD)` and `Q(√D)`.
impl FromStr for TotallyRealField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::parse("field", s);
        let t = s.trim();
        if t == "Q" {
            return Ok(TotallyRealField::rationals());
        }
        let inner = t
            .strip_prefix("Q(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?
            .trim();
        let radicand = inner
            .strip_prefix("sqrt")
            .or_else(|| inner.strip_prefix('√'))
            .ok_or_else(err)?
            .trim();
        let radicand = radicand
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(radicand)
            .trim();
        let d: u64 = radicand.parse().map_err(|_| err())?;
        TotallyRealField::real_quadratic(d)
    }
}
