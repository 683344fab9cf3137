//! Fundamental units of real quadratic orders via continued fractions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::forms::check_radicand;
use crate::error::{Error, Result};
use crate::exact_arith::{QuadFieldElem, Rational, Sign, TotallyRealField};

/// Continued-fraction expansion of `(P + sqrt(N)) / Q` with `Q | N - P^2`.
struct QuadraticExpansion {
    p: BigInt,
    q: BigInt,
    n: BigInt,
    root: BigInt,
}

impl Iterator for QuadraticExpansion {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        // floor((P + sqrt N)/Q) = floor((P + floor(sqrt N))/Q) for Q > 0;
        // for Q < 0 the irrational part rounds the other way.
        let numerator = if self.q.is_positive() {
            &self.p + &self.root
        } else {
            &self.p + &self.root + 1
        };
        let a = numerator.div_floor(&self.q);
        let p_next = &a * &self.q - &self.p;
        let q_next = (&self.n - &p_next * &p_next) / &self.q;
        self.p = p_next;
        self.q = q_next;
        Some(a)
    }
}

/// The fundamental unit `ε > 1` of the ring of integers of Q(sqrt d).
///
/// Expands `ω = sqrt(d)` (d = 2, 3 mod 4) or `ω = (1 + sqrt(d))/2`
/// (d = 1 mod 4) and returns `p - q ω'` for the first convergent `p/q` whose
/// norm is `±1`, where `ω'` is the conjugate of `ω`.
pub fn fundamental_unit(d: u64) -> Result<QuadFieldElem> {
    check_radicand(d)?;
    let n = BigInt::from(d);
    let half_integral = d % 4 == 1;
    let (p0, q0) = if half_integral { (1, 2) } else { (0, 1) };
    let expansion = QuadraticExpansion {
        p: BigInt::from(p0),
        q: BigInt::from(q0),
        root: n.sqrt(),
        n: n.clone(),
    };

    let (mut p_prev, mut p) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q) = (BigInt::one(), BigInt::zero());
    // The period of sqrt(d) is O(sqrt(d) log d); this is a generous cap.
    let cap = 8 * (d as usize + 16);
    for a in expansion.take(cap) {
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);

        let norm = if half_integral {
            // (p - q ω')(p - q ω) = p^2 - pq + q^2 (1 - d)/4
            &p * &p - &p * &q + &q * &q * ((BigInt::one() - &n) / 4)
        } else {
            &p * &p - &n * &q * &q
        };
        if norm.abs().is_one() {
            let unit = if half_integral {
                QuadFieldElem {
                    a: Rational::new(BigInt::from(2) * &p - &q, BigInt::from(2)),
                    b: Rational::new(q.clone(), BigInt::from(2)),
                    d,
                }
            } else {
                QuadFieldElem {
                    a: Rational::from_integer(p.clone()),
                    b: Rational::from_integer(q.clone()),
                    d,
                }
            };
            debug_assert_eq!(unit.norm(), Rational::from_integer(norm));
            return Ok(unit);
        }
    }
    Err(Error::Internal(format!(
        "no unit found in {cap} partial quotients of the expansion for d = {d}"
    )))
}

/// Units of a field of degree at most 2 together with the unit sign index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroupData {
    /// Absent for Q.
    pub fundamental_unit: Option<QuadFieldElem>,
    /// Norm of the fundamental unit, absent for Q.
    pub unit_norm: Option<i8>,
    /// `[U : U∞]`.
    pub unit_index_infinity: u64,
}

impl UnitGroupData {
    pub fn of(field: &TotallyRealField) -> Result<Self> {
        let fundamental_unit = match field.radicand() {
            None => None,
            Some(d) => Some(fundamental_unit(d)?),
        };
        let unit_norm = fundamental_unit
            .as_ref()
            .map(|e| if e.norm().is_positive() { 1 } else { -1 });
        let mut generators = vec![field.from_i64(-1)];
        if let Some(e) = &fundamental_unit {
            generators.push(e.clone().into());
        }
        let sign_vectors = generators
            .iter()
            .map(|u| field.sign_vector(u))
            .collect::<Result<Vec<_>>>()?;
        let unit_index_infinity = unit_index_from_signs(&sign_vectors, field.id_place())?;
        Ok(UnitGroupData {
            fundamental_unit,
            unit_norm,
            unit_index_infinity,
        })
    }
}

/// `[U : U∞]` from the sign vectors (at all real places) of a generating
/// set of the unit group: `2^r` where `r` is the rank over F_2 of the sign
/// vectors restricted to the places other than `Id`.
pub fn unit_index_from_signs(sign_vectors: &[Vec<Sign>], id_place: usize) -> Result<u64> {
    let Some(degree) = sign_vectors.first().map(Vec::len) else {
        return Ok(1);
    };
    if id_place >= degree {
        return Err(Error::InvalidPlace {
            place: id_place,
            degree,
        });
    }
    if sign_vectors.iter().any(|v| v.len() != degree) {
        return Err(Error::InvalidArgument(
            "sign vectors of different lengths".to_string(),
        ));
    }
    if degree > 64 {
        return Err(Error::UnsupportedDegree(degree));
    }
    let mut rows: Vec<u64> = sign_vectors
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|&(place, s)| place != id_place && *s == Sign::Negative)
                .fold(0u64, |acc, (place, _)| acc | (1 << place))
        })
        .collect();
    Ok(1u64 << gf2_rank(&mut rows))
}

fn gf2_rank(rows: &mut [u64]) -> u32 {
    let mut rank = 0usize;
    for bit in 0..64 {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && *row >> bit & 1 == 1 {
                *row ^= pivot_row;
            }
        }
        rank += 1;
    }
    rank as u32
}
