//! Indefinite binary quadratic forms, their reduction step and cycles.
//!
//! The proper equivalence classes of primitive forms of a positive
//! discriminant `D` are in bijection with the cycles of reduced forms, and
//! for a fundamental discriminant their number is the narrow class number.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact_arith::rational::is_squarefree;

/// `a x^2 + b xy + c y^2` with positive nonsquare discriminant, primitive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryQuadraticForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl BinaryQuadraticForm {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        let f = BinaryQuadraticForm {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        };
        let disc = f.discriminant();
        if !disc.is_positive() || disc.sqrt().pow(2) == disc {
            return Err(Error::InvalidArgument(format!(
                "{f} has discriminant {disc}, expected a positive nonsquare"
            )));
        }
        if !f.a.gcd(&f.b).gcd(&f.c).is_one() {
            return Err(Error::InvalidArgument(format!("{f} is not primitive")));
        }
        Ok(f)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// `0 < b < sqrt(D)` and `sqrt(D) - b < 2|a| < sqrt(D) + b`, decided by squaring.
    pub fn is_reduced(&self) -> bool {
        let disc = self.discriminant();
        if !self.b.is_positive() || &self.b * &self.b >= disc {
            return false;
        }
        let two_a = BigInt::from(2) * self.a.abs();
        // sqrt(D) < 2|a| + b
        let upper = &two_a + &self.b;
        if &upper * &upper <= disc {
            return false;
        }
        // 2|a| - b < sqrt(D)
        let lower = &two_a - &self.b;
        !lower.is_positive() || &lower * &lower < disc
    }

    /// The right-neighbour step `(a, b, c) -> (c, b', (b'^2 - D) / 4c)`.
    ///
    /// `b'` is the representative of `-b mod 2|c|` lying in
    /// `(sqrt(D) - 2|c|, sqrt(D))` when `|c| < sqrt(D)` and in `(-|c|, |c|]`
    /// otherwise. On reduced forms this walks the cycle; on other forms it
    /// reaches a reduced one after finitely many steps.
    pub fn rho(&self) -> BinaryQuadraticForm {
        let disc = self.discriminant();
        let root = disc.sqrt();
        let c_abs = self.c.abs();
        let modulus = BigInt::from(2) * &c_abs;
        let residue = (-&self.b).mod_floor(&modulus);
        let b_next = if &c_abs * &c_abs < disc {
            // largest value <= floor(sqrt D) congruent to -b
            let top = &root - (&root - &residue).mod_floor(&modulus);
            debug_assert!(top > &root - &modulus);
            top
        } else if residue > c_abs {
            residue - &modulus
        } else {
            residue
        };
        let c_next = (&b_next * &b_next - &disc) / (BigInt::from(4) * &self.c);
        BinaryQuadraticForm {
            a: self.c.clone(),
            b: b_next,
            c: c_next,
        }
    }

    /// Applies [`rho`](Self::rho) until the form is reduced.
    pub fn reduce(&self) -> BinaryQuadraticForm {
        let mut f = self.clone();
        while !f.is_reduced() {
            f = f.rho();
        }
        f
    }
}

impl fmt::Display for BinaryQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A closed orbit of reduced forms under the reduction step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormCycle {
    forms: Vec<BinaryQuadraticForm>,
}

impl FormCycle {
    /// The cycle through a reduced form.
    pub fn through(start: &BinaryQuadraticForm) -> Result<Self> {
        if !start.is_reduced() {
            return Err(Error::InvalidArgument(format!("{start} is not reduced")));
        }
        let mut forms = vec![start.clone()];
        let mut f = start.rho();
        while &f != start {
            if !f.is_reduced() {
                return Err(Error::Internal(format!(
                    "reduction step left the reduced set at {f}"
                )));
            }
            forms.push(f.clone());
            f = f.rho();
        }
        Ok(FormCycle { forms })
    }

    pub fn forms(&self) -> &[BinaryQuadraticForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn contains(&self, f: &BinaryQuadraticForm) -> bool {
        self.forms.contains(f)
    }
}

/// `d` if `d = 1 mod 4`, else `4d`.
pub fn fundamental_discriminant(d: u64) -> Result<u64> {
    check_radicand(d)?;
    Ok(if d % 4 == 1 { d } else { 4 * d })
}

pub(crate) fn check_radicand(d: u64) -> Result<()> {
    if d < 2 || !is_squarefree(d) {
        return Err(Error::NotSquarefree(d.to_string()));
    }
    Ok(())
}

/// All reduced primitive forms of discriminant `disc`, sorted.
pub fn reduced_forms(disc: u64) -> Result<Vec<BinaryQuadraticForm>> {
    let disc_big = BigInt::from(disc);
    if disc % 4 > 1 || disc_big.sqrt().pow(2) == disc_big {
        return Err(Error::InvalidArgument(format!(
            "{disc} is not a nonsquare discriminant"
        )));
    }
    let root = disc.sqrt();
    let mut out = BTreeSet::new();
    // b = D mod 2, 0 < b < sqrt(D)
    let mut b = if disc % 2 == 0 { 2 } else { 1 };
    while b <= root {
        let m = (disc - b * b) / 4;
        for a_abs in divisors(m) {
            let c_abs = m / a_abs;
            for sign in [1i64, -1] {
                let a = BigInt::from(a_abs) * sign;
                let c = -BigInt::from(c_abs) * sign;
                if let Ok(f) = BinaryQuadraticForm::new(a, b, c) {
                    if f.is_reduced() {
                        out.insert(f);
                    }
                }
            }
        }
        b += 2;
    }
    Ok(out.into_iter().collect())
}

fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= m {
        if m % i == 0 {
            small.push(i);
            if i * i != m {
                large.push(m / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Partition of the reduced forms of `disc` into cycles, ordered by their least form.
pub fn form_cycles(disc: u64) -> Result<Vec<FormCycle>> {
    let forms = reduced_forms(disc)?;
    let mut remaining: BTreeSet<BinaryQuadraticForm> = forms.into_iter().collect();
    let mut cycles = Vec::new();
    while let Some(start) = remaining.pop_first() {
        let cycle = FormCycle::through(&start)?;
        for f in &cycle.forms[1..] {
            if !remaining.remove(f) {
                return Err(Error::Internal(format!(
                    "{f} appears in two cycles or is not among the reduced forms"
                )));
            }
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Narrow class number `h+` of Q(sqrt d): the number of cycles of reduced
/// primitive forms of the fundamental discriminant.
pub fn narrow_class_number(d: u64) -> Result<u64> {
    let disc = fundamental_discriminant(d)?;
    Ok(form_cycles(disc)?.len() as u64)
}
