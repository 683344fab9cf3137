use rand::Rng;

use super::form::DiagonalForm;
use super::isometry::Isometry;
use super::matrix::Vector;
use crate::error::{Error, Result};
use crate::exact_arith::{rational::int, FieldKind};

/// Random elements of `SO(f)(k)` built as products of an even number of
/// reflections in anisotropic vectors with small integral entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsometrySampler {
    /// Rational parts are drawn from `[-entry_bound, entry_bound]`.
    pub entry_bound: i64,
    /// Coefficients of `sqrt(d)` are drawn from `[-irrational_bound, irrational_bound]`;
    /// ignored over Q.
    pub irrational_bound: i64,
    pub min_reflections: usize,
    pub max_reflections: usize,
}

impl Default for IsometrySampler {
    fn default() -> Self {
        IsometrySampler {
            entry_bound: 5,
            irrational_bound: 1,
            min_reflections: 2,
            max_reflections: 8,
        }
    }
}

impl IsometrySampler {
    pub fn vector<R: Rng + ?Sized>(&self, form: &DiagonalForm, rng: &mut R) -> Vector {
        let field = *form.field();
        loop {
            let v: Vector = (0..form.dim())
                .map(|_| {
                    let a = int(rng.gen_range(-self.entry_bound..=self.entry_bound));
                    let b = match field.kind() {
                        FieldKind::Rationals => int(0),
                        FieldKind::RealQuadratic(_) => {
                            int(rng.gen_range(-self.irrational_bound..=self.irrational_bound))
                        }
                    };
                    field.elem(a, b).expect("integral entries lie in the field")
                })
                .collect();
            if !form.value(&v).expect("dimension matches").is_zero() {
                return v;
            }
        }
    }

    /// Reflection vectors of a random special isometry.
    pub fn reflection_vectors<R: Rng + ?Sized>(
        &self,
        form: &DiagonalForm,
        rng: &mut R,
    ) -> Result<Vec<Vector>> {
        let (lo, hi) = (self.min_reflections / 2, self.max_reflections / 2);
        if lo == 0 || lo > hi {
            return Err(Error::InvalidArgument(format!(
                "reflection count range {}..={} has no positive even value",
                self.min_reflections, self.max_reflections
            )));
        }
        let count = 2 * rng.gen_range(lo..=hi);
        Ok((0..count).map(|_| self.vector(form, rng)).collect())
    }

    pub fn isometry<R: Rng + ?Sized>(&self, form: &DiagonalForm, rng: &mut R) -> Result<Isometry> {
        let vectors = self.reflection_vectors(form, rng)?;
        Isometry::from_reflections(form.clone(), &vectors)
    }
}
