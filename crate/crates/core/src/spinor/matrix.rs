use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::{FieldElem, TotallyRealField};

/// Column vector of field elements.
pub type Vector = Vec<FieldElem>;

/// Square matrix over a totally real field, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: TotallyRealField,
    dim: usize,
    entries: Vec<FieldElem>,
}

impl Matrix {
    pub fn identity(field: TotallyRealField, dim: usize) -> Self {
        Matrix::diagonal(field, &vec![field.one(); dim]).expect("ones lie in every field")
    }

    pub fn diagonal(field: TotallyRealField, diag: &[FieldElem]) -> Result<Self> {
        let dim = diag.len();
        let mut entries = vec![field.zero(); dim * dim];
        for (i, x) in diag.iter().enumerate() {
            entries[i * dim + i] = field.lift(x.clone())?;
        }
        Ok(Matrix {
            field,
            dim,
            entries,
        })
    }

    /// Builds a matrix from rows, lifting every entry into `field`.
    pub fn from_rows(field: TotallyRealField, rows: Vec<Vec<FieldElem>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidArgument("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for x in row {
                if !field.contains(&x) {
                    return Err(Error::FieldMismatch(format!("{x} does not lie in {field}")));
                }
                entries.push(field.lift(x)?);
            }
        }
        Ok(Matrix {
            field,
            dim,
            entries,
        })
    }

    pub fn field(&self) -> &TotallyRealField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.entries[i * self.dim + j]
    }

    pub(super) fn set(&mut self, i: usize, j: usize, x: FieldElem) {
        self.entries[i * self.dim + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<FieldElem>> {
        self.entries
            .chunks(self.dim)
            .map(<[FieldElem]>::to_vec)
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &FieldElem> {
        self.entries.iter()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.dim).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(i, j, self.get(j, i).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.field.zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            field: self.field,
            dim: n,
            entries,
        })
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Result<Vector> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| {
                (0..self.dim).fold(self.field.zero(), |acc, k| &acc + &(self.get(i, k) * &v[k]))
            })
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let x = self.get(i, j);
                if i == j {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
        })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> FieldElem {
        let n = self.dim;
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return self.field.zero();
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = -det;
            }
            let p = m.get(col, col).clone();
            det = &det * &p;
            let p_inv = p.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = m.get(r, col) * &p_inv;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let x = m.get(r, c) - &(&factor * m.get(col, c));
                    m.set(r, c, x);
                }
            }
        }
        det
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.dim;
        let mut m = self.clone();
        let mut inv = Matrix::identity(self.field, n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m.get(r, col).is_zero())
                .ok_or_else(|| Error::InvalidArgument("singular matrix".into()))?;
            m.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p_inv = m.get(col, col).inv()?;
            for c in 0..n {
                m.set(col, c, m.get(col, c) * &p_inv);
                inv.set(col, c, inv.get(col, c) * &p_inv);
            }
            for r in 0..n {
                if r == col || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in 0..n {
                    m.set(r, c, m.get(r, c) - &(&factor * m.get(col, c)));
                    inv.set(r, c, inv.get(r, c) - &(&factor * inv.get(col, c)));
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.dim {
            self.entries.swap(a * self.dim + c, b * self.dim + c);
        }
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        if self.field.kind() != other.field.kind() {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
