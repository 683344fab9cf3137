use std::fmt;

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::exact_arith::{FieldElem, Sign, TotallyRealField};

/// `f(x) = a_0 x_0^2 + ... + a_n x_n^2` over a totally real field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalForm {
    field: TotallyRealField,
    coefficients: Vec<FieldElem>,
}

impl DiagonalForm {
    pub fn new(field: TotallyRealField, coefficients: Vec<FieldElem>) -> Result<Self> {
        if coefficients.len() < 3 {
            return Err(Error::InvalidArgument(format!(
                "diagonal form needs at least 3 coefficients, got {}",
                coefficients.len()
            )));
        }
        let coefficients = coefficients
            .into_iter()
            .map(|a| {
                if a.is_zero() {
                    return Err(Error::InvalidArgument("zero form coefficient".into()));
                }
                if !field.contains(&a) {
                    return Err(Error::FieldMismatch(format!("{a} does not lie in {field}")));
                }
                field.lift(a)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DiagonalForm {
            field,
            coefficients,
        })
    }

    /// Parses comma separated coefficients, e.g. `"1,-1,-1"`.
    pub fn parse(field: TotallyRealField, s: &str) -> Result<Self> {
        let coefficients = s
            .split(',')
            .map(|t| field.parse_elem(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        DiagonalForm::new(field, coefficients)
    }

    /// `<1, -1, ..., -1>` of dimension `n + 1`.
    pub fn standard_lorentzian(field: TotallyRealField, n: usize) -> Result<Self> {
        let mut coefficients = vec![field.from_i64(-1); n + 1];
        coefficients[0] = field.one();
        DiagonalForm::new(field, coefficients)
    }

    pub fn field(&self) -> &TotallyRealField {
        &self.field
    }

    pub fn coefficients(&self) -> &[FieldElem] {
        &self.coefficients
    }

    /// `n + 1`.
    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn gram(&self) -> Matrix {
        Matrix::diagonal(self.field, &self.coefficients).expect("coefficients lie in the field")
    }

    pub fn negated(&self) -> Self {
        DiagonalForm {
            field: self.field,
            coefficients: self.coefficients.iter().map(|a| -a).collect(),
        }
    }

    /// Polar form with `B(x, x) = f(x)`.
    pub fn polar(&self, x: &[FieldElem], y: &[FieldElem]) -> Result<FieldElem> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.coefficients.iter().zip(x.iter().zip(y)).fold(
            self.field.zero(),
            |acc, (a, (xi, yi))| {
                if xi.is_zero() || yi.is_zero() {
                    acc
                } else {
                    &acc + &(&(a * xi) * yi)
                }
            },
        ))
    }

    pub fn value(&self, x: &[FieldElem]) -> Result<FieldElem> {
        self.polar(x, x)
    }

    /// Lifts each entry of a vector into the form's field.
    pub fn vector(&self, v: Vec<FieldElem>) -> Result<Vec<FieldElem>> {
        self.check_len(&v)?;
        v.into_iter().map(|x| self.field.lift(x)).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<FieldElem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Signs of the coefficients at a real place.
    fn signs_at(&self, place: usize) -> Result<Vec<Sign>> {
        self.coefficients
            .iter()
            .map(|a| self.field.sign_at(a, place))
            .collect()
    }

    fn check_len(&self, v: &[FieldElem]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// Outcome of the admissibility test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    /// Whether `-f` rather than `f` has signature `(1, n)` at `Id`.
    pub sign_flipped: bool,
    /// Index of the coordinate that is positive at `Id` (after the flip).
    pub positive_index: Option<usize>,
}

/// Signature `(1, n)` at `Id` (possibly after replacing `f` by `-f`) and
/// definite at every other real place.
pub fn admissibility(f: &DiagonalForm) -> Admissibility {
    let field = f.field;
    let id_signs = f
        .signs_at(field.id_place())
        .expect("coefficients are nonzero");
    let positives: Vec<usize> = (0..f.dim())
        .filter(|&i| id_signs[i].is_positive())
        .collect();
    let negatives: Vec<usize> = (0..f.dim())
        .filter(|&i| !id_signs[i].is_positive())
        .collect();
    let (sign_flipped, positive_index) = match (positives.as_slice(), negatives.as_slice()) {
        ([p], _) => (false, Some(*p)),
        (_, [q]) => (true, Some(*q)),
        _ => (false, None),
    };
    let definite_elsewhere = field.non_id_places().all(|place| {
        let s = f.signs_at(place).expect("coefficients are nonzero");
        s.iter().all(|&x| x == s[0])
    });
    Admissibility {
        admissible: positive_index.is_some() && definite_elsewhere,
        sign_flipped,
        positive_index: if definite_elsewhere {
            positive_index
        } else {
            None
        },
    }
}

pub fn admissibility_check(f: &DiagonalForm) -> bool {
    admissibility(f).admissible
}

/// Matrix of `x -> x - 2 B(x, v) / f(v) * v`, an involution of determinant -1.
pub fn reflect(v: &[FieldElem], f: &DiagonalForm) -> Result<Matrix> {
    let scale = reflection_scale(v, f)?;
    let field = *f.field();
    let n = f.dim();
    // column j is the image of e_j: e_j - 2 a_j v_j / f(v) * v
    let mut rows = vec![vec![field.zero(); n]; n];
    for (j, (a, vj)) in f.coefficients.iter().zip(v).enumerate() {
        let c = &(&scale * a) * vj;
        for i in 0..n {
            let mut x = &c * &v[i];
            if i == j {
                x = &x + &field.one();
            }
            rows[i][j] = x;
        }
    }
    Matrix::from_rows(field, rows)
}

/// `τ_w h`, computed as `h - (2/f(w)) w (w^T F h)`.
pub(super) fn reflect_left(w: &[FieldElem], f: &DiagonalForm, h: &mut Matrix) -> Result<()> {
    let n = f.dim();
    let c = reflection_scale(w, f)?;
    let weighted: Vec<FieldElem> = f.coefficients.iter().zip(w).map(|(a, x)| a * x).collect();
    let u: Vec<FieldElem> = (0..n)
        .map(|j| dot(&weighted, (0..n).map(|i| h.get(i, j)), f.field))
        .collect();
    for (i, wi) in w.iter().enumerate() {
        if wi.is_zero() {
            continue;
        }
        let cw = &c * wi;
        for (j, uj) in u.iter().enumerate() {
            if !uj.is_zero() {
                h.set(i, j, h.get(i, j) + &(&cw * uj));
            }
        }
    }
    Ok(())
}

/// `h τ_w`, computed as `h - (2/f(w)) (h w) (w^T F)`.
pub(super) fn reflect_right(w: &[FieldElem], f: &DiagonalForm, h: &mut Matrix) -> Result<()> {
    let n = f.dim();
    let c = reflection_scale(w, f)?;
    let weighted: Vec<FieldElem> = f.coefficients.iter().zip(w).map(|(a, x)| a * x).collect();
    let hw: Vec<FieldElem> = (0..n)
        .map(|i| dot(w, (0..n).map(|k| h.get(i, k)), f.field))
        .collect();
    for (i, x) in hw.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let cx = &c * x;
        for (j, wj) in weighted.iter().enumerate() {
            if !wj.is_zero() {
                h.set(i, j, h.get(i, j) + &(&cx * wj));
            }
        }
    }
    Ok(())
}

/// `-2 / f(w)`.
fn reflection_scale(w: &[FieldElem], f: &DiagonalForm) -> Result<FieldElem> {
    let q = f.value(w)?;
    if q.is_zero() {
        return Err(Error::IsotropicVector);
    }
    Ok(&f.field.from_i64(-2) / &q)
}

fn dot<'a>(
    x: &[FieldElem],
    y: impl Iterator<Item = &'a FieldElem>,
    field: TotallyRealField,
) -> FieldElem {
    x.iter().zip(y).fold(field.zero(), |acc, (a, b)| {
        if a.is_zero() || b.is_zero() {
            acc
        } else {
            &acc + &(a * b)
        }
    })
}

/// `g^T F g = F`, evaluated entrywise.
pub(super) fn preserves(f: &DiagonalForm, g: &Matrix) -> bool {
    let n = f.dim();
    let columns: Vec<Vec<FieldElem>> = (0..n).map(|j| g.column(j)).collect();
    for i in 0..n {
        for j in i..n {
            let b = f.polar(&columns[i], &columns[j]).expect("dimensions agree");
            let expected = if i == j {
                f.coefficients[i].clone()
            } else {
                f.field.zero()
            };
            if b != expected {
                return false;
            }
        }
    }
    true
}
