use super::form::{admissibility, preserves, reflect_left, reflect_right, DiagonalForm};
use super::matrix::{Matrix, Vector};
use crate::error::{Error, Result};
use crate::exact_arith::{FieldElem, Sign, SquareClass};

/// An element of `SO(f)(k)`: `g^T F g = F` and `det g = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isometry {
    form: DiagonalForm,
    matrix: Matrix,
}

impl Isometry {
    pub fn new(form: DiagonalForm, matrix: Matrix) -> Result<Self> {
        check_orthogonal(&form, &matrix)?;
        if !matrix.det().is_one() {
            return Err(Error::NotSpecial);
        }
        Ok(Isometry { form, matrix })
    }

    pub fn identity(form: DiagonalForm) -> Self {
        let matrix = Matrix::identity(*form.field(), form.dim());
        Isometry { form, matrix }
    }

    /// Product of the reflections in `vectors`, composed left to right.
    pub fn from_reflections(form: DiagonalForm, vectors: &[Vector]) -> Result<Self> {
        if vectors.len() % 2 != 0 {
            return Err(Error::NotSpecial);
        }
        let matrix = compose_reflections(&form, vectors)?;
        debug_assert!(preserves(&form, &matrix));
        Ok(Isometry { form, matrix })
    }

    pub fn form(&self) -> &DiagonalForm {
        &self.form
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn compose(&self, other: &Isometry) -> Result<Isometry> {
        if self.form != other.form {
            return Err(Error::FieldMismatch(format!(
                "isometries of {} and {}",
                self.form, other.form
            )));
        }
        Ok(Isometry {
            form: self.form.clone(),
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn inverse(&self) -> Isometry {
        // g^{-1} = F^{-1} g^T F, entrywise a_i^{-1} g_ji a_j
        let a = self.form.coefficients();
        let field = *self.form.field();
        let n = self.form.dim();
        let rows = (0..n)
            .map(|i| {
                let a_inv = a[i].inv().expect("coefficients are nonzero");
                (0..n)
                    .map(|j| &(&a_inv * self.matrix.get(j, i)) * &a[j])
                    .collect()
            })
            .collect();
        Isometry {
            form: self.form.clone(),
            matrix: Matrix::from_rows(field, rows).expect("entries lie in the field"),
        }
    }
}

fn check_orthogonal(form: &DiagonalForm, matrix: &Matrix) -> Result<()> {
    if matrix.dim() != form.dim() {
        return Err(Error::DimensionMismatch {
            expected: form.dim(),
            got: matrix.dim(),
        });
    }
    if matrix.field().kind() != form.field().kind() {
        return Err(Error::FieldMismatch(format!(
            "matrix over {} for a form over {}",
            matrix.field(),
            form.field()
        )));
    }
    if !preserves(form, matrix) {
        return Err(Error::NotIsometry);
    }
    Ok(())
}

/// Product `τ_{v_1} τ_{v_2} ... τ_{v_m}` of reflections.
pub fn compose_reflections(form: &DiagonalForm, vectors: &[Vector]) -> Result<Matrix> {
    let mut m = Matrix::identity(*form.field(), form.dim());
    for v in vectors {
        form.vector(v.clone())?;
        reflect_right(v, form, &mut m)?;
    }
    Ok(m)
}

/// Vectors `v_1, ..., v_m` with `g = τ_{v_1} ... τ_{v_m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionDecomposition {
    pub vectors: Vec<Vector>,
    /// `f(v_i)`, all nonzero.
    pub values: Vec<FieldElem>,
}

impl ReflectionDecomposition {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn recompose(&self, form: &DiagonalForm) -> Result<Matrix> {
        compose_reflections(form, &self.vectors)
    }

    /// Class of `∏ f(v_i)`.
    pub fn spinor_class(&self, form: &DiagonalForm) -> SquareClass {
        let field = *form.field();
        let product = self.values.iter().fold(field.one(), |acc, x| &acc * x);
        SquareClass::new(field, product).expect("reflection values are nonzero")
    }
}

/// Cartan–Dieudonné decomposition with pivots `e_0, e_1, ...`.
pub fn cartan_dieudonne_decompose(g: &Isometry) -> ReflectionDecomposition {
    let order: Vec<usize> = (0..g.form.dim()).collect();
    decompose_unchecked(&g.form, &g.matrix, &order).expect("g is an isometry")
}

/// Decomposition with the basis vectors visited in `order`.
pub fn cartan_dieudonne_decompose_with_order(
    g: &Isometry,
    order: &[usize],
) -> Result<ReflectionDecomposition> {
    decompose_unchecked(&g.form, &g.matrix, order)
}

/// Decomposes any element of `O(f)(k)`.
///
/// At each pivot `x = e_i` the residual `h` already fixes the earlier
/// pivots. With `y = h x`: if `f(y - x) != 0` the reflection in `y - x`
/// sends `y` to `x`; otherwise `f(x + y) = 4 f(x) != 0` and `τ_x τ_{x+y}`
/// sends `y` to `x`. Both fix the earlier pivots since `B(e_j, x) = B(e_j, y) = 0`.
pub fn decompose_orthogonal(
    form: &DiagonalForm,
    matrix: &Matrix,
    order: &[usize],
) -> Result<ReflectionDecomposition> {
    check_orthogonal(form, matrix)?;
    decompose_unchecked(form, matrix, order)
}

fn decompose_unchecked(
    form: &DiagonalForm,
    matrix: &Matrix,
    order: &[usize],
) -> Result<ReflectionDecomposition> {
    let dim = form.dim();
    let mut seen = vec![false; dim];
    if order.len() != dim
        || order
            .iter()
            .any(|&i| i >= dim || std::mem::replace(&mut seen[i], true))
    {
        return Err(Error::InvalidArgument(format!(
            "pivot order {order:?} is not a permutation of 0..{dim}"
        )));
    }

    let mut h = matrix.clone();
    let mut vectors = Vec::new();
    for &i in order {
        let x = form.basis_vector(i);
        let y = h.column(i);
        if y == x {
            continue;
        }
        let diff: Vector = y.iter().zip(&x).map(|(a, b)| a - b).collect();
        let step = if form.value(&diff)?.is_zero() {
            let sum: Vector = y.iter().zip(&x).map(|(a, b)| a + b).collect();
            vec![sum, x.clone()]
        } else {
            vec![diff]
        };
        for w in step {
            reflect_left(&w, form, &mut h)?;
            vectors.push(w);
        }
        if h.column(i) != x {
            return Err(Error::Internal(format!(
                "pivot {i} not fixed after its step"
            )));
        }
    }
    if !h.is_identity() {
        return Err(Error::Internal(
            "residual isometry is not the identity".into(),
        ));
    }
    let values = vectors
        .iter()
        .map(|v| form.value(v))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReflectionDecomposition { vectors, values })
}

/// Spinor norm `δ(g)` in `k*/(k*)^2`.
pub fn spinor_norm(g: &Isometry) -> SquareClass {
    cartan_dieudonne_decompose(g).spinor_class(&g.form)
}

/// Spinor norm of an element of `O(f)(k)` that need not be special.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlaggedSpinorNorm {
    pub class: SquareClass,
    /// `det g = 1`; when false the class is outside the domain of `δ` on `SO(f)`.
    pub special: bool,
    pub decomposition_length: usize,
}

pub fn orthogonal_spinor_norm(form: &DiagonalForm, matrix: &Matrix) -> Result<FlaggedSpinorNorm> {
    let order: Vec<usize> = (0..form.dim()).collect();
    let decomposition = decompose_orthogonal(form, matrix, &order)?;
    Ok(FlaggedSpinorNorm {
        class: decomposition.spinor_class(form),
        special: decomposition.len() % 2 == 0,
        decomposition_length: decomposition.len(),
    })
}

/// Whether `g` preserves the component of the positive cone at `Id`
/// containing the positive coordinate vector `x`: sign at `Id` of `B(gx, x)`.
pub fn so0_membership(g: &Isometry) -> Result<bool> {
    let adm = admissibility(&g.form);
    let (true, Some(p)) = (adm.admissible, adm.positive_index) else {
        return Err(Error::NotAdmissible);
    };
    // B'(g e_p, e_p) = ±a_p g_pp with ±a_p > 0 at Id, so only g_pp matters.
    let field = g.form.field();
    let entry = g.matrix.get(p, p);
    if entry.is_zero() {
        return Err(Error::Internal(
            "timelike vector mapped orthogonal to itself".into(),
        ));
    }
    Ok(field.sign_at(entry, field.id_place())? == Sign::Positive)
}
