use std::fmt;
use std::sync::Arc;

use super::{invert_dense, BasedSpace, TensorOp};
use crate::error::{Error, Result};
use crate::scalars::{param, Assignment, Monomial, Rational, Scalar};

/// Linear self-map of a based space; `matrix[k][i]` is the coefficient of
/// `e_k` in the image of `e_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    space: Arc<BasedSpace>,
    matrix: Vec<Vec<Scalar>>,
}

impl LinearMap {
    pub fn new(space: Arc<BasedSpace>, matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = space.dim();
        if matrix.len() != n {
            return Err(Error::DimMismatch(matrix.len(), n));
        }
        if let Some(r) = matrix.iter().find(|r| r.len() != n) {
            return Err(Error::DimMismatch(r.len(), n));
        }
        Ok(Self { space, matrix })
    }

    /// Matrix from rows of rationals.
    pub fn from_rationals(space: Arc<BasedSpace>, rows: &[Vec<Rational>]) -> Result<Self> {
        let matrix = rows
            .iter()
            .map(|r| r.iter().cloned().map(Scalar::from_rational).collect())
            .collect();
        Self::new(space, matrix)
    }

    pub fn identity(space: Arc<BasedSpace>) -> Self {
        let n = space.dim();
        let diag = vec![Scalar::one(); n];
        Self::diagonal(space, diag)
    }

    pub fn zero(space: Arc<BasedSpace>) -> Self {
        let n = space.dim();
        Self {
            space,
            matrix: vec![vec![Scalar::zero(); n]; n],
        }
    }

    pub fn diagonal(space: Arc<BasedSpace>, diag: Vec<Scalar>) -> Self {
        let n = space.dim();
        assert_eq!(diag.len(), n, "diagonal length");
        let matrix = (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| {
                        if i == k {
                            diag[i].clone()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self { space, matrix }
    }

    /// Sets the image of each basis vector from explicit columns.
    pub fn from_columns(space: Arc<BasedSpace>, columns: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = space.dim();
        if columns.len() != n || columns.iter().any(|c| c.len() != n) {
            return Err(Error::DimMismatch(columns.len(), n));
        }
        let matrix = (0..n)
            .map(|k| (0..n).map(|i| columns[i][k].clone()).collect())
            .collect();
        Ok(Self { space, matrix })
    }

    pub fn space(&self) -> &Arc<BasedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.matrix[row][col]
    }

    /// Image of basis vector `i` as a coordinate vector.
    pub fn column(&self, i: usize) -> Vec<Scalar> {
        self.matrix.iter().map(|r| r[i].clone()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch(self.dim(), other.dim()));
        }
        let n = self.dim();
        let matrix = (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| {
                        (0..n).fold(Scalar::zero(), |acc, j| {
                            &acc + &(&self.matrix[k][j] * &other.matrix[j][i])
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            space: self.space.clone(),
            matrix,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch(self.dim(), other.dim()));
        }
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Ok(Self {
            space: self.space.clone(),
            matrix,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self {
            space: self.space.clone(),
            matrix: self
                .matrix
                .iter()
                .map(|r| r.iter().map(|x| x * s).collect())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.space.clone())
    }

    pub fn instantiate(&self, assignment: &Assignment) -> Result<Self> {
        let matrix = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|x| x.instantiate(assignment)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Ok(Self {
            space: self.space.clone(),
            matrix,
        })
    }

    /// The map as an arity-1 operator.
    pub fn to_op(&self) -> TensorOp {
        let m = &self.matrix;
        TensorOp::from_fn(self.space.clone(), 1, |i| {
            (0..m.len())
                .map(|k| (vec![k], m[k][i[0]].clone()))
                .collect()
        })
    }

    pub fn from_op(op: &TensorOp) -> Result<Self> {
        if op.arity() != 1 {
            return Err(Error::ArityMismatch(op.arity(), 1));
        }
        Self::new(op.space().clone(), op.to_dense())
    }

    /// `α^{⊗m}`.
    pub fn lift(&self, m: usize) -> TensorOp {
        let single = self.to_op();
        let mut out = single.clone();
        for _ in 1..m {
            out = out.tensor(&single).expect("same space");
        }
        out
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self {
            space: self.space.clone(),
            matrix: invert_dense(&self.matrix)?,
        })
    }

    pub fn power(&self, k: usize) -> Self {
        let mut out = Self::identity(self.space.clone());
        for _ in 0..k {
            out = out.compose(self).expect("same space");
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        Self {
            space: self.space.clone(),
            matrix: (0..n)
                .map(|k| (0..n).map(|i| self.matrix[i][k].clone()).collect())
                .collect(),
        }
    }

    /// Determinant by the Leibniz expansion, or by elimination when every
    /// entry is constant.
    pub fn determinant(&self) -> Scalar {
        if self.matrix.iter().flatten().all(Scalar::is_constant) {
            let rows: Vec<Vec<Rational>> = self
                .matrix
                .iter()
                .map(|r| r.iter().map(|x| x.as_rational().unwrap()).collect())
                .collect();
            return Scalar::from_rational(rational_determinant(rows));
        }
        leibniz(&self.matrix)
    }

    /// `det(t·I - A)` as a scalar in the fresh parameter `t`.
    pub fn characteristic_polynomial(&self) -> Scalar {
        let n = self.dim();
        let t = Scalar::term(
            Monomial::var(param("t"), 1),
            Rational::from_integer(1.into()),
        );
        let m: Vec<Vec<Scalar>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| {
                        let neg = -&self.matrix[k][i];
                        if k == i {
                            &t + &neg
                        } else {
                            neg
                        }
                    })
                    .collect()
            })
            .collect();
        leibniz(&m)
    }
}

fn leibniz(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut total = Scalar::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let mut term = Scalar::from_int(sign(p));
        for (row, &col) in p.iter().enumerate() {
            if m[row][col].is_zero() {
                return;
            }
            term = &term * &m[row][col];
        }
        total += &term;
    });
    total
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

fn sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn rational_determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    use num_traits::{One, Zero};
    let n = a.len();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &pivot;
            for c in k..n {
                let v = &f * &a[k][c];
                a[r][c] -= v;
            }
        }
    }
    det
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap [")?;
        for r in &self.matrix {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
