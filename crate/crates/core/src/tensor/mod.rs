//! Sparse linear operators on tensor powers `V^{⊗m}` of a based space.
//!
//! Basis tensors are addressed by a single integer: `e_{i1} ⊗ ... ⊗ e_{im}`
//! (0-based indices) has index `Σ i_k N^{m-k}`, so the leftmost factor is
//! most significant. This is the usual Kronecker-product layout.
//!
//! Operators are stored by column: column `c` lists the nonzero entries of
//! the image of basis tensor `c`, sorted by row, with no zero scalars. Every
//! column is present, which makes equality and zero tests structural.

mod elimination;
mod json;
mod linear_map;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalars::{Assignment, Scalar};

pub use elimination::invert_dense;
pub use json::{matrix_from_json, matrix_to_json, op_from_json, op_to_json};
pub use linear_map::LinearMap;

/// A finite-dimensional space with named, ordered basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasedSpace {
    labels: Vec<String>,
}

impl BasedSpace {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::BadDimension(0));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::Parse("basis labels must be distinct".into()));
        }
        Ok(Self { labels })
    }

    /// Basis `prefix1, ..., prefixN`.
    pub fn standard(dim: usize, prefix: &str) -> Self {
        Self {
            labels: (1..=dim).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    /// Basis `prefix0, ..., prefix(N-1)`.
    pub fn zero_based(dim: usize, prefix: &str) -> Self {
        Self {
            labels: (0..dim).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The space `V^{⊗m}` with basis labels joined by `.`.
    pub fn tensor_power(&self, m: usize) -> Self {
        let n = self.dim();
        let total = n.pow(m as u32);
        let labels = (0..total)
            .map(|idx| {
                decode(idx, n, m)
                    .iter()
                    .map(|&i| self.labels[i].as_str())
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect();
        Self { labels }
    }
}

/// Multi-index to flat index, leftmost factor most significant.
pub fn encode(indices: &[usize], dim: usize) -> usize {
    indices.iter().fold(0, |acc, &i| acc * dim + i)
}

/// Flat index to multi-index of length `arity`.
pub fn decode(mut index: usize, dim: usize, arity: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    out
}

pub type Column = Vec<(usize, Scalar)>;

fn canonical_column(entries: impl IntoIterator<Item = (usize, Scalar)>) -> Column {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (r, s) in entries {
        if s.is_zero() {
            continue;
        }
        acc.entry(r).and_modify(|x| *x += &s).or_insert(s);
    }
    acc.into_iter().filter(|(_, s)| !s.is_zero()).collect()
}

/// Linear operator on `V^{⊗arity}`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorOp {
    space: Arc<BasedSpace>,
    arity: usize,
    columns: Vec<Column>,
}

const PAR_THRESHOLD: usize = 64;

impl TensorOp {
    /// Builds an operator from raw columns; entries are merged, sorted and
    /// zero-filtered.
    pub fn from_columns(
        space: Arc<BasedSpace>,
        arity: usize,
        columns: Vec<Column>,
    ) -> Result<Self> {
        if arity == 0 {
            return Err(Error::BadDimension(0));
        }
        let total = space.dim().pow(arity as u32);
        if columns.len() != total {
            return Err(Error::DimMismatch(columns.len(), total));
        }
        if let Some(bad) = columns.iter().flatten().find(|(r, _)| *r >= total) {
            return Err(Error::DimMismatch(bad.0, total));
        }
        let columns = columns.into_iter().map(canonical_column).collect();
        Ok(Self {
            space,
            arity,
            columns,
        })
    }

    /// Builds an operator from its action on basis multi-indices.
    pub fn from_fn<F>(space: Arc<BasedSpace>, arity: usize, f: F) -> Self
    where
        F: Fn(&[usize]) -> Vec<(Vec<usize>, Scalar)>,
    {
        let n = space.dim();
        let total = n.pow(arity as u32);
        let columns = (0..total)
            .map(|c| {
                let idx = decode(c, n, arity);
                canonical_column(f(&idx).into_iter().map(|(r, s)| (encode(&r, n), s)))
            })
            .collect();
        Self {
            space,
            arity,
            columns,
        }
    }

    pub fn identity(space: Arc<BasedSpace>, arity: usize) -> Self {
        let total = space.dim().pow(arity as u32);
        Self {
            space,
            arity,
            columns: (0..total).map(|c| vec![(c, Scalar::one())]).collect(),
        }
    }

    pub fn zero(space: Arc<BasedSpace>, arity: usize) -> Self {
        let total = space.dim().pow(arity as u32);
        Self {
            space,
            arity,
            columns: vec![Vec::new(); total],
        }
    }

    /// The flip `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
    pub fn swap(space: Arc<BasedSpace>) -> Self {
        Self::from_fn(space, 2, |ij| vec![(vec![ij[1], ij[0]], Scalar::one())])
    }

    pub fn space(&self) -> &Arc<BasedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Dimension of `V^{⊗arity}`.
    pub fn size(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.columns[c]
    }

    /// Coefficient of basis tensor `row` in the image of basis tensor `col`.
    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.columns[col]
            .binary_search_by_key(&row, |(r, _)| *r)
            .map(|k| self.columns[col][k].1.clone())
            .unwrap_or_default()
    }

    /// Image of a basis multi-index, as multi-indices.
    pub fn apply_basis(&self, indices: &[usize]) -> Vec<(Vec<usize>, Scalar)> {
        let n = self.dim();
        self.columns[encode(indices, n)]
            .iter()
            .map(|(r, s)| (decode(*r, n, self.arity), s.clone()))
            .collect()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    fn same_space(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.space, &other.space) || self.space == other.space
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if !self.same_space(other) {
            return Err(Error::SpaceMismatch);
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let col = |c: &Column| {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (mid, s) in c {
                for (r, t) in &self.columns[*mid] {
                    let p = t * s;
                    acc.entry(*r).and_modify(|x| *x += &p).or_insert(p);
                }
            }
            acc.into_iter()
                .filter(|(_, s)| !s.is_zero())
                .collect::<Column>()
        };
        let columns = if other.columns.len() >= PAR_THRESHOLD {
            other.columns.par_iter().map(col).collect()
        } else {
            other.columns.iter().map(col).collect()
        };
        Ok(Self {
            space: self.space.clone(),
            arity: self.arity,
            columns,
        })
    }

    /// `self ⊗ other` on `V^{⊗(m+m')}`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if !self.same_space(other) {
            return Err(Error::SpaceMismatch);
        }
        let right = other.size();
        let columns = (0..self.size() * right)
            .map(|c| {
                let (a, b) = (c / right, c % right);
                let mut col = Vec::with_capacity(self.columns[a].len() * other.columns[b].len());
                for (ra, sa) in &self.columns[a] {
                    for (rb, sb) in &other.columns[b] {
                        col.push((ra * right + rb, sa * sb));
                    }
                }
                // rows are produced in increasing order and products of nonzero
                // Laurent polynomials are nonzero
                col
            })
            .collect();
        Ok(Self {
            space: self.space.clone(),
            arity: self.arity + other.arity,
            columns,
        })
    }

    /// `k`-fold composition; `power(0)` is the identity.
    pub fn power(&self, k: usize) -> Self {
        let mut out = Self::identity(self.space.clone(), self.arity);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.compose(&base).expect("same space");
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base).expect("same space");
            }
        }
        out
    }

    /// Entrywise difference `self - other`.
    pub fn residual(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                canonical_column(a.iter().cloned().chain(b.iter().map(|(r, s)| (*r, -s))))
            })
            .collect();
        Ok(Self {
            space: self.space.clone(),
            arity: self.arity,
            columns,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| canonical_column(a.iter().cloned().chain(b.iter().cloned())))
            .collect();
        Ok(Self {
            space: self.space.clone(),
            arity: self.arity,
            columns,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let columns = self
            .columns
            .iter()
            .map(|c| canonical_column(c.iter().map(|(r, x)| (*r, x * s))))
            .collect();
        Self {
            space: self.space.clone(),
            arity: self.arity,
            columns,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// First column with a nonzero entry, for diagnostics.
    pub fn first_nonzero_column(&self) -> Option<(usize, &[(usize, Scalar)])> {
        self.columns
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_empty())
            .map(|(i, c)| (i, c.as_slice()))
    }

    /// Applies a fallible map to every entry.
    pub fn try_map_entries<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&Scalar) -> Result<Scalar> + Sync,
    {
        let columns = self
            .columns
            .iter()
            .map(|c| {
                let mut out = Vec::with_capacity(c.len());
                for (r, s) in c {
                    out.push((*r, f(s)?));
                }
                Ok(canonical_column(out))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            space: self.space.clone(),
            arity: self.arity,
            columns,
        })
    }

    pub fn instantiate(&self, assignment: &Assignment) -> Result<Self> {
        self.try_map_entries(|s| s.instantiate(assignment))
    }

    /// Reinterprets the operator over another space with the same total
    /// dimension, e.g. `V^{⊗2n}` as `(V^{⊗n})^{⊗2}`.
    pub fn rebase(&self, space: Arc<BasedSpace>, arity: usize) -> Result<Self> {
        let total = space.dim().pow(arity as u32);
        if total != self.size() {
            return Err(Error::DimMismatch(total, self.size()));
        }
        Ok(Self {
            space,
            arity,
            columns: self.columns.clone(),
        })
    }

    /// Dense matrix, `out[row][col]`.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let n = self.size();
        let mut out = vec![vec![Scalar::zero(); n]; n];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, s) in col {
                out[*r][c] = s.clone();
            }
        }
        out
    }

    pub fn from_dense(space: Arc<BasedSpace>, arity: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let n = space.dim().pow(arity as u32);
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimMismatch(rows.len(), n));
        }
        let columns = (0..n)
            .map(|c| {
                (0..n)
                    .filter(|&r| !rows[r][c].is_zero())
                    .map(|r| (r, rows[r][c].clone()))
                    .collect()
            })
            .collect();
        Ok(Self {
            space,
            arity,
            columns,
        })
    }

    /// Exact inverse.
    ///
    /// Constant operators are inverted by Gauss-Jordan elimination over the
    /// rationals. Symbolic operators are eliminated with monomial pivots only;
    /// if no monomial pivot is available the result is
    /// [`Error::SymbolicNotMonomialInvertible`].
    pub fn invert(&self) -> Result<Self> {
        let inv = invert_dense(&self.to_dense())?;
        Self::from_dense(self.space.clone(), self.arity, &inv)
    }
}

impl fmt::Debug for TensorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TensorOp(dim {}, arity {}) {{", self.dim(), self.arity)?;
        for (c, col) in self.columns.iter().enumerate() {
            if col.is_empty() {
                continue;
            }
            write!(f, "  {c} ->")?;
            for (r, s) in col {
                write!(f, " [{r}: {s}]")?;
            }
            writeln!(f)?;
        }
        write!(f, "}}")
    }
}

/// Renders a column as `coef·label` terms over `V^{⊗arity}`.
pub fn describe_column(op: &TensorOp, c: usize) -> String {
    let n = op.dim();
    let label = |idx: usize| {
        decode(idx, n, op.arity())
            .iter()
            .map(|&i| op.space().labels()[i].as_str())
            .collect::<Vec<_>>()
            .join("⊗")
    };
    let image = op
        .column(c)
        .iter()
        .map(|(r, s)| format!("({s})·{}", label(*r)))
        .collect::<Vec<_>>()
        .join(" + ");
    format!(
        "{} ↦ {}",
        label(c),
        if image.is_empty() { "0".into() } else { image }
    )
}
