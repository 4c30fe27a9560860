//! Residual checkers for the Yang-Baxter equation, the Hom-Yang-Baxter
//! equation, compatibility with `α^{⊗2}` and the braid relations.
//!
//! Each checker returns the difference of the two sides as an operator; the
//! identity holds exactly when that operator [`is_zero`](TensorOp::is_zero).

use std::fmt;

use crate::error::{Error, Result};
use crate::tensor::{LinearMap, TensorOp};

fn check_pair(b: &TensorOp, alpha: &LinearMap) -> Result<()> {
    if b.arity() != 2 {
        return Err(Error::ArityMismatch(b.arity(), 2));
    }
    if alpha.dim() != b.dim() {
        return Err(Error::DimMismatch(alpha.dim(), b.dim()));
    }
    Ok(())
}

/// `α^{⊗2} ∘ B - B ∘ α^{⊗2}`.
pub fn compatibility_residual(b: &TensorOp, alpha: &LinearMap) -> Result<TensorOp> {
    check_pair(b, alpha)?;
    let a2 = alpha.lift(2);
    a2.compose(b)?.residual(&b.compose(&a2)?)
}

/// `(Id⊗B)(B⊗Id)(Id⊗B) - (B⊗Id)(Id⊗B)(B⊗Id)` on `V^{⊗3}`.
pub fn ybe_residual(b: &TensorOp) -> Result<TensorOp> {
    if b.arity() != 2 {
        return Err(Error::ArityMismatch(b.arity(), 2));
    }
    let id = TensorOp::identity(b.space().clone(), 1);
    let left = id.tensor(b)?;
    let right = b.tensor(&id)?;
    let lhs = left.compose(&right)?.compose(&left)?;
    let rhs = right.compose(&left)?.compose(&right)?;
    lhs.residual(&rhs)
}

/// Both sides of the Hom-Yang-Baxter equation, without the compatibility
/// precondition.
pub fn hybe_sides(b: &TensorOp, alpha: &LinearMap) -> Result<(TensorOp, TensorOp)> {
    check_pair(b, alpha)?;
    let a = alpha.to_op();
    let left = a.tensor(b)?;
    let right = b.tensor(&a)?;
    let lhs = left.compose(&right)?.compose(&left)?;
    let rhs = right.compose(&left)?.compose(&right)?;
    Ok((lhs, rhs))
}

/// `(α⊗B)(B⊗α)(α⊗B) - (B⊗α)(α⊗B)(B⊗α)`.
///
/// A solution must commute with `α^{⊗2}`; a pair that does not is rejected
/// with [`Error::IncompatiblePair`].
pub fn hybe_residual(b: &TensorOp, alpha: &LinearMap) -> Result<TensorOp> {
    if !compatibility_residual(b, alpha)?.is_zero() {
        return Err(Error::IncompatiblePair);
    }
    let (lhs, rhs) = hybe_sides(b, alpha)?;
    lhs.residual(&rhs)
}

/// True when `B` commutes with `α^{⊗2}` and satisfies the HYBE.
pub fn is_hybe_solution(b: &TensorOp, alpha: &LinearMap) -> Result<bool> {
    match hybe_residual(b, alpha) {
        Ok(r) => Ok(r.is_zero()),
        Err(Error::IncompatiblePair) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `B_α = α^{⊗2} ∘ B` for a Yang-Baxter operator `B` commuting with
/// `α^{⊗2}`. The result solves the HYBE for `(V, α)`.
pub fn twist(b: &TensorOp, alpha: &LinearMap) -> Result<TensorOp> {
    if !ybe_residual(b)?.is_zero() {
        return Err(Error::NotYbeSolution);
    }
    if !compatibility_residual(b, alpha)?.is_zero() {
        return Err(Error::IncompatiblePair);
    }
    alpha.lift(2).compose(b)
}

/// `B_i = α^{⊗(i-1)} ⊗ B ⊗ α^{⊗(n-i-1)}` on `V^{⊗n}`, `1 <= i <= n-1`.
pub fn build_bi(b: &TensorOp, alpha: &LinearMap, n: usize, i: usize) -> Result<TensorOp> {
    check_pair(b, alpha)?;
    if n < 2 || i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let mut op = b.clone();
    if i > 1 {
        op = alpha.lift(i - 1).tensor(&op)?;
    }
    if n - i - 1 > 0 {
        op = op.tensor(&alpha.lift(n - i - 1))?;
    }
    Ok(op)
}

/// Which braid relation a residual belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidRelation {
    /// `B_i B_j = B_j B_i` for `|i - j| > 1`.
    FarCommutation { i: usize, j: usize },
    /// `B_i B_{i+1} B_i = B_{i+1} B_i B_{i+1}`.
    Adjacent { i: usize },
}

impl fmt::Display for BraidRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FarCommutation { i, j } => write!(f, "B{i}B{j} = B{j}B{i}"),
            Self::Adjacent { i } => {
                let k = i + 1;
                write!(f, "B{i}B{k}B{i} = B{k}B{i}B{k}")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct BraidResidual {
    pub relation: BraidRelation,
    pub residual: TensorOp,
}

/// Residuals of every braid relation among `B_1, ..., B_{n-1}` on `V^{⊗n}`.
pub fn braid_relation_residuals(
    b: &TensorOp,
    alpha: &LinearMap,
    n: usize,
) -> Result<Vec<BraidResidual>> {
    let gens = (1..n)
        .map(|i| build_bi(b, alpha, n, i))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 2..n {
            let (bi, bj) = (&gens[i - 1], &gens[j - 1]);
            out.push(BraidResidual {
                relation: BraidRelation::FarCommutation { i, j },
                residual: bi.compose(bj)?.residual(&bj.compose(bi)?)?,
            });
        }
    }
    for i in 1..n.saturating_sub(1) {
        let (bi, bk) = (&gens[i - 1], &gens[i]);
        let lhs = bi.compose(bk)?.compose(bi)?;
        let rhs = bk.compose(bi)?.compose(bk)?;
        out.push(BraidResidual {
            relation: BraidRelation::Adjacent { i },
            residual: lhs.residual(&rhs)?,
        });
    }
    Ok(out)
}
