use std::sync::Arc;

use super::{reduced_word, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::hybe::{build_bi, hybe_residual};
use crate::tensor::{LinearMap, TensorOp};

/// An invertible HYBE solution `(B, α)`, checked once, acting on `V^{⊗n}`
/// through the operators `B_i`.
#[derive(Clone, Debug)]
pub struct BraidRep {
    b: TensorOp,
    alpha: LinearMap,
}

fn not_invertible(e: Error) -> Error {
    match e {
        Error::Singular => Error::NotInvertible,
        e => e,
    }
}

impl BraidRep {
    pub fn new(b: TensorOp, alpha: LinearMap) -> Result<Self> {
        match hybe_residual(&b, &alpha) {
            Ok(r) if r.is_zero() => {}
            Ok(_) | Err(Error::IncompatiblePair) => return Err(Error::NotASolution),
            Err(e) => return Err(e),
        }
        alpha.inverse().map_err(not_invertible)?;
        b.invert().map_err(not_invertible)?;
        Ok(Self { b, alpha })
    }

    pub fn b(&self) -> &TensorOp {
        &self.b
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    /// `B_1, ..., B_{n-1}` on `V^{⊗n}`.
    pub fn generators(&self, n: usize) -> Result<Vec<TensorOp>> {
        (1..n)
            .map(|i| build_bi(&self.b, &self.alpha, n, i))
            .collect()
    }

    /// `B_{i_1} ∘ ⋯ ∘ B_{i_l}` for the word `σ_{i_1} ⋯ σ_{i_l}`.
    pub fn word_operator(&self, word: &BraidWord) -> Result<TensorOp> {
        let n = word.strands();
        let gens = self.generators(n)?;
        let mut out = TensorOp::identity(self.alpha.space().clone(), n);
        for &i in word.letters() {
            out = out.compose(&gens[i - 1])?;
        }
        Ok(out)
    }

    /// `B^γ` through the bubble-sort reduced word of `γ`.
    pub fn theta(&self, gamma: &Permutation) -> Result<TensorOp> {
        self.word_operator(&reduced_word(gamma))
    }

    /// `α_n = (α^{⊗n})^{n²}`, as an operator of arity `n` on `V`.
    pub fn alpha_n(&self, n: usize) -> TensorOp {
        alpha_n(&self.alpha, n)
    }

    /// `(B^{χ_{nn}}, α_n)` over the space `V^{⊗n}`.
    pub fn tensor_power(&self, n: usize) -> Result<(TensorOp, LinearMap)> {
        let vn = Arc::new(self.alpha.space().tensor_power(n));
        let b = self.theta(&super::chi(n, n))?.rebase(vn.clone(), 2)?;
        let a = LinearMap::from_op(&self.alpha_n(n).rebase(vn, 1)?)?;
        Ok((b, a))
    }
}

/// `B^γ` for an invertible HYBE solution `(B, α)`.
pub fn theta_operator(gamma: &Permutation, b: &TensorOp, alpha: &LinearMap) -> Result<TensorOp> {
    BraidRep::new(b.clone(), alpha.clone())?.theta(gamma)
}

/// `B^w` for an explicit word, with the same checks as [`theta_operator`].
pub fn word_operator(word: &BraidWord, b: &TensorOp, alpha: &LinearMap) -> Result<TensorOp> {
    BraidRep::new(b.clone(), alpha.clone())?.word_operator(word)
}

/// `(α^{⊗n})^{n²}` on `V^{⊗n}`, arity `n`.
pub fn alpha_n(alpha: &LinearMap, n: usize) -> TensorOp {
    alpha.lift(n).power(n * n)
}

/// The pair `(B^{χ_{nn}}, α_n)` re-based over `V^{⊗n}`.
pub fn tensor_power_solution(
    b: &TensorOp,
    alpha: &LinearMap,
    n: usize,
) -> Result<(TensorOp, LinearMap)> {
    if n == 0 {
        return Err(Error::BadDimension(0));
    }
    BraidRep::new(b.clone(), alpha.clone())?.tensor_power(n)
}
