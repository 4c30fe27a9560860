use std::sync::Arc;

use super::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::tensor::{BasedSpace, LinearMap, TensorOp};

/// Basis of `C ⊕ L`: `(1,0)` labelled `1`, then the basis of `L`.
pub fn extended_space(l: &HomLieAlgebra) -> Arc<BasedSpace> {
    let mut labels = vec!["1".to_string()];
    labels.extend(l.space().labels().iter().cloned());
    Arc::new(BasedSpace::new(labels).expect("label `1` is unused by L"))
}

/// `(a, x) ↦ (a, α(x))`.
pub fn extend_alpha(l: &HomLieAlgebra) -> LinearMap {
    extend_map(extended_space(l), l.alpha())
}

fn extend_map(space: Arc<BasedSpace>, m: &LinearMap) -> LinearMap {
    let n = m.dim();
    let rows = (0..=n)
        .map(|k| {
            (0..=n)
                .map(|i| match (k, i) {
                    (0, 0) => Scalar::one(),
                    (0, _) | (_, 0) => Scalar::zero(),
                    _ => m.entry(k - 1, i - 1).clone(),
                })
                .collect()
        })
        .collect();
    LinearMap::new(space, rows).expect("square")
}

/// Nonzero terms of `u ⊗ v` as `(multi-index, coefficient)`.
fn tensor_terms(u: &[Scalar], v: &[Scalar]) -> Vec<(Vec<usize>, Scalar)> {
    let mut out = Vec::new();
    for (a, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (b, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            out.push((vec![a, b], x * y));
        }
    }
    out
}

/// `B((a,x)⊗(b,y)) = (b,αy)⊗(a,αx) + (1,0)⊗(0,[x,y])`.
pub fn braiding_on_extension(l: &HomLieAlgebra) -> Result<TensorOp> {
    if !l.check() {
        return Err(Error::InvariantViolated("not a Hom-Lie algebra".into()));
    }
    let alpha = extend_alpha(l);
    let space = alpha.space().clone();
    Ok(TensorOp::from_fn(space, 2, |ij| {
        let (i, j) = (ij[0], ij[1]);
        let mut out = tensor_terms(&alpha.column(j), &alpha.column(i));
        if i > 0 && j > 0 {
            let br = l.bracket().basis(i - 1, j - 1);
            out.extend(
                br.iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(k, s)| (vec![0, k + 1], s.clone())),
            );
        }
        out
    }))
}

/// `B^{-1}((a,x)⊗(b,y)) = (b,α^{-1}y)⊗(a,α^{-1}x) + (0,α^{-2}[x,y])⊗(1,0)`.
pub fn braiding_inverse_on_extension(l: &HomLieAlgebra) -> Result<TensorOp> {
    if !l.check() {
        return Err(Error::InvariantViolated("not a Hom-Lie algebra".into()));
    }
    let inv = match l.alpha().inverse() {
        Ok(m) => m,
        Err(Error::Singular) => return Err(Error::AlphaSingular),
        Err(e) => return Err(e),
    };
    let inv2 = inv.compose(&inv)?;
    let ext = extend_map(extended_space(l), &inv);
    let space = ext.space().clone();
    Ok(TensorOp::from_fn(space, 2, |ij| {
        let (i, j) = (ij[0], ij[1]);
        let mut out = tensor_terms(&ext.column(j), &ext.column(i));
        if i > 0 && j > 0 {
            let br = inv2.apply(l.bracket().basis(i - 1, j - 1));
            out.extend(
                br.into_iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(k, s)| (vec![k + 1, 0], s)),
            );
        }
        out
    }))
}
