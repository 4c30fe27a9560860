//! Shared fixtures for the criterion benches in `benches/`.

use hombrax_core::homlie::{braiding_on_extension, extend_alpha, sl2, sl2_morphism, yau_twist};
use hombrax_core::hybe::twist;
use hombrax_core::quantum::phi;
use hombrax_core::scalars::{assignment, rat};
use hombrax_core::{LinearMap, Scalar, TensorOp};

/// `(α^{⊗2}Φ, α)` at `q = 2, λ = 3` with `α = diag(2, -1)`.
pub fn phi_pair() -> (TensorOp, LinearMap) {
    let b = phi()
        .instantiate(&assignment(&[("q", rat(2, 1)), ("l", rat(3, 1))]))
        .unwrap();
    let alpha = LinearMap::diagonal(
        b.space().clone(),
        vec![Scalar::from_int(2), Scalar::from_int(-1)],
    );
    (twist(&b, &alpha).unwrap(), alpha)
}

/// The 4-dimensional braiding on `C ⊕ sl(2)` for a kind 3 morphism.
pub fn extension_pair() -> (TensorOp, LinearMap) {
    let m = sl2_morphism(3, &rat(1, 1), &rat(2, 1), &rat(3, 1)).unwrap();
    let l = yau_twist(&sl2(), &m).unwrap();
    (braiding_on_extension(&l).unwrap(), extend_alpha(&l))
}
