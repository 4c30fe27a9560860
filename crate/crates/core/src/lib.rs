//! Exact construction and verification of solutions of the Hom-Yang-Baxter
//! equation.
//!
//! Every identity is checked by forming the difference of its two sides as an
//! operator with Laurent-polynomial entries and testing that difference for
//! structural zero. There is no floating point anywhere.
//!
//! * [`scalars`]: Laurent polynomials over the rationals, and `F_p` reduction.
//! * [`tensor`]: sparse operators on tensor powers of a based space.
//! * [`hybe`]: Yang-Baxter, Hom-Yang-Baxter, compatibility and braid residuals.
//! * [`quantum`]: the quantum R-matrices and their compatible twisting maps.
//! * [`homlie`]: Hom-Lie algebras, morphism families and the `C + L` braiding.
//! * [`braid`]: permutations, reduced words and tensor-power solutions.
//! * [`yd`]: bialgebras, Yetter-Drinfel'd modules and their braidings.

pub mod braid;
pub mod error;
pub mod homlie;
pub mod hybe;
pub mod quantum;
pub mod scalars;
pub mod tensor;
pub mod yd;

pub use error::{Error, Result};
pub use scalars::{Rational, Scalar};
pub use tensor::{BasedSpace, LinearMap, TensorOp};
