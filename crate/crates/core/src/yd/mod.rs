//! Bialgebras by structure constants, Yetter-Drinfel'd modules and the
//! braiding `B(v ⊗ w) = Σ v_{-1}·w ⊗ v_0`.
//!
//! Sweedler sums are explicit contractions over basis indices. Elements of
//! `H^{⊗m}` are dense vectors indexed row-major, like [`crate::tensor`].

mod gallery;
mod json;
mod module;
mod quasi;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::tensor::BasedSpace;

pub use gallery::{
    graded_comodule, graded_module, group_bialgebra, sign_bicharacter, sign_module, trivial_dqt,
    trivial_module, trivial_qt, z2_triangular,
};
pub use module::{
    check_colinearity, check_linearity, yd_braiding, yd_condition_residual, HComodule, HModule,
    YdDefect, YdModule,
};
pub use quasi::{
    comodule_from_qt, dqt_braiding, module_from_dqt, qt_braiding, DualQuasiTriangular,
    QuasiTriangular,
};

pub(crate) fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub(crate) fn axpy(out: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (o, x) in out.iter_mut().zip(v) {
        if !x.is_zero() {
            *o += &(c * x);
        }
    }
}

pub(crate) fn nonzero(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, s)| !s.is_zero())
}

/// A finite-dimensional bialgebra `(H, m, 1, Δ, ε)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bialgebra {
    space: Arc<BasedSpace>,
    /// `mult[i][j]` = `e_i e_j`.
    mult: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    /// `comult[i]` = `Δ(e_i)` in `H^{⊗2}`.
    comult: Vec<Vec<Scalar>>,
    counit: Vec<Scalar>,
}

impl Bialgebra {
    /// Builds and checks all bialgebra axioms.
    pub fn new(
        space: Arc<BasedSpace>,
        mult: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        comult: Vec<Vec<Scalar>>,
        counit: Vec<Scalar>,
    ) -> Result<Self> {
        let h = Self::new_unchecked(space, mult, unit, comult, counit)?;
        h.check()?;
        Ok(h)
    }

    /// Checks shapes only.
    pub fn new_unchecked(
        space: Arc<BasedSpace>,
        mult: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        comult: Vec<Vec<Scalar>>,
        counit: Vec<Scalar>,
    ) -> Result<Self> {
        let d = space.dim();
        let ok = mult.len() == d
            && mult
                .iter()
                .all(|r| r.len() == d && r.iter().all(|v| v.len() == d))
            && unit.len() == d
            && comult.len() == d
            && comult.iter().all(|v| v.len() == d * d)
            && counit.len() == d;
        if !ok {
            return Err(Error::DimMismatch(d, mult.len()));
        }
        Ok(Self {
            space,
            mult,
            unit,
            comult,
            counit,
        })
    }

    pub fn space(&self) -> &Arc<BasedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// `e_i e_j`.
    pub fn mult_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mult[i][j]
    }

    /// `Δ(e_i)`.
    pub fn comult_basis(&self, i: usize) -> &[Scalar] {
        &self.comult[i]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.mul_m(1, a, b)
    }

    /// Product in `H^{⊗m}`.
    pub fn mul_m(&self, m: usize, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = zeros(d.pow(m as u32));
        for (ia, x) in nonzero(a) {
            for (ib, y) in nonzero(b) {
                let mut partial = vec![(0usize, x * y)];
                for k in (0..m).rev() {
                    let p = d.pow(k as u32);
                    let (i, j) = ((ia / p) % d, (ib / p) % d);
                    let prod = &self.mult[i][j];
                    let mut next = Vec::new();
                    for (idx, c) in &partial {
                        for (r, s) in nonzero(prod) {
                            next.push((idx * d + r, c * s));
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    out[idx] += &c;
                }
            }
        }
        out
    }

    pub fn delta(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.delta_at(1, 0, a)
    }

    /// `Δ` applied at tensor position `p` of an element of `H^{⊗m}`.
    pub fn delta_at(&self, m: usize, p: usize, a: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let tail = d.pow((m - p - 1) as u32);
        let mut out = zeros(d.pow(m as u32 + 1));
        for (idx, c) in nonzero(a) {
            let (head, rest) = (idx / tail, idx % tail);
            let (pre, i) = (head / d, head % d);
            for (jk, s) in nonzero(&self.comult[i]) {
                out[(pre * d * d + jk) * tail + rest] += &(c * s);
            }
        }
        out
    }

    pub fn epsilon(&self, a: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for (i, c) in nonzero(a) {
            s += &(c * &self.counit[i]);
        }
        s
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = zeros(self.dim());
        v[i] = Scalar::one();
        v
    }

    /// `1 ⊗ ⋯ ⊗ 1` in `H^{⊗m}`.
    pub fn unit_m(&self, m: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::one()];
        for _ in 0..m {
            out = outer(&out, &self.unit);
        }
        out
    }

    /// Swaps the two factors of an element of `H^{⊗2}`.
    pub fn flip(&self, a: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = zeros(d * d);
        for (idx, c) in nonzero(a) {
            out[(idx % d) * d + idx / d] = c.clone();
        }
        out
    }

    /// `τΔ = Δ`.
    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|i| self.flip(&self.comult[i]) == self.comult[i])
    }

    /// Associativity, unit, coassociativity, counit, and `Δ`, `ε` algebra maps.
    pub fn check(&self) -> Result<()> {
        let d = self.dim();
        let fail = |what: &str| Err(Error::AxiomViolation(what.to_string()));
        for i in 0..d {
            let ei = self.basis(i);
            if self.mul(&self.unit, &ei) != ei || self.mul(&ei, &self.unit) != ei {
                return fail("unit");
            }
            let dd = &self.comult[i];
            if self.delta_at(2, 0, dd) != self.delta_at(2, 1, dd) {
                return fail("coassociativity");
            }
            let mut left = zeros(d);
            let mut right = zeros(d);
            for (jk, s) in nonzero(dd) {
                let (j, k) = (jk / d, jk % d);
                left[k] += &(s * &self.counit[j]);
                right[j] += &(s * &self.counit[k]);
            }
            if left != ei || right != ei {
                return fail("counit");
            }
            for j in 0..d {
                let eij = &self.mult[i][j];
                for k in 0..d {
                    let lhs = self.mul(eij, &self.basis(k));
                    let rhs = self.mul(&ei, &self.mult[j][k]);
                    if lhs != rhs {
                        return fail("associativity");
                    }
                }
                if self.delta(eij) != self.mul_m(2, &self.comult[i], &self.comult[j]) {
                    return fail("comultiplication is not multiplicative");
                }
                if self.epsilon(eij) != &self.counit[i] * &self.counit[j] {
                    return fail("counit is not multiplicative");
                }
            }
        }
        if self.delta(&self.unit) != self.unit_m(2) {
            return fail("comultiplication of the unit");
        }
        if !self.epsilon(&self.unit).is_one() {
            return fail("counit of the unit");
        }
        Ok(())
    }
}

/// `a ⊗ b` flattened row-major.
pub(crate) fn outer(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = zeros(a.len() * b.len());
    for (i, x) in nonzero(a) {
        for (j, y) in nonzero(b) {
            out[i * b.len() + j] = x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_bialgebras_pass_axioms() {
        for m in 1..=6 {
            let h = group_bialgebra(m).unwrap();
            assert_eq!(h.dim(), m);
            assert!(h.check().is_ok());
            assert!(h.is_cocommutative());
        }
        assert!(group_bialgebra(0).is_err());
    }

    #[test]
    fn tensor_product_multiplication() {
        let h = group_bialgebra(3).unwrap();
        // (g ⊗ g²)(g² ⊗ g²) = 1 ⊗ g
        let a = outer(&h.basis(1), &h.basis(2));
        let b = outer(&h.basis(2), &h.basis(2));
        assert_eq!(h.mul_m(2, &a, &b), outer(&h.basis(0), &h.basis(1)));
    }

    #[test]
    fn delta_positions() {
        let h = group_bialgebra(2).unwrap();
        let a = outer(&h.basis(0), &h.basis(1));
        let g = |i: usize| h.basis(i);
        assert_eq!(h.delta_at(2, 0, &a), outer(&outer(&g(0), &g(0)), &g(1)));
        assert_eq!(h.delta_at(2, 1, &a), outer(&outer(&g(0), &g(1)), &g(1)));
    }

    #[test]
    fn broken_structures_are_reported() {
        let h = group_bialgebra(2).unwrap();
        let mut counit = h.counit().to_vec();
        counit[1] = Scalar::from_int(2);
        let bad = Bialgebra::new(
            h.space().clone(),
            h.mult.clone(),
            h.unit.clone(),
            h.comult.clone(),
            counit,
        );
        assert!(matches!(bad, Err(Error::AxiomViolation(_))));

        // Δ(g) = g ⊗ 1 is not coassociative-compatible with the counit
        let mut comult = h.comult.clone();
        comult[1] = outer(&h.basis(1), &h.basis(0));
        let bad = Bialgebra::new(
            h.space().clone(),
            h.mult.clone(),
            h.unit.clone(),
            comult,
            h.counit.clone(),
        );
        assert!(matches!(bad, Err(Error::AxiomViolation(_))));
    }
}
