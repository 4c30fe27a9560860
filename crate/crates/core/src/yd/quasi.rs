use std::sync::Arc;

use super::{
    nonzero, outer, yd_condition_residual, zeros, Bialgebra, HComodule, HModule, YdModule,
};
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::tensor::TensorOp;

fn violation(what: &str) -> Error {
    Error::AxiomViolation(what.to_string())
}

/// `(H, R)` with `R = Σ r_{ab} e_a ⊗ e_b` and its inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiTriangular {
    host: Arc<Bialgebra>,
    r: Vec<Scalar>,
    r_inverse: Vec<Scalar>,
}

impl QuasiTriangular {
    pub fn new(host: Arc<Bialgebra>, r: Vec<Scalar>, r_inverse: Vec<Scalar>) -> Result<Self> {
        let qt = Self::new_unchecked(host, r, r_inverse)?;
        qt.check()?;
        Ok(qt)
    }

    pub fn new_unchecked(
        host: Arc<Bialgebra>,
        r: Vec<Scalar>,
        r_inverse: Vec<Scalar>,
    ) -> Result<Self> {
        let d2 = host.dim() * host.dim();
        if r.len() != d2 || r_inverse.len() != d2 {
            return Err(Error::DimMismatch(d2, r.len()));
        }
        Ok(Self { host, r, r_inverse })
    }

    pub fn host(&self) -> &Arc<Bialgebra> {
        &self.host
    }

    /// `R` as an element of `H^{⊗2}`.
    pub fn r(&self) -> &[Scalar] {
        &self.r
    }

    pub fn r_inverse(&self) -> &[Scalar] {
        &self.r_inverse
    }

    /// `R_{13} = Σ s ⊗ 1 ⊗ t`.
    fn r13(&self) -> Vec<Scalar> {
        let d = self.host.dim();
        let mut out = zeros(d * d * d);
        for (ab, c) in nonzero(&self.r) {
            let (a, b) = (ab / d, ab % d);
            for (k, u) in nonzero(self.host.unit()) {
                out[(a * d + k) * d + b] += &(c * u);
            }
        }
        out
    }

    /// `RR^{-1} = R^{-1}R = 1 ⊗ 1`, `τΔ(x) = RΔ(x)R^{-1}`,
    /// `(Δ ⊗ Id)R = R_{13}R_{23}`, `(Id ⊗ Δ)R = R_{13}R_{12}`.
    pub fn check(&self) -> Result<()> {
        let h = &self.host;
        let one = h.unit_m(2);
        if h.mul_m(2, &self.r, &self.r_inverse) != one
            || h.mul_m(2, &self.r_inverse, &self.r) != one
        {
            return Err(violation("R inverse"));
        }
        for x in 0..h.dim() {
            let dx = h.comult_basis(x);
            let conj = h.mul_m(2, &h.mul_m(2, &self.r, dx), &self.r_inverse);
            if conj != h.flip(dx) {
                return Err(violation("R does not conjugate the coproduct to its flip"));
            }
        }
        let r12 = outer(&self.r, h.unit());
        let r23 = outer(h.unit(), &self.r);
        let r13 = self.r13();
        if h.delta_at(2, 0, &self.r) != h.mul_m(3, &r13, &r23) {
            return Err(violation("(Δ ⊗ Id)(R) = R13 R23"));
        }
        if h.delta_at(2, 1, &self.r) != h.mul_m(3, &r13, &r12) {
            return Err(violation("(Id ⊗ Δ)(R) = R13 R12"));
        }
        Ok(())
    }
}

/// `ρ(v) = Σ t_i ⊗ s_i·v` for `R = Σ s_i ⊗ t_i`.
pub fn comodule_from_qt(v: &HModule, qt: &QuasiTriangular) -> Result<YdModule> {
    if v.host() != qt.host() {
        return Err(violation("module over a different bialgebra"));
    }
    v.check()?;
    qt.check()?;
    let (d, n) = (qt.host.dim(), v.dim());
    let coaction = (0..n)
        .map(|i| {
            let mut rho = zeros(d * n);
            for (ab, c) in nonzero(&qt.r) {
                let (a, b) = (ab / d, ab % d);
                for (w, s) in nonzero(v.act_basis(a, i)) {
                    rho[b * n + w] += &(c * s);
                }
            }
            rho
        })
        .collect();
    let co = HComodule::new(v.host().clone(), v.space().clone(), coaction)?;
    let yd = YdModule::new(v.clone(), co)?;
    if !yd_condition_residual(&yd)?.is_empty() {
        return Err(Error::NotYd);
    }
    Ok(yd)
}

/// `τ ∘ R`: `v ⊗ w ↦ Σ t_i·w ⊗ s_i·v`.
pub fn qt_braiding(v: &HModule, qt: &QuasiTriangular) -> Result<TensorOp> {
    if v.host() != qt.host() {
        return Err(violation("module over a different bialgebra"));
    }
    let d = qt.host.dim();
    Ok(TensorOp::from_fn(v.space().clone(), 2, |ij| {
        let mut out = Vec::new();
        for (ab, c) in nonzero(&qt.r) {
            let (a, b) = (ab / d, ab % d);
            for (k, x) in nonzero(v.act_basis(b, ij[1])) {
                for (l, y) in nonzero(v.act_basis(a, ij[0])) {
                    out.push((vec![k, l], &(c * x) * y));
                }
            }
        }
        out
    }))
}

/// `(H, R)` with `R` a bilinear form on `H`, `r[a][b] = R(e_a ⊗ e_b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualQuasiTriangular {
    host: Arc<Bialgebra>,
    r: Vec<Vec<Scalar>>,
    r_inverse: Vec<Vec<Scalar>>,
}

impl DualQuasiTriangular {
    pub fn new(
        host: Arc<Bialgebra>,
        r: Vec<Vec<Scalar>>,
        r_inverse: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        let dqt = Self::new_unchecked(host, r, r_inverse)?;
        dqt.check()?;
        Ok(dqt)
    }

    pub fn new_unchecked(
        host: Arc<Bialgebra>,
        r: Vec<Vec<Scalar>>,
        r_inverse: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        let d = host.dim();
        let square = |m: &Vec<Vec<Scalar>>| m.len() == d && m.iter().all(|row| row.len() == d);
        if !square(&r) || !square(&r_inverse) {
            return Err(Error::DimMismatch(d, r.len()));
        }
        Ok(Self { host, r, r_inverse })
    }

    pub fn host(&self) -> &Arc<Bialgebra> {
        &self.host
    }

    pub fn form(&self) -> &[Vec<Scalar>] {
        &self.r
    }

    pub fn inverse_form(&self) -> &[Vec<Scalar>] {
        &self.r_inverse
    }

    /// `Σ f(x_1 ⊗ y_1) g(x_2 ⊗ y_2)`.
    fn convolve(&self, f: &[Vec<Scalar>], g: &[Vec<Scalar>], x: usize, y: usize) -> Scalar {
        let d = self.host.dim();
        let mut s = Scalar::zero();
        for (jk, a) in nonzero(self.host.comult_basis(x)) {
            for (lm, b) in nonzero(self.host.comult_basis(y)) {
                let (j, k, l, m) = (jk / d, jk % d, lm / d, lm % d);
                let t = &f[j][l] * &g[k][m];
                if !t.is_zero() {
                    s += &(&(a * b) * &t);
                }
            }
        }
        s
    }

    /// Convolution inverse and the three conditions
    /// `Σ y_1 x_1 R(x_2 ⊗ y_2) = Σ R(x_1 ⊗ y_1) x_2 y_2`,
    /// `R(xy ⊗ z) = Σ R(x ⊗ z_1) R(y ⊗ z_2)`,
    /// `R(x ⊗ yz) = Σ R(x_1 ⊗ z) R(x_2 ⊗ y)`.
    pub fn check(&self) -> Result<()> {
        let h = &self.host;
        let d = h.dim();
        let eps = h.counit();
        for x in 0..d {
            for y in 0..d {
                let e = &eps[x] * &eps[y];
                if self.convolve(&self.r, &self.r_inverse, x, y) != e
                    || self.convolve(&self.r_inverse, &self.r, x, y) != e
                {
                    return Err(violation("R is not convolution invertible"));
                }
            }
        }
        for x in 0..d {
            for y in 0..d {
                let mut lhs = zeros(d);
                let mut rhs = zeros(d);
                for (jk, a) in nonzero(h.comult_basis(x)) {
                    for (lm, b) in nonzero(h.comult_basis(y)) {
                        let (j, k, l, m) = (jk / d, jk % d, lm / d, lm % d);
                        let ab = a * b;
                        super::axpy(&mut lhs, &(&ab * &self.r[k][m]), h.mult_basis(l, j));
                        super::axpy(&mut rhs, &(&ab * &self.r[j][l]), h.mult_basis(k, m));
                    }
                }
                if lhs != rhs {
                    return Err(violation("dual quasi-triangular condition 1"));
                }
            }
        }
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let mut lhs = Scalar::zero();
                    for (u, c) in nonzero(h.mult_basis(x, y)) {
                        lhs += &(c * &self.r[u][z]);
                    }
                    let mut rhs = Scalar::zero();
                    for (jk, c) in nonzero(h.comult_basis(z)) {
                        let (j, k) = (jk / d, jk % d);
                        rhs += &(c * &(&self.r[x][j] * &self.r[y][k]));
                    }
                    if lhs != rhs {
                        return Err(violation("dual quasi-triangular condition 2"));
                    }
                }
            }
        }
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let mut lhs = Scalar::zero();
                    for (u, c) in nonzero(h.mult_basis(y, z)) {
                        lhs += &(c * &self.r[x][u]);
                    }
                    let mut rhs = Scalar::zero();
                    for (jk, c) in nonzero(h.comult_basis(x)) {
                        let (j, k) = (jk / d, jk % d);
                        rhs += &(c * &(&self.r[j][z] * &self.r[k][y]));
                    }
                    if lhs != rhs {
                        return Err(violation("dual quasi-triangular condition 3"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `x·v = Σ R(v_{-1} ⊗ x) v_0`.
pub fn module_from_dqt(v: &HComodule, dqt: &DualQuasiTriangular) -> Result<YdModule> {
    if v.host() != dqt.host() {
        return Err(violation("comodule over a different bialgebra"));
    }
    v.check()?;
    dqt.check()?;
    let (d, n) = (dqt.host.dim(), v.dim());
    let action = (0..d)
        .map(|x| {
            (0..n)
                .map(|i| {
                    let mut out = zeros(n);
                    for (hw, c) in nonzero(v.coact_basis(i)) {
                        let (h, w) = (hw / n, hw % n);
                        out[w] += &(c * &dqt.r[h][x]);
                    }
                    out
                })
                .collect()
        })
        .collect();
    let m = HModule::new(v.host().clone(), v.space().clone(), action)?;
    let yd = YdModule::new(m, v.clone())?;
    if !yd_condition_residual(&yd)?.is_empty() {
        return Err(Error::NotYd);
    }
    Ok(yd)
}

/// `v ⊗ w ↦ Σ R(w_{-1} ⊗ v_{-1}) w_0 ⊗ v_0`.
pub fn dqt_braiding(v: &HComodule, dqt: &DualQuasiTriangular) -> Result<TensorOp> {
    if v.host() != dqt.host() {
        return Err(violation("comodule over a different bialgebra"));
    }
    let n = v.dim();
    Ok(TensorOp::from_fn(v.space().clone(), 2, |ij| {
        let mut out = Vec::new();
        for (hw, a) in nonzero(v.coact_basis(ij[0])) {
            for (gu, b) in nonzero(v.coact_basis(ij[1])) {
                let (h, w) = (hw / n, hw % n);
                let (g, u) = (gu / n, gu % n);
                let c = &(a * b) * &dqt.r[g][h];
                if !c.is_zero() {
                    out.push((vec![u, w], c));
                }
            }
        }
        out
    }))
}
