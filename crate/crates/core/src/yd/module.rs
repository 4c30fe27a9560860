use std::sync::Arc;

use super::{axpy, nonzero, outer, zeros, Bialgebra};
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::tensor::{BasedSpace, LinearMap, TensorOp};

/// A left `H`-module: `action[x][v]` = `e_x · e_v`.
#[derive(Clone, Debug, PartialEq)]
pub struct HModule {
    host: Arc<Bialgebra>,
    space: Arc<BasedSpace>,
    action: Vec<Vec<Vec<Scalar>>>,
}

impl HModule {
    pub fn new(
        host: Arc<Bialgebra>,
        space: Arc<BasedSpace>,
        action: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self> {
        let m = Self::new_unchecked(host, space, action)?;
        m.check()?;
        Ok(m)
    }

    pub fn new_unchecked(
        host: Arc<Bialgebra>,
        space: Arc<BasedSpace>,
        action: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self> {
        let (d, n) = (host.dim(), space.dim());
        if action.len() != d
            || action
                .iter()
                .any(|r| r.len() != n || r.iter().any(|v| v.len() != n))
        {
            return Err(Error::DimMismatch(d, action.len()));
        }
        Ok(Self {
            host,
            space,
            action,
        })
    }

    pub fn host(&self) -> &Arc<Bialgebra> {
        &self.host
    }

    pub fn space(&self) -> &Arc<BasedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `e_x · e_v`.
    pub fn act_basis(&self, x: usize, v: usize) -> &[Scalar] {
        &self.action[x][v]
    }

    pub fn act(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = zeros(self.dim());
        for (i, a) in nonzero(x) {
            for (j, b) in nonzero(v) {
                axpy(&mut out, &(a * b), &self.action[i][j]);
            }
        }
        out
    }

    /// `(xy)·v = x·(y·v)` and `1·v = v`.
    pub fn check(&self) -> Result<()> {
        let (d, n) = (self.host.dim(), self.dim());
        for v in 0..n {
            let ev = basis(n, v);
            if self.act(self.host.unit(), &ev) != ev {
                return Err(Error::AxiomViolation("unit acts as identity".into()));
            }
            for x in 0..d {
                for y in 0..d {
                    let lhs = self.act(self.host.mult_basis(x, y), &ev);
                    let rhs = self.act(&self.host.basis(x), &self.action[y][v]);
                    if lhs != rhs {
                        return Err(Error::AxiomViolation("action is not associative".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A left `H`-comodule: `coaction[v]` = `ρ(e_v)` in `H ⊗ V`.
#[derive(Clone, Debug, PartialEq)]
pub struct HComodule {
    host: Arc<Bialgebra>,
    space: Arc<BasedSpace>,
    coaction: Vec<Vec<Scalar>>,
}

impl HComodule {
    pub fn new(
        host: Arc<Bialgebra>,
        space: Arc<BasedSpace>,
        coaction: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        let m = Self::new_unchecked(host, space, coaction)?;
        m.check()?;
        Ok(m)
    }

    pub fn new_unchecked(
        host: Arc<Bialgebra>,
        space: Arc<BasedSpace>,
        coaction: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        let (d, n) = (host.dim(), space.dim());
        if coaction.len() != n || coaction.iter().any(|v| v.len() != d * n) {
            return Err(Error::DimMismatch(n, coaction.len()));
        }
        Ok(Self {
            host,
            space,
            coaction,
        })
    }

    pub fn host(&self) -> &Arc<Bialgebra> {
        &self.host
    }

    pub fn space(&self) -> &Arc<BasedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `ρ(e_v)`, indexed `h * dim V + w`.
    pub fn coact_basis(&self, v: usize) -> &[Scalar] {
        &self.coaction[v]
    }

    pub fn coact(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = zeros(self.host.dim() * self.dim());
        for (i, a) in nonzero(v) {
            axpy(&mut out, a, &self.coaction[i]);
        }
        out
    }

    /// `(Id ⊗ ρ)ρ = (Δ ⊗ Id)ρ` and `(ε ⊗ Id)ρ = Id`.
    pub fn check(&self) -> Result<()> {
        let (d, n) = (self.host.dim(), self.dim());
        for v in 0..n {
            let rho = &self.coaction[v];
            let mut lhs = zeros(d * d * n);
            let mut rhs = zeros(d * d * n);
            let mut counit = zeros(n);
            for (hw, c) in nonzero(rho) {
                let (h, w) = (hw / n, hw % n);
                let inner = &self.coaction[w];
                for (gu, s) in nonzero(inner) {
                    lhs[h * d * n + gu] += &(c * s);
                }
                for (jk, s) in nonzero(self.host.comult_basis(h)) {
                    rhs[jk * n + w] += &(c * s);
                }
                counit[w] += &(c * &self.host.counit()[h]);
            }
            if lhs != rhs {
                return Err(Error::AxiomViolation(
                    "coaction is not coassociative".into(),
                ));
            }
            if counit != basis(n, v) {
                return Err(Error::AxiomViolation(
                    "coaction fails the counit law".into(),
                ));
            }
        }
        Ok(())
    }
}

fn basis(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

/// A space that is both an `H`-module and an `H`-comodule.
#[derive(Clone, Debug, PartialEq)]
pub struct YdModule {
    module: HModule,
    comodule: HComodule,
}

impl YdModule {
    /// Checks the module and comodule axioms, not the YD condition.
    pub fn new(module: HModule, comodule: HComodule) -> Result<Self> {
        let m = Self::new_unchecked(module, comodule)?;
        m.module.check()?;
        m.comodule.check()?;
        Ok(m)
    }

    pub fn new_unchecked(module: HModule, comodule: HComodule) -> Result<Self> {
        if module.host != comodule.host {
            return Err(Error::AxiomViolation(
                "module and comodule over different bialgebras".into(),
            ));
        }
        if module.space != comodule.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(Self { module, comodule })
    }

    pub fn module(&self) -> &HModule {
        &self.module
    }

    pub fn comodule(&self) -> &HComodule {
        &self.comodule
    }

    pub fn host(&self) -> &Arc<Bialgebra> {
        &self.module.host
    }

    pub fn space(&self) -> &Arc<BasedSpace> {
        &self.module.space
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

/// A nonzero block of the YD residual at basis `x ∈ H`, `v ∈ V`, as an
/// element of `H ⊗ V`.
#[derive(Clone, Debug, PartialEq)]
pub struct YdDefect {
    pub x: usize,
    pub v: usize,
    pub residual: Vec<Scalar>,
}

/// `Σ x_1 v_{-1} ⊗ x_2·v_0 − Σ (x_1·v)_{-1} x_2 ⊗ (x_1·v)_0` over basis pairs;
/// only nonzero blocks are returned.
pub fn yd_condition_residual(yd: &YdModule) -> Result<Vec<YdDefect>> {
    yd.module.check()?;
    yd.comodule.check()?;
    let h = yd.host();
    let (d, n) = (h.dim(), yd.dim());
    let mut out = Vec::new();
    for x in 0..d {
        for v in 0..n {
            let mut lhs = zeros(d * n);
            let mut rhs = zeros(d * n);
            let rho_v = yd.comodule.coact_basis(v);
            for (jk, s) in nonzero(h.comult_basis(x)) {
                let (j, k) = (jk / d, jk % d);
                for (hw, r) in nonzero(rho_v) {
                    let (g, w) = (hw / n, hw % n);
                    let t = outer(h.mult_basis(j, g), yd.module.act_basis(k, w));
                    axpy(&mut lhs, &(s * r), &t);
                }
                let rho_u = yd.comodule.coact(yd.module.act_basis(j, v));
                for (hw, c) in nonzero(&rho_u) {
                    let (g, w) = (hw / n, hw % n);
                    let t = outer(h.mult_basis(g, k), &basis(n, w));
                    axpy(&mut rhs, &(s * c), &t);
                }
            }
            let residual: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            if residual.iter().any(|s| !s.is_zero()) {
                out.push(YdDefect { x, v, residual });
            }
        }
    }
    Ok(out)
}

/// `B(v ⊗ w) = Σ v_{-1}·w ⊗ v_0`.
pub fn yd_braiding(yd: &YdModule) -> Result<TensorOp> {
    if !yd_condition_residual(yd)?.is_empty() {
        return Err(Error::NotYd);
    }
    Ok(braiding_unchecked(yd))
}

pub(crate) fn braiding_unchecked(yd: &YdModule) -> TensorOp {
    let n = yd.dim();
    TensorOp::from_fn(yd.space().clone(), 2, |ij| {
        let (i, j) = (ij[0], ij[1]);
        let mut out = Vec::new();
        for (hw, r) in nonzero(yd.comodule.coact_basis(i)) {
            let (h, w) = (hw / n, hw % n);
            for (k, s) in nonzero(yd.module.act_basis(h, j)) {
                out.push((vec![k, w], r * s));
            }
        }
        out
    })
}

/// `ρ(α(v)) = (Id_H ⊗ α)(ρ(v))` on every basis vector.
pub fn check_colinearity(alpha: &LinearMap, v: &HComodule) -> bool {
    if alpha.space() != v.space() {
        return false;
    }
    let (d, n) = (v.host.dim(), v.dim());
    (0..n).all(|i| {
        let lhs = v.coact(&alpha.column(i));
        let mut rhs = zeros(d * n);
        for (hw, c) in nonzero(v.coact_basis(i)) {
            let (h, w) = (hw / n, hw % n);
            let t = outer(&basis(d, h), &alpha.column(w));
            axpy(&mut rhs, c, &t);
        }
        lhs == rhs
    })
}

/// `α(x·v) = x·α(v)` on every basis pair.
pub fn check_linearity(alpha: &LinearMap, v: &HModule, h: &Bialgebra) -> bool {
    if alpha.space() != v.space() || *v.host != *h {
        return false;
    }
    (0..h.dim()).all(|x| {
        (0..v.dim()).all(|i| alpha.apply(v.act_basis(x, i)) == v.act(&h.basis(x), &alpha.column(i)))
    })
}
