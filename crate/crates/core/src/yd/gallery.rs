use std::sync::{Arc, OnceLock};

use super::{
    outer, zeros, Bialgebra, DualQuasiTriangular, HComodule, HModule, QuasiTriangular, YdModule,
};
use crate::error::{Error, Result};
use crate::scalars::{rat, Scalar};
use crate::tensor::BasedSpace;

/// `k[Z/m]` with basis `g0, ..., g(m-1)`, `Δ(g) = g ⊗ g`, `ε(g) = 1`.
pub fn group_bialgebra(m: usize) -> Result<Bialgebra> {
    if m == 0 {
        return Err(Error::BadDimension(0));
    }
    let space = Arc::new(BasedSpace::zero_based(m, "g"));
    let e = |i: usize| {
        let mut v = zeros(m);
        v[i] = Scalar::one();
        v
    };
    let mult = (0..m)
        .map(|i| (0..m).map(|j| e((i + j) % m)).collect())
        .collect();
    let comult = (0..m).map(|i| outer(&e(i), &e(i))).collect();
    Bialgebra::new(space, mult, e(0), comult, vec![Scalar::one(); m])
}

fn z2() -> Arc<Bialgebra> {
    static H: OnceLock<Arc<Bialgebra>> = OnceLock::new();
    H.get_or_init(|| Arc::new(group_bialgebra(2).expect("Z/2")))
        .clone()
}

fn sign(p: usize) -> Scalar {
    if p % 2 == 0 {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

fn parity_space(parities: &[usize]) -> Result<Arc<BasedSpace>> {
    if parities.is_empty() {
        return Err(Error::BadDimension(0));
    }
    if parities.iter().any(|&p| p > 1) {
        return Err(Error::InvariantViolated("parities must be 0 or 1".into()));
    }
    Ok(Arc::new(BasedSpace::standard(parities.len(), "v")))
}

/// `Z/2`-module with `g·v = (-1)^{|v|} v`.
pub fn sign_module(parities: &[usize]) -> Result<HModule> {
    let space = parity_space(parities)?;
    let n = parities.len();
    let action = (0..2)
        .map(|x| {
            (0..n)
                .map(|v| {
                    let mut out = zeros(n);
                    out[v] = sign(x * parities[v]);
                    out
                })
                .collect()
        })
        .collect();
    HModule::new(z2(), space, action)
}

/// `Z/2`-comodule with `ρ(v) = g^{|v|} ⊗ v`.
pub fn graded_comodule(parities: &[usize]) -> Result<HComodule> {
    let space = parity_space(parities)?;
    let n = parities.len();
    let coaction = (0..n)
        .map(|v| {
            let mut out = zeros(2 * n);
            out[parities[v] * n + v] = Scalar::one();
            out
        })
        .collect();
    HComodule::new(z2(), space, coaction)
}

/// A `Z/2`-graded space as a YD module: sign action and grading coaction.
pub fn graded_module(parities: &[usize]) -> Result<YdModule> {
    YdModule::new(sign_module(parities)?, graded_comodule(parities)?)
}

/// `x·v = ε(x) v`, `ρ(v) = 1 ⊗ v` on an `n`-dimensional space.
pub fn trivial_module(host: Arc<Bialgebra>, n: usize) -> Result<YdModule> {
    if n == 0 {
        return Err(Error::BadDimension(0));
    }
    let space = Arc::new(BasedSpace::standard(n, "v"));
    let d = host.dim();
    let action = (0..d)
        .map(|x| {
            (0..n)
                .map(|v| {
                    let mut out = zeros(n);
                    out[v] = host.counit()[x].clone();
                    out
                })
                .collect()
        })
        .collect();
    let coaction = (0..n)
        .map(|v| {
            let mut e = zeros(n);
            e[v] = Scalar::one();
            outer(host.unit(), &e)
        })
        .collect();
    let m = HModule::new(host.clone(), space.clone(), action)?;
    let c = HComodule::new(host, space, coaction)?;
    YdModule::new(m, c)
}

/// `R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)` on `k[Z/2]`, with `R² = 1 ⊗ 1`.
pub fn z2_triangular() -> QuasiTriangular {
    let h = |x: i64| Scalar::from_rational(rat(x, 2));
    let r = vec![h(1), h(1), h(1), h(-1)];
    QuasiTriangular::new(z2(), r.clone(), r).expect("triangular structure on Z/2")
}

/// `R = 1 ⊗ 1` on a cocommutative bialgebra.
pub fn trivial_qt(host: Arc<Bialgebra>) -> Result<QuasiTriangular> {
    let one = host.unit_m(2);
    QuasiTriangular::new(host, one.clone(), one)
}

/// `R(g^i ⊗ g^j) = (-1)^{ij}` on `k[Z/2]`.
pub fn sign_bicharacter() -> DualQuasiTriangular {
    let r: Vec<Vec<Scalar>> = (0..2)
        .map(|i| (0..2).map(|j| sign(i * j)).collect())
        .collect();
    DualQuasiTriangular::new(z2(), r.clone(), r).expect("bicharacter on Z/2")
}

/// `R = ε ⊗ ε` on a commutative bialgebra.
pub fn trivial_dqt(host: Arc<Bialgebra>) -> Result<DualQuasiTriangular> {
    let eps = host.counit().to_vec();
    let r: Vec<Vec<Scalar>> = eps
        .iter()
        .map(|a| eps.iter().map(|b| a * b).collect())
        .collect();
    DualQuasiTriangular::new(host, r.clone(), r)
}
