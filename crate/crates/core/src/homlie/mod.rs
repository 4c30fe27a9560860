//! Hom-Lie algebras given by structure constants, the morphism families of
//! the Heisenberg algebra, `sl(2)*` and `sl(2)`, the braiding on `C ⊕ L`,
//! and finite-field classification oracles.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::tensor::{matrix_from_json, matrix_to_json, BasedSpace, LinearMap};

mod classify;
mod extension;
mod families;

pub use classify::{
    classify_heisenberg_finite_field, classify_sl2_finite_field, classify_sl2_star_finite_field,
    scan_heisenberg, scan_sl2, scan_sl2_star, Classification,
};
pub use extension::{
    braiding_inverse_on_extension, braiding_on_extension, extend_alpha, extended_space,
};
pub use families::{
    heisenberg, heisenberg_morphism, sl2, sl2_morphism, sl2_morphism_equations, sl2_star,
    sl2_star_morphism,
};

/// A skew-symmetric bilinear map by structure constants:
/// `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bracket {
    space: Arc<BasedSpace>,
    c: Vec<Vec<Vec<Scalar>>>,
}

impl Bracket {
    pub fn new(space: Arc<BasedSpace>, c: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let n = space.dim();
        if c.len() != n
            || c.iter().flatten().any(|v| v.len() != n)
            || c.iter().any(|r| r.len() != n)
        {
            return Err(Error::DimMismatch(c.len(), n));
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !(&c[i][j][k] + &c[j][i][k]).is_zero() {
                        return Err(Error::InvariantViolated(format!(
                            "bracket not skew at ({},{})",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(Self { space, c })
    }

    /// Builds constants from the brackets `[x_i, x_j]` for `i < j`.
    pub fn from_upper<F>(space: Arc<BasedSpace>, f: F) -> Self
    where
        F: Fn(usize, usize) -> Vec<Scalar>,
    {
        let n = space.dim();
        let mut c = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                assert_eq!(v.len(), n, "bracket vector length");
                c[j][i] = v.iter().map(|x| -x).collect();
                c[i][j] = v;
            }
        }
        Self { space, c }
    }

    pub fn zero(space: Arc<BasedSpace>) -> Self {
        Self::from_upper(space.clone(), |_, _| vec![Scalar::zero(); space.dim()])
    }

    pub fn space(&self) -> &Arc<BasedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn constants(&self) -> &[Vec<Vec<Scalar>>] {
        &self.c
    }

    pub fn basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.c[i][j]
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..n {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += &(&xy * &self.c[i][j][k]);
                    }
                }
            }
        }
        out
    }

    /// `α ∘ [-,-]`.
    pub fn twisted(&self, alpha: &LinearMap) -> Self {
        let n = self.dim();
        let c = (0..n)
            .map(|i| (0..n).map(|j| alpha.apply(&self.c[i][j])).collect())
            .collect();
        Self {
            space: self.space.clone(),
            c,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().flatten().flatten().all(Scalar::is_zero)
    }

    pub fn instantiate(&self, at: &crate::scalars::Assignment) -> Result<Self> {
        let c = self
            .c
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        v.iter()
                            .map(|s| s.instantiate(at))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            space: self.space.clone(),
            c,
        })
    }
}

pub(crate) fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub(crate) fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `α[x_i, x_j] - [αx_i, αx_j]` for every `i < j`.
pub fn multiplicativity_residual(
    bracket: &Bracket,
    alpha: &LinearMap,
) -> Vec<((usize, usize), Vec<Scalar>)> {
    let n = bracket.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = alpha.apply(bracket.basis(i, j));
            let rhs = bracket.apply(&alpha.column(i), &alpha.column(j));
            out.push(((i, j), sub_vec(&lhs, &rhs)));
        }
    }
    out
}

/// Whether `α` preserves the bracket.
pub fn is_morphism(bracket: &Bracket, alpha: &LinearMap) -> bool {
    multiplicativity_residual(bracket, alpha)
        .iter()
        .all(|(_, v)| is_zero_vec(v))
}

/// `[[x,y],α(z)] + [[z,x],α(y)] + [[y,z],α(x)]` for every basis triple.
pub fn hom_jacobi_residual_of(
    bracket: &Bracket,
    alpha: &LinearMap,
) -> Vec<((usize, usize, usize), Vec<Scalar>)> {
    let n = bracket.dim();
    let mut out = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t1 = bracket.apply(bracket.basis(x, y), &alpha.column(z));
                let t2 = bracket.apply(bracket.basis(z, x), &alpha.column(y));
                let t3 = bracket.apply(bracket.basis(y, z), &alpha.column(x));
                let sum = t1
                    .iter()
                    .zip(&t2)
                    .zip(&t3)
                    .map(|((a, b), c)| &(a + b) + c)
                    .collect();
                out.push(((x, y, z), sum));
            }
        }
    }
    out
}

/// A Lie algebra: a bracket satisfying the Jacobi identity.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    bracket: Bracket,
}

impl LieAlgebra {
    pub fn new(bracket: Bracket) -> Result<Self> {
        let id = LinearMap::identity(bracket.space().clone());
        if let Some(((x, y, z), _)) = hom_jacobi_residual_of(&bracket, &id)
            .into_iter()
            .find(|(_, v)| !is_zero_vec(v))
        {
            return Err(Error::InvariantViolated(format!(
                "Jacobi identity fails on ({},{},{})",
                x + 1,
                y + 1,
                z + 1
            )));
        }
        Ok(Self { bracket })
    }

    pub fn bracket(&self) -> &Bracket {
        &self.bracket
    }

    pub fn space(&self) -> &Arc<BasedSpace> {
        self.bracket.space()
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    /// The same algebra with `α = Id`.
    pub fn as_hom_lie(&self) -> HomLieAlgebra {
        HomLieAlgebra {
            alpha: LinearMap::identity(self.space().clone()),
            bracket: self.bracket.clone(),
        }
    }
}

/// `(L, [-,-], α)` with skew bracket, multiplicative `α` and the Hom-Jacobi
/// identity.
#[derive(Clone, Debug, PartialEq)]
pub struct HomLieAlgebra {
    bracket: Bracket,
    alpha: LinearMap,
}

impl HomLieAlgebra {
    pub fn new(bracket: Bracket, alpha: LinearMap) -> Result<Self> {
        let l = Self::new_unchecked(bracket, alpha)?;
        if let Some(((i, j), _)) = multiplicativity_residual(&l.bracket, &l.alpha)
            .into_iter()
            .find(|(_, v)| !is_zero_vec(v))
        {
            return Err(Error::InvariantViolated(format!(
                "alpha not multiplicative on ({},{})",
                i + 1,
                j + 1
            )));
        }
        if let Some(((x, y, z), _)) = hom_jacobi_residual(&l)
            .into_iter()
            .find(|(_, v)| !is_zero_vec(v))
        {
            return Err(Error::InvariantViolated(format!(
                "Hom-Jacobi identity fails on ({},{},{})",
                x + 1,
                y + 1,
                z + 1
            )));
        }
        Ok(l)
    }

    /// Pairs a bracket with a map without checking the Hom-Lie axioms.
    pub fn new_unchecked(bracket: Bracket, alpha: LinearMap) -> Result<Self> {
        if alpha.dim() != bracket.dim() {
            return Err(Error::DimMismatch(alpha.dim(), bracket.dim()));
        }
        Ok(Self { bracket, alpha })
    }

    pub fn bracket(&self) -> &Bracket {
        &self.bracket
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn space(&self) -> &Arc<BasedSpace> {
        self.bracket.space()
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    /// Whether all three invariants hold.
    pub fn check(&self) -> bool {
        is_morphism(&self.bracket, &self.alpha)
            && hom_jacobi_residual(self)
                .iter()
                .all(|(_, v)| is_zero_vec(v))
    }

    /// Writes `{dim, labels, c: {"i,j": {"k": scalar}}, alpha}` with 1-based
    /// indices and `i < j`.
    pub fn to_json(&self) -> Value {
        let n = self.dim();
        let mut c = Map::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket.basis(i, j);
                let entries: Map<String, Value> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(k, s)| ((k + 1).to_string(), Value::from(s.to_string())))
                    .collect();
                if !entries.is_empty() {
                    c.insert(format!("{},{}", i + 1, j + 1), Value::Object(entries));
                }
            }
        }
        json!({
            "dim": n,
            "labels": self.space().labels(),
            "c": c,
            "alpha": matrix_to_json(self.alpha.matrix()),
        })
    }

    /// Reads the format of [`to_json`](Self::to_json) and checks the axioms.
    /// Missing `alpha` means the identity.
    pub fn from_json(value: &Value) -> Result<Self> {
        let l = Self::from_json_unchecked(value)?;
        Self::new(l.bracket, l.alpha)
    }

    pub fn from_json_unchecked(value: &Value) -> Result<Self> {
        let bad = |m: String| Error::Parse(format!("algebra: {m}"));
        let n = value
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing dim".into()))? as usize;
        let space = match value.get("labels") {
            Some(Value::Array(ls)) => {
                let labels = ls
                    .iter()
                    .map(|l| {
                        l.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| bad("labels must be strings".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if labels.len() != n {
                    return Err(bad("labels length differs from dim".into()));
                }
                BasedSpace::new(labels)?
            }
            None => BasedSpace::standard(n, "x"),
            _ => return Err(bad("labels must be an array".into())),
        };
        let space = Arc::new(space);
        let mut c = vec![vec![vec![Scalar::zero(); n]; n]; n];
        let mut seen = vec![vec![false; n]; n];
        if let Some(cs) = value.get("c") {
            let cs = cs
                .as_object()
                .ok_or_else(|| bad("c must be an object".into()))?;
            for (key, entries) in cs {
                let (i, j) = key
                    .split_once(',')
                    .and_then(|(a, b)| {
                        Some((
                            a.trim().parse::<usize>().ok()?,
                            b.trim().parse::<usize>().ok()?,
                        ))
                    })
                    .filter(|&(i, j)| (1..=n).contains(&i) && (1..=n).contains(&j))
                    .ok_or_else(|| bad(format!("bad key `{key}`")))?;
                let (i, j) = (i - 1, j - 1);
                if i == j {
                    return Err(bad(format!("diagonal key `{key}`")));
                }
                let entries = entries
                    .as_object()
                    .ok_or_else(|| bad(format!("entry `{key}` must be an object")))?;
                let mut v = vec![Scalar::zero(); n];
                for (k, s) in entries {
                    let k: usize = k
                        .parse()
                        .ok()
                        .filter(|k| (1..=n).contains(k))
                        .ok_or_else(|| bad(format!("bad index `{k}`")))?;
                    v[k - 1] = match s {
                        Value::String(t) => t.parse()?,
                        Value::Number(x) => x.to_string().parse()?,
                        _ => return Err(bad("scalars must be strings".into())),
                    };
                }
                let neg: Vec<Scalar> = v.iter().map(|x| -x).collect();
                if seen[j][i] && c[j][i] != neg {
                    return Err(Error::InvariantViolated(format!(
                        "bracket not skew at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
                seen[i][j] = true;
                c[j][i] = neg;
                c[i][j] = v;
            }
        }
        let alpha = match value.get("alpha") {
            Some(a) => LinearMap::new(space.clone(), matrix_from_json(a)?)?,
            None => LinearMap::identity(space.clone()),
        };
        Self::new_unchecked(Bracket::new(space, c)?, alpha)
    }
}

/// Hom-Jacobi residual of a Hom-Lie algebra, one vector per basis triple.
pub fn hom_jacobi_residual(l: &HomLieAlgebra) -> Vec<((usize, usize, usize), Vec<Scalar>)> {
    hom_jacobi_residual_of(&l.bracket, &l.alpha)
}

/// `g_α = (g, α∘[-,-], α)` for a Lie algebra morphism `α`.
pub fn yau_twist(g: &LieAlgebra, alpha: &LinearMap) -> Result<HomLieAlgebra> {
    if alpha.dim() != g.dim() {
        return Err(Error::DimMismatch(alpha.dim(), g.dim()));
    }
    if !is_morphism(g.bracket(), alpha) {
        return Err(Error::NotAMorphism);
    }
    HomLieAlgebra::new_unchecked(g.bracket().twisted(alpha), alpha.clone())
}

/// Whether `γ` is an isomorphism `L → L′`: invertible, `γα = α′γ` and
/// `γ[x,y] = [γx, γy]′`.
pub fn is_hom_lie_isomorphism(
    gamma: &LinearMap,
    l: &HomLieAlgebra,
    lp: &HomLieAlgebra,
) -> Result<bool> {
    let n = gamma.dim();
    if l.dim() != n {
        return Err(Error::DimMismatch(l.dim(), n));
    }
    if lp.dim() != n {
        return Err(Error::DimMismatch(lp.dim(), n));
    }
    if gamma.determinant().is_zero() {
        return Ok(false);
    }
    if !gamma
        .compose(l.alpha())?
        .sub(&lp.alpha().compose(gamma)?)?
        .is_zero()
    {
        return Ok(false);
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = gamma.apply(l.bracket().basis(i, j));
            let rhs = lp.bracket().apply(&gamma.column(i), &gamma.column(j));
            if !is_zero_vec(&sub_vec(&lhs, &rhs)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True when `α` and `β` have different characteristic polynomials, which
/// rules out conjugacy.
pub fn conjugacy_obstruction(alpha: &LinearMap, beta: &LinearMap) -> bool {
    alpha.dim() != beta.dim()
        || alpha.characteristic_polynomial() != beta.characteristic_polynomial()
}
