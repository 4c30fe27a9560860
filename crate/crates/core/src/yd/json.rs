//! Bialgebra: `{ "dim", "labels", "mult": {"i,j": {"k": s}}, "unit": {"k": s},
//! "comult": {"i": {"j,k": s}}, "counit": {"i": s} }`.
//!
//! YD module: `{ "bialgebra": {...}, "dim", "labels",
//! "action": {"x,v": {"w": s}}, "coaction": {"v": {"h,w": s}} }`.
//!
//! Indices are 1-based; omitted entries are zero.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use super::{zeros, Bialgebra, HComodule, HModule, YdModule};
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::tensor::BasedSpace;

fn bad(m: impl Into<String>) -> Error {
    Error::Parse(m.into())
}

fn key(t: &[usize]) -> String {
    t.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Mixed-radix decode, leftmost most significant.
fn split(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (o, d) in out.iter_mut().zip(dims).rev() {
        *o = idx % d;
        idx /= d;
    }
    out
}

fn parse_key(k: &str, dims: &[usize]) -> Result<usize> {
    let parts: Vec<&str> = k.split(',').collect();
    if parts.len() != dims.len() {
        return Err(bad(format!("key `{k}` should have {} indices", dims.len())));
    }
    let mut idx = 0;
    for (p, &d) in parts.iter().zip(dims) {
        let i: usize = p
            .trim()
            .parse()
            .ok()
            .filter(|i| (1..=d).contains(i))
            .ok_or_else(|| bad(format!("bad index in key `{k}`")))?;
        idx = idx * d + i - 1;
    }
    Ok(idx)
}

fn scalar(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => n.to_string().parse(),
        _ => Err(bad(format!("bad scalar {v}"))),
    }
}

fn vec_to_json(v: &[Scalar], dims: &[usize]) -> Value {
    let m: Map<String, Value> = v
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| (key(&split(i, dims)), Value::String(s.to_string())))
        .collect();
    Value::Object(m)
}

fn vec_from_json(v: Option<&Value>, dims: &[usize]) -> Result<Vec<Scalar>> {
    let mut out = zeros(dims.iter().product());
    let Some(v) = v else { return Ok(out) };
    let obj = v
        .as_object()
        .ok_or_else(|| bad("expected an object of entries"))?;
    for (k, s) in obj {
        out[parse_key(k, dims)?] = scalar(s)?;
    }
    Ok(out)
}

/// `{ key(input): vec_to_json(f(input)) }`, skipping zero images.
fn table_to_json(
    count: usize,
    in_dims: &[usize],
    out_dims: &[usize],
    f: impl Fn(usize) -> Vec<Scalar>,
) -> Value {
    let mut m = Map::new();
    for i in 0..count {
        let v = f(i);
        if v.iter().any(|s| !s.is_zero()) {
            m.insert(key(&split(i, in_dims)), vec_to_json(&v, out_dims));
        }
    }
    Value::Object(m)
}

fn table_from_json(
    v: Option<&Value>,
    in_dims: &[usize],
    out_dims: &[usize],
) -> Result<Vec<Vec<Scalar>>> {
    let count = in_dims.iter().product();
    let mut out = vec![zeros(out_dims.iter().product()); count];
    let Some(v) = v else { return Ok(out) };
    let obj = v
        .as_object()
        .ok_or_else(|| bad("expected an object of tables"))?;
    for (k, inner) in obj {
        out[parse_key(k, in_dims)?] = vec_from_json(Some(inner), out_dims)?;
    }
    Ok(out)
}

fn space_from_json(value: &Value, prefix: &str) -> Result<Arc<BasedSpace>> {
    let n = value
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing dim"))? as usize;
    let space = match value.get("labels") {
        Some(Value::Array(ls)) => {
            let labels = ls
                .iter()
                .map(|l| {
                    l.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| bad("labels must be strings"))
                })
                .collect::<Result<Vec<_>>>()?;
            if labels.len() != n {
                return Err(bad("labels length differs from dim"));
            }
            BasedSpace::new(labels)?
        }
        None => BasedSpace::standard(n, prefix),
        _ => return Err(bad("labels must be an array")),
    };
    Ok(Arc::new(space))
}

impl Bialgebra {
    pub fn to_json(&self) -> Value {
        let d = self.dim();
        json!({
            "dim": d,
            "labels": self.space().labels(),
            "mult": table_to_json(d * d, &[d, d], &[d], |ij| self.mult_basis(ij / d, ij % d).to_vec()),
            "unit": vec_to_json(self.unit(), &[d]),
            "comult": table_to_json(d, &[d], &[d, d], |i| self.comult_basis(i).to_vec()),
            "counit": vec_to_json(self.counit(), &[d]),
        })
    }

    /// Reads and checks the axioms.
    pub fn from_json(value: &Value) -> Result<Self> {
        let h = Self::from_json_unchecked(value)?;
        h.check()?;
        Ok(h)
    }

    pub fn from_json_unchecked(value: &Value) -> Result<Self> {
        let space = space_from_json(value, "h")?;
        let d = space.dim();
        let flat = table_from_json(value.get("mult"), &[d, d], &[d])?;
        let mult = flat.chunks(d).map(<[Vec<Scalar>]>::to_vec).collect();
        let unit = vec_from_json(value.get("unit"), &[d])?;
        let comult = table_from_json(value.get("comult"), &[d], &[d, d])?;
        let counit = vec_from_json(value.get("counit"), &[d])?;
        Self::new_unchecked(space, mult, unit, comult, counit)
    }
}

impl YdModule {
    pub fn to_json(&self) -> Value {
        let h = self.host();
        let (d, n) = (h.dim(), self.dim());
        json!({
            "bialgebra": h.to_json(),
            "dim": n,
            "labels": self.space().labels(),
            "action": table_to_json(d * n, &[d, n], &[n], |xv| self.module().act_basis(xv / n, xv % n).to_vec()),
            "coaction": table_to_json(n, &[n], &[d, n], |v| self.comodule().coact_basis(v).to_vec()),
        })
    }

    /// Reads and checks the bialgebra, module and comodule axioms.
    pub fn from_json(value: &Value) -> Result<Self> {
        let m = Self::from_json_unchecked(value)?;
        m.host().check()?;
        Self::new(m.module().clone(), m.comodule().clone())
    }

    pub fn from_json_unchecked(value: &Value) -> Result<Self> {
        let h = Arc::new(Bialgebra::from_json_unchecked(
            value
                .get("bialgebra")
                .ok_or_else(|| bad("missing bialgebra"))?,
        )?);
        let space = space_from_json(value, "v")?;
        let (d, n) = (h.dim(), space.dim());
        let flat = table_from_json(value.get("action"), &[d, n], &[n])?;
        let action = flat.chunks(n).map(<[Vec<Scalar>]>::to_vec).collect();
        let coaction = table_from_json(value.get("coaction"), &[n], &[d, n])?;
        let m = HModule::new_unchecked(h.clone(), space.clone(), action)?;
        let c = HComodule::new_unchecked(h, space, coaction)?;
        Self::new_unchecked(m, c)
    }
}
