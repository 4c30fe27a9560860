//! `{ "dim": N, "arity": m, "columns": { "<index>": [["<index>", "<scalar>"], ...] } }`
//!
//! Columns are written in increasing index order, zero columns as `[]`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use super::{BasedSpace, TensorOp};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

pub fn op_to_json(op: &TensorOp) -> Value {
    let mut columns = Map::new();
    for (c, col) in op.columns().iter().enumerate() {
        let entries: Vec<Value> = col
            .iter()
            .map(|(r, s)| json!([r.to_string(), s.to_string()]))
            .collect();
        columns.insert(c.to_string(), Value::Array(entries));
    }
    json!({
        "dim": op.dim(),
        "arity": op.arity(),
        "columns": Value::Object(columns),
    })
}

#[derive(Deserialize)]
struct RawOp {
    dim: usize,
    arity: usize,
    columns: BTreeMap<String, Vec<(String, String)>>,
}

fn parse_index(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("invalid basis index `{s}`")))
}

/// Parses the operator format. Columns missing from the map are zero.
pub fn op_from_json(value: &Value, space: Option<Arc<BasedSpace>>) -> Result<TensorOp> {
    let raw: RawOp =
        serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let space = match space {
        Some(s) if s.dim() == raw.dim => s,
        Some(s) => return Err(Error::DimMismatch(s.dim(), raw.dim)),
        None => Arc::new(BasedSpace::standard(raw.dim, "e")),
    };
    let total = raw
        .dim
        .checked_pow(raw.arity as u32)
        .ok_or_else(|| Error::Parse("operator too large".into()))?;
    let mut columns = vec![Vec::new(); total];
    for (key, entries) in raw.columns {
        let c = parse_index(&key)?;
        if c >= total {
            return Err(Error::Parse(format!("column {c} out of range")));
        }
        for (r, s) in entries {
            columns[c].push((parse_index(&r)?, s.parse::<Scalar>()?));
        }
    }
    TensorOp::from_columns(space, raw.arity, columns)
}

/// Row-major matrix of scalar texts.
pub fn matrix_to_json(rows: &[Vec<Scalar>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(|s| Value::String(s.to_string())).collect()))
            .collect(),
    )
}

pub fn matrix_from_json(value: &Value) -> Result<Vec<Vec<Scalar>>> {
    let rows: Vec<Vec<Value>> =
        serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    rows.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|v| match v {
                    Value::String(s) => s.parse(),
                    Value::Number(n) => n.to_string().parse(),
                    other => Err(Error::Parse(format!("bad matrix entry {other}"))),
                })
                .collect()
        })
        .collect()
}
