use std::fs::File;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use hombrax_core::homlie::HomLieAlgebra;
use hombrax_core::tensor::{matrix_from_json, matrix_to_json, op_from_json, op_to_json};
use hombrax_core::yd::YdModule;
use hombrax_core::{BasedSpace, Error, LinearMap, Scalar, TensorOp};
use serde_json::Value;

use crate::InputArg;

/// A failure that ends the command: code 2 for usage and input problems,
/// 1 for mathematical failures surfaced as errors.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::InvalidPrime(_)
            | Error::BadDimension(_)
            | Error::InvalidPermutation(_)
            | Error::IndexOutOfRange { .. }
            | Error::ConstraintViolated(_)
            | Error::DimMismatch(..)
            | Error::ArityMismatch(..)
            | Error::SpaceMismatch
            | Error::MissingParameter(_)
            | Error::InvalidPattern(_) => 2,
            _ => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self::usage(e.to_string())
    }
}

/// Buffered output, flushed to standard output or `--out` at the end.
pub struct Output {
    path: Option<PathBuf>,
    buf: String,
}

impl Output {
    pub fn new(path: Option<&Path>) -> Result<Self, CliError> {
        Ok(Self {
            path: path.map(Path::to_path_buf),
            buf: String::new(),
        })
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }

    pub fn json(&mut self, v: &Value) {
        self.line(serde_json::to_string_pretty(v).expect("serializable"));
    }

    pub fn finish(self) -> Result<(), CliError> {
        match self.path {
            Some(p) => File::create(&p)
                .and_then(|mut f| f.write_all(self.buf.as_bytes()))
                .map_err(|e| CliError::usage(format!("{}: {e}", p.display()))),
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(self.buf.as_bytes())?;
                Ok(stdout.flush()?)
            }
        }
    }
}

pub fn read_json(arg: &InputArg) -> Result<Value, CliError> {
    let mut text = String::new();
    match arg.input.as_deref() {
        Some(p) if p != Path::new("-") => {
            File::open(p)
                .and_then(|mut f| f.read_to_string(&mut text))
                .map_err(|e| CliError::usage(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("invalid JSON: {e}")))
}

/// The kinds of JSON document the CLI understands.
pub enum Input {
    Op(TensorOp),
    Pair(TensorOp, LinearMap),
    Algebra(HomLieAlgebra),
    Yd(YdModule),
}

fn labels_of(v: &Value) -> Result<Option<Arc<BasedSpace>>, CliError> {
    match v.get("labels") {
        None => Ok(None),
        Some(Value::Array(ls)) => {
            let labels = ls
                .iter()
                .map(|l| {
                    l.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| CliError::usage("labels must be strings"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Some(Arc::new(BasedSpace::new(labels)?)))
        }
        Some(_) => Err(CliError::usage("labels must be an array")),
    }
}

pub fn parse_input(v: &Value) -> Result<Input, CliError> {
    if v.get("bialgebra").is_some() {
        return Ok(Input::Yd(YdModule::from_json_unchecked(v)?));
    }
    if let Some(b) = v.get("b") {
        let b = op_from_json(b, labels_of(v)?)?;
        if b.arity() != 2 {
            return Err(CliError::usage("operator `b` must have arity 2"));
        }
        let alpha = match v.get("alpha") {
            Some(a) => LinearMap::new(b.space().clone(), matrix_from_json(a)?)?,
            None => LinearMap::identity(b.space().clone()),
        };
        return Ok(Input::Pair(b, alpha));
    }
    if v.get("columns").is_some() {
        return Ok(Input::Op(op_from_json(v, labels_of(v)?)?));
    }
    if v.get("c").is_some() || v.get("alpha").is_some() {
        return Ok(Input::Algebra(HomLieAlgebra::from_json_unchecked(v)?));
    }
    Err(CliError::usage("unrecognised JSON document"))
}

/// `"a,0;0,d"`: rows separated by `;`, entries by `,`.
pub fn parse_matrix(text: &str, space: Arc<BasedSpace>) -> Result<LinearMap, CliError> {
    let rows = text
        .split(';')
        .map(|r| {
            r.split(',')
                .map(|s| s.trim().parse::<Scalar>())
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if rows.len() != space.dim() || rows.iter().any(|r| r.len() != space.dim()) {
        return Err(CliError::usage(format!(
            "alpha must be {0}×{0}",
            space.dim()
        )));
    }
    Ok(LinearMap::new(space, rows)?)
}

pub fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::usage(format!("bad {what} `{}`", s.trim())))
        })
        .collect()
}

pub fn pair_json(b: &TensorOp, alpha: &LinearMap) -> Value {
    serde_json::json!({
        "labels": b.space().labels(),
        "b": op_to_json(b),
        "alpha": matrix_to_json(alpha.matrix()),
    })
}

pub fn op_json_labelled(op: &TensorOp) -> Value {
    let mut v = op_to_json(op);
    v["labels"] = serde_json::json!(op.space().labels());
    v
}
