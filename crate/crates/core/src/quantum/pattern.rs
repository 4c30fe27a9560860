use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use super::{lambda, q, q_inv};
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::tensor::{BasedSpace, LinearMap, TensorOp};

/// Support of a map compatible with `B_{q,λ}`: column `i` is either zero or
/// has its only nonzero entry in row `k(i)`, and `k` is strictly increasing
/// on the nonzero columns. Indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportPattern {
    rows: Vec<Option<usize>>,
}

impl SupportPattern {
    pub fn new(n: usize, rows: Vec<Option<usize>>) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::InvalidPattern(format!(
                "expected {n} columns, got {}",
                rows.len()
            )));
        }
        let mut last: Option<usize> = None;
        for (i, r) in rows.iter().enumerate() {
            let Some(r) = *r else { continue };
            if r >= n {
                return Err(Error::InvalidPattern(format!(
                    "row {} of column {} out of range",
                    r + 1,
                    i + 1
                )));
            }
            if last.is_some_and(|l| l >= r) {
                return Err(Error::InvalidPattern(format!(
                    "rows not strictly increasing at column {}",
                    i + 1
                )));
            }
            last = Some(r);
        }
        Ok(Self { rows })
    }

    /// The total pattern `k = identity`.
    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(Some).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `k(i)`, or `None` for a zero column.
    pub fn row(&self, i: usize) -> Option<usize> {
        self.rows[i]
    }

    pub fn rows(&self) -> &[Option<usize>] {
        &self.rows
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.rows[i].is_some())
            .collect()
    }

    pub fn is_total(&self) -> bool {
        self.rows.iter().all(Option::is_some)
    }

    /// Whether `self` agrees with `other` on `other`'s support.
    pub fn extends(&self, other: &Self) -> bool {
        self.dim() == other.dim()
            && other
                .rows
                .iter()
                .zip(&self.rows)
                .all(|(o, s)| o.is_none() || o == s)
    }

    pub fn to_json(&self) -> Value {
        let k: Map<String, Value> = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.map(|r| ((i + 1).to_string(), Value::from((r + 1).to_string()))))
            .collect();
        json!({ "N": self.dim(), "k": k })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("pattern: {m}"));
        let n = value
            .get("N")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing N"))? as usize;
        let mut rows = vec![None; n];
        if let Some(k) = value.get("k") {
            let k = k.as_object().ok_or_else(|| bad("k must be an object"))?;
            for (i, r) in k {
                let i: usize = i.parse().map_err(|_| bad("bad column index"))?;
                let r = match r {
                    Value::String(s) => s.parse::<usize>().map_err(|_| bad("bad row index"))?,
                    Value::Number(x) => x.as_u64().ok_or_else(|| bad("bad row index"))? as usize,
                    _ => return Err(bad("bad row index")),
                };
                if i == 0 || i > n || r == 0 {
                    return Err(bad("indices are 1-based and within N"));
                }
                rows[i - 1] = Some(r - 1);
            }
        }
        Self::new(n, rows)
    }
}

impl fmt::Display for SupportPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.map(|r| format!("k({})={}", i + 1, r + 1)))
            .collect();
        if parts.is_empty() {
            write!(f, "{{}}")
        } else {
            write!(f, "{{{}}}", parts.join(", "))
        }
    }
}

/// Every support pattern on `n` columns, in lexicographic order with zero
/// columns first.
pub fn enumerate_patterns(n: usize) -> Vec<SupportPattern> {
    fn go(
        n: usize,
        i: usize,
        next_row: usize,
        cur: &mut Vec<Option<usize>>,
        out: &mut Vec<SupportPattern>,
    ) {
        if i == n {
            out.push(SupportPattern { rows: cur.clone() });
            return;
        }
        cur.push(None);
        go(n, i + 1, next_row, cur, out);
        cur.pop();
        for r in next_row..n {
            cur.push(Some(r));
            go(n, i + 1, r + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Patterns that no other pattern strictly extends.
pub fn maximal_patterns(n: usize) -> Vec<SupportPattern> {
    let all = enumerate_patterns(n);
    all.iter()
        .filter(|p| !all.iter().any(|o| o != *p && o.extends(p)))
        .cloned()
        .collect()
}

/// Partitions all patterns by the first maximal pattern (in enumeration
/// order) extending each one.
pub fn group_by_shape(n: usize) -> Vec<(SupportPattern, Vec<SupportPattern>)> {
    let mut groups: Vec<(SupportPattern, Vec<SupportPattern>)> = maximal_patterns(n)
        .into_iter()
        .map(|m| (m, Vec::new()))
        .collect();
    for p in enumerate_patterns(n) {
        let g = groups
            .iter_mut()
            .find(|(m, _)| m.extends(&p))
            .expect("every pattern extends to a maximal one");
        g.1.push(p);
    }
    groups
}

/// Support pattern of an `n×n` matrix given by its nonzero test, if the
/// support is compatible.
pub(crate) fn support_pattern<F>(n: usize, nonzero: F) -> Option<SupportPattern>
where
    F: Fn(usize, usize) -> bool,
{
    let mut rows = Vec::with_capacity(n);
    let mut last: Option<usize> = None;
    for i in 0..n {
        let mut found = None;
        for k in 0..n {
            if nonzero(k, i) {
                if found.is_some() {
                    return None;
                }
                found = Some(k);
            }
        }
        if let Some(k) = found {
            if last.is_some_and(|l| l >= k) {
                return None;
            }
            last = Some(k);
        }
        rows.push(found);
    }
    Some(SupportPattern { rows })
}

/// `α` split into pattern and values, if its support is compatible.
pub fn pattern_of(alpha: &LinearMap) -> Option<CompatibleAlpha> {
    let n = alpha.dim();
    let pattern = support_pattern(n, |k, i| !alpha.entry(k, i).is_zero())?;
    let values = pattern
        .support()
        .into_iter()
        .map(|i| (i, alpha.entry(pattern.rows[i].unwrap(), i).clone()))
        .collect();
    Some(CompatibleAlpha {
        pattern,
        values,
        space: alpha.space().clone(),
    })
}

/// Whether `α`'s support has at most one nonzero per column and strictly
/// increasing rows along the nonzero columns.
pub fn check_compatible(alpha: &LinearMap) -> bool {
    pattern_of(alpha).is_some()
}

/// A map compatible with `B_{q,λ}`: a pattern plus the value `a_i` of each
/// nonzero column.
#[derive(Clone, Debug, PartialEq)]
pub struct CompatibleAlpha {
    pattern: SupportPattern,
    values: BTreeMap<usize, Scalar>,
    space: Arc<BasedSpace>,
}

impl CompatibleAlpha {
    pub fn new(pattern: SupportPattern, values: BTreeMap<usize, Scalar>) -> Result<Self> {
        let support = pattern.support();
        if !values.keys().copied().eq(support.iter().copied()) {
            return Err(Error::InvalidPattern(
                "values must be keyed exactly by the support".into(),
            ));
        }
        let space = Arc::new(BasedSpace::standard(pattern.dim(), "e"));
        Ok(Self {
            pattern,
            values,
            space,
        })
    }

    /// Values `a_{k(i),i}` as parameters named `a{k}{i}` (1-based).
    pub fn symbolic(pattern: SupportPattern) -> Self {
        let values = pattern
            .support()
            .into_iter()
            .map(|i| {
                let k = pattern.rows[i].unwrap();
                let name = if pattern.dim() < 10 {
                    format!("a{}{}", k + 1, i + 1)
                } else {
                    format!("a{}x{}", k + 1, i + 1)
                };
                (i, Scalar::var(&name))
            })
            .collect();
        Self::new(pattern, values).expect("keys match support")
    }

    pub fn pattern(&self) -> &SupportPattern {
        &self.pattern
    }

    pub fn values(&self) -> &BTreeMap<usize, Scalar> {
        &self.values
    }

    pub fn to_linear_map(&self) -> LinearMap {
        let n = self.pattern.dim();
        let cols = (0..n)
            .map(|i| {
                let mut col = vec![Scalar::zero(); n];
                if let Some(k) = self.pattern.rows[i] {
                    col[k] = self.values[&i].clone();
                }
                col
            })
            .collect();
        LinearMap::from_columns(self.space.clone(), cols).expect("square")
    }
}

/// `α^{⊗2} ∘ B_{q,λ}` from its closed form.
pub fn induced_solution(alpha: &CompatibleAlpha) -> Result<TensorOp> {
    let n = alpha.pattern.dim();
    if n < 2 {
        return Err(Error::InvalidPattern(format!("dimension {n} below 2")));
    }
    let l = lambda();
    let cross = q() - q_inv();
    let k = &alpha.pattern.rows;
    Ok(TensorOp::from_fn(alpha.space.clone(), 2, |ij| {
        let (i, j) = (ij[0], ij[1]);
        let (Some(ki), Some(kj)) = (k[i], k[j]) else {
            return Vec::new();
        };
        let ai_aj = &l * &(&alpha.values[&i] * &alpha.values[&j]);
        if i == j {
            vec![(vec![ki, ki], &ai_aj * &q())]
        } else if i < j {
            vec![(vec![kj, ki], ai_aj)]
        } else {
            let c = &ai_aj * &cross;
            vec![(vec![kj, ki], ai_aj), (vec![ki, kj], c)]
        }
    }))
}
