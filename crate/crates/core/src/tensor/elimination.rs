use crate::error::{Error, Result};
use crate::scalars::Scalar;

fn is_unit(s: &Scalar) -> bool {
    s.is_monomial()
}

/// Gauss-Jordan inverse of a square matrix of scalars, `m[row][col]`.
///
/// Pivots are restricted to units of the Laurent ring (single-term scalars),
/// searched over the whole remaining block with column exchanges. A nonzero
/// constant is always a unit, so constant matrices behave as over the
/// rationals.
pub fn invert_dense(m: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::DimMismatch(n, m.first().map_or(0, Vec::len)));
    }
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    // col_perm[k] = original column now stored at position k
    let mut col_perm: Vec<usize> = (0..n).collect();

    for k in 0..n {
        let mut pivot = None;
        let mut any_nonzero = false;
        'search: for c in k..n {
            for r in k..n {
                if a[r][c].is_zero() {
                    continue;
                }
                any_nonzero = true;
                if is_unit(&a[r][c]) {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let (pr, pc) = match pivot {
            Some(p) => p,
            None if any_nonzero => return Err(Error::SymbolicNotMonomialInvertible),
            None => return Err(Error::Singular),
        };
        a.swap(k, pr);
        inv.swap(k, pr);
        if pc != k {
            for row in a.iter_mut() {
                row.swap(k, pc);
            }
            col_perm.swap(k, pc);
        }
        let p_inv = a[k][k].monomial_inverse()?;
        for x in a[k].iter_mut() {
            *x = &*x * &p_inv;
        }
        for x in inv[k].iter_mut() {
            *x = &*x * &p_inv;
        }
        let pivot_row = a[k].clone();
        let pivot_inv_row = inv[k].clone();
        for r in 0..n {
            if r == k || a[r][k].is_zero() {
                continue;
            }
            let f = a[r][k].clone();
            for c in 0..n {
                if !pivot_row[c].is_zero() {
                    a[r][c] = &a[r][c] - &(&f * &pivot_row[c]);
                }
                if !pivot_inv_row[c].is_zero() {
                    inv[r][c] = &inv[r][c] - &(&f * &pivot_inv_row[c]);
                }
            }
        }
    }
    // A Q = P^{-1}... with Q the column exchange: (AQ)^{-1} = Q^{-1} A^{-1},
    // so row k of the computed inverse is row col_perm[k] of A^{-1}.
    let mut out = vec![Vec::new(); n];
    for (k, row) in inv.into_iter().enumerate() {
        out[col_perm[k]] = row;
    }
    Ok(out)
}
