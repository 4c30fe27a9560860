use super::bql;
use super::pattern::support_pattern;
use crate::error::{Error, Result};
use crate::scalars::{assignment, check_odd_prime, reduce_mod_p, scan_vectors, Rational};

const KEEP: usize = 8;

/// Outcome of testing every `n×n` matrix over an alphabet in `F_p` against
/// `B_{q,λ}` reduced mod `p`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompatScan {
    pub n: usize,
    pub p: u64,
    pub scanned: u64,
    /// Matrices whose compatibility residual vanishes mod `p`.
    pub residual_accepts: u64,
    /// Matrices whose support passes the pattern conditions.
    pub pattern_accepts: u64,
    pub residual_only: u64,
    pub pattern_only: u64,
    /// Up to eight disagreeing matrices, row-major.
    pub mismatches: Vec<Vec<u64>>,
}

impl CompatScan {
    /// Both accept sets coincide.
    pub fn agrees(&self) -> bool {
        self.residual_only == 0 && self.pattern_only == 0
    }

    fn merge(mut self, o: Self) -> Self {
        self.scanned += o.scanned;
        self.residual_accepts += o.residual_accepts;
        self.pattern_accepts += o.pattern_accepts;
        self.residual_only += o.residual_only;
        self.pattern_only += o.pattern_only;
        self.mismatches.extend(o.mismatches);
        self.mismatches.sort();
        self.mismatches.truncate(KEEP);
        self
    }
}

/// Columns of `B_{q,λ}` at rational `q, λ`, reduced mod `p`.
fn bql_mod_p(n: usize, p: u64, q: &Rational, lambda: &Rational) -> Result<Vec<Vec<(usize, u64)>>> {
    let at = assignment(&[("q", q.clone()), ("l", lambda.clone())]);
    let b = bql(n)?.instantiate(&at)?;
    b.columns()
        .iter()
        .map(|c| {
            let mut out = Vec::new();
            for (r, s) in c {
                let v = reduce_mod_p(&s.as_rational().expect("constant after instantiation"), p)?;
                if v.value() != 0 {
                    out.push((*r, v.value()));
                }
            }
            Ok(out)
        })
        .collect()
}

fn commutes(
    n: usize,
    p: u64,
    b: &[Vec<(usize, u64)>],
    a: &[u64],
    lhs: &mut [u64],
    rhs: &mut [u64],
) -> bool {
    let nn = n * n;
    for c in 0..nn {
        let (i, j) = (c / n, c % n);
        lhs.fill(0);
        rhs.fill(0);
        // α⊗α applied to B(e_i⊗e_j)
        for &(r, v) in &b[c] {
            let (r1, r2) = (r / n, r % n);
            for k in 0..n {
                let x = a[k * n + r1];
                if x == 0 {
                    continue;
                }
                let xv = x * v % p;
                for l in 0..n {
                    let y = a[l * n + r2];
                    if y != 0 {
                        let t = &mut lhs[k * n + l];
                        *t = (*t + xv * y) % p;
                    }
                }
            }
        }
        // B applied to αe_i⊗αe_j
        for k in 0..n {
            let x = a[k * n + i];
            if x == 0 {
                continue;
            }
            for l in 0..n {
                let y = a[l * n + j];
                if y == 0 {
                    continue;
                }
                let xy = x * y % p;
                for &(r, v) in &b[k * n + l] {
                    rhs[r] = (rhs[r] + xy * v) % p;
                }
            }
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Tests every `n×n` matrix with entries from `alphabet` (default all of
/// `F_p`) for `α^{⊗2}B = Bα^{⊗2}` mod `p`, and compares with the support
/// conditions.
pub fn scan_compatible(
    n: usize,
    p: u64,
    q: &Rational,
    lambda: &Rational,
    alphabet: Option<&[u64]>,
) -> Result<CompatScan> {
    check_odd_prime(p)?;
    if !(2..=8).contains(&n) {
        return Err(Error::BadDimension(n));
    }
    let b = bql_mod_p(n, p, q, lambda)?;
    let full: Vec<u64> = (0..p).collect();
    let alphabet: Vec<u64> = alphabet.map_or(full, |a| a.iter().map(|x| x % p).collect());
    let nn = n * n;
    let init = || CompatScan {
        n,
        p,
        ..Default::default()
    };
    let mut out = scan_vectors(
        nn,
        &alphabet,
        init,
        |acc, a| {
            let mut lhs = [0u64; 64];
            let mut rhs = [0u64; 64];
            let by_residual = commutes(n, p, &b, a, &mut lhs[..nn], &mut rhs[..nn]);
            let by_pattern = support_pattern(n, |k, i| a[k * n + i] != 0).is_some();
            acc.scanned += 1;
            acc.residual_accepts += by_residual as u64;
            acc.pattern_accepts += by_pattern as u64;
            if by_residual != by_pattern {
                if by_residual {
                    acc.residual_only += 1;
                } else {
                    acc.pattern_only += 1;
                }
                if acc.mismatches.len() < KEEP {
                    acc.mismatches.push(a.to_vec());
                }
            }
        },
        CompatScan::merge,
    );
    out.n = n;
    out.p = p;
    Ok(out)
}
