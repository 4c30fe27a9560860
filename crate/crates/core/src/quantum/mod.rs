//! The R-matrices `Φ_{q,λ}` on a two-dimensional space and `B_{q,λ}` on an
//! `N`-dimensional space, the maps `α` compatible with them, and the induced
//! HYBE solutions `α^{⊗2} ∘ B`.
//!
//! `q` and `λ` are the formal parameters `q` and `l`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalars::{param, rat, Scalar};
use crate::tensor::{BasedSpace, LinearMap, TensorOp};

mod oracle;
mod pattern;

pub use oracle::{scan_compatible, CompatScan};
pub use pattern::{
    check_compatible, enumerate_patterns, group_by_shape, induced_solution, maximal_patterns,
    pattern_of, CompatibleAlpha, SupportPattern,
};

pub const Q: &str = "q";
pub const LAMBDA: &str = "l";

fn q() -> Scalar {
    Scalar::var(Q)
}

fn q_inv() -> Scalar {
    Scalar::monomial(rat(1, 1), Q, -1)
}

fn lambda() -> Scalar {
    Scalar::var(LAMBDA)
}

/// The basis `v0, v1` of the two-dimensional module.
pub fn phi_space() -> Arc<BasedSpace> {
    Arc::new(BasedSpace::zero_based(2, "v"))
}

/// `Φ_{q,λ}` in the basis `v0⊗v0, v0⊗v1, v1⊗v0, v1⊗v1`.
pub fn phi() -> TensorOp {
    let ql = &q() * &lambda();
    let mid = &ql * &(q_inv() - q());
    let cols = vec![
        vec![(0, lambda())],
        vec![(1, mid), (2, ql.clone())],
        vec![(1, ql)],
        vec![(3, lambda())],
    ];
    TensorOp::from_columns(phi_space(), 2, cols).expect("well-formed columns")
}

/// `B_{q,λ}` on the space with basis `e1, ..., eN`.
pub fn bql(n: usize) -> Result<TensorOp> {
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    let space = Arc::new(BasedSpace::standard(n, "e"));
    let l = lambda();
    let diag = &l * &q();
    let cross = &l * &(q() - q_inv());
    Ok(TensorOp::from_fn(space, 2, |ij| {
        let (i, j) = (ij[0], ij[1]);
        if i == j {
            vec![(vec![i, i], diag.clone())]
        } else if i < j {
            vec![(vec![j, i], l.clone())]
        } else {
            vec![(vec![j, i], l.clone()), (vec![i, j], cross.clone())]
        }
    }))
}

/// `B_{q^{-1}, qλ}` on `N = 2`, moved to the basis of [`phi`] with
/// `e1 ↦ v1, e2 ↦ v0` when `swap_basis` is set (else `e1 ↦ v0`).
/// With `substitute_lambda` unset only `q ↦ q^{-1}` is applied.
pub fn bql_as_phi(substitute_lambda: bool, swap_basis: bool) -> TensorOp {
    let mut map = HashMap::new();
    map.insert(param(Q), q_inv());
    if substitute_lambda {
        map.insert(param(LAMBDA), &q() * &lambda());
    }
    let b = bql(2)
        .expect("dimension 2")
        .try_map_entries(|s| s.substitute(&map))
        .expect("q maps to a monomial")
        .rebase(phi_space(), 2)
        .expect("same dimension");
    if !swap_basis {
        return b;
    }
    let p = swap_map().lift(2);
    p.compose(&b)
        .and_then(|x| x.compose(&p))
        .expect("same space")
}

fn swap_map() -> LinearMap {
    LinearMap::from_columns(
        phi_space(),
        vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::one(), Scalar::zero()],
        ],
    )
    .expect("2x2")
}

/// Whether swapping `v0, v1` turns `B_{q^{-1}, qλ}` into `Φ_{q,λ}` exactly.
pub fn phi_equals_bql_swapped() -> bool {
    bql_as_phi(true, true) == phi()
}

/// The three symbolic shapes of maps compatible with [`phi`]:
/// `[[0,b],[0,0]]`, `[[0,0],[c,0]]` and `diag(a,d)`.
pub fn phi_shapes() -> Vec<LinearMap> {
    let z = Scalar::zero;
    let v = Scalar::var;
    let rows = [
        vec![vec![z(), v("b")], vec![z(), z()]],
        vec![vec![z(), z()], vec![v("c"), z()]],
        vec![vec![v("a"), z()], vec![z(), v("d")]],
    ];
    rows.into_iter()
        .map(|m| LinearMap::new(phi_space(), m).expect("2x2"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hybe::{compatibility_residual, twist, ybe_residual};
    use crate::scalars::assignment;

    #[test]
    fn phi_columns() {
        let p = phi();
        assert_eq!(p.column(0), &[(0, Scalar::var("l"))]);
        assert_eq!(p.entry(1, 2), "1*l^1*q^1".parse().unwrap());
        assert_eq!(p.entry(1, 1), "1*l^1 + -1*l^1*q^2".parse().unwrap());
        assert_eq!(p.entry(2, 1), "1*l^1*q^1".parse().unwrap());
        assert_eq!(p.entry(3, 3), Scalar::var("l"));
        assert_eq!(p.nnz(), 5);
    }

    #[test]
    fn bql_cases() {
        let b = bql(3).unwrap();
        // e3⊗e1 is column 2*3+0
        let col = b.column(6);
        assert_eq!(col.len(), 2);
        assert_eq!(b.entry(2, 6), Scalar::var("l"));
        assert_eq!(b.entry(6, 6), "1*l^1*q^1 + -1*l^1*q^-1".parse().unwrap());
        assert_eq!(bql(2).unwrap().entry(0, 0), "1*l^1*q^1".parse().unwrap());
        assert_eq!(bql(1), Err(Error::BadDimension(1)));
    }

    #[test]
    fn both_r_matrices_solve_ybe() {
        assert!(ybe_residual(&phi()).unwrap().is_zero());
        for n in 2..=3 {
            assert!(ybe_residual(&bql(n).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn phi_is_swapped_bql() {
        assert!(phi_equals_bql_swapped());
        assert_ne!(bql_as_phi(false, true), phi());
        let unswapped = bql_as_phi(true, false);
        assert_ne!(unswapped, phi());
        assert_ne!(unswapped.entry(1, 1), phi().entry(1, 1));
    }

    #[test]
    fn shapes_are_compatible_and_lower_triangle_is_not() {
        for a in phi_shapes() {
            assert!(compatibility_residual(&phi(), &a).unwrap().is_zero());
        }
        let v = Scalar::var;
        let lower = LinearMap::new(
            phi_space(),
            vec![vec![v("a"), Scalar::zero()], vec![v("c"), v("d")]],
        )
        .unwrap();
        assert!(!compatibility_residual(&phi(), &lower).unwrap().is_zero());
    }

    #[test]
    fn twisted_phi_diagonal_entries() {
        let a = &phi_shapes()[2];
        let t = twist(&phi(), a).unwrap();
        assert_eq!(t.entry(0, 0), "1*a^2*l^1".parse().unwrap());
        assert_eq!(
            t.entry(1, 1),
            "1*a^1*d^1*l^1 + -1*a^1*d^1*l^1*q^2".parse().unwrap()
        );
        assert_eq!(t.entry(2, 1), "1*a^1*d^1*l^1*q^1".parse().unwrap());
        assert_eq!(t.entry(1, 2), "1*a^1*d^1*l^1*q^1".parse().unwrap());
        assert_eq!(t.entry(3, 3), "1*d^2*l^1".parse().unwrap());
        let at = |a, d| assignment(&[("a", a), ("d", d), ("q", rat(2, 1)), ("l", rat(3, 1))]);
        assert!(t
            .instantiate(&at(rat(1, 2), rat(-3, 1)))
            .unwrap()
            .invert()
            .is_ok());
        assert_eq!(
            t.instantiate(&at(rat(0, 1), rat(5, 1))).unwrap().invert(),
            Err(Error::Singular)
        );
    }
}
