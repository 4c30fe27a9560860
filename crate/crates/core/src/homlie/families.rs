use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use super::{Bracket, LieAlgebra};
use crate::error::{Error, Result};
use crate::scalars::{rat, Rational, Scalar};
use crate::tensor::{BasedSpace, LinearMap};

pub(crate) fn xyz() -> Arc<BasedSpace> {
    Arc::new(BasedSpace::new(vec!["X".into(), "Y".into(), "Z".into()]).expect("distinct labels"))
}

fn vec3(x: Rational, y: Rational, z: Rational) -> Vec<Scalar> {
    vec![x.into(), y.into(), z.into()]
}

fn algebra(upper: [[i64; 2]; 9]) -> LieAlgebra {
    // upper[3*pair + k] = (num, den) of the k-th coordinate of [x_i, x_j],
    // pairs ordered (X,Y), (X,Z), (Y,Z)
    let b = Bracket::from_upper(xyz(), |i, j| {
        let pair = match (i, j) {
            (0, 1) => 0,
            (0, 2) => 1,
            _ => 2,
        };
        (0..3)
            .map(|k| {
                let [n, d] = upper[3 * pair + k];
                Scalar::from_rational(rat(n, d))
            })
            .collect()
    });
    LieAlgebra::new(b).expect("Jacobi holds")
}

/// `[Y,Z] = X`, `X` central.
pub fn heisenberg() -> LieAlgebra {
    algebra([
        [0, 1],
        [0, 1],
        [0, 1],
        [0, 1],
        [0, 1],
        [0, 1],
        [1, 1],
        [0, 1],
        [0, 1],
    ])
}

/// `[Y,Z] = 0`, `[Y,X] = Y/2`, `[Z,X] = Z/2`.
pub fn sl2_star() -> LieAlgebra {
    algebra([
        [0, 1],
        [-1, 2],
        [0, 1],
        [0, 1],
        [0, 1],
        [-1, 2],
        [0, 1],
        [0, 1],
        [0, 1],
    ])
}

/// `[X,Y] = 2Y`, `[X,Z] = -2Z`, `[Y,Z] = X`.
pub fn sl2() -> LieAlgebra {
    algebra([
        [0, 1],
        [2, 1],
        [0, 1],
        [0, 1],
        [0, 1],
        [-2, 1],
        [1, 1],
        [0, 1],
        [0, 1],
    ])
}

/// The Heisenberg morphism with `α(X) = (a22·a33 - a23·a32)X`,
/// `α(Y) = a12X + a22Y + a32Z` and `α(Z) = a13X + a23Y + a33Z`.
pub fn heisenberg_morphism(
    a12: &Scalar,
    a13: &Scalar,
    a22: &Scalar,
    a23: &Scalar,
    a32: &Scalar,
    a33: &Scalar,
) -> LinearMap {
    let delta = &(a22 * a33) - &(a23 * a32);
    let z = Scalar::zero;
    LinearMap::from_columns(
        xyz(),
        vec![
            vec![delta, z(), z()],
            vec![a12.clone(), a22.clone(), a32.clone()],
            vec![a13.clone(), a23.clone(), a33.clone()],
        ],
    )
    .expect("3x3")
}

/// Morphisms of `sl(2)*`.
///
/// Kind 1 takes `[a21, a22, a23, a31, a32, a33]` and gives
/// `α(X) = X + a21Y + a31Z` with `α(Y), α(Z)` in the span of `Y, Z`.
/// Kind 2 takes `[a11, a21, a31]` with `a11 ≠ 1` and kills `Y` and `Z`.
pub fn sl2_star_morphism(kind: u8, params: &[Scalar]) -> Result<LinearMap> {
    let z = Scalar::zero;
    let cols = match (kind, params) {
        (1, [a21, a22, a23, a31, a32, a33]) => vec![
            vec![Scalar::one(), a21.clone(), a31.clone()],
            vec![z(), a22.clone(), a32.clone()],
            vec![z(), a23.clone(), a33.clone()],
        ],
        (2, [a11, a21, a31]) => {
            if (a11 - &Scalar::one()).is_zero() {
                return Err(Error::ConstraintViolated("kind 2 needs a11 != 1".into()));
            }
            vec![
                vec![a11.clone(), a21.clone(), a31.clone()],
                vec![z(), z(), z()],
                vec![z(), z(), z()],
            ]
        }
        (1, _) => {
            return Err(Error::ConstraintViolated(
                "kind 1 takes six parameters".into(),
            ))
        }
        (2, _) => {
            return Err(Error::ConstraintViolated(
                "kind 2 takes three parameters".into(),
            ))
        }
        _ => return Err(Error::ConstraintViolated(format!("unknown kind {kind}"))),
    };
    Ok(LinearMap::from_columns(xyz(), cols).expect("3x3"))
}

/// Morphisms of `sl(2)`: kind 0 is the zero map; kinds 1 and 2 need `b ≠ 0`
/// and `ac = 0`; kind 3 needs `ab ≠ 0` and `c ≠ ±1`.
pub fn sl2_morphism(kind: u8, a: &Rational, b: &Rational, c: &Rational) -> Result<LinearMap> {
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    let two = Rational::from_integer(2.into());
    let four = Rational::from_integer(4.into());
    let cols = match kind {
        0 => return Ok(LinearMap::zero(xyz())),
        1 | 2 => {
            if *b == zero || a * c != zero {
                return Err(Error::ConstraintViolated(format!(
                    "kind {kind} needs b != 0 and ac = 0"
                )));
            }
            let bi = b.recip();
            if kind == 1 {
                vec![
                    vec3(one.clone(), -&two * a * b, -&two * &bi * c),
                    vec3(c.clone(), b.clone(), -&bi * c * c),
                    vec3(a.clone(), -(a * a * b), bi.clone()),
                ]
            } else {
                vec![
                    vec3(-&one, &two * &bi * c, &two * a * b),
                    vec3(c.clone(), -&bi * c * c, b.clone()),
                    vec3(a.clone(), bi.clone(), -(a * a * b)),
                ]
            }
        }
        3 => {
            if a * b == zero || *c == one || *c == -&one {
                return Err(Error::ConstraintViolated(
                    "kind 3 needs ab != 0 and c != 1, -1".into(),
                ));
            }
            let cm = c - &one;
            let cp = c + &one;
            vec![
                vec3(c.clone(), b.clone(), (&one - c * c) / b),
                vec3(a.clone(), a * b / &cm, a * (&one - c) / b),
                vec3(
                    -(&cm * &cp) / (&four * a),
                    -(b * &cm) / (&four * a),
                    &cm * &cp * &cp / (&four * a * b),
                ),
            ]
        }
        _ => return Err(Error::ConstraintViolated(format!("unknown kind {kind}"))),
    };
    Ok(LinearMap::from_columns(xyz(), cols).expect("3x3"))
}

/// The nine polynomial conditions on the entries `a_ij` (1-based) of a map
/// `sl(2) → sl(2)` to be a morphism, as `lhs - rhs`.
pub(crate) fn nine<T, A>(a: A, one: T, two: T) -> [T; 9]
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
    A: Fn(usize, usize) -> T,
{
    let a11 = a(1, 1);
    let (a12, a13, a21, a22, a23, a31, a32, a33) = (
        a(1, 2),
        a(1, 3),
        a(2, 1),
        a(2, 2),
        a(2, 3),
        a(3, 1),
        a(3, 2),
        a(3, 3),
    );
    let am = a11.clone() - one.clone();
    let ap = a11.clone() + one;
    [
        a21.clone() * a32.clone() - a22.clone() * a31.clone() - two.clone() * a12.clone(),
        a12.clone() * a21.clone() - a22.clone() * am.clone(),
        a12.clone() * a31.clone() - a32.clone() * ap.clone(),
        a21.clone() * a33.clone() - a23.clone() * a31.clone() + two.clone() * a13.clone(),
        a13.clone() * a21.clone() - a23.clone() * ap,
        a13.clone() * a31.clone() - a33.clone() * am,
        a11 - (a22.clone() * a33.clone() - a23.clone() * a32.clone()),
        a21 - two.clone() * (a12.clone() * a23 - a13.clone() * a22),
        a31 - two * (a13 * a32 - a12 * a33),
    ]
}

/// Residuals of the nine morphism equations for `sl(2)`.
pub fn sl2_morphism_equations(alpha: &LinearMap) -> [Scalar; 9] {
    nine(
        |i, j| alpha.entry(i - 1, j - 1).clone(),
        Scalar::one(),
        Scalar::from_int(2),
    )
}
