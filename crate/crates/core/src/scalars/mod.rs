//! Exact coefficients: multivariate Laurent polynomials over the rationals.
//!
//! A [`Scalar`] is a finite sum of terms `c * p1^e1 * p2^e2 * ...` where the
//! `c` are reduced rationals and the exponents are arbitrary integers. Terms
//! are kept sorted by monomial and never carry a zero coefficient, so two
//! scalars are equal exactly when their term lists are equal.

mod prime;
mod scan;
mod text;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use prime::{check_odd_prime, pow_mod, reduce_mod_p, PrimeFieldElement};
pub use scan::scan_vectors;

pub type Rational = num_rational::BigRational;

/// Builds a reduced rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A formal parameter name such as `q`, `l` (for lambda) or `a12`.
///
/// Names are ASCII identifiers of at most 15 bytes, stored inline so that
/// parameters are `Copy` and compare without touching the heap.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Param {
    bytes: [u8; 15],
    len: u8,
}

impl Param {
    pub fn new(name: &str) -> Result<Self> {
        let ok_start = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic());
        let ok_rest = name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok_start || !ok_rest || name.len() > 15 {
            return Err(Error::Parse(format!("invalid parameter name `{name}`")));
        }
        let mut bytes = [0u8; 15];
        bytes[..name.len()].copy_from_slice(name.as_bytes());
        Ok(Self {
            bytes,
            len: name.len() as u8,
        })
    }

    pub fn as_str(&self) -> &str {
        // construction guarantees ASCII
        std::str::from_utf8(&self.bytes[..self.len as usize]).unwrap()
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exponent vector: parameters with nonzero exponent, sorted by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Param, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(p: Param, exp: i32) -> Self {
        if exp == 0 {
            Self::one()
        } else {
            Self(vec![(p, exp)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Param, i32)] {
        &self.0
    }

    fn from_factors(mut factors: Vec<(Param, i32)>) -> Self {
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Param, i32)> = Vec::with_capacity(factors.len());
        for (p, e) in factors {
            match out.last_mut() {
                Some((lp, le)) if *lp == p => *le += e,
                _ => out.push((p, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Self(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self(out)
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().map(|&(p, e)| (p, -e)).collect())
    }

    pub fn exponent(&self, p: Param) -> i32 {
        self.0.iter().find(|(q, _)| *q == p).map_or(0, |&(_, e)| e)
    }
}

/// A parameter-to-rational assignment used for evaluation and instantiation.
pub type Assignment = HashMap<Param, Rational>;

/// Builds an assignment from `(name, value)` pairs.
pub fn assignment(pairs: &[(&str, Rational)]) -> Assignment {
    pairs.iter().map(|(n, v)| (param(n), v.clone())).collect()
}

/// Shorthand for [`Param::new`] on names known to be valid.
pub fn param(name: &str) -> Param {
    Param::new(name).expect("valid parameter name")
}

/// Multivariate Laurent polynomial with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    terms: Vec<(Monomial, Rational)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::term(Monomial::one(), r)
    }

    /// The parameter `name` to the first power.
    pub fn var(name: &str) -> Self {
        Self::term(Monomial::var(param(name), 1), Rational::one())
    }

    /// `coef * name^exp`.
    pub fn monomial(coef: Rational, name: &str, exp: i32) -> Self {
        Self::term(Monomial::var(param(name), exp), coef)
    }

    pub fn term(m: Monomial, coef: Rational) -> Self {
        if coef.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(m, coef)],
            }
        }
    }

    /// Builds a scalar from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// `Some(c)` when the scalar does not depend on any parameter.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Inverse of a single-term scalar; these are exactly the units of the ring.
    pub fn monomial_inverse(&self) -> Result<Self> {
        match self.terms.as_slice() {
            [(m, c)] => Ok(Self::term(m.inverse(), c.recip())),
            _ => Err(Error::NotAMonomial(self.to_string())),
        }
    }

    pub fn params(&self) -> Vec<Param> {
        let mut ps: Vec<Param> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.factors().iter().map(|&(p, _)| p))
            .collect();
        ps.sort();
        ps.dedup();
        ps
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Integer power; negative powers require a monomial.
    pub fn powi(&self, k: i32) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.monomial_inverse()?.pow(k.unsigned_abs()))
        }
    }

    /// Exact rational value under `assignment`.
    pub fn eval(&self, assignment: &Assignment) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(p, e) in m.factors() {
                let x = assignment
                    .get(&p)
                    .ok_or_else(|| Error::MissingParameter(p.to_string()))?;
                if x.is_zero() {
                    if e < 0 {
                        return Err(Error::ZeroAtNegativeExponent(p.to_string()));
                    }
                    v = Rational::zero();
                    break;
                }
                v *= pow_rational(x, e);
            }
            total += v;
        }
        Ok(total)
    }

    /// Replaces the assigned parameters by their values, leaving the others
    /// symbolic.
    pub fn instantiate(&self, assignment: &Assignment) -> Result<Self> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut rest = Vec::new();
            for &(p, e) in m.factors() {
                match assignment.get(&p) {
                    Some(x) if x.is_zero() && e < 0 => {
                        return Err(Error::ZeroAtNegativeExponent(p.to_string()))
                    }
                    Some(x) => coef *= pow_rational(x, e),
                    None => rest.push((p, e)),
                }
            }
            out.push((Monomial(rest), coef));
        }
        Ok(Self::from_terms(out))
    }

    /// Substitutes scalars for parameters. Parameters that occur with a
    /// negative exponent must be mapped to monomials.
    pub fn substitute(&self, map: &HashMap<Param, Scalar>) -> Result<Self> {
        let mut total = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::from_rational(c.clone());
            for &(p, e) in m.factors() {
                let factor = match map.get(&p) {
                    Some(s) => s.powi(e)?,
                    None => Self::term(Monomial::var(p, e), Rational::one()),
                };
                t = &t * &factor;
            }
            total += &t;
        }
        Ok(total)
    }
}

fn pow_rational(x: &Rational, e: i32) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Scalar { terms: out }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if let [(m, c)] = self.terms.as_slice() {
            if m.is_one() {
                return rhs.scale(c);
            }
        }
        if let [(m, c)] = rhs.terms.as_slice() {
            if m.is_one() {
                return self.scale(c);
            }
        }
        Scalar::from_terms(
            self.terms
                .iter()
                .flat_map(|(ma, ca)| rhs.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb))),
        )
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}
