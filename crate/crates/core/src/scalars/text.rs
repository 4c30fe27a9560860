//! Text form `coef*p1^e1*p2^e2 + ...`, e.g. `1*q^-1 + -1*q^1`.
//!
//! Coefficients print as `num` or `num/den`; every parameter prints with an
//! explicit exponent. The zero scalar prints as `0`. The parser also accepts
//! bare parameters (`l` for `1*l^1`) and a missing coefficient.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::{Monomial, Param, Rational, Scalar};
use crate::error::Error;

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            f.write_str(&fmt_rational(c))?;
            for (p, e) in m.factors() {
                write!(f, "*{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn parse_term(s: &str) -> Result<(Monomial, Rational), Error> {
    let mut coef = Rational::one();
    let mut factors = Vec::new();
    for (i, piece) in s.split('*').enumerate() {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{s}`")));
        }
        let starts_numeric = piece
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_digit() || c == '-');
        if i == 0 && starts_numeric {
            coef = parse_rational(piece)?;
            continue;
        }
        let (name, exp) = match piece.split_once('^') {
            Some((n, e)) => (
                n.trim(),
                e.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("invalid exponent in `{piece}`")))?,
            ),
            None => (piece, 1),
        };
        factors.push((Param::new(name)?, exp));
    }
    Ok((Monomial::from_factors(factors), coef))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut terms = Vec::new();
        for t in s.split('+') {
            terms.push(parse_term(t.trim())?);
        }
        Ok(Scalar::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn formats_terms_in_canonical_order() {
        let q = Scalar::var("q");
        let qinv = Scalar::monomial(rat(1, 1), "q", -1);
        assert_eq!((&qinv - &q).to_string(), "1*q^-1 + -1*q^1");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::from_rational(rat(-3, 4)).to_string(), "-3/4");
    }

    #[test]
    fn parses_loose_forms() {
        let s: Scalar = "l".parse().unwrap();
        assert_eq!(s, Scalar::var("l"));
        let s: Scalar = "1*q^-1 + -1*q^1".parse().unwrap();
        assert_eq!(s.to_string(), "1*q^-1 + -1*q^1");
        let s: Scalar = "2/4*a^1*b^2 + 1/2*b^2*a".parse().unwrap();
        assert_eq!(s.to_string(), "1*a^1*b^2");
        let s: Scalar = "0".parse().unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn rejects_garbage() {
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("q^x".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
        assert!("3*".parse::<Scalar>().is_err());
    }
}
