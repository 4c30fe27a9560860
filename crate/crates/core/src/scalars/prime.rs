use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Residue class modulo an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u64,
    modulus: u64,
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Checks that `p` is a prime other than 2.
pub fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        Err(Error::InvalidPrime(p))
    } else {
        Ok(())
    }
}

impl PrimeFieldElement {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        check_odd_prime(modulus)?;
        Ok(Self {
            value: value.rem_euclid(modulus as i64) as u64,
            modulus,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn add(self, o: Self) -> Self {
        Self {
            value: (self.value + o.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn mul(self, o: Self) -> Self {
        Self {
            value: (self.value * o.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    /// Multiplicative inverse by Fermat; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        Some(Self {
            value: pow_mod(self.value, self.modulus - 2, self.modulus),
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Image of a rational in F_p.
pub fn reduce_mod_p(x: &Rational, p: u64) -> Result<PrimeFieldElement> {
    check_odd_prime(p)?;
    let pb = BigInt::from(p);
    let den = x.denom().mod_floor(&pb);
    if den.is_zero() {
        return Err(Error::DenominatorDivisibleByP(p));
    }
    let num = x.numer().mod_floor(&pb).to_u64().unwrap();
    let den = den.to_u64().unwrap();
    let inv = pow_mod(den, p - 2, p);
    Ok(PrimeFieldElement {
        value: num * inv % p,
        modulus: p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn reduces_fractions() {
        assert_eq!(reduce_mod_p(&rat(1, 2), 5).unwrap().value(), 3);
        assert_eq!(reduce_mod_p(&rat(-1, 1), 5).unwrap().value(), 4);
        assert_eq!(
            reduce_mod_p(&rat(1, 5), 5),
            Err(Error::DenominatorDivisibleByP(5))
        );
        assert_eq!(reduce_mod_p(&rat(7, 3), 7).unwrap().value(), 0);
    }

    #[test]
    fn rejects_two_and_composites() {
        assert_eq!(reduce_mod_p(&rat(1, 1), 2), Err(Error::InvalidPrime(2)));
        assert_eq!(check_odd_prime(9), Err(Error::InvalidPrime(9)));
        assert!(check_odd_prime(7).is_ok());
    }

    #[test]
    fn field_inverse() {
        for v in 1..7 {
            let x = PrimeFieldElement::new(v, 7).unwrap();
            assert_eq!(x.mul(x.inverse().unwrap()).value(), 1);
        }
        assert!(PrimeFieldElement::new(0, 7).unwrap().inverse().is_none());
    }
}
