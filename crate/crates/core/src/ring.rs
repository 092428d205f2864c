//! Coefficient rings: the integers, the residue rings Z/m, and the
//! semi-local rings Z_(n) in which every integer coprime to n is inverted.
//!
//! Elements of every ring are carried as [`BigRational`] values in canonical
//! form: integers for Z, residues in `[0, m)` for Z/m and reduced fractions
//! with denominator coprime to n for Z_(n).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use serde_with::{DeserializeFromStr, SerializeDisplay};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, SerializeDisplay, DeserializeFromStr)]
pub enum CoefficientRing {
    Integers,
    IntegersMod(u64),
    LocalizedIntegers(u64),
}

impl CoefficientRing {
    pub fn integers_mod(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidRing(format!("Z/{m} requires m >= 2")));
        }
        Ok(CoefficientRing::IntegersMod(m))
    }

    pub fn localized(n: u64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidRing("Z_(n) requires n >= 1".into()));
        }
        Ok(CoefficientRing::LocalizedIntegers(n))
    }

    /// The modulus of Z/m, if this is a residue ring.
    pub fn modulus(&self) -> Option<u64> {
        match self {
            CoefficientRing::IntegersMod(m) => Some(*m),
            _ => None,
        }
    }

    pub fn is_localized(&self) -> bool {
        matches!(self, CoefficientRing::LocalizedIntegers(_))
    }

    pub fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    pub fn one(&self) -> BigRational {
        BigRational::one()
    }

    pub fn from_i64(&self, x: i64) -> BigRational {
        self.from_bigint(&BigInt::from(x))
    }

    pub fn from_bigint(&self, x: &BigInt) -> BigRational {
        match self {
            CoefficientRing::IntegersMod(m) => {
                BigRational::from_integer(x.mod_floor(&BigInt::from(*m)))
            }
            _ => BigRational::from_integer(x.clone()),
        }
    }

    /// Brings an arbitrary rational into canonical form, failing if it does
    /// not represent an element of the ring.
    pub fn normalize(&self, x: &BigRational) -> Result<BigRational> {
        match self {
            CoefficientRing::Integers => {
                if x.is_integer() {
                    Ok(x.clone())
                } else {
                    Err(self.not_in_ring(x))
                }
            }
            CoefficientRing::IntegersMod(m) => {
                let m = BigInt::from(*m);
                let num = x.numer().mod_floor(&m);
                if x.is_integer() {
                    return Ok(BigRational::from_integer(num));
                }
                let inv = mod_inverse(x.denom(), &m).ok_or_else(|| self.not_in_ring(x))?;
                Ok(BigRational::from_integer((num * inv).mod_floor(&m)))
            }
            CoefficientRing::LocalizedIntegers(n) => {
                if x.denom().gcd(&BigInt::from(*n)).is_one() {
                    Ok(x.clone())
                } else {
                    Err(self.not_in_ring(x))
                }
            }
        }
    }

    fn not_in_ring(&self, x: &BigRational) -> Error {
        Error::NotInRing {
            value: x.to_string(),
            ring: self.to_string(),
        }
    }

    pub fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        match self {
            CoefficientRing::IntegersMod(_) => self.from_bigint(&(a.numer() + b.numer())),
            CoefficientRing::Integers => BigRational::from_integer(a.numer() + b.numer()),
            CoefficientRing::LocalizedIntegers(_) => a + b,
        }
    }

    pub fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        match self {
            CoefficientRing::IntegersMod(_) => self.from_bigint(&(a.numer() - b.numer())),
            CoefficientRing::Integers => BigRational::from_integer(a.numer() - b.numer()),
            CoefficientRing::LocalizedIntegers(_) => a - b,
        }
    }

    pub fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        match self {
            CoefficientRing::IntegersMod(_) => self.from_bigint(&(a.numer() * b.numer())),
            CoefficientRing::Integers => BigRational::from_integer(a.numer() * b.numer()),
            CoefficientRing::LocalizedIntegers(_) => a * b,
        }
    }

    pub fn neg(&self, a: &BigRational) -> BigRational {
        match self {
            CoefficientRing::IntegersMod(_) => self.from_bigint(&(-a.numer())),
            _ => -a,
        }
    }

    pub fn is_unit(&self, a: &BigRational) -> bool {
        self.inverse(a).is_some()
    }

    pub fn inverse(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            return None;
        }
        match self {
            CoefficientRing::Integers => {
                if a.numer().abs().is_one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            CoefficientRing::IntegersMod(m) => {
                mod_inverse(a.numer(), &BigInt::from(*m)).map(BigRational::from_integer)
            }
            CoefficientRing::LocalizedIntegers(n) => {
                if a.numer().gcd(&BigInt::from(*n)).is_one() {
                    Some(a.recip())
                } else {
                    None
                }
            }
        }
    }

    /// Whether `a` divides `b` in the ring.
    pub fn divides(&self, a: &BigRational, b: &BigRational) -> bool {
        if a.is_zero() {
            return b.is_zero();
        }
        match self {
            CoefficientRing::Integers => b.numer().is_multiple_of(a.numer()),
            CoefficientRing::IntegersMod(m) => {
                let g = a.numer().gcd(&BigInt::from(*m));
                b.numer().is_multiple_of(&g)
            }
            CoefficientRing::LocalizedIntegers(n) => {
                let q = local_part(a.numer(), *n);
                b.numer().is_multiple_of(&q)
            }
        }
    }

    /// Canonical associate of an element: nonnegative integers for Z,
    /// `gcd(a, m)` for Z/m and the n-primary part of the numerator for Z_(n).
    pub fn canonical_associate(&self, a: &BigRational) -> BigInt {
        if a.is_zero() {
            return BigInt::zero();
        }
        match self {
            CoefficientRing::Integers => a.numer().abs(),
            CoefficientRing::IntegersMod(m) => {
                let g = a.numer().gcd(&BigInt::from(*m));
                if g == BigInt::from(*m) {
                    BigInt::zero()
                } else {
                    g
                }
            }
            CoefficientRing::LocalizedIntegers(n) => local_part(a.numer(), *n),
        }
    }

    /// Whether the order of a finite group is invertible in the ring.
    pub fn order_is_unit(&self, order: usize) -> bool {
        self.is_unit(&self.from_i64(order as i64))
    }

    /// Parses an element written as a decimal integer or `a/b`.
    pub fn parse_element(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let value = if let Some((a, b)) = s.split_once('/') {
            let a = BigInt::from_str(a.trim()).map_err(|_| Error::Parse(format!("bad integer '{a}'")))?;
            let b = BigInt::from_str(b.trim()).map_err(|_| Error::Parse(format!("bad integer '{b}'")))?;
            if b.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            BigRational::new(a, b)
        } else {
            BigRational::from_integer(
                BigInt::from_str(s).map_err(|_| Error::Parse(format!("bad integer '{s}'")))?,
            )
        };
        self.normalize(&value)
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::IntegersMod(m) => write!(f, "Z/{m}"),
            CoefficientRing::LocalizedIntegers(n) => write!(f, "Z_({n})"),
        }
    }
}

impl FromStr for CoefficientRing {
    type Err = Error;

    /// Accepts `Z`, `Z/m` and `Z_(n)` (also `Z(n)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Z" {
            return Ok(CoefficientRing::Integers);
        }
        if let Some(rest) = s.strip_prefix("Z/") {
            let m = rest
                .parse::<u64>()
                .map_err(|_| Error::InvalidRing(format!("bad modulus in '{s}'")))?;
            return CoefficientRing::integers_mod(m);
        }
        let inner = s
            .strip_prefix("Z_(")
            .or_else(|| s.strip_prefix("Z("))
            .and_then(|r| r.strip_suffix(')'));
        if let Some(inner) = inner {
            let n = inner
                .parse::<u64>()
                .map_err(|_| Error::InvalidRing(format!("bad localization in '{s}'")))?;
            return CoefficientRing::localized(n);
        }
        Err(Error::InvalidRing(format!(
            "unknown ring '{s}' (expected Z, Z/m or Z_(n))"
        )))
    }
}

/// The part of `x` supported on the primes dividing `n` (nonnegative).
/// Returns 0 for `x = 0`.
pub fn local_part(x: &BigInt, n: u64) -> BigInt {
    if x.is_zero() {
        return BigInt::zero();
    }
    let n = BigInt::from(n);
    let mut rest = x.abs();
    let mut part = BigInt::one();
    loop {
        let g = rest.gcd(&n);
        if g.is_one() {
            return part;
        }
        part *= &g;
        rest /= &g;
    }
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == vec![n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn parse_rings() {
        assert_eq!("Z".parse::<CoefficientRing>().unwrap(), CoefficientRing::Integers);
        assert_eq!("Z/4".parse::<CoefficientRing>().unwrap(), CoefficientRing::IntegersMod(4));
        assert_eq!(
            "Z_(6)".parse::<CoefficientRing>().unwrap(),
            CoefficientRing::LocalizedIntegers(6)
        );
        assert!("Z/1".parse::<CoefficientRing>().is_err());
        assert!("Q".parse::<CoefficientRing>().is_err());
    }

    #[test]
    fn canonical_forms() {
        let z3 = CoefficientRing::IntegersMod(3);
        assert_eq!(z3.normalize(&q(-1, 1)).unwrap(), q(2, 1));
        // 1/2 = 2 mod 3
        assert_eq!(z3.normalize(&q(1, 2)).unwrap(), q(2, 1));
        assert!(CoefficientRing::IntegersMod(4).normalize(&q(1, 2)).is_err());
        let l3 = CoefficientRing::LocalizedIntegers(3);
        assert!(l3.normalize(&q(1, 2)).is_ok());
        assert!(l3.normalize(&q(1, 3)).is_err());
        assert!(CoefficientRing::Integers.normalize(&q(1, 2)).is_err());
    }

    #[test]
    fn units() {
        assert!(!CoefficientRing::Integers.order_is_unit(2));
        assert!(CoefficientRing::IntegersMod(3).order_is_unit(2));
        assert!(CoefficientRing::LocalizedIntegers(3).order_is_unit(2));
        assert!(!CoefficientRing::LocalizedIntegers(6).order_is_unit(2));
        assert_eq!(
            CoefficientRing::IntegersMod(3).inverse(&q(2, 1)),
            Some(q(2, 1))
        );
    }

    #[test]
    fn local_parts() {
        assert_eq!(local_part(&BigInt::from(12), 2), BigInt::from(4));
        assert_eq!(local_part(&BigInt::from(-18), 6), BigInt::from(18));
        assert_eq!(local_part(&BigInt::from(35), 6), BigInt::from(1));
        assert_eq!(prime_factors(12), vec![2, 3]);
        assert!(is_prime(7) && !is_prime(1) && !is_prime(9));
    }
}
