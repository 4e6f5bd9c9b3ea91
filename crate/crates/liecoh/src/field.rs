//! Exact coefficient fields: ℚ with arbitrary-precision integers, and 𝔽_p.
//!
//! Arithmetic goes through a small field descriptor value rather than
//! through the element type alone, because a prime field only makes sense
//! relative to a runtime modulus. Elements are plain data (`BigRational`
//! for ℚ, a reduced residue for 𝔽_p); every container in this crate carries
//! its descriptor.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Runtime choice of coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Parses `q` or `fp:P` (the CLI flag syntax).
    pub fn parse_flag(s: &str) -> Result<FieldSpec> {
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::ValidationFailed(format!("bad field flag: {s}")))?;
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            return Ok(FieldSpec::PrimeField(p));
        }
        Err(Error::ValidationFailed(format!(
            "bad field flag: {s} (expected q or fp:P)"
        )))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Trial division; fast enough for the moduli this crate is used with.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field, as a cheap descriptor value through which all element
/// arithmetic is performed.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug;

    fn spec(&self) -> FieldSpec;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Embeds an integer (the image of n·1).
    fn int(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; None for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let bi = self.inv(b).expect("division by zero");
        self.mul(a, &bi)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    /// Parses `p`, `-p` or `p/q`.
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
}

/// The rational numbers with arbitrary-precision integers.
///
/// `BigRational` keeps fractions reduced with a positive denominator, which
/// is exactly the canonical form the rest of the crate relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn parse(&self, s: &str) -> Result<BigRational> {
        parse_fraction(s, |t| t.parse::<BigInt>().ok()).and_then(|(n, d)| {
            if d.is_zero() {
                Err(Error::ValidationFailed(format!("zero denominator in {s}")))
            } else {
                Ok(BigRational::new(n, d))
            }
        })
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// The field 𝔽_p for a runtime prime p. Elements are residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, n: i128) -> u64 {
        let p = self.p as i128;
        (((n % p) + p) % p) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn int(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + (self.p - *b) as u128) % self.p as u128) as u64
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce_i128(s0))
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u64) -> bool {
        *a == 1 % self.p
    }

    fn parse(&self, s: &str) -> Result<u64> {
        let (n, d) = parse_fraction(s, |t| t.parse::<i128>().ok())?;
        let d = self.reduce_i128(d);
        let di = self
            .inv(&d)
            .ok_or_else(|| Error::ValidationFailed(format!("{s} has no inverse mod {}", self.p)))?;
        Ok(self.mul(&self.reduce_i128(n), &di))
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

fn parse_fraction<T>(s: &str, atom: impl Fn(&str) -> Option<T>) -> Result<(T, T)>
where
    T: From<i8>,
{
    let bad = || Error::ValidationFailed(format!("bad scalar: {s}"));
    match s.split_once('/') {
        Some((n, d)) => Ok((atom(n.trim()).ok_or_else(bad)?, atom(d.trim()).ok_or_else(bad)?)),
        None => Ok((atom(s.trim()).ok_or_else(bad)?, T::from(1))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_format() {
        let q = Rationals;
        assert_eq!(q.format(&q.parse("3/2").unwrap()), "3/2");
        assert_eq!(q.format(&q.parse("-4/2").unwrap()), "-2");
        assert_eq!(q.format(&q.parse("0").unwrap()), "0");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.add(&3, &4), 2);
        assert_eq!(f5.inv(&2), Some(3));
        assert_eq!(f5.parse("7").unwrap(), 2);
        assert_eq!(f5.parse("-1").unwrap(), 4);
        assert_eq!(f5.parse("1/2").unwrap(), 3);
        assert!(PrimeField::new(6).is_err());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn field_spec_flags() {
        assert_eq!(FieldSpec::parse_flag("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(
            FieldSpec::parse_flag("fp:5").unwrap(),
            FieldSpec::PrimeField(5)
        );
        assert!(FieldSpec::parse_flag("fp:4").is_err());
        assert!(FieldSpec::parse_flag("r").is_err());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(49));
    }
}
