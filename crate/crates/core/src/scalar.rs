//! Exact field elements: arbitrary-precision rationals or residues modulo a prime.
//!
//! Arithmetic between scalars of different fields is a programming error and
//! panics; fallible entry points (parsing, series coefficients) return errors
//! instead.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Field descriptor: the rationals or F_p for a checked prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Prime-field constructor; rejects non-primes.
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= p) {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (`BigRational` maintains this); prime-field residues are fully
/// reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod { value: 0, modulus: p },
        }
    }

    pub fn one(field: Field) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::one()),
            Field::Prime(p) => Scalar::Mod { value: 1 % p, modulus: p },
        }
    }

    pub fn from_integer(n: i64, field: Field) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::from(BigInt::from(n))),
            Field::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Mod { value: r, modulus: p }
            }
        }
    }

    pub fn from_bigint(n: &BigInt, field: Field) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::from(n.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let mut r = n % &m;
                if r.is_negative() {
                    r += &m;
                }
                let (_, digits) = r.to_u64_digits();
                Scalar::Mod { value: digits.first().copied().unwrap_or(0), modulus: p }
            }
        }
    }

    /// n/d as an element of the field. Fails on d = 0 and, over F_p, when p | d.
    pub fn from_fraction(n: &BigInt, d: &BigInt, field: Field) -> Result<Scalar> {
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        match field {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(n.clone(), d.clone()))),
            Field::Prime(p) => {
                let den = Scalar::from_bigint(d, field);
                let inv = den.checked_inv().ok_or(Error::ZeroModulusDivision(p))?;
                Ok(&Scalar::from_bigint(n, field) * &inv)
            }
        }
    }

    /// 1/k, the series coefficient denominators. Fails when char K divides k.
    pub fn inverse_of_integer(k: u64, field: Field) -> Result<Scalar> {
        let k_elt = Scalar::from_bigint(&BigInt::from(k), field);
        k_elt.checked_inv().ok_or(Error::CharacteristicTooSmall(k))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// True for 1 or -1.
    pub fn is_unit_sign(&self) -> bool {
        self.is_one() || (-self).is_one()
    }

    /// Sign used only for rendering; prime-field residues never count as
    /// negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }

    pub fn checked_inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip())),
            Scalar::Mod { value, modulus } => {
                Some(Scalar::Mod { value: mod_inverse(*value, *modulus), modulus: *modulus })
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert_eq!(self.field(), other.field(), "scalar field mismatch");
    }

    /// Rationals only: the numerator, used by pivot selection.
    pub fn numerator_magnitude(&self) -> BigInt {
        match self {
            Scalar::Rational(r) => r.numer().abs(),
            Scalar::Mod { value, .. } => BigInt::from(*value),
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p), p prime, a != 0 mod p
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inverse of non-unit");
    old_s.rem_euclid(p as i128) as u64
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, .. }) => {
                Scalar::Mod { value: ((*a as u128 + *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => unreachable!(),
        }
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, .. }) => {
                Scalar::Mod { value: ((*a as u128 * *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => unreachable!(),
        }
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, modulus } => {
                Scalar::Mod { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(5).is_ok());
        assert!(Field::prime(97).is_ok());
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(Field::prime(91), Err(Error::NotPrime(91)));
    }

    #[test]
    fn rational_arithmetic_reduces() {
        let f = Field::Rationals;
        let half = Scalar::from_fraction(&BigInt::from(1), &BigInt::from(2), f).unwrap();
        let third = Scalar::from_fraction(&BigInt::from(1), &BigInt::from(3), f).unwrap();
        let sum = &half + &third;
        assert_eq!(sum.to_string(), "5/6");
        assert_eq!((&half * &third).to_string(), "1/6");
    }

    #[test]
    fn mod_field_inverse() {
        let f = Field::prime(7).unwrap();
        let three = Scalar::from_integer(3, f);
        let inv = three.checked_inv().unwrap();
        assert!((&three * &inv).is_one());
        assert!(Scalar::zero(f).checked_inv().is_none());
        // 1/7 does not exist in F_7
        assert_eq!(
            Scalar::from_fraction(&BigInt::from(1), &BigInt::from(7), f),
            Err(Error::ZeroModulusDivision(7))
        );
    }

    #[test]
    fn characteristic_blocks_series_coefficients() {
        let f = Field::prime(5).unwrap();
        assert!(Scalar::inverse_of_integer(4, f).is_ok());
        assert_eq!(Scalar::inverse_of_integer(10, f), Err(Error::CharacteristicTooSmall(10)));
    }

    #[test]
    fn negative_integers_reduce_into_range() {
        let f = Field::prime(5).unwrap();
        assert_eq!(Scalar::from_integer(-1, f), Scalar::Mod { value: 4, modulus: 5 });
        assert!(Scalar::from_integer(-1, f).is_unit_sign());
    }
}
