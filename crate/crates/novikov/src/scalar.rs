//! Exact coefficient arithmetic: arbitrary-precision rationals and prime
//! fields GF(p). No floating point anywhere — every comparison against zero
//! is exact, which is what makes the law checkers trustworthy.

use num::bigint::BigInt;
use num::{BigRational, One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

/// The coefficient field of an algebra: exact rationals or GF(p), p prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rational,
    /// Prime field of the given order. Constructed only through
    /// [`FieldDescriptor::gf`], which checks primality.
    PrimeField(u64),
}

impl FieldDescriptor {
    pub fn rational() -> Self {
        FieldDescriptor::Rational
    }

    /// The field GF(p). Fails with `NotPrime` for composite or trivial `p`.
    pub fn gf(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(FieldDescriptor::PrimeField(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldDescriptor::Rational => Scalar::Rational(BigRational::zero()),
            FieldDescriptor::PrimeField(p) => Scalar::Residue { p: *p, value: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }

    /// Canonical image of a signed integer in the field.
    pub fn integer(&self, v: i64) -> Scalar {
        match self {
            FieldDescriptor::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldDescriptor::PrimeField(p) => Scalar::Residue {
                p: *p,
                value: v.rem_euclid(*p as i64) as u64,
            },
        }
    }

    /// Canonical image of an arbitrary-precision integer.
    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldDescriptor::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldDescriptor::PrimeField(p) => {
                let m = n.mod_floor_u64(*p);
                Scalar::Residue { p: *p, value: m }
            }
        }
    }

    /// num/den as a field element. Over GF(p) this is num * den^-1, so a
    /// denominator divisible by p is rejected.
    pub fn fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match self {
            FieldDescriptor::Rational => {
                Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
            }
            FieldDescriptor::PrimeField(_) => {
                let d = self.from_bigint(den);
                let inv = d.inv()?;
                Ok(self.from_bigint(num).mul_raw(&inv))
            }
        }
    }

    /// Number of elements, if finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldDescriptor::Rational => None,
            FieldDescriptor::PrimeField(p) => Some(*p),
        }
    }

    /// All field elements in residue order; `None` for the rationals.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldDescriptor::Rational => None,
            FieldDescriptor::PrimeField(p) => {
                Some((0..*p).map(|value| Scalar::Residue { p: *p, value }).collect())
            }
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "rational"),
            FieldDescriptor::PrimeField(p) => write!(f, "gf {p}"),
        }
    }
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator (num's `Ratio` maintains this), residues in `[0, p)`, so
/// structural equality is semantic equality within a field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::Rational,
            Scalar::Residue { p, .. } => FieldDescriptor::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(self.add_raw(other))
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(self.sub_raw(other))
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(self.mul_raw(other))
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { p, value } => Scalar::Residue {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Residue { p, value } => {
                if *value == 0 {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Residue {
                        p: *p,
                        value: mod_inverse(*value, *p),
                    })
                }
            }
        }
    }

    // The *_raw arithmetic is used on tables whose field was validated at
    // construction; mixing fields there is a bug, so it just panics.

    pub(crate) fn add_raw(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { p, value: a }, Scalar::Residue { p: q, value: b }) if p == q => {
                let s = a + b;
                Scalar::Residue { p: *p, value: if s >= *p { s - p } else { s } }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    pub(crate) fn sub_raw(&self, other: &Scalar) -> Scalar {
        self.add_raw(&other.neg())
    }

    pub(crate) fn mul_raw(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { p, value: a }, Scalar::Residue { p: q, value: b }) if p == q => {
                Scalar::Residue {
                    p: *p,
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    /// `self += a * b`, the accumulation kernel of every bilinear expansion.
    pub(crate) fn mul_acc(&mut self, a: &Scalar, b: &Scalar) {
        *self = self.add_raw(&a.mul_raw(b));
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
            Scalar::Residue { value, .. } => write!(f, "{value}"),
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

/// Inverse of `a` mod prime `p` by the extended Euclidean algorithm.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of a unit mod a prime");
    t0.rem_euclid(p as i128) as u64
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        // mod_floor of a BigInt by a positive modulus is in [0, p)
        let (_, digits) = m.to_u64_digits();
        if digits.is_empty() {
            0
        } else {
            digits[0]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        FieldDescriptor::Rational
            .fraction(&BigInt::from(n), &BigInt::from(d))
            .unwrap()
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let half = q(1, 2);
        let third = q(1, 3);
        assert_eq!(half.add(&third).unwrap(), q(5, 6));
        assert_eq!(half.mul(&third).unwrap(), q(1, 6));
        assert_eq!(q(2, 4), q(1, 2), "fractions are canonicalized");
        assert_eq!(q(1, -2), q(-1, 2), "sign lives in the numerator");
    }

    #[test]
    fn gf5_arithmetic() {
        let f = FieldDescriptor::gf(5).unwrap();
        let three = f.integer(3);
        let four = f.integer(4);
        assert_eq!(three.mul(&four).unwrap(), f.integer(2));
        assert_eq!(three.add(&four).unwrap(), f.integer(2));
        assert_eq!(three.neg(), f.integer(2));
        assert_eq!(f.integer(-1), f.integer(4), "negative integers reduce");
        assert_eq!(three.inv().unwrap(), f.integer(2), "3 * 2 = 6 = 1 mod 5");
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(
            FieldDescriptor::Rational.zero().inv(),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(
            FieldDescriptor::gf(7).unwrap().zero().inv(),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = FieldDescriptor::Rational.one();
        let b = FieldDescriptor::gf(3).unwrap().one();
        assert_eq!(a.add(&b), Err(ScalarError::FieldMismatch));
        let c = FieldDescriptor::gf(5).unwrap().one();
        assert_eq!(b.mul(&c), Err(ScalarError::FieldMismatch));
    }

    #[test]
    fn primality_is_enforced() {
        assert!(FieldDescriptor::gf(2).is_ok());
        assert!(FieldDescriptor::gf(3).is_ok());
        assert!(FieldDescriptor::gf(97).is_ok());
        assert_eq!(FieldDescriptor::gf(1), Err(ScalarError::NotPrime(1)));
        assert_eq!(FieldDescriptor::gf(4), Err(ScalarError::NotPrime(4)));
        assert_eq!(FieldDescriptor::gf(91), Err(ScalarError::NotPrime(91)));
    }

    #[test]
    fn gf_fraction_inverts_denominator() {
        let f = FieldDescriptor::gf(5).unwrap();
        // 1/2 = 3 mod 5
        assert_eq!(
            f.fraction(&BigInt::from(1), &BigInt::from(2)).unwrap(),
            f.integer(3)
        );
        // denominator divisible by p has no inverse
        assert_eq!(
            f.fraction(&BigInt::from(1), &BigInt::from(5)),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn field_elements_enumeration() {
        let f = FieldDescriptor::gf(3).unwrap();
        let elems = f.elements().unwrap();
        assert_eq!(elems.len(), 3);
        assert!(elems[0].is_zero() && elems[1].is_one());
        assert!(FieldDescriptor::Rational.elements().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(5, 6).to_string(), "5/6");
        assert_eq!(q(-3, 1).to_string(), "-3");
        assert_eq!(FieldDescriptor::gf(7).unwrap().integer(12).to_string(), "5");
    }
}
