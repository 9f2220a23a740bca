//! Exact scalar fields: the rationals and prime fields `F_p`.
//!
//! Every matrix in the crate is generic over [`Field`]. A field value carries
//! its own parameters (the modulus), so two matrices can be compared for
//! compatibility at runtime through [`Field::tag`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact coefficient used by symbolic polynomials before they are mapped
/// into a concrete field.
pub type Coeff = Ratio<i64>;

/// Identifies a field instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    Rational,
    Prime(u32),
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "Q"),
            FieldTag::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn tag(&self) -> FieldTag;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Maps an exact rational into the field; fails when the denominator
    /// vanishes in the field.
    fn from_coeff(&self, c: &Coeff) -> Result<Self::Elem>;
    /// The rational this element stands for. For prime fields this is the
    /// symmetric representative in `(-p/2, p/2]`.
    fn to_coeff(&self, a: &Self::Elem) -> Coeff;
    /// Total order used for deterministic tie-breaks.
    fn cmp_elems(&self, a: &Self::Elem, b: &Self::Elem) -> std::cmp::Ordering;
    fn format(&self, a: &Self::Elem) -> String;

    /// `dst -= factor * src` over the listed positions of `src`.
    fn sub_scaled_at(
        &self,
        dst: &mut [Self::Elem],
        src: &[Self::Elem],
        factor: &Self::Elem,
        support: &[u32],
    ) {
        for &j in support {
            let j = j as usize;
            let t = self.mul(factor, &src[j]);
            dst[j] = self.sub(&dst[j], &t);
        }
    }

    /// `dst -= factor * src` over whole rows.
    fn sub_scaled(&self, dst: &mut [Self::Elem], src: &[Self::Elem], factor: &Self::Elem) {
        for (d, s) in dst.iter_mut().zip(src) {
            if !self.is_zero(s) {
                let t = self.mul(factor, s);
                *d = self.sub(d, &t);
            }
        }
    }

    fn scale(&self, row: &mut [Self::Elem], factor: &Self::Elem) {
        for x in row.iter_mut() {
            if !self.is_zero(x) {
                *x = self.mul(x, factor);
            }
        }
    }
}

/// The prime field `Z/pZ`; elements are residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Default working modulus.
    pub const DEFAULT_MODULUS: u32 = 101;

    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::FieldConstraint(format!("{p} is not prime")));
        }
        if p > 1 << 31 {
            return Err(Error::FieldConstraint(format!("modulus {p} exceeds 2^31")));
        }
        Ok(PrimeField { p })
    }

    /// A prime field suitable for multilinear computations of the given
    /// degree: the characteristic must exceed the degree.
    pub fn for_degree(p: u32, degree: usize) -> Result<Self> {
        let f = Self::new(p)?;
        if (p as usize) <= degree {
            return Err(Error::FieldConstraint(format!(
                "characteristic {p} must exceed the degree {degree}"
            )));
        }
        Ok(f)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    fn reduce(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn tag(&self) -> FieldTag {
        FieldTag::Prime(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 + *b as u64)
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 + (self.p - *b) as u64)
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 * *b as u64)
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let e = (*a as i64).extended_gcd(&(self.p as i64));
        Some(e.x.rem_euclid(self.p as i64) as u32)
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn from_coeff(&self, c: &Coeff) -> Result<u32> {
        let num = self.from_i64(*c.numer());
        let den = self.from_i64(*c.denom());
        let inv = self
            .inv(&den)
            .ok_or_else(|| Error::NotInvertible(format!("{} (mod {})", c.denom(), self.p)))?;
        Ok(self.mul(&num, &inv))
    }
    fn to_coeff(&self, a: &u32) -> Coeff {
        let v = *a as i64;
        if v > self.p as i64 / 2 {
            Coeff::from_integer(v - self.p as i64)
        } else {
            Coeff::from_integer(v)
        }
    }
    fn cmp_elems(&self, a: &u32, b: &u32) -> std::cmp::Ordering {
        self.to_coeff(a).cmp(&self.to_coeff(b))
    }
    fn format(&self, a: &u32) -> String {
        self.to_coeff(a).to_string()
    }

    fn sub_scaled_at(&self, dst: &mut [u32], src: &[u32], factor: &u32, support: &[u32]) {
        let p = self.p as u64;
        let m = (p - *factor as u64) % p;
        for &j in support {
            let j = j as usize;
            dst[j] = ((dst[j] as u64 + m * src[j] as u64) % p) as u32;
        }
    }

    fn sub_scaled(&self, dst: &mut [u32], src: &[u32], factor: &u32) {
        let p = self.p as u64;
        let m = (p - *factor as u64) % p;
        for (d, s) in dst.iter_mut().zip(src) {
            if *s != 0 {
                *d = ((*d as u64 + m * *s as u64) % p) as u32;
            }
        }
    }
}

/// The field of rational numbers with arbitrary-precision entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn tag(&self) -> FieldTag {
        FieldTag::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
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
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_coeff(&self, c: &Coeff) -> Result<BigRational> {
        Ok(BigRational::new(
            BigInt::from(*c.numer()),
            BigInt::from(*c.denom()),
        ))
    }
    fn to_coeff(&self, a: &BigRational) -> Coeff {
        let n = a.numer().to_i64().expect("numerator fits in i64");
        let d = a.denom().to_i64().expect("denominator fits in i64");
        Coeff::new(n, d)
    }
    fn cmp_elems(&self, a: &BigRational, b: &BigRational) -> std::cmp::Ordering {
        a.cmp(b)
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().abs(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse_roundtrip() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101u32 {
            let b = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &b), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn rejects_composite_and_small_moduli() {
        assert!(PrimeField::new(100).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::for_degree(5, 5).is_err());
        assert!(PrimeField::for_degree(7, 5).is_ok());
    }

    #[test]
    fn coefficient_mapping() {
        let f = PrimeField::new(101).unwrap();
        let half = f.from_coeff(&Coeff::new(1, 2)).unwrap();
        assert_eq!(f.mul(&half, &2), 1);
        assert_eq!(f.to_coeff(&100), Coeff::from_integer(-1));
        let g = PrimeField::new(3).unwrap();
        assert!(g.from_coeff(&Coeff::new(1, 3)).is_err());
        let q = Rationals;
        assert_eq!(q.format(&q.from_coeff(&Coeff::new(-1, 2)).unwrap()), "-1/2");
    }
}
