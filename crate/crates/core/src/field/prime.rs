use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// The prime field `GF(q)`.
///
/// Residues are stored as `u32`; products are formed in `u64`, so any prime
/// `q <= 2^31` is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u32,
}

const MAX_MODULUS: u64 = 1 << 31;

impl PrimeField {
    /// Builds `GF(q)`, checking primality of `q` by trial division.
    pub fn new(q: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&q) {
            return Err(Error::ModulusOutOfRange(q));
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(Self { q: q as u32 })
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    /// The element with residue `value mod q`.
    pub fn elem(&self, value: u64) -> FieldElement {
        FieldElement { value: (value % u64::from(self.q)) as u32, field: *self }
    }

    /// The element with residue `value`, rejecting unreduced input.
    pub fn try_elem(&self, value: u64) -> Result<FieldElement> {
        if value >= u64::from(self.q) {
            return Err(Error::ResidueOutOfRange { value, q: self.q });
        }
        Ok(FieldElement { value: value as u32, field: *self })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { value: 0, field: *self }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { value: 1, field: *self }
    }

    /// All `q` elements in increasing residue order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let field = *self;
        (0..self.q).map(move |value| FieldElement { value, field })
    }

    pub(crate) fn check(&self, other: &PrimeField) -> Result<()> {
        if self.q != other.q {
            return Err(Error::FieldMismatch { left: self.q, right: other.q });
        }
        Ok(())
    }

    // Raw residue arithmetic. Callers guarantee operands are reduced.

    #[inline]
    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        let s = u64::from(a) + u64::from(b);
        let q = u64::from(self.q);
        (if s >= q { s - q } else { s }) as u32
    }

    #[inline]
    pub(crate) fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            ((u64::from(a) + u64::from(self.q)) - u64::from(b)) as u32
        }
    }

    #[inline]
    pub(crate) fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.q)) as u32
    }

    /// Inverse by the extended Euclidean algorithm; `None` for zero.
    pub(crate) fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (i64::from(self.q), i64::from(a));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (t0, t1) = (t1, t0 - quot * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(t0.rem_euclid(i64::from(self.q)) as u32)
    }

    pub(crate) fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    if q.is_multiple_of(2) {
        return q == 2;
    }
    let mut p = 3;
    while p * p <= q {
        if q.is_multiple_of(p) {
            return false;
        }
        p += 2;
    }
    true
}

/// An element of a [`PrimeField`].
///
/// The arithmetic operators panic when the operands come from different
/// fields; use [`FieldElement::checked_add`] and friends to get an error instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: PrimeField,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Result<FieldElement> {
        fe_inv(*self)
    }

    pub fn pow(&self, exp: u64) -> FieldElement {
        FieldElement { value: self.field.pow(self.value, exp), field: self.field }
    }

    pub fn checked_add(self, rhs: FieldElement) -> Result<FieldElement> {
        self.field.check(&rhs.field)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(self, rhs: FieldElement) -> Result<FieldElement> {
        self.field.check(&rhs.field)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(self, rhs: FieldElement) -> Result<FieldElement> {
        self.field.check(&rhs.field)?;
        Ok(self * rhs)
    }

    #[inline]
    fn same_field(&self, rhs: &FieldElement) -> PrimeField {
        assert_eq!(self.field, rhs.field, "arithmetic between elements of different fields");
        self.field
    }
}

/// Multiplicative inverse of a nonzero element.
pub fn fe_inv(a: FieldElement) -> Result<FieldElement> {
    let value = a.field.inv(a.value).ok_or(Error::InversionOfZero)?;
    Ok(FieldElement { value, field: a.field })
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        let field = self.same_field(&rhs);
        FieldElement { value: field.add(self.value, rhs.value), field }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        let field = self.same_field(&rhs);
        FieldElement { value: field.sub(self.value, rhs.value), field }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        let field = self.same_field(&rhs);
        FieldElement { value: field.mul(self.value, rhs.value), field }
    }
}

impl Div for FieldElement {
    type Output = FieldElement;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: FieldElement) -> FieldElement {
        self * fe_inv(rhs).expect("division by zero field element")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { value: self.field.neg(self.value), field: self.field }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
