//! Exact coefficient rings for the canonical (Tits) representation.
//!
//! The bilinear form is scaled by two, so `c(s,t) = -2cos(pi/m)` takes the
//! values `0, -1, -2` for labels `2, 3, inf`, `-sqrt2` for label 4 and
//! `-sqrt3` for label 6. Every operation is checked; `None` signals overflow
//! and the caller retries with an unbounded representation.

use num_bigint::BigInt;
use std::cmp::Ordering;
use std::fmt::Debug;

pub(crate) trait Scalar: Clone + PartialEq + Debug {
    /// Builds `a + b·sqrt(d)`; `b` must be zero for the plain integer rings.
    fn from_parts(a: i64, b: i64) -> Self;
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn checked_add(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn signum(&self) -> Option<Ordering>;
}

pub(crate) trait Integer: Scalar {}

impl Scalar for i128 {
    fn from_parts(a: i64, b: i64) -> Self {
        debug_assert_eq!(b, 0);
        a as i128
    }
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        i128::checked_add(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i128::checked_sub(*self, *other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i128::checked_mul(*self, *other)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn signum(&self) -> Option<Ordering> {
        Some(self.cmp(&0))
    }
}
impl Integer for i128 {}

impl Scalar for BigInt {
    fn from_parts(a: i64, b: i64) -> Self {
        debug_assert_eq!(b, 0);
        BigInt::from(a)
    }
    fn zero() -> Self {
        BigInt::from(0)
    }
    fn is_zero(&self) -> bool {
        self.sign() == num_bigint::Sign::NoSign
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn signum(&self) -> Option<Ordering> {
        Some(match self.sign() {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        })
    }
}
impl Integer for BigInt {}

/// `a + b·sqrt(D)` over an integer type.
#[derive(Clone, PartialEq, Debug)]
pub(crate) struct Quad<I, const D: i64> {
    a: I,
    b: I,
}

impl<I: Integer, const D: i64> Scalar for Quad<I, D> {
    fn from_parts(a: i64, b: i64) -> Self {
        Quad { a: I::from_parts(a, 0), b: I::from_parts(b, 0) }
    }
    fn zero() -> Self {
        Quad { a: I::zero(), b: I::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        Some(Quad { a: self.a.checked_add(&o.a)?, b: self.b.checked_add(&o.b)? })
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(Quad { a: self.a.checked_sub(&o.a)?, b: self.b.checked_sub(&o.b)? })
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        let d = I::from_parts(D, 0);
        let bb = self.b.checked_mul(&o.b)?.checked_mul(&d)?;
        let a = self.a.checked_mul(&o.a)?.checked_add(&bb)?;
        let b = self.a.checked_mul(&o.b)?.checked_add(&self.b.checked_mul(&o.a)?)?;
        Some(Quad { a, b })
    }
    fn neg(&self) -> Option<Self> {
        Some(Quad { a: self.a.neg()?, b: self.b.neg()? })
    }
    fn signum(&self) -> Option<Ordering> {
        let sa = self.a.signum()?;
        let sb = self.b.signum()?;
        if sb == Ordering::Equal || sa == sb {
            return Some(if sa == Ordering::Equal { sb } else { sa });
        }
        if sa == Ordering::Equal {
            return Some(sb);
        }
        // Opposite signs: compare a^2 with D·b^2.
        let a2 = self.a.checked_mul(&self.a)?;
        let b2 = self.b.checked_mul(&self.b)?.checked_mul(&I::from_parts(D, 0))?;
        let diff = a2.checked_sub(&b2)?.signum()?;
        Some(match diff {
            Ordering::Equal => Ordering::Equal,
            Ordering::Greater => sa,
            Ordering::Less => sb,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_sign_is_exact() {
        type Q2 = Quad<i128, 2>;
        // 3 - 2·sqrt2 ≈ 0.17
        assert_eq!(Q2::from_parts(3, -2).signum(), Some(Ordering::Greater));
        // 1 - sqrt2 < 0
        assert_eq!(Q2::from_parts(1, -1).signum(), Some(Ordering::Less));
        assert_eq!(Q2::from_parts(-3, 2).signum(), Some(Ordering::Less));
        assert_eq!(Q2::from_parts(0, 0).signum(), Some(Ordering::Equal));
        // sqrt2 · sqrt2 = 2
        let r = Q2::from_parts(0, 1);
        assert_eq!(r.checked_mul(&r), Some(Q2::from_parts(2, 0)));
        type Q3 = Quad<BigInt, 3>;
        assert_eq!(Q3::from_parts(-2, 1).signum(), Some(Ordering::Less));
        assert_eq!(Q3::from_parts(-1, 1).signum(), Some(Ordering::Greater));
    }

    #[test]
    fn i128_overflow_is_reported() {
        assert_eq!(Scalar::checked_mul(&i128::MAX, &2), None);
    }
}
