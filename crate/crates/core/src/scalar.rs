//! Coefficient fields for partition-algebra computations.
//!
//! Every construction in the crate is generic over a [`Scalar`]: the symbolic
//! field `Q(n)` ([`RationalFunction`]) for exact parametric results, or plain
//! rationals ([`Rational`]) when the parameter is specialized to a fixed
//! rational value. Specializing first and computing over `Q` is the engine
//! behind the randomized verification mode: evaluation away from poles is a
//! ring homomorphism, so any identity checked at a random non-degenerate point
//! holds symbolically except on a finite root set.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{One, Zero};

use crate::arith::{format_rational, Rational, RationalFunction};

/// A field usable as coefficients of algebra elements.
///
/// Methods are by-reference and panic-free except where documented; division
/// is exposed as [`Scalar::inv`] returning `None` for zero.
pub trait Scalar: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;
    /// JSON form used in element dumps.
    fn to_json(&self) -> serde_json::Value;

    fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(format_rational(self))
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RationalFunction::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        RationalFunction::inv(self).ok()
    }
    fn from_rational(q: &Rational) -> Self {
        RationalFunction::from_rational(q.clone())
    }
    fn to_json(&self) -> serde_json::Value {
        RationalFunction::to_json(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn scalar_laws<S: Scalar>(a: S, b: S) {
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.sub(&a), S::zero());
        assert_eq!(a.mul(&S::one()), a);
        if !a.is_zero() {
            assert_eq!(a.mul(&a.inv().unwrap()), S::one());
        }
        assert_eq!(S::zero().inv(), None);
    }

    #[test]
    fn both_fields_satisfy_basic_laws() {
        scalar_laws(rat(3, 4), rat(-2, 5));
        scalar_laws(
            RationalFunction::from_integer_coeffs(&[1, 2], &[0, 1]).unwrap(),
            RationalFunction::from_integer_coeffs(&[-1], &[-1, 1]).unwrap(),
        );
    }
}
