//! Scalar abstraction for the polynomial and series cores.
//!
//! Everything downstream works over an exact field: the rationals, or a
//! fixed number field. The trait collects the num-traits bounds those
//! algorithms need so they can be written once.

use crate::Rat;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact field scalar.
///
/// `Div` must be exact division (panicking on zero divisors); this is a
/// field, not a ring, so every nonzero element is invertible.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Embed a rational constant.
    fn from_rat(r: &Rat) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Embed a small integer.
    fn from_i64(n: i64) -> Self {
        Self::from_rat(&crate::rint(n))
    }

    /// The element as a rational, if it is one.
    fn to_rat(&self) -> Option<Rat>;
}

impl Scalar for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
}
