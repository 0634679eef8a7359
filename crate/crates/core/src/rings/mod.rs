//! Exact arithmetic kernels.
//!
//! Everything here is exact: integers and rationals are arbitrary precision
//! and every value is kept in canonical form after each operation, so
//! structural equality coincides with mathematical equality.

mod biquad;
mod gaussian;
mod quad;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use biquad::BiquadElem;
pub use gaussian::{GaussianInt, GaussianRational};
pub use quad::QuadElem;

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// A commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// `x^k` by repeated squaring. `x^0` is the multiplicative identity.
pub fn ring_pow<R: Ring>(x: &R, k: u32) -> R {
    let mut acc = R::one();
    let mut base = x.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base.clone();
        }
        k >>= 1;
        if k > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

/// Collapse an exact element to an integer, failing if it is not one.
pub trait AsInteger {
    type Output;

    fn as_integer(&self) -> Result<Self::Output>;
}

impl AsInteger for Rational {
    type Output = BigInt;

    fn as_integer(&self) -> Result<BigInt> {
        if self.is_integer() {
            Ok(self.numer().clone())
        } else {
            Err(Error::NotIntegral {
                value: self.to_string(),
            })
        }
    }
}

/// `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a canonical rational. Panics if `den` is zero.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Implements the owned and mixed owned/borrowed operator forms in terms of
/// the `&T op &T` implementation.
macro_rules! forward_binops {
    ($t:ty) => {
        forward_binops!(@one $t, Add, add);
        forward_binops!(@one $t, Sub, sub);
        forward_binops!(@one $t, Mul, mul);

        impl std::ops::Neg for $t {
            type Output = $t;

            fn neg(self) -> $t {
                -&self
            }
        }
    };
    (@one $t:ty, $tr:ident, $m:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;

            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(&self, &rhs)
            }
        }

        impl std::ops::$tr<&$t> for $t {
            type Output = $t;

            fn $m(self, rhs: &$t) -> $t {
                std::ops::$tr::$m(&self, rhs)
            }
        }

        impl std::ops::$tr<$t> for &$t {
            type Output = $t;

            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(self, &rhs)
            }
        }
    };
}

pub(crate) use forward_binops;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_as_integer() {
        assert_eq!(rat(6).as_integer().unwrap(), BigInt::from(6));
        assert_eq!(frac(12, 2).as_integer().unwrap(), BigInt::from(6));
        assert!(matches!(
            frac(1, 2).as_integer(),
            Err(Error::NotIntegral { .. })
        ));
    }

    #[test]
    fn rational_is_canonical() {
        let x = frac(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn pow_of_rational() {
        assert_eq!(ring_pow(&frac(-2, 3), 3), frac(-8, 27));
        assert_eq!(ring_pow(&frac(5, 7), 0), rat(1));
        assert_eq!(ring_pow(&rat(0), 0), rat(1));
    }
}
