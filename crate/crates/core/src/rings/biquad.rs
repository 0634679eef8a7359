use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{forward_binops, AsInteger, GaussianInt, QuadElem, Rational};
use crate::error::{Error, Result};

/// An element of Q(i, √3), stored as `re + im·i` with `re`, `im` in Q(√3).
///
/// In the basis `1, √3, i, i√3` the coefficients are
/// `c00 = re.u`, `c01 = re.v`, `c10 = im.u`, `c11 = im.v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiquadElem {
    pub re: QuadElem,
    pub im: QuadElem,
}

impl BiquadElem {
    pub fn new(re: QuadElem, im: QuadElem) -> Self {
        BiquadElem { re, im }
    }

    /// From coefficients of `1, √3, i, i√3`.
    pub fn from_coeffs(c00: Rational, c01: Rational, c10: Rational, c11: Rational) -> Self {
        BiquadElem::new(QuadElem::new(c00, c01), QuadElem::new(c10, c11))
    }

    pub fn i() -> Self {
        BiquadElem::new(QuadElem::zero(), QuadElem::one())
    }

    pub fn c00(&self) -> &Rational {
        &self.re.u
    }

    pub fn c01(&self) -> &Rational {
        &self.re.v
    }

    pub fn c10(&self) -> &Rational {
        &self.im.u
    }

    pub fn c11(&self) -> &Rational {
        &self.im.v
    }

    pub fn scale(&self, k: &Rational) -> Self {
        BiquadElem::new(self.re.scale(k), self.im.scale(k))
    }
}

impl From<QuadElem> for BiquadElem {
    fn from(re: QuadElem) -> Self {
        BiquadElem::new(re, QuadElem::zero())
    }
}

impl AsInteger for BiquadElem {
    type Output = GaussianInt;

    fn as_integer(&self) -> Result<GaussianInt> {
        let not_integral = || Error::NotIntegral {
            value: self.to_string(),
        };
        let re = self.re.as_integer().map_err(|_| not_integral())?;
        let im = self.im.as_integer().map_err(|_| not_integral())?;
        Ok(GaussianInt { re, im })
    }
}

impl<'a> Add<&'a BiquadElem> for &'a BiquadElem {
    type Output = BiquadElem;

    fn add(self, rhs: &BiquadElem) -> BiquadElem {
        BiquadElem::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a BiquadElem> for &'a BiquadElem {
    type Output = BiquadElem;

    fn sub(self, rhs: &BiquadElem) -> BiquadElem {
        BiquadElem::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a BiquadElem> for &'a BiquadElem {
    type Output = BiquadElem;

    fn mul(self, rhs: &BiquadElem) -> BiquadElem {
        BiquadElem::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &BiquadElem {
    type Output = BiquadElem;

    fn neg(self) -> BiquadElem {
        BiquadElem::new(-&self.re, -&self.im)
    }
}

forward_binops!(BiquadElem);

impl Zero for BiquadElem {
    fn zero() -> Self {
        BiquadElem::new(QuadElem::zero(), QuadElem::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for BiquadElem {
    fn one() -> Self {
        BiquadElem::new(QuadElem::one(), QuadElem::zero())
    }
}

impl fmt::Display for BiquadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + i[{}]", self.re, self.im)
    }
}
