use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{forward_binops, rat, AsInteger, Rational};
use crate::error::{Error, Result};

/// An element `u + v·√3` of Q(√3).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    /// Rational part.
    pub u: Rational,
    /// Coefficient of √3.
    pub v: Rational,
}

impl QuadElem {
    pub fn new(u: Rational, v: Rational) -> Self {
        QuadElem { u, v }
    }

    /// `u + v√3` from small integers.
    pub fn from_ints(u: i64, v: i64) -> Self {
        QuadElem::new(rat(u), rat(v))
    }

    pub fn rational(u: Rational) -> Self {
        QuadElem::new(u, Rational::zero())
    }

    pub fn sqrt3() -> Self {
        QuadElem::from_ints(0, 1)
    }

    /// The Galois conjugate `u - v√3`.
    pub fn conj(&self) -> Self {
        QuadElem::new(self.u.clone(), -&self.v)
    }

    /// `x·conj(x) = u² - 3v²`.
    pub fn norm(&self) -> Rational {
        &self.u * &self.u - rat(3) * &self.v * &self.v
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadElem::new(&self.u * k, &self.v * k)
    }
}

impl From<Rational> for QuadElem {
    fn from(u: Rational) -> Self {
        QuadElem::rational(u)
    }
}

impl AsInteger for QuadElem {
    type Output = BigInt;

    fn as_integer(&self) -> Result<BigInt> {
        if !self.is_rational() {
            return Err(Error::NotIntegral {
                value: self.to_string(),
            });
        }
        self.u.as_integer()
    }
}

impl<'a> Add<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;

    fn add(self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(&self.u + &rhs.u, &self.v + &rhs.v)
    }
}

impl<'a> Sub<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;

    fn sub(self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(&self.u - &rhs.u, &self.v - &rhs.v)
    }
}

impl<'a> Mul<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;

    // (u + v√3)(u' + v'√3) = (uu' + 3vv') + (uv' + vu')√3
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(
            &self.u * &rhs.u + rat(3) * &self.v * &rhs.v,
            &self.u * &rhs.v + &self.v * &rhs.u,
        )
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;

    fn neg(self) -> QuadElem {
        QuadElem::new(-&self.u, -&self.v)
    }
}

forward_binops!(QuadElem);

impl Zero for QuadElem {
    fn zero() -> Self {
        QuadElem::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

impl One for QuadElem {
    fn one() -> Self {
        QuadElem::new(Rational::one(), Rational::zero())
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})√3", self.u, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{frac, ring_pow};

    #[test]
    fn square_of_minus_one_plus_sqrt3() {
        assert_eq!(
            ring_pow(&QuadElem::from_ints(-1, 1), 2),
            QuadElem::from_ints(4, -2)
        );
    }

    #[test]
    fn sqrt3_squared_is_three() {
        assert_eq!(
            &QuadElem::sqrt3() * &QuadElem::sqrt3(),
            QuadElem::from_ints(3, 0)
        );
    }

    #[test]
    fn conjugation() {
        assert_eq!(QuadElem::from_ints(2, 1).conj(), QuadElem::from_ints(2, -1));
        assert_eq!(QuadElem::from_ints(5, 0).conj(), QuadElem::from_ints(5, 0));

        let x = QuadElem::from_ints(1, 1);
        let y = QuadElem::from_ints(2, -1);
        // (1+√3)(2-√3) = -1 + √3, conj = -1 - √3
        assert_eq!(&x * &y, QuadElem::from_ints(-1, 1));
        assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        assert_eq!((&x * &y).conj(), QuadElem::from_ints(-1, -1));
    }

    #[test]
    fn norm_is_rational_and_multiplicative() {
        let x = QuadElem::new(frac(3, 2), frac(-1, 3));
        let y = QuadElem::from_ints(2, 1);
        let n = &x * &x.conj();
        assert!(n.is_rational());
        assert_eq!(n.u, x.norm());
        assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        // 2 + √3 is a unit
        assert_eq!(y.norm(), rat(1));
    }

    #[test]
    fn as_integer() {
        assert_eq!(
            QuadElem::from_ints(-2, 0).as_integer().unwrap(),
            BigInt::from(-2)
        );
        assert!(QuadElem::new(rat(1), frac(1, 2)).as_integer().is_err());
        assert!(QuadElem::new(frac(1, 2), rat(0)).as_integer().is_err());
    }
}
