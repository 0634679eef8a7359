//! Sparse bivariate polynomials in `(x, a)` over Z[i].
//!
//! Used to expand
//! `g(x) = (x² + 2ax − 2a²)^5 + (ix² − 2ax + 2ia²)^5`
//! and show that it is even in `x`, which is the four-term quintic identity
//! `P(x)^5 + Q(x)^5 = P(−x)^5 + Q(−x)^5`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rings::{forward_binops, ring_pow, GaussianInt};

/// Exponent of the near-miss identity. The expansion code is generic in it.
pub const QUINTIC_EXPONENT: u32 = 5;

/// Exponents `(deg_x, deg_a)` of a monomial `x^i a^j`.
pub type Monomial = (u32, u32);

/// A polynomial in `x` and `a` with Gaussian-integer coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty
/// map and equality is map equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, GaussianInt>,
}

impl BiPoly {
    pub fn constant(c: GaussianInt) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    /// `c · x^deg_x · a^deg_a`.
    pub fn monomial(c: GaussianInt, deg_x: u32, deg_a: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term((deg_x, deg_a), c);
        p
    }

    pub fn x() -> Self {
        BiPoly::monomial(GaussianInt::one(), 1, 0)
    }

    pub fn a() -> Self {
        BiPoly::monomial(GaussianInt::one(), 0, 1)
    }

    /// Builds a polynomial from `(coefficient, deg_x, deg_a)` triples,
    /// summing repeated monomials.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (GaussianInt, u32, u32)>,
    {
        let mut p = BiPoly::zero();
        for (c, i, j) in terms {
            p.add_term((i, j), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: GaussianInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Number of stored (nonzero) monomials.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, deg_x: u32, deg_a: u32) -> GaussianInt {
        self.terms.get(&(deg_x, deg_a)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &GaussianInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0).max()
    }

    pub fn degree_a(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.1).max()
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        ring_pow(self, k)
    }

    /// The terms with odd `x`-degree.
    pub fn odd_part_in_x(&self) -> BiPoly {
        self.filter_x_parity(1)
    }

    /// The terms with even `x`-degree.
    pub fn even_part_in_x(&self) -> BiPoly {
        self.filter_x_parity(0)
    }

    fn filter_x_parity(&self, parity: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0 % 2 == parity)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// `p(−x, a)`, computed by negating odd-`x`-degree coefficients.
    pub fn reflect_x(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.0 % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Evaluate at integer point `(x, a)` in exact Gaussian arithmetic.
    pub fn eval(&self, x: &BigInt, a: &BigInt) -> GaussianInt {
        let x = GaussianInt::from(x.clone());
        let a = GaussianInt::from(a.clone());
        self.eval_gaussian(&x, &a)
    }

    pub fn eval_gaussian(&self, x: &GaussianInt, a: &GaussianInt) -> GaussianInt {
        self.terms
            .iter()
            .fold(GaussianInt::zero(), |acc, ((i, j), c)| {
                acc + c * &(ring_pow(x, *i) * ring_pow(a, *j))
            })
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

forward_binops!(BiPoly);

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::constant(GaussianInt::one())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest x-degree first
        for (k, ((i, j), c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            match i {
                0 => {}
                1 => write!(f, "·x")?,
                _ => write!(f, "·x^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "·a")?,
                _ => write!(f, "·a^{j}")?,
            }
        }
        Ok(())
    }
}

fn gi(re: i64, im: i64) -> GaussianInt {
    GaussianInt::new(re, im)
}

/// `x² + 2ax − 2a²`.
pub fn first_quadratic() -> BiPoly {
    BiPoly::from_terms([(gi(1, 0), 2, 0), (gi(2, 0), 1, 1), (gi(-2, 0), 0, 2)])
}

/// `ix² − 2ax + 2ia²`.
pub fn second_quadratic() -> BiPoly {
    BiPoly::from_terms([(gi(0, 1), 2, 0), (gi(-2, 0), 1, 1), (gi(0, 2), 0, 2)])
}

/// `p^e + q^e`.
pub fn sum_of_powers(p: &BiPoly, q: &BiPoly, exponent: u32) -> BiPoly {
    p.pow(exponent) + q.pow(exponent)
}

/// The fully expanded `g = (x² + 2ax − 2a²)^5 + (ix² − 2ax + 2ia²)^5`.
pub fn build_g() -> BiPoly {
    sum_of_powers(&first_quadratic(), &second_quadratic(), QUINTIC_EXPONENT)
}

/// Checks `P(x)^5 + Q(x)^5 = P(−x)^5 + Q(−x)^5` at an integer point, where
/// `P`, `Q` are the two quadratics of `g`. Everything is evaluated
/// numerically; no polynomial expansion is involved.
pub fn verify_param_identity(a: &BigInt, x: &BigInt) -> bool {
    let i = GaussianInt::i();
    let two = BigInt::from(2);
    let x2 = x * x;
    let ax2 = &two * a * x;
    let a2 = &two * a * a;

    let p_plus = GaussianInt::from(&x2 + &ax2 - &a2);
    let q_plus = &i * &GaussianInt::from(&x2 + &a2) - GaussianInt::from(ax2.clone());
    let p_minus = GaussianInt::from(&x2 - &ax2 - &a2);
    let q_minus = &i * &GaussianInt::from(&x2 + &a2) + GaussianInt::from(ax2);

    let lhs = ring_pow(&p_plus, QUINTIC_EXPONENT) + ring_pow(&q_plus, QUINTIC_EXPONENT);
    let rhs = ring_pow(&p_minus, QUINTIC_EXPONENT) + ring_pow(&q_minus, QUINTIC_EXPONENT);
    lhs == rhs
}

/// Summary of the symbolic evenness check for a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvennessReport {
    pub total_terms: usize,
    pub odd_terms: usize,
    /// `p(x) − p(−x)` vanished, computed via [`BiPoly::reflect_x`].
    pub reflection_vanishes: bool,
}

impl EvennessReport {
    pub fn is_even(&self) -> bool {
        self.odd_terms == 0 && self.reflection_vanishes
    }
}

pub fn evenness_report(p: &BiPoly) -> EvennessReport {
    EvennessReport {
        total_terms: p.num_terms(),
        odd_terms: p.odd_part_in_x().num_terms(),
        reflection_vanishes: (p - &p.reflect_x()).is_zero(),
    }
}
