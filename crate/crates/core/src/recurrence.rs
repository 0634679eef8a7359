//! The sequence `F_{n+2} = −2F_{n+1} + 2F_n`, `F_0 = 0`, `F_1 = 1`.
//!
//! `f_rec` iterates the recurrence and is the ground truth. The closed forms
//! in powers of `−1 ± √3` and `2 ± √3` are evaluated exactly in Q(√3) and
//! checked against it.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::rings::{frac, ring_pow, AsInteger, QuadElem, Rational};

/// A window `(F_n, F_{n+1})` of the sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FState {
    pub n: u32,
    pub f_n: BigInt,
    pub f_n1: BigInt,
}

impl FState {
    /// `(F_0, F_1) = (0, 1)`.
    pub fn seed() -> Self {
        FState {
            n: 0,
            f_n: BigInt::zero(),
            f_n1: BigInt::one(),
        }
    }

    /// `(F_{n+1}, F_{n+2})` with `F_{n+2} = −2F_{n+1} + 2F_n`.
    pub fn advance(&self) -> Self {
        FState {
            n: self.n + 1,
            f_n: self.f_n1.clone(),
            f_n1: self.next_value(),
        }
    }

    /// `F_{n+2}`.
    pub fn next_value(&self) -> BigInt {
        BigInt::from(2) * (&self.f_n - &self.f_n1)
    }

    /// The state at index `n`, iterating from the seed.
    pub fn at(n: u32) -> Self {
        let mut s = FState::seed();
        for _ in 0..n {
            s = s.advance();
        }
        s
    }
}

/// Iterator over successive [`FState`]s starting at the seed.
pub fn states() -> impl Iterator<Item = FState> {
    std::iter::successors(Some(FState::seed()), |s| Some(s.advance()))
}

/// `F_0, …, F_{count−1}`.
pub fn f_values(count: usize) -> Vec<BigInt> {
    states().take(count).map(|s| s.f_n).collect()
}

/// `F_n` by iterating the recurrence.
pub fn f_rec(n: u32) -> BigInt {
    FState::at(n).f_n
}

/// `F_n = (√3/6)((−1+√3)^n − (−1−√3)^n)`, evaluated in Q(√3).
pub fn f_closed_elem(n: u32) -> QuadElem {
    let root = QuadElem::from_ints(-1, 1);
    let diff = ring_pow(&root, n) - ring_pow(&root.conj(), n);
    QuadElem::sqrt3().scale(&frac(1, 6)) * diff
}

pub fn f_closed(n: u32) -> Result<BigInt> {
    f_closed_elem(n).as_integer()
}

/// Which product of sequence terms a closed form describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Product {
    /// `F_{n+1}²`
    SqNext,
    /// `F_{n+1}·F_n`
    Cross,
    /// `F_{n+2}·F_n`
    Skip,
}

impl Product {
    pub const ALL: [Product; 3] = [Product::SqNext, Product::Cross, Product::Skip];

    pub fn name(self) -> &'static str {
        match self {
            Product::SqNext => "F(n+1)^2",
            Product::Cross => "F(n+1)F(n)",
            Product::Skip => "F(n+2)F(n)",
        }
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn signed_power_of_two(n: u32) -> Rational {
    // (−2)^n
    Rational::from_integer(ring_pow(&BigInt::from(-2), n))
}

fn alternating(n: u32) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// The closed form of the requested product, as an element of Q(√3):
///
/// - `F_{n+1}²     = (2^n/6)((2+√3)^{n+1} + (2−√3)^{n+1} + 2(−1)^n)`
/// - `F_{n+1}F_n   = (1/12)((−1+√3)^{2n+1} + (−1−√3)^{2n+1} − (−2)^{n+1})`
/// - `F_{n+2}F_n   = (2^n/6)((2+√3)^{n+1} + (2−√3)^{n+1} + 4(−1)^{n+1})`
pub fn product_closed_elem(n: u32, which: Product) -> QuadElem {
    let two_pow = Rational::from_integer(BigInt::one() << n);
    match which {
        Product::SqNext | Product::Skip => {
            let unit = QuadElem::from_ints(2, 1);
            let sum = ring_pow(&unit, n + 1) + ring_pow(&unit.conj(), n + 1);
            let offset = match which {
                Product::SqNext => alternating(n) * Rational::from_integer(2.into()),
                _ => alternating(n + 1) * Rational::from_integer(4.into()),
            };
            (sum + QuadElem::rational(offset)).scale(&(two_pow * frac(1, 6)))
        }
        Product::Cross => {
            let root = QuadElem::from_ints(-1, 1);
            let sum = ring_pow(&root, 2 * n + 1) + ring_pow(&root.conj(), 2 * n + 1);
            (sum - QuadElem::rational(signed_power_of_two(n + 1))).scale(&frac(1, 12))
        }
    }
}

pub fn product_closed(n: u32, which: Product) -> Result<BigInt> {
    product_closed_elem(n, which).as_integer()
}

/// The same product computed directly from the recurrence.
pub fn product_brute(n: u32, which: Product) -> BigInt {
    product_from_state(&FState::at(n), which)
}

pub fn product_from_state(s: &FState, which: Product) -> BigInt {
    match which {
        Product::SqNext => &s.f_n1 * &s.f_n1,
        Product::Cross => &s.f_n1 * &s.f_n,
        Product::Skip => s.next_value() * &s.f_n,
    }
}

/// `F_{n+1}² − F_n·F_{n+2} = 2^n(−1)^n`, all terms from the recurrence.
pub fn check_eq4(n: u32) -> bool {
    check_eq4_state(&FState::at(n))
}

pub fn check_eq4_state(s: &FState) -> bool {
    let lhs = product_from_state(s, Product::SqNext) - product_from_state(s, Product::Skip);
    lhs == ring_pow(&BigInt::from(-2), s.n)
}
