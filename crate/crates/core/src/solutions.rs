//! The raw family `(A_n, B_n, C_n, d_n)` and its scaled form
//! `(a_n, b_n, c_n) = (A_n, B_n, C_n) / 2^n`.
//!
//! With `x = F_{n+1}` and `a = F_n` substituted into the four-term quintic
//! identity,
//!
//! ```text
//! A_n = F_{n+1}² − 2F_{n+1}F_n − 2F_n²
//! B_n = iF_{n+1}² + 2F_{n+1}F_n + 2iF_n²
//! C_n = iF_{n+1}² − 2F_{n+1}F_n + 2iF_n²
//! d_n = F_{n+1}² + 2F_{n+1}F_n − 2F_n²  = (−2)^n
//! ```
//!
//! so `A_n^5 + B_n^5 = C_n^5 + d_n^5`, and dividing by `2^{5n}` gives
//! `a_n^5 + b_n^5 = c_n^5 + (−1)^n`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::recurrence::FState;
use crate::rings::{frac, ring_pow, AsInteger, BiquadElem, GaussianInt, QuadElem, Rational};
use crate::sympoly::QUINTIC_EXPONENT;

/// The unscaled quadruple at index `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSolution {
    pub n: u32,
    pub a: GaussianInt,
    pub b: GaussianInt,
    pub c: GaussianInt,
    /// Real by construction.
    pub d: BigInt,
}

impl RawSolution {
    /// `A^5 + B^5 = C^5 + d^5`.
    pub fn satisfies_four_term_identity(&self) -> bool {
        let e = QUINTIC_EXPONENT;
        let lhs = ring_pow(&self.a, e) + ring_pow(&self.b, e);
        let rhs = ring_pow(&self.c, e) + GaussianInt::from(ring_pow(&self.d, e));
        lhs == rhs
    }

    /// `d_n = (−2)^n`.
    pub fn d_collapses(&self) -> bool {
        self.d == ring_pow(&BigInt::from(-2), self.n)
    }
}

/// Builds `(A_n, B_n, C_n, d_n)` from the window `(F_n, F_{n+1})`.
pub fn abcd_from_state(s: &FState) -> RawSolution {
    let sq_next = &s.f_n1 * &s.f_n1;
    let cross2 = BigInt::from(2) * &s.f_n1 * &s.f_n;
    let sq2 = BigInt::from(2) * &s.f_n * &s.f_n;
    RawSolution {
        n: s.n,
        a: GaussianInt::real(&sq_next - &cross2 - &sq2),
        b: GaussianInt::new(cross2.clone(), &sq_next + &sq2),
        c: GaussianInt::new(-&cross2, &sq_next + &sq2),
        d: &sq_next + &cross2 - &sq2,
    }
}

pub fn abcd_from_f(n: u32) -> RawSolution {
    abcd_from_state(&FState::at(n))
}

/// `(A_n, B_n, C_n)` from the closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedTriple {
    pub a: GaussianInt,
    pub b: GaussianInt,
    pub c: GaussianInt,
}

/// The closed forms of `A_n, B_n, C_n` as elements of Q(i, √3):
///
/// ```text
/// A_n = (2^n/3)((1+√3)(2+√3)^n + (1−√3)(2−√3)^n + (−1)^n)
/// B_n = (2^n/6)((−1+√3)(2−√3)^n − (1+√3)(2+√3)^n + 2(−1)^n)
///         + i(2^n/6)((3−√3)(2−√3)^n + (3+√3)(2+√3)^n)
/// C_n = (2^n/6)((1+√3)(2+√3)^n + (1−√3)(2−√3)^n − 2(−1)^n)
///         + i(2^n/6)((3−√3)(2−√3)^n + (3+√3)(2+√3)^n)
/// ```
pub fn abc_closed_elems(n: u32) -> [BiquadElem; 3] {
    let q = QuadElem::from_ints;
    let up = BiquadElem::from(ring_pow(&q(2, 1), n));
    let down = BiquadElem::from(ring_pow(&q(2, -1), n));
    let sign = BiquadElem::from(q(if n.is_multiple_of(2) { 1 } else { -1 }, 0));
    let lift = |u: i64, v: i64| BiquadElem::from(q(u, v));
    let two_pow = Rational::from_integer(BigInt::one() << n);
    let sixth = &two_pow * frac(1, 6);
    let i = BiquadElem::i();

    let a = (lift(1, 1) * &up + lift(1, -1) * &down + sign.clone()).scale(&(&two_pow * frac(1, 3)));

    let im_part = (lift(3, -1) * &down + lift(3, 1) * &up).scale(&sixth);
    let b_re = (lift(-1, 1) * &down - lift(1, 1) * &up + lift(2, 0) * &sign).scale(&sixth);
    let c_re = (lift(1, 1) * &up + lift(1, -1) * &down - lift(2, 0) * &sign).scale(&sixth);

    let b = b_re + &i * &im_part;
    let c = c_re + &i * &im_part;
    [a, b, c]
}

pub fn abc_closed(n: u32) -> Result<ClosedTriple> {
    let [a, b, c] = abc_closed_elems(n);
    Ok(ClosedTriple {
        a: a.as_integer()?,
        b: b.as_integer()?,
        c: c.as_integer()?,
    })
}

impl RawSolution {
    pub fn matches_closed(&self, closed: &ClosedTriple) -> bool {
        self.a == closed.a && self.b == closed.b && self.c == closed.c
    }
}

pub fn check_d_collapse(n: u32) -> bool {
    abcd_from_f(n).d_collapses()
}

/// The right-hand offset `±1` of the scaled identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(−1)^n`.
    pub fn alternating(n: u32) -> Sign {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i32(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i32())
    }
}

/// A member `(a_n, b_n, c_n)` of the scaled family with its offset
/// `sign = (−1)^n`, so that `a^5 + b^5 = c^5 + sign`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionRecord {
    pub n: u32,
    pub a: GaussianInt,
    pub b: GaussianInt,
    pub c: GaussianInt,
    pub sign: Sign,
}

impl SolutionRecord {
    /// `a^5 + b^5 − c^5 − sign = 0` in exact Gaussian arithmetic.
    pub fn verify_quintic(&self) -> bool {
        verify_quintic(self)
    }

    /// The structural relations of the family: `a` real, `c = −conj(b)`,
    /// and `sign = (−1)^n`.
    pub fn has_family_shape(&self) -> bool {
        self.a.is_real() && self.c == -self.b.conj() && self.sign == Sign::alternating(self.n)
    }
}

impl fmt::Display for SolutionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "({})^5 + ({})^5 = ({})^5 {op} 1", self.a, self.b, self.c)
    }
}

pub fn verify_quintic(rec: &SolutionRecord) -> bool {
    let e = QUINTIC_EXPONENT;
    let offset = GaussianInt::real(rec.sign.as_i32());
    let residual = ring_pow(&rec.a, e) + ring_pow(&rec.b, e) - ring_pow(&rec.c, e) - offset;
    residual.is_zero()
}

fn divide_exact(
    n: u32,
    component: &'static str,
    value: &BigInt,
    divisor: &BigInt,
) -> Result<BigInt> {
    let (q, r) = value.div_mod_floor(divisor);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NotDivisible {
            n,
            component,
            value: value.to_string(),
            residue: r.to_string(),
        })
    }
}

/// Divides every component of the raw triple by `2^n`, failing if any
/// division is inexact.
pub fn scale(raw: &RawSolution) -> Result<SolutionRecord> {
    let n = raw.n;
    let divisor = BigInt::one() << n;
    let div = |name, v: &BigInt| divide_exact(n, name, v, &divisor);
    let parts = |re_name, im_name, z: &GaussianInt| -> Result<GaussianInt> {
        Ok(GaussianInt {
            re: div(re_name, &z.re)?,
            im: div(im_name, &z.im)?,
        })
    };
    Ok(SolutionRecord {
        n,
        a: parts("a_re", "a_im", &raw.a)?,
        b: parts("b_re", "b_im", &raw.b)?,
        c: parts("c_re", "c_im", &raw.c)?,
        sign: Sign::alternating(n),
    })
}

/// The scaled record at index `n`.
pub fn solution(n: u32) -> Result<SolutionRecord> {
    scale(&abcd_from_f(n))
}

/// Scaled records for `n = 0, …, count−1`, built sequentially from one pass
/// over the recurrence.
pub fn solutions(count: u32) -> Result<Vec<SolutionRecord>> {
    crate::recurrence::states()
        .take(count as usize)
        .map(|s| scale(&abcd_from_state(&s)))
        .collect()
}
