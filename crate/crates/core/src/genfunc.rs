//! Rational generating functions over Q(i), treated as formal power series.
//!
//! Series coefficients are read off the denominator as a linear recurrence:
//! with `num = Σ p_k x^k` and `den = 1 + Σ_{k≥1} q_k x^k`,
//! `t_n = p_n − Σ_{k≥1} q_k t_{n−k}`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::recurrence;
use crate::rings::{ring_pow, AsInteger, GaussianInt, GaussianRational, Rational};
use crate::solutions::{abcd_from_state, scale};

/// A univariate polynomial over Q(i), coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        UniPoly::new(vec![c])
    }

    /// From Gaussian-integer coefficients `(re, im)` in ascending degree.
    pub fn from_gaussian(coeffs: &[(i64, i64)]) -> Self {
        UniPoly::new(
            coeffs
                .iter()
                .map(|&(re, im)| GaussianRational::from(GaussianInt::new(re, im)))
                .collect(),
        )
    }

    /// From integer coefficients in ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(
            coeffs
                .iter()
                .map(|&c| GaussianRational::from(GaussianInt::real(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the end.
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, p) in self.coeffs.iter().enumerate() {
            for (j, q) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(p * q);
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|p| p * c).collect())
    }

    /// `p(k·x)`.
    pub fn substitute_scaled(&self, k: &GaussianRational) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(d, p)| p * &ring_pow(k, d as u32))
                .collect(),
        )
    }

    /// The terms of degree below `order`.
    pub fn truncate(&self, order: usize) -> UniPoly {
        UniPoly::new(self.coeffs.iter().take(order).cloned().collect())
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `num / den` as a formal power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl RationalGF {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        RationalGF { num, den }
    }

    /// Divides numerator and denominator by `den(0)` so that `den(0) = 1`.
    pub fn normalize(&self) -> Result<RationalGF> {
        let c0 = self.den.coeff(0);
        if c0.is_one() {
            return Ok(self.clone());
        }
        let inv = c0.inv().ok_or(Error::ZeroConstantTerm)?;
        Ok(RationalGF::new(self.num.scale(&inv), self.den.scale(&inv)))
    }

    pub fn is_normalized(&self) -> bool {
        self.den.coeff(0).is_one()
    }

    /// The first `count` series coefficients.
    pub fn coefficients(&self, count: usize) -> Result<Vec<GaussianRational>> {
        let gf = self.normalize()?;
        let q = gf.den.coeffs();
        let mut out: Vec<GaussianRational> = Vec::with_capacity(count);
        for n in 0..count {
            let mut t = gf.num.coeff(n);
            for k in 1..q.len().min(n + 1) {
                t = t - &q[k] * &out[n - k];
            }
            out.push(t);
        }
        Ok(out)
    }

    /// The first `count` coefficients, each required to be a Gaussian integer.
    pub fn integer_coefficients(&self, count: usize) -> Result<Vec<GaussianInt>> {
        self.coefficients(count)?
            .iter()
            .map(AsInteger::as_integer)
            .collect()
    }

    pub fn add(&self, other: &RationalGF) -> RationalGF {
        RationalGF::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn scale(&self, c: &GaussianRational) -> RationalGF {
        RationalGF::new(self.num.scale(c), self.den.clone())
    }

    /// `f(k·x)`: coefficient `n` is multiplied by `k^n`.
    pub fn substitute_scaled(&self, k: &GaussianRational) -> RationalGF {
        RationalGF::new(self.num.substitute_scaled(k), self.den.substitute_scaled(k))
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}]", self.num, self.den)
    }
}

pub fn gf_normalize(gf: &RationalGF) -> Result<RationalGF> {
    gf.normalize()
}

pub fn gf_coefficients(gf: &RationalGF, count: usize) -> Result<Vec<GaussianRational>> {
    gf.coefficients(count)
}

/// The generating functions of the family, in the scaled variable `x` and
/// the raw variable `z` (`x = 2z`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GfKind {
    AScaled,
    BScaled,
    CScaled,
    ARaw,
    BRaw,
    CRaw,
}

impl GfKind {
    pub const ALL: [GfKind; 6] = [
        GfKind::AScaled,
        GfKind::BScaled,
        GfKind::CScaled,
        GfKind::ARaw,
        GfKind::BRaw,
        GfKind::CRaw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfKind::AScaled => "a",
            GfKind::BScaled => "b",
            GfKind::CScaled => "c",
            GfKind::ARaw => "a_raw",
            GfKind::BRaw => "b_raw",
            GfKind::CRaw => "c_raw",
        }
    }

    pub fn is_raw(self) -> bool {
        matches!(self, GfKind::ARaw | GfKind::BRaw | GfKind::CRaw)
    }

    /// The scaled counterpart of a raw kind (identity on scaled kinds).
    pub fn scaled(self) -> GfKind {
        match self {
            GfKind::ARaw => GfKind::AScaled,
            GfKind::BRaw => GfKind::BScaled,
            GfKind::CRaw => GfKind::CScaled,
            other => other,
        }
    }
}

impl fmt::Display for GfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown generating function {0:?} (expected one of a, b, c, a_raw, b_raw, c_raw)")]
pub struct UnknownGf(pub String);

impl FromStr for GfKind {
    type Err = UnknownGf;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let kind = match s.to_ascii_lowercase().as_str() {
            "a" | "a_scaled" => GfKind::AScaled,
            "b" | "b_scaled" => GfKind::BScaled,
            "c" | "c_scaled" => GfKind::CScaled,
            "a_raw" => GfKind::ARaw,
            "b_raw" => GfKind::BRaw,
            "c_raw" => GfKind::CRaw,
            _ => return Err(UnknownGf(s.to_string())),
        };
        Ok(kind)
    }
}

/// `(1 + t)(1 − 4t + t²)` where `t = k·x`, with `k = 1` for the scaled forms
/// and `k = 2` for the raw ones.
fn family_denominator(k: i64) -> UniPoly {
    let linear = UniPoly::from_ints(&[1, k]);
    let quadratic = UniPoly::from_ints(&[1, -4 * k, k * k]);
    linear.mul(&quadratic)
}

/// `1 − 4t + t²`, denominator of the imaginary parts of `b` and `c`.
fn imaginary_denominator(k: i64) -> UniPoly {
    UniPoly::from_ints(&[1, -4 * k, k * k])
}

/// The real and imaginary parts of a builtin generating function, each a
/// rational function with rational coefficients, as displayed in lowest
/// terms:
///
/// ```text
/// Σ a_n x^n = (x² + 1) / ((x + 1)(x² − 4x + 1))
/// Σ b_n x^n = −2x / ((x + 1)(x² − 4x + 1)) + i (1 − x) / (x² − 4x + 1)
/// Σ c_n x^n =  2x / ((x + 1)(x² − 4x + 1)) + i (1 − x) / (x² − 4x + 1)
/// ```
///
/// and for the raw forms, with `z`:
///
/// ```text
/// Σ A_n z^n = (4z² + 1) / ((2z + 1)(4z² − 8z + 1))
/// Σ B_n z^n = −4z / ((2z + 1)(4z² − 8z + 1)) + i (1 − 2z) / (4z² − 8z + 1)
/// Σ C_n z^n =  4z / ((2z + 1)(4z² − 8z + 1)) + i (1 − 2z) / (4z² − 8z + 1)
/// ```
pub fn builtin_parts(which: GfKind) -> (RationalGF, Option<RationalGF>) {
    let k = if which.is_raw() { 2 } else { 1 };
    let den = family_denominator(k);
    match which.scaled() {
        GfKind::AScaled => (
            RationalGF::new(UniPoly::from_ints(&[1, 0, k * k]), den),
            None,
        ),
        scaled => {
            let lin = if scaled == GfKind::BScaled {
                -2 * k
            } else {
                2 * k
            };
            let re = RationalGF::new(UniPoly::from_ints(&[0, lin]), den);
            let im = RationalGF::new(UniPoly::from_ints(&[1, -k]), imaginary_denominator(k));
            (re, Some(im))
        }
    }
}

/// A builtin generating function as a single Gaussian-coefficient rational
/// function over the common denominator `(1 + t)(1 − 4t + t²)`:
///
/// - `A`: `(1 + t²) / den`
/// - `B`: `(−2t + i(1 − t)(1 + t)) / den`
/// - `C`: `( 2t + i(1 − t)(1 + t)) / den`
///
/// where `t = x` (scaled) or `t = 2z` (raw).
pub fn builtin_gf(which: GfKind) -> RationalGF {
    let k = if which.is_raw() { 2 } else { 1 };
    let den = family_denominator(k);
    let num = match which.scaled() {
        GfKind::AScaled => UniPoly::from_ints(&[1, 0, k * k]),
        scaled => {
            let lin = if scaled == GfKind::BScaled {
                -2 * k
            } else {
                2 * k
            };
            let imag = UniPoly::from_ints(&[1, -k])
                .mul(&UniPoly::from_ints(&[1, k]))
                .scale(&GaussianRational::i());
            UniPoly::from_ints(&[0, lin]).add(&imag)
        }
    };
    RationalGF::new(num, den)
}

/// Reassembles `re + i·im` from [`builtin_parts`].
pub fn combine_parts(re: &RationalGF, im: Option<&RationalGF>) -> RationalGF {
    match im {
        Some(im) => re.add(&im.scale(&GaussianRational::i())),
        None => re.clone(),
    }
}

/// The sequence a builtin generating function should produce, computed by
/// the `solutions` module (scaled records, or raw `A_n, B_n, C_n`).
pub fn family_values(which: GfKind, count: usize) -> Result<Vec<GaussianInt>> {
    recurrence::states()
        .take(count)
        .map(|s| {
            let raw = abcd_from_state(&s);
            if which.is_raw() {
                Ok(match which {
                    GfKind::ARaw => raw.a,
                    GfKind::BRaw => raw.b,
                    _ => raw.c,
                })
            } else {
                let rec = scale(&raw)?;
                Ok(match which {
                    GfKind::AScaled => rec.a,
                    GfKind::BScaled => rec.b,
                    _ => rec.c,
                })
            }
        })
        .collect()
}

/// The first `count` coefficients of the builtin GF are Gaussian integers
/// and agree with the sequence values from the solutions module.
pub fn crosscheck(which: GfKind, count: usize) -> bool {
    let Ok(coeffs) = builtin_gf(which).integer_coefficients(count) else {
        return false;
    };
    match family_values(which, count) {
        Ok(values) => coeffs == values,
        Err(_) => false,
    }
}

/// Checks `seq[n] = Σ_k coeffs[k]·seq[n−1−k]` for every `n ≥ start`.
pub fn satisfies_recurrence<T>(seq: &[T], coeffs: &[i64], start: usize) -> bool
where
    T: Clone + PartialEq + Zero + std::ops::Mul<Output = T> + From<i64>,
{
    let start = start.max(coeffs.len());
    (start..seq.len()).all(|n| {
        let predicted = coeffs.iter().enumerate().fold(T::zero(), |acc, (k, &c)| {
            acc + T::from(c) * seq[n - 1 - k].clone()
        });
        predicted == seq[n]
    })
}

/// Recurrence coefficients `c_k` with `t_n = Σ c_k t_{n−k}` read off a
/// normalized denominator (`c_k = −q_k`).
pub fn denominator_recurrence(den: &UniPoly) -> Result<Vec<GaussianRational>> {
    let gf =
        RationalGF::new(UniPoly::constant(GaussianRational::one()), den.clone()).normalize()?;
    Ok(gf.den.coeffs().iter().skip(1).map(|q| -q).collect())
}

/// `2^n` as a Gaussian rational.
pub fn raw_scaling(n: usize) -> GaussianRational {
    GaussianRational::from(Rational::from_integer(num_bigint::BigInt::one() << n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::frac;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from(GaussianInt::new(re, im))
    }

    fn gi(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn normalize_unchanged_when_monic_at_zero() {
        let gf = RationalGF::new(
            UniPoly::from_ints(&[1, 0, 1]),
            UniPoly::from_ints(&[1, -3, -3, 1]),
        );
        assert_eq!(gf.normalize().unwrap(), gf);
    }

    #[test]
    fn normalize_divides_by_constant_term() {
        let gf = RationalGF::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[2, 2]));
        let norm = gf.normalize().unwrap();
        assert_eq!(
            norm.num,
            UniPoly::constant(GaussianRational::from(frac(1, 2)))
        );
        assert_eq!(norm.den, UniPoly::from_ints(&[1, 1]));
        assert_eq!(norm.coefficients(5).unwrap(), gf.coefficients(5).unwrap());
    }

    #[test]
    fn normalize_rejects_zero_constant_term() {
        let gf = RationalGF::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[0, 1]));
        assert_eq!(gf.normalize(), Err(Error::ZeroConstantTerm));
        assert_eq!(gf.coefficients(3), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn geometric_series() {
        let gf = RationalGF::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[1, -1]));
        assert_eq!(gf.coefficients(4).unwrap(), vec![g(1, 0); 4]);
    }

    #[test]
    fn family_denominator_expands() {
        assert_eq!(family_denominator(1), UniPoly::from_ints(&[1, -3, -3, 1]));
        assert_eq!(family_denominator(2), UniPoly::from_ints(&[1, -6, -12, 8]));
    }

    #[test]
    fn builtin_a_scaled() {
        let gf = builtin_gf(GfKind::AScaled);
        assert_eq!(gf.num, UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(gf.den, UniPoly::from_ints(&[1, -3, -3, 1]));
        assert_eq!(
            gf.integer_coefficients(4).unwrap(),
            vec![gi(1, 0), gi(3, 0), gi(13, 0), gi(47, 0)]
        );
    }

    #[test]
    fn builtin_b_and_c_scaled() {
        assert_eq!(
            builtin_gf(GfKind::BScaled).num.coeff(0),
            GaussianRational::i()
        );
        assert_eq!(
            builtin_gf(GfKind::BScaled).integer_coefficients(3).unwrap(),
            vec![gi(0, 1), gi(-2, 3), gi(-6, 11)]
        );
        assert_eq!(
            builtin_gf(GfKind::CScaled).integer_coefficients(3).unwrap(),
            vec![gi(0, 1), gi(2, 3), gi(6, 11)]
        );
    }

    #[test]
    fn builtin_a_raw() {
        assert_eq!(
            builtin_gf(GfKind::ARaw).integer_coefficients(3).unwrap(),
            vec![gi(1, 0), gi(6, 0), gi(52, 0)]
        );
    }

    #[test]
    fn raw_is_scaled_at_two_z() {
        let two = g(2, 0);
        for which in [GfKind::AScaled, GfKind::BScaled, GfKind::CScaled] {
            let raw_kind = GfKind::ALL
                .into_iter()
                .find(|k| k.is_raw() && k.scaled() == which)
                .unwrap();
            let substituted = builtin_gf(which).substitute_scaled(&two);
            assert_eq!(substituted, builtin_gf(raw_kind), "{which}");
        }
    }

    #[test]
    fn parts_recombine_to_builtin_series() {
        for which in GfKind::ALL {
            let (re, im) = builtin_parts(which);
            let combined = combine_parts(&re, im.as_ref());
            assert_eq!(
                combined.coefficients(30).unwrap(),
                builtin_gf(which).coefficients(30).unwrap(),
                "{which}"
            );
        }
    }

    #[test]
    fn crosschecks() {
        assert!(crosscheck(GfKind::AScaled, 4));
        assert!(crosscheck(GfKind::CScaled, 3));
        assert!(crosscheck(GfKind::BRaw, 50));
        for which in GfKind::ALL {
            assert!(crosscheck(which, 40), "{which}");
        }
    }

    #[test]
    fn series_times_denominator_gives_numerator() {
        let order = 25;
        for which in GfKind::ALL {
            let gf = builtin_gf(which);
            let series = UniPoly::new(gf.coefficients(order).unwrap());
            assert_eq!(
                series.mul(&gf.den).truncate(order),
                gf.num.truncate(order),
                "{which}"
            );
        }
    }

    #[test]
    fn linearity() {
        let f = RationalGF::new(UniPoly::from_ints(&[1, 2]), UniPoly::from_ints(&[1, -1, 3]));
        let h = RationalGF::new(
            UniPoly::from_gaussian(&[(0, 1)]),
            UniPoly::from_ints(&[2, 5]),
        );
        let sum = f.add(&h).coefficients(15).unwrap();
        let fc = f.coefficients(15).unwrap();
        let hc = h.coefficients(15).unwrap();
        for n in 0..15 {
            assert_eq!(sum[n], &fc[n] + &hc[n]);
        }
    }

    #[test]
    fn induced_recurrences() {
        let den = builtin_gf(GfKind::AScaled).den;
        assert_eq!(
            denominator_recurrence(&den).unwrap(),
            vec![g(3, 0), g(3, 0), g(-1, 0)]
        );
        let a = family_values(GfKind::AScaled, 60).unwrap();
        let b = family_values(GfKind::BScaled, 60).unwrap();
        assert!(satisfies_recurrence(&a, &[3, 3, -1], 3));
        assert!(satisfies_recurrence(&b, &[3, 3, -1], 3));
        let b_im: Vec<_> = b.iter().map(|z| z.im.clone()).collect();
        assert_eq!(b_im[..4], [1, 3, 11, 41].map(num_bigint::BigInt::from));
        assert!(satisfies_recurrence(&b_im, &[4, -1], 2));
        // the real part of b does not satisfy the order-2 recurrence
        let b_re: Vec<_> = b.iter().map(|z| z.re.clone()).collect();
        assert!(!satisfies_recurrence(&b_re, &[4, -1], 2));
    }

    #[test]
    fn parse_kind() {
        assert_eq!("a".parse::<GfKind>().unwrap(), GfKind::AScaled);
        assert_eq!("C_RAW".parse::<GfKind>().unwrap(), GfKind::CRaw);
        assert!("d".parse::<GfKind>().is_err());
        for k in GfKind::ALL {
            assert_eq!(k.name().parse::<GfKind>().unwrap(), k);
        }
    }
}
