use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use quintic::rings::{
    frac, ring_pow, AsInteger, BiquadElem, GaussianInt, GaussianRational, QuadElem, Rational,
};
use quintic::sympoly::{verify_param_identity, BiPoly};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| frac(n, d))
}

fn gaussian_int() -> impl Strategy<Value = GaussianInt> {
    (-1000i64..1000, -1000i64..1000).prop_map(|(re, im)| GaussianInt::new(re, im))
}

fn gaussian_rational() -> impl Strategy<Value = GaussianRational> {
    (small_rational(), small_rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn quad() -> impl Strategy<Value = QuadElem> {
    (small_rational(), small_rational()).prop_map(|(u, v)| QuadElem::new(u, v))
}

fn biquad() -> impl Strategy<Value = BiquadElem> {
    (quad(), quad()).prop_map(|(re, im)| BiquadElem::new(re, im))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((-9i64..9, -9i64..9), 0u32..4, 0u32..4), 0..6).prop_map(|terms| {
        BiPoly::from_terms(
            terms
                .into_iter()
                .map(|((re, im), i, j)| (GaussianInt::new(re, im), i, j)),
        )
    })
}

macro_rules! ring_axioms {
    ($name:ident, $strategy:expr, $t:ty) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(300))]

            #[test]
            fn $name(x in $strategy, y in $strategy, z in $strategy) {
                prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
                prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
                prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
                prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
                prop_assert_eq!(
                    x.clone() * (y.clone() + z.clone()),
                    x.clone() * y.clone() + x.clone() * z.clone()
                );
                prop_assert_eq!(x.clone() - x.clone(), <$t>::zero());
                prop_assert_eq!(x.clone() * <$t>::one(), x.clone());
                prop_assert_eq!(x.clone() + (-x.clone()), <$t>::zero());
            }
        }
    };
}

ring_axioms!(gaussian_int_ring_axioms, gaussian_int(), GaussianInt);
ring_axioms!(
    gaussian_rational_ring_axioms,
    gaussian_rational(),
    GaussianRational
);
ring_axioms!(quad_ring_axioms, quad(), QuadElem);
ring_axioms!(biquad_ring_axioms, biquad(), BiquadElem);

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn quad_norm_is_rational_and_multiplicative(x in quad(), y in quad()) {
        let n = &x * &x.conj();
        prop_assert!(n.v.is_zero());
        prop_assert_eq!(&n.u, &x.norm());
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn quad_conjugation_is_homomorphism(x in quad(), y in quad()) {
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        prop_assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn biquad_embedding_commutes(x in quad(), y in quad()) {
        let bx = BiquadElem::from(x.clone());
        let by = BiquadElem::from(y.clone());
        prop_assert_eq!(BiquadElem::from(&x * &y), &bx * &by);
        prop_assert_eq!(BiquadElem::from(&x - &y), &bx - &by);
    }

    #[test]
    fn pow_exponent_law_gaussian(x in gaussian_int(), j in 0u32..=64, k in 0u32..=64) {
        prop_assert_eq!(ring_pow(&x, j + k), ring_pow(&x, j) * ring_pow(&x, k));
    }

    #[test]
    fn pow_exponent_law_quad(x in quad(), j in 0u32..=64, k in 0u32..=64) {
        prop_assert_eq!(ring_pow(&x, j + k), ring_pow(&x, j) * ring_pow(&x, k));
    }

    #[test]
    fn gaussian_embedding_round_trip(x in gaussian_int()) {
        let q = GaussianRational::from(&x);
        prop_assert!(q.is_gaussian_integer());
        prop_assert_eq!(q.as_integer().unwrap(), x);
    }

    #[test]
    fn gaussian_conjugation_multiplicative(x in gaussian_int(), y in gaussian_int()) {
        prop_assert_eq!((&x * &y).conj(), x.conj() * y.conj());
    }

    #[test]
    fn bipoly_eval_is_homomorphism(p in bipoly(), q in bipoly(), x in -20i64..20, a in -20i64..20) {
        let (x, a) = (BigInt::from(x), BigInt::from(a));
        prop_assert_eq!((&p * &q).eval(&x, &a), p.eval(&x, &a) * q.eval(&x, &a));
        prop_assert_eq!((&p + &q).eval(&x, &a), p.eval(&x, &a) + q.eval(&x, &a));
    }

    #[test]
    fn bipoly_reflection_matches_negated_eval(p in bipoly(), x in -20i64..20, a in -20i64..20) {
        let (x, a) = (BigInt::from(x), BigInt::from(a));
        prop_assert_eq!(p.reflect_x().eval(&x, &a), p.eval(&-x.clone(), &a));
        prop_assert_eq!(&p.odd_part_in_x() + &p.even_part_in_x(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn param_identity_random_points(a in -1000i64..=1000, x in -1000i64..=1000) {
        prop_assert!(verify_param_identity(&BigInt::from(a), &BigInt::from(x)));
    }
}
