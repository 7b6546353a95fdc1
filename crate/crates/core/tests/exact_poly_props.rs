use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use gamma_extremes::exact_poly::{
    rational, substitute_rational, sturm_roots_in_interval, verify_sign_on_interval, RationalPoly, Sign,
};

fn poly() -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec((-50i64..50, 1i64..8), 0..7)
        .prop_map(|cs| RationalPoly::from_coeffs(cs.into_iter().map(|(n, d)| rational(n, d)).collect()))
}

fn ratio() -> impl Strategy<Value = BigRational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| rational(n, d))
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in ratio()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn division_reconstructs(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn substitution_commutes_with_evaluation(p in poly(), n in poly(), d in poly(), q0 in ratio()) {
        let dv = d.eval(&q0);
        prop_assume!(dv != rational(0, 1));
        let f = substitute_rational(&p, &n, &d).unwrap();
        prop_assert_eq!(f.eval(&q0).unwrap(), p.eval(&(n.eval(&q0) / dv)));
    }

    #[test]
    fn sturm_counts_constructed_roots(
        roots in prop::collection::btree_set(-30i64..30, 1..7),
        denom in 1i64..5,
        extra in 0u32..3,
    ) {
        let mut p = RationalPoly::one();
        for &r in &roots {
            p = &p * &RationalPoly::from_coeffs(vec![rational(-r, denom), rational(1, 1)]);
        }
        // a positive quadratic factor adds no real roots
        let q = RationalPoly::from_integers([1i64, 0, 1]).pow(extra);
        p = &p * &q;
        let lo = rational(-61, 2 * denom);
        let hi = rational(61, 2 * denom);
        prop_assert_eq!(sturm_roots_in_interval(&p, &lo, &hi).unwrap(), roots.len());
        let mid = rational(1, 2 * denom);
        let count_right = roots.iter().filter(|&&r| r > 0).count();
        prop_assert_eq!(sturm_roots_in_interval(&p, &mid, &hi).unwrap(), count_right);
    }

    #[test]
    fn reduced_fractions_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let c = rational(n, d);
        let p = RationalPoly::constant(c.clone());
        let back = p.coeff(0);
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(back.numer().clone() * BigInt::from(d), BigInt::from(n) * back.denom().clone());
    }
}

#[test]
fn sign_on_interval_for_positive_quartic() {
    let p = RationalPoly::from_integers([1i64, 0, -2, 0, 2]);
    assert!(verify_sign_on_interval(&p, &rational(-3, 1), &rational(3, 1), Sign::Positive).unwrap());
    let neg = -p;
    assert!(verify_sign_on_interval(&neg, &rational(-3, 1), &rational(3, 1), Sign::Negative).unwrap());
}
