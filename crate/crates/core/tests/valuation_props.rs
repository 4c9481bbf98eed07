mod common;

use std::cmp::Ordering;

use cuspval::exactnum::integer;
use cuspval::valuation::compare_values;
use cuspval::{CfStream, LaurentPolynomial, MonomialValuation, RationalFunction, Value, ValueGroup};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((-6i64..=6, -6i64..=6, -10i64..=10), 1..6)
        .prop_map(|t| LaurentPolynomial::from_int_terms(&t))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn valuation() -> impl Strategy<Value = MonomialValuation> {
    prop_oneof![
        (1i64..60, 1i64..60).prop_map(|(a, b)| MonomialValuation::integral(a, b).unwrap()),
        prop::collection::vec(1i64..6, 1..4).prop_map(|period| {
            let period = period.into_iter().map(BigInt::from).collect();
            MonomialValuation::stream(CfStream::periodic(vec![BigInt::from(1)], period).unwrap()).unwrap()
        }),
        ((-5i64..=5, -5i64..=5), (-5i64..=5, -5i64..=5)).prop_map(|(vx, vy)| MonomialValuation::lex(vx, vy)),
    ]
}

fn min_value(nu: &MonomialValuation, a: Value, b: Value) -> Value {
    if nu.compare(a, b).unwrap() == Ordering::Less {
        a
    } else {
        b
    }
}

proptest! {
    #[test]
    fn multiplicative(nu in valuation(), p in poly(), q in poly()) {
        let (vp, vq) = (nu.value_of_polynomial(&p).unwrap(), nu.value_of_polynomial(&q).unwrap());
        let vpq = nu.value_of_polynomial(&(&p * &q)).unwrap();
        prop_assert_eq!(nu.compare(vpq, vp + vq).unwrap(), Ordering::Equal);
    }

    #[test]
    fn ultrametric(nu in valuation(), p in poly(), q in poly()) {
        let sum = &p + &q;
        prop_assume!(!sum.is_zero());
        let m = min_value(&nu, nu.value_of_polynomial(&p).unwrap(), nu.value_of_polynomial(&q).unwrap());
        prop_assert_ne!(nu.compare(nu.value_of_polynomial(&sum).unwrap(), m).unwrap(), Ordering::Less);
    }

    #[test]
    fn constants_have_value_zero(nu in valuation(), c in -100i64..100) {
        prop_assume!(c != 0);
        let p = LaurentPolynomial::from_int_terms(&[(0, 0, c)]);
        prop_assert_eq!(nu.value_of_polynomial(&p).unwrap(), Value::ZERO);
    }

    #[test]
    fn value_is_independent_of_representative(nu in valuation(), p in poly(), q in poly(), h in poly()) {
        let r1 = RationalFunction::new(p.clone(), q.clone()).unwrap();
        let r2 = RationalFunction::new(&p * &h, &q * &h).unwrap();
        let (v1, v2) = (nu.value_of_rational_function(&r1).unwrap(), nu.value_of_rational_function(&r2).unwrap());
        prop_assert_eq!(nu.compare(v1, v2).unwrap(), Ordering::Equal);
    }

    #[test]
    fn scaling_gives_an_equivalent_valuation(a in 1i64..40, b in 1i64..40, k in 2i64..20, p in poly(), q in poly()) {
        let nu = MonomialValuation::integral(a, b).unwrap();
        let scaled = MonomialValuation::integral(k * a, k * b).unwrap();
        let (vp, vq) = (nu.value_of_polynomial(&p).unwrap(), nu.value_of_polynomial(&q).unwrap());
        prop_assert_eq!(nu.compare(vp, vq).unwrap(), scaled.compare(vp, vq).unwrap());
        let g = ValueGroup::rational(integer(a), integer(b)).unwrap();
        prop_assert_eq!(compare_values(&g, vp, vq).unwrap(), nu.compare(vp, vq).unwrap());
    }

    #[test]
    fn rational_values_match_integer_oracle(a in 1i64..50, b in 1i64..50, p in poly()) {
        let nu = MonomialValuation::integral(a, b).unwrap();
        let v = nu.value_of_polynomial(&p).unwrap();
        prop_assert_eq!(v.m * a + v.n * b, common::numeric_value(&p, a, b));
    }

    #[test]
    fn sqrt2_signs_match_interval_oracle(m in -500i64..500, n in -500i64..500) {
        let nu = MonomialValuation::stream(CfStream::sqrt2()).unwrap();
        prop_assert_eq!(nu.sign(Value::new(m, n)).unwrap(), common::sqrt2_sign(m, n));
    }
}
