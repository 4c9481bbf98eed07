mod common;

use std::cmp::Ordering;

use cuspval::valring::{presentation_from_path, UnionSearch};
use cuspval::{
    membership_by_value, membership_structural, membership_union, ring_generators, CfStream, LaurentPolynomial,
    Monomial, MonomialValuation, RationalFunction,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
    (2i64..80, 1i64..80).prop_filter("coprime, a > b", |(a, b)| a > b && num_integer::gcd(*a, *b) == 1)
}

fn poly() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((0i64..=6, 0i64..=6, -10i64..=10), 1..7)
        .prop_map(|t| LaurentPolynomial::from_int_terms(&t))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (-20i64..=20, -20i64..=20).prop_map(|(a, b)| Monomial::new(a, b))
}

proptest! {
    #[test]
    fn structural_membership_matches_value((a, b) in coprime_pair(), p in poly(), q in poly()) {
        let r = RationalFunction::new(p.clone(), q.clone()).unwrap();
        let pres = ring_generators(a, b).unwrap();
        let nu = MonomialValuation::integral(a, b).unwrap();
        let s = membership_structural(&r, &pres).unwrap();
        prop_assert_eq!(s.member, membership_by_value(&r, &nu).unwrap());
        prop_assert_eq!(s.gap, common::numeric_value(&p, a, b) - common::numeric_value(&q, a, b));
    }

    #[test]
    fn generator_identities((a, b) in coprime_pair()) {
        let r = ring_generators(a, b).unwrap();
        prop_assert_eq!(r.p * a - r.q * b, 1);
        prop_assert_eq!(r.v.pow(a) * r.u.pow(r.q), Monomial::X);
        prop_assert_eq!(r.v.pow(b) * r.u.pow(r.p), Monomial::Y);
        prop_assert_eq!(r.u.ex * a + r.u.ey * b, 0);
        prop_assert_eq!(r.v.ex * a + r.v.ey * b, 1);
    }

    #[test]
    fn generators_agree_with_the_tree((a, b) in coprime_pair()) {
        let r = ring_generators(a, b).unwrap();
        prop_assert_eq!(presentation_from_path(a, b).unwrap(), (r.u, r.v));
    }

    #[test]
    fn union_search_is_sound(period in prop::collection::vec(1i64..5, 1..4), m in monomial()) {
        let s = CfStream::periodic(vec![BigInt::from(1)], period.into_iter().map(BigInt::from).collect()).unwrap();
        let nu = MonomialValuation::stream(s).unwrap();
        if let UnionSearch::Found { vertex, .. } = membership_union(m, &nu, 64).unwrap() {
            prop_assert!(membership_by_value(&RationalFunction::from_monomial(m), &nu).unwrap());
            prop_assert!(nu.sign(nu.value_of_monomial(vertex.f)).unwrap() == Ordering::Greater);
        }
    }

    #[test]
    fn union_search_is_complete_for_sqrt2(m in monomial()) {
        let nu = MonomialValuation::stream(CfStream::sqrt2()).unwrap();
        let by_value = membership_by_value(&RationalFunction::from_monomial(m), &nu).unwrap();
        let found = matches!(membership_union(m, &nu, 64).unwrap(), UnionSearch::Found { .. });
        prop_assert_eq!(found, by_value);
        prop_assert_eq!(by_value, common::sqrt2_sign(m.ex, m.ey) != Ordering::Less);
    }
}
