#![allow(dead_code)]

use cuspval::{LaurentPolynomial, Monomial, TreeVertex};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use std::cmp::Ordering;

/// A nonzero polynomial in `k[x, y]` of total degree at most `deg` with
/// integer coefficients in `[-coef, coef]`.
pub fn random_polynomial<R: Rng>(rng: &mut R, deg: i64, coef: i64, max_terms: usize) -> LaurentPolynomial {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let mut terms = Vec::with_capacity(n);
        for _ in 0..n {
            let i = rng.gen_range(0..=deg);
            let j = rng.gen_range(0..=deg - i);
            let c = rng.gen_range(-coef..=coef);
            terms.push((i, j, c));
        }
        let p = LaurentPolynomial::from_int_terms(&terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Like [`random_polynomial`] but with exponents in `[-span, span]`.
pub fn random_laurent<R: Rng>(rng: &mut R, span: i64, coef: i64, max_terms: usize) -> LaurentPolynomial {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let terms: Vec<_> = (0..n)
            .map(|_| {
                (
                    rng.gen_range(-span..=span),
                    rng.gen_range(-span..=span),
                    rng.gen_range(-coef..=coef),
                )
            })
            .collect();
        let p = LaurentPolynomial::from_int_terms(&terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Coprime `a > b >= min_b` with `a <= max_a`.
pub fn random_coprime_pair<R: Rng>(rng: &mut R, min_b: i64, max_a: i64) -> (i64, i64) {
    loop {
        let a = rng.gen_range(min_b + 1..=max_a);
        let b = rng.gen_range(min_b..a);
        if a.gcd(&b) == 1 {
            return (a, b);
        }
    }
}

/// `min(i*a + j*b)` over the terms of `p`, in plain integer arithmetic.
pub fn numeric_value(p: &LaurentPolynomial, a: i64, b: i64) -> i64 {
    p.monomials().map(|m| m.ex * a + m.ey * b).min().expect("nonzero")
}

/// Sign of `m*sqrt(2) + n` by bisecting a rational interval around
/// `sqrt(2)` until the linear form has one sign on the whole interval.
pub fn sqrt2_sign(m: i64, n: i64) -> Ordering {
    if m == 0 {
        return n.cmp(&0);
    }
    // interval [lo/2^k, hi/2^k] with lo^2 < 2*4^k < hi^2
    let (mut lo, mut hi, mut k) = (BigInt::from(1), BigInt::from(2), 0u32);
    let (mb, nb) = (BigInt::from(m), BigInt::from(n));
    loop {
        let scale = BigInt::from(1) << k;
        let at_lo = &mb * &lo + &nb * &scale;
        let at_hi = &mb * &hi + &nb * &scale;
        let zero = BigInt::from(0);
        let (s_lo, s_hi) = (at_lo.cmp(&zero), at_hi.cmp(&zero));
        if s_lo == s_hi && s_lo != Ordering::Equal {
            return s_lo;
        }
        assert!(k < 400, "no decision for {m}*sqrt2 + {n}");
        k += 1;
        lo <<= 1;
        hi <<= 1;
        let mid = (&lo + &hi) >> 1;
        let target = BigInt::from(2) << (2 * k);
        if &mid * &mid < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// The positive path of `nu(x) = a, nu(y) = b` computed with integer
/// values only: replace the larger-valued generator by its quotient by the
/// smaller one until the values agree.
pub fn integer_positive_path(a: i64, b: i64) -> Vec<(Monomial, Monomial)> {
    let (mut f, mut g) = (Monomial::X, Monomial::Y);
    let (mut vf, mut vg) = (a, b);
    let mut out = vec![(f, g)];
    while vf != vg {
        if vf < vg {
            // k[f, g/f]
            g = g / f;
            vg -= vf;
        } else {
            // k[g, f/g]
            let ng = f / g;
            f = g;
            let nvg = vf - vg;
            vf = vg;
            g = ng;
            vg = nvg;
        }
        out.push((f, g));
    }
    out
}

pub fn same_vertex(v: &TreeVertex, pair: &(Monomial, Monomial)) -> bool {
    (v.f == pair.0 && v.g == pair.1) || (v.f == pair.1 && v.g == pair.0)
}

/// Sum of the Euclidean quotients of `a/b`.
pub fn euclid_digit_sum(mut a: i64, mut b: i64) -> i64 {
    let mut sum = 0;
    while b != 0 {
        sum += a / b;
        (a, b) = (b, a % b);
    }
    sum
}
