//! Valuation rings of monomial valuations.
//!
//! For `nu(x) = a`, `nu(y) = b` coprime with `a > b`, the valuation ring is
//! the localization of `k[u, v]` at the prime `(v)`, where `u = y^a/x^b` has
//! value 0 and `v = x^p/y^q` has value 1 (`pa - qb = 1`). For irrational
//! ratios the ring is the union of the localized rings along the positive
//! path; that is only decided here for monomials.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::laurent::{lattice_solve, rewrite_in_chart, ChartBasis, LaurentPolynomial, Monomial, RationalFunction};
use crate::valtree::{check_coprime_pair, children, positive_child, positive_path, TreeVertex};
use crate::valuation::MonomialValuation;

/// Minimal positive `(p, q)` with `p*a - q*b = 1`.
pub fn bezout(a: i64, b: i64) -> Result<(i64, i64)> {
    check_coprime_pair(a, b)?;
    // extended Euclid on (a, b): s*a + t*b = 1
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    let b128 = b as i128;
    let mut p = s0.rem_euclid(b128);
    if p == 0 {
        p = b128;
    }
    let q = (p * a as i128 - 1) / b128;
    Ok((p as i64, q as i64))
}

/// Generators of the valuation ring for `nu(x) = a`, `nu(y) = b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub a: i64,
    pub b: i64,
    pub p: i64,
    pub q: i64,
    /// `y^a / x^b`, value 0.
    pub u: Monomial,
    /// `x^p / y^q`, value 1; generates the prime the ring is localized at.
    pub v: Monomial,
}

impl RingPresentation {
    pub fn basis(&self) -> ChartBasis {
        ChartBasis { f: self.u, g: self.v }
    }
}

pub fn ring_generators(a: i64, b: i64) -> Result<RingPresentation> {
    let (p, q) = bezout(a, b)?;
    Ok(RingPresentation {
        a,
        b,
        p,
        q,
        u: Monomial::new(-b, a),
        v: Monomial::new(p, -q),
    })
}

/// The same generator pair read off the tree: the child of the terminal
/// vertex of the positive path that contains `y^a/x^b`, as `(u, v)`.
pub fn presentation_from_path(a: i64, b: i64) -> Result<(Monomial, Monomial)> {
    check_coprime_pair(a, b)?;
    let nu = MonomialValuation::integral(a, b)?;
    let steps = usize::try_from(a).unwrap_or(usize::MAX).saturating_add(1);
    let path = positive_path(&nu, steps)?;
    let last = *path.last().expect("non-empty path");
    let u = Monomial::new(-b, a);
    let (c1, c2) = children(&last)?;
    [c1, c2]
        .into_iter()
        .find(|c| c.contains_generator(u))
        .map(|c| (u, if c.f == u { c.g } else { c.f }))
        .ok_or_else(|| Error::InvariantViolation(format!("no child of {last} contains {u}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralMembership {
    pub member: bool,
    /// Power of `v` dividing the numerator minus that dividing the
    /// denominator, after rewriting both in `(u, v)` coordinates.
    pub gap: i64,
}

/// Decides `r in R_nu` by rewriting numerator and denominator in the
/// coordinates `(u, v)` and comparing the largest powers of `v` that divide
/// them.
pub fn membership_structural(r: &RationalFunction, pres: &RingPresentation) -> Result<StructuralMembership> {
    let basis = pres.basis();
    let v_power = |p: &LaurentPolynomial| -> Result<i64> {
        let rewritten = rewrite_in_chart(p, &basis)?;
        Ok(rewritten.min_exponents().ok_or(Error::ZeroPolynomial)?.ey)
    };
    let n = v_power(r.numer())?;
    let m = v_power(r.denom()).map_err(|e| match e {
        Error::ZeroPolynomial => Error::ZeroDenominator,
        e => e,
    })?;
    let gap = n - m;
    Ok(StructuralMembership { member: gap >= 0, gap })
}

/// `nu(r) >= 0`.
pub fn membership_by_value(r: &RationalFunction, nu: &MonomialValuation) -> Result<bool> {
    let v = nu.value_of_rational_function(r)?;
    Ok(nu.sign(v)? != Ordering::Less)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnionSearch {
    /// `m` is a monomial in the generators of the path vertex at `index`.
    Found {
        index: usize,
        vertex: TreeVertex,
    },
    NotFoundWithinBound {
        searched: usize,
    },
}

/// Looks for the first vertex along the positive path whose ring contains
/// the monomial `m`, i.e. whose generators express `m` with nonnegative
/// exponents.
pub fn membership_union(m: Monomial, nu: &MonomialValuation, max_steps: usize) -> Result<UnionSearch> {
    let mut vertex = TreeVertex::root();
    for index in 0..max_steps {
        let (alpha, beta) = lattice_solve(m, &vertex.basis())?;
        if alpha >= 0 && beta >= 0 {
            return Ok(UnionSearch::Found { index, vertex });
        }
        match positive_child(nu, &vertex)? {
            Some(next) => vertex = next,
            None => return Ok(UnionSearch::NotFoundWithinBound { searched: index + 1 }),
        }
    }
    Ok(UnionSearch::NotFoundWithinBound { searched: max_steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CfStream;

    fn m(ex: i64, ey: i64) -> Monomial {
        Monomial::new(ex, ey)
    }

    #[test]
    fn bezout_examples() {
        assert_eq!(bezout(3, 2), Ok((1, 1)));
        assert_eq!(bezout(24, 7), Ok((5, 17)));
        assert_eq!(bezout(2, 1), Ok((1, 1)));
        assert_eq!(bezout(7, 1), Ok((1, 6)));
        assert_eq!(bezout(10, 4), Err(Error::NotCoprime { a: 10, b: 4 }));
        assert!(bezout(2, 3).is_err());
    }

    #[test]
    fn bezout_is_minimal() {
        for a in 2..60i64 {
            for b in 1..a {
                let Ok((p, q)) = bezout(a, b) else { continue };
                assert_eq!(p * a - q * b, 1);
                assert!(p >= 1 && p <= b && q >= 0);
                assert!((1..p).all(|pp| (pp * a - 1) % b != 0));
            }
        }
    }

    #[test]
    fn generator_examples() {
        let r = ring_generators(3, 2).unwrap();
        assert_eq!((r.u, r.v), (m(-2, 3), m(1, -1)));
        let r = ring_generators(24, 7).unwrap();
        assert_eq!((r.u, r.v, r.p, r.q), (m(-7, 24), m(5, -17), 5, 17));
        let r = ring_generators(2, 1).unwrap();
        assert_eq!((r.u, r.v), (m(-1, 2), m(1, -1)));
        let nu = MonomialValuation::integral(2, 1).unwrap();
        assert_eq!(nu.value_of_monomial(r.u).m * 2 + nu.value_of_monomial(r.u).n, 0);
        assert_eq!(r.v.ex * 2 + r.v.ey, 1);
    }

    #[test]
    fn path_derivation_agrees() {
        for (a, b) in [(3, 2), (24, 7), (5, 2), (2, 1), (13, 8)] {
            let r = ring_generators(a, b).unwrap();
            assert_eq!(presentation_from_path(a, b).unwrap(), (r.u, r.v), "({a}, {b})");
        }
    }

    #[test]
    fn structural_examples() {
        let pres = ring_generators(3, 2).unwrap();
        let r = RationalFunction::from_monomial(m(1, -1));
        assert_eq!(
            membership_structural(&r, &pres),
            Ok(StructuralMembership { member: true, gap: 1 })
        );
        let r = RationalFunction::from_monomial(m(-1, 1));
        assert_eq!(
            membership_structural(&r, &pres),
            Ok(StructuralMembership { member: false, gap: -1 })
        );
        let r = RationalFunction::from_monomial(Monomial::ONE);
        assert_eq!(
            membership_structural(&r, &pres),
            Ok(StructuralMembership { member: true, gap: 0 })
        );
        let zero = RationalFunction::from_polynomial(LaurentPolynomial::zero());
        assert_eq!(membership_structural(&zero, &pres), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn by_value_examples() {
        let nu = MonomialValuation::integral(3, 2).unwrap();
        assert_eq!(
            membership_by_value(&RationalFunction::from_monomial(m(1, -1)), &nu),
            Ok(true)
        );
        assert_eq!(
            membership_by_value(&RationalFunction::from_monomial(m(2, -3)), &nu),
            Ok(true)
        );
        let nu = MonomialValuation::stream(CfStream::sqrt2()).unwrap();
        assert_eq!(
            membership_by_value(&RationalFunction::from_monomial(m(-1, 1)), &nu),
            Ok(false)
        );
    }

    #[test]
    fn union_examples() {
        let nu = MonomialValuation::stream(CfStream::sqrt2()).unwrap();
        assert_eq!(
            membership_union(Monomial::ONE, &nu, 64),
            Ok(UnionSearch::Found {
                index: 0,
                vertex: TreeVertex::root()
            })
        );
        match membership_union(m(1, -1), &nu, 64).unwrap() {
            UnionSearch::Found { index, vertex } => {
                assert_eq!(index, 1);
                assert_eq!(vertex, TreeVertex::new(Monomial::Y, m(1, -1)).unwrap());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            membership_union(m(-1, 1), &nu, 64),
            Ok(UnionSearch::NotFoundWithinBound { searched: 64 })
        );
    }

    #[test]
    fn union_on_rational_path_ends_with_path() {
        let nu = MonomialValuation::integral(3, 2).unwrap();
        // y^3/x^2 has value 0 and lies in no vertex ring of the finite path
        assert_eq!(
            membership_union(m(-2, 3), &nu, 64),
            Ok(UnionSearch::NotFoundWithinBound { searched: 3 })
        );
    }
}
