//! Laurent monomials and polynomials in `x, y` with exact rational
//! coefficients, rational functions, and unimodular changes of coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// `x^ex * y^ey`. Ordered lexicographically on `(ex, ey)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub ex: i64,
    pub ey: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { ex: 0, ey: 0 };
    pub const X: Monomial = Monomial { ex: 1, ey: 0 };
    pub const Y: Monomial = Monomial { ex: 0, ey: 1 };

    pub const fn new(ex: i64, ey: i64) -> Self {
        Monomial { ex, ey }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn inv(self) -> Self {
        Monomial::new(-self.ex, -self.ey)
    }

    pub fn pow(self, k: i64) -> Self {
        Monomial::new(self.ex * k, self.ey * k)
    }

    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        Some(Monomial::new(
            self.ex.checked_add(rhs.ex)?,
            self.ey.checked_add(rhs.ey)?,
        ))
    }

    pub fn checked_div(self, rhs: Self) -> Option<Self> {
        Some(Monomial::new(
            self.ex.checked_sub(rhs.ex)?,
            self.ey.checked_sub(rhs.ey)?,
        ))
    }

    pub fn checked_pow(self, k: i64) -> Option<Self> {
        Some(Monomial::new(self.ex.checked_mul(k)?, self.ey.checked_mul(k)?))
    }

    /// True when the monomial is `x` or `y` to the first power.
    pub fn is_variable(&self) -> bool {
        *self == Self::X || *self == Self::Y
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.ex + rhs.ex, self.ey + rhs.ey)
    }
}

impl Div for Monomial {
    type Output = Monomial;
    fn div(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.ex - rhs.ex, self.ey - rhs.ey)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: i64) -> fmt::Result {
    if e == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{e}")
    }
}

fn write_product(f: &mut fmt::Formatter<'_>, parts: &[(char, i64)]) -> fmt::Result {
    for (i, &(var, e)) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, "*")?;
        }
        write_power(f, var, e)?;
    }
    Ok(())
}

/// Reduced-fraction form: `x^5/y^17`, `y/x`, `x*y^2`, `1/(x*y)`, `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (var, e) in [('x', self.ex), ('y', self.ey)] {
            match e.cmp(&0) {
                std::cmp::Ordering::Greater => num.push((var, e)),
                std::cmp::Ordering::Less => den.push((var, -e)),
                std::cmp::Ordering::Equal => {}
            }
        }
        if num.is_empty() {
            write!(f, "1")?;
        } else {
            write_product(f, &num)?;
        }
        match den.len() {
            0 => Ok(()),
            1 => {
                write!(f, "/")?;
                write_product(f, &den)
            }
            _ => {
                write!(f, "/(")?;
                write_product(f, &den)?;
                write!(f, ")")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoOp {
    Multiply,
    Divide,
}

pub fn mono_combine(m1: Monomial, m2: Monomial, op: MonoOp) -> Monomial {
    match op {
        MonoOp::Multiply => m1 * m2,
        MonoOp::Divide => m1 / m2,
    }
}

/// Finite sum of rational multiples of Laurent monomials. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(Monomial::X)
    }

    pub fn y() -> Self {
        Self::monomial(Monomial::Y)
    }

    /// Builds a polynomial from `(ex, ey, coefficient)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn from_int_terms(terms: &[(i64, i64, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(i, j, c)| (Monomial::new(i, j), Rational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().copied()
    }

    pub fn coefficient(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The single term, if there is exactly one.
    pub fn as_term(&self) -> Option<(Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k * m, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        if let Some((m, c)) = self.as_term() {
            return Self::term(m.pow(k as i64), num_traits::Pow::pow(c, k));
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum exponents, `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |acc, m| Monomial::new(acc.ex.min(m.ex), acc.ey.min(m.ey))))
    }

    /// Applies an injective map on exponents.
    fn map_monomials<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(Monomial) -> Result<Monomial>,
    {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let prev = terms.insert(f(*m)?, c.clone());
            debug_assert!(prev.is_none(), "exponent map must be injective");
        }
        Ok(LaurentPolynomial { terms })
    }

    /// Writes the polynomial in a parseable form, e.g. `x^2 - y^3`,
    /// `3/4*x*y^-1 + 1`.
    fn fmt_term(f: &mut fmt::Formatter<'_>, m: &Monomial, c: &Rational, first: bool) -> fmt::Result {
        let neg = c.is_negative();
        let abs = c.abs();
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
            (true, false) => {}
        }
        let mut factors = Vec::new();
        if !abs.is_one() || m.is_one() {
            factors.push(abs.to_string());
        }
        for (var, e) in [('x', m.ex), ('y', m.ey)] {
            match e {
                0 => {}
                1 => factors.push(var.to_string()),
                _ => factors.push(format!("{var}^{e}")),
            }
        }
        write!(f, "{}", factors.join("*"))
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Descending order reads more naturally (x^2 - y^3).
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            Self::fmt_term(f, m, c, i == 0)?;
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(*m1 * *m2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Quotient of two Laurent polynomials with nonzero denominator.
///
/// Monomial denominators are folded into the numerator on construction,
/// so `x/y` is stored as the Laurent monomial `x*y^-1` over `1`.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    numer: LaurentPolynomial,
    denom: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(numer: LaurentPolynomial, denom: LaurentPolynomial) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if let Some((m, c)) = denom.as_term() {
            let inv = c.recip();
            return Ok(RationalFunction {
                numer: numer.mul_monomial(m.inv()).scale(&inv),
                denom: LaurentPolynomial::one(),
            });
        }
        Ok(RationalFunction { numer, denom })
    }

    pub fn from_polynomial(p: LaurentPolynomial) -> Self {
        RationalFunction {
            numer: p,
            denom: LaurentPolynomial::one(),
        }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::from_polynomial(LaurentPolynomial::monomial(m))
    }

    pub fn numer(&self) -> &LaurentPolynomial {
        &self.numer
    }

    pub fn denom(&self) -> &LaurentPolynomial {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.denom == rhs.denom {
            return Self::new(&self.numer + &rhs.numer, self.denom.clone()).expect("nonzero");
        }
        let numer = &(&self.numer * &rhs.denom) + &(&rhs.numer * &self.denom);
        Self::new(numer, &self.denom * &rhs.denom).expect("product of nonzero")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.numer * &rhs.numer, &self.denom * &rhs.denom).expect("product of nonzero")
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.denom.clone(), self.numer.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.recip()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let e =
            u32::try_from(k.unsigned_abs()).map_err(|_| Error::InvalidParameters(format!("exponent {k} too large")))?;
        Self::new(base.numer.pow(e), base.denom.pow(e))
    }

    /// Value equality by cross-multiplication.
    pub fn equals(&self, other: &Self) -> bool {
        &self.numer * &other.denom == &other.numer * &self.denom
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == LaurentPolynomial::one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({})/({})", self.numer, self.denom)
        }
    }
}

/// Two Laurent monomials whose exponent vectors form a unimodular matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChartBasis {
    pub f: Monomial,
    pub g: Monomial,
}

fn det2(f: Monomial, g: Monomial) -> i128 {
    f.ex as i128 * g.ey as i128 - g.ex as i128 * f.ey as i128
}

impl ChartBasis {
    pub fn new(f: Monomial, g: Monomial) -> Result<Self> {
        let det = det2(f, g);
        if det.abs() != 1 {
            return Err(Error::NonUnimodular {
                det: det.clamp(i64::MIN as i128, i64::MAX as i128) as i64,
            });
        }
        Ok(ChartBasis { f, g })
    }

    pub fn identity() -> Self {
        ChartBasis {
            f: Monomial::X,
            g: Monomial::Y,
        }
    }

    /// Determinant of the exponent matrix with columns `f`, `g`.
    pub fn det(&self) -> i64 {
        det2(self.f, self.g) as i64
    }

    /// `f^alpha * g^beta`.
    pub fn monomial(&self, alpha: i64, beta: i64) -> Result<Monomial> {
        self.f
            .checked_pow(alpha)
            .zip(self.g.checked_pow(beta))
            .and_then(|(a, b)| a.checked_mul(b))
            .ok_or(Error::ExponentOverflow)
    }
}

/// Solves `target = f^alpha * g^beta`.
pub fn lattice_solve(target: Monomial, basis: &ChartBasis) -> Result<(i64, i64)> {
    let det = det2(basis.f, basis.g);
    if det.abs() != 1 {
        return Err(Error::NonUnimodular { det: det as i64 });
    }
    let (f, g, t) = (basis.f, basis.g, target);
    let alpha = (g.ey as i128 * t.ex as i128 - g.ex as i128 * t.ey as i128) * det;
    let beta = (f.ex as i128 * t.ey as i128 - f.ey as i128 * t.ex as i128) * det;
    Ok((
        i64::try_from(alpha).map_err(|_| Error::ExponentOverflow)?,
        i64::try_from(beta).map_err(|_| Error::ExponentOverflow)?,
    ))
}

/// Rewrites `p` in the coordinates of `basis`: the term `x^i y^j` becomes
/// the term with exponents `(alpha, beta)` where `x^i y^j = f^alpha g^beta`.
/// In the result the first exponent belongs to `f` and the second to `g`.
pub fn rewrite_in_chart(p: &LaurentPolynomial, basis: &ChartBasis) -> Result<LaurentPolynomial> {
    p.map_monomials(|m| {
        let (alpha, beta) = lattice_solve(m, basis)?;
        Ok(Monomial::new(alpha, beta))
    })
}

/// Inverse of [`rewrite_in_chart`]: substitutes `f` and `g` back into a
/// polynomial written in chart coordinates.
pub fn expand_from_chart(p: &LaurentPolynomial, basis: &ChartBasis) -> Result<LaurentPolynomial> {
    p.map_monomials(|m| basis.monomial(m.ex, m.ey))
}

/// Splits off the largest monomial factor: `p = content * primitive` with
/// the primitive part having minimal exponent 0 in each variable.
pub fn factor_monomial_content(p: &LaurentPolynomial) -> Result<(Monomial, LaurentPolynomial)> {
    let content = p.min_exponents().ok_or(Error::ZeroPolynomial)?;
    Ok((content, p.mul_monomial(content.inv())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ex: i64, ey: i64) -> Monomial {
        Monomial::new(ex, ey)
    }

    fn poly(t: &[(i64, i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(t)
    }

    #[test]
    fn combine_examples() {
        assert_eq!(mono_combine(m(1, 1), m(-1, 0), MonoOp::Multiply), Monomial::Y);
        assert_eq!(mono_combine(Monomial::X, Monomial::Y, MonoOp::Divide), m(1, -1));
        assert_eq!(mono_combine(m(-2, 3), m(1, -1).pow(3), MonoOp::Multiply), Monomial::X);
    }

    #[test]
    fn display_monomials() {
        assert_eq!(m(5, -17).to_string(), "x^5/y^17");
        assert_eq!(m(-2, 7).to_string(), "y^7/x^2");
        assert_eq!(m(-1, 1).to_string(), "y/x");
        assert_eq!(m(1, 2).to_string(), "x*y^2");
        assert_eq!(m(-1, -1).to_string(), "1/(x*y)");
        assert_eq!(m(0, -3).to_string(), "1/y^3");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }

    #[test]
    fn lattice_examples() {
        let basis = ChartBasis::new(m(-2, 3), m(1, -1)).unwrap();
        assert_eq!(lattice_solve(Monomial::X, &basis), Ok((1, 3)));
        assert_eq!(lattice_solve(basis.f, &basis), Ok((1, 0)));
        assert_eq!(lattice_solve(Monomial::Y, &basis), Ok((1, 2)));
    }

    #[test]
    fn non_unimodular_rejected() {
        assert_eq!(ChartBasis::new(m(2, 0), m(0, 1)), Err(Error::NonUnimodular { det: 2 }));
        let bad = ChartBasis { f: m(1, 1), g: m(1, 1) };
        assert_eq!(lattice_solve(Monomial::X, &bad), Err(Error::NonUnimodular { det: 0 }));
    }

    #[test]
    fn rewrite_examples() {
        let cusp = poly(&[(2, 0, 1), (0, 3, -1)]);
        let basis = ChartBasis::new(Monomial::Y, m(1, -1)).unwrap();
        assert_eq!(rewrite_in_chart(&cusp, &basis).unwrap(), poly(&[(2, 2, 1), (3, 0, -1)]));
        assert_eq!(rewrite_in_chart(&cusp, &ChartBasis::identity()).unwrap(), cusp);

        let basis = ChartBasis::new(m(-2, 3), m(1, -1)).unwrap();
        assert_eq!(
            rewrite_in_chart(&LaurentPolynomial::x(), &basis).unwrap(),
            poly(&[(1, 3, 1)])
        );
    }

    #[test]
    fn factor_examples() {
        // coordinates (w, y): y^2 w^2 - y^3
        let p = poly(&[(2, 2, 1), (0, 3, -1)]);
        let (content, prim) = factor_monomial_content(&p).unwrap();
        assert_eq!(content, m(0, 2));
        assert_eq!(prim, poly(&[(2, 0, 1), (0, 1, -1)]));

        let p = poly(&[(1, 0, 1), (0, 1, -1)]);
        assert_eq!(factor_monomial_content(&p).unwrap(), (Monomial::ONE, p.clone()));

        let p = &poly(&[(6, 2, 1)]) * &poly(&[(1, 0, 1), (0, 0, -1)]);
        let (content, prim) = factor_monomial_content(&p).unwrap();
        assert_eq!(content, m(6, 2));
        assert_eq!(prim, poly(&[(1, 0, 1), (0, 0, -1)]));

        assert_eq!(
            factor_monomial_content(&LaurentPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let p = poly(&[(1, 0, 1), (1, 0, -1), (0, 1, 2)]);
        assert_eq!(p.len(), 1);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(poly(&[(2, 0, 1), (0, 3, -1)]).to_string(), "x^2 - y^3");
        assert_eq!(poly(&[(0, 0, -2), (1, -1, 3)]).to_string(), "3*x*y^-1 - 2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn rational_function_folds_monomial_denominators() {
        let r = RationalFunction::new(LaurentPolynomial::x(), LaurentPolynomial::y()).unwrap();
        assert_eq!(r.numer(), &LaurentPolynomial::monomial(m(1, -1)));
        assert_eq!(r.denom(), &LaurentPolynomial::one());
        assert!(RationalFunction::new(LaurentPolynomial::x(), LaurentPolynomial::zero()).is_err());
    }

    #[test]
    fn rational_function_equality_is_by_value() {
        let h = poly(&[(1, 0, 1), (0, 0, 1)]);
        let a = RationalFunction::new(&LaurentPolynomial::x() * &h, &LaurentPolynomial::y() * &h).unwrap();
        let b = RationalFunction::from_monomial(m(1, -1));
        assert_eq!(a, b);
    }
}
