//! Monomial valuations on `k(x, y)`.
//!
//! A valuation is fixed by `nu(x)` and `nu(y)` in some ordered group. Values
//! of monomials are kept symbolically as integer pairs `(m, n)` meaning
//! `m*nu(x) + n*nu(y)`; only comparisons consult the group.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{stream_compare, CfStream, Rational, DEFAULT_COMPARE_ITERS};
use crate::laurent::{LaurentPolynomial, Monomial, RationalFunction};

/// `m*nu(x) + n*nu(y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Value {
    pub m: i64,
    pub n: i64,
}

impl Value {
    pub const ZERO: Value = Value { m: 0, n: 0 };

    pub const fn new(m: i64, n: i64) -> Self {
        Value { m, n }
    }
}

impl Add for Value {
    type Output = Value;
    fn add(self, rhs: Value) -> Value {
        Value::new(self.m + rhs.m, self.n + rhs.n)
    }
}

impl Sub for Value {
    type Output = Value;
    fn sub(self, rhs: Value) -> Value {
        Value::new(self.m - rhs.m, self.n - rhs.n)
    }
}

impl Neg for Value {
    type Output = Value;
    fn neg(self) -> Value {
        Value::new(-self.m, -self.n)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*nu(x) + {}*nu(y)", self.m, self.n)
    }
}

#[derive(Clone, Debug)]
pub enum ValueGroup {
    /// `nu(x) = a`, `nu(y) = b`, both positive rationals.
    RationalRatio { a: Rational, b: Rational },
    /// `nu(x) = rho`, `nu(y) = 1` for an irrational `rho` given by digits.
    StreamRatio { rho: CfStream },
    /// `nu(x) = vx`, `nu(y) = vy` in `Z^2` with lexicographic order.
    LexZ2 { vx: (i64, i64), vy: (i64, i64) },
}

impl ValueGroup {
    pub fn rational(a: Rational, b: Rational) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() {
            return Err(Error::InvalidParameters(format!(
                "nu(x) = {a} and nu(y) = {b} must be positive"
            )));
        }
        Ok(ValueGroup::RationalRatio { a, b })
    }

    pub fn stream(rho: CfStream) -> Result<Self> {
        if rho.digit_at(0).is_negative() {
            return Err(Error::InvalidParameters("stream ratio must be positive".into()));
        }
        Ok(ValueGroup::StreamRatio { rho })
    }

    pub fn lex(vx: (i64, i64), vy: (i64, i64)) -> Self {
        ValueGroup::LexZ2 { vx, vy }
    }

    /// True when `nu(x) < nu(y)`, i.e. the usual `nu(x) > nu(y)` convention
    /// holds only after exchanging the variables.
    pub fn swapped(&self) -> Result<bool> {
        Ok(compare_values(self, Value::new(1, 0), Value::new(0, 1))? == Ordering::Less)
    }
}

/// Sign of `m*nu(x) + n*nu(y)`, i.e. the comparison of `v` with zero.
fn sign_of(group: &ValueGroup, v: Value, iters: usize) -> Result<Ordering> {
    match group {
        ValueGroup::RationalRatio { a, b } => {
            let total = a * BigInt::from(v.m) + b * BigInt::from(v.n);
            Ok(total.cmp(&Rational::zero()))
        }
        ValueGroup::StreamRatio { rho } => {
            if v.m == 0 {
                return Ok(v.n.cmp(&0));
            }
            // m*rho + n has the sign of m times (rho - (-n/m))
            let t = Rational::new(BigInt::from(-v.n), BigInt::from(v.m));
            let ord = stream_compare(rho, &t, iters)?;
            Ok(if v.m > 0 { ord } else { ord.reverse() })
        }
        ValueGroup::LexZ2 { vx, vy } => {
            let (m, n) = (v.m as i128, v.n as i128);
            let first = m * vx.0 as i128 + n * vy.0 as i128;
            let second = m * vx.1 as i128 + n * vy.1 as i128;
            Ok((first, second).cmp(&(0, 0)))
        }
    }
}

/// Orders two values in `group`.
pub fn compare_values(group: &ValueGroup, v1: Value, v2: Value) -> Result<Ordering> {
    sign_of(group, v1 - v2, DEFAULT_COMPARE_ITERS)
}

#[derive(Clone, Debug)]
pub struct MonomialValuation {
    group: ValueGroup,
    compare_iters: usize,
}

impl MonomialValuation {
    pub fn new(group: ValueGroup) -> Self {
        MonomialValuation {
            group,
            compare_iters: DEFAULT_COMPARE_ITERS,
        }
    }

    /// `nu(x) = a`, `nu(y) = b` for positive integers.
    pub fn integral(a: i64, b: i64) -> Result<Self> {
        Ok(Self::new(ValueGroup::rational(
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
        )?))
    }

    pub fn stream(rho: CfStream) -> Result<Self> {
        Ok(Self::new(ValueGroup::stream(rho)?))
    }

    pub fn lex(vx: (i64, i64), vy: (i64, i64)) -> Self {
        Self::new(ValueGroup::lex(vx, vy))
    }

    /// Caps the number of convergent brackets a stream comparison may use.
    pub fn with_compare_iters(mut self, iters: usize) -> Self {
        self.compare_iters = iters;
        self
    }

    pub fn group(&self) -> &ValueGroup {
        &self.group
    }

    pub fn compare(&self, v1: Value, v2: Value) -> Result<Ordering> {
        sign_of(&self.group, v1 - v2, self.compare_iters)
    }

    pub fn sign(&self, v: Value) -> Result<Ordering> {
        sign_of(&self.group, v, self.compare_iters)
    }

    pub fn is_positive(&self, v: Value) -> Result<bool> {
        Ok(self.sign(v)? == Ordering::Greater)
    }

    pub fn value_of_monomial(&self, m: Monomial) -> Value {
        Value::new(m.ex, m.ey)
    }

    /// Minimum value over the terms of `p`.
    pub fn value_of_polynomial(&self, p: &LaurentPolynomial) -> Result<Value> {
        let mut it = p.monomials();
        let mut best = self.value_of_monomial(it.next().ok_or(Error::ZeroPolynomial)?);
        for m in it {
            let v = self.value_of_monomial(m);
            if self.compare(v, best)? == Ordering::Less {
                best = v;
            }
        }
        Ok(best)
    }

    pub fn value_of_rational_function(&self, r: &RationalFunction) -> Result<Value> {
        let den = self.value_of_polynomial(r.denom()).map_err(|e| match e {
            Error::ZeroPolynomial => Error::ZeroDenominator,
            e => e,
        })?;
        Ok(self.value_of_polynomial(r.numer())? - den)
    }
}
