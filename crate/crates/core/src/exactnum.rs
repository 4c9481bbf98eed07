//! Exact rationals and simple continued fractions.
//!
//! Finite expansions are stored as digit vectors in canonical form (last
//! digit at least 2 unless there is only one digit). Infinite expansions are
//! [`CfStream`]s: a pure function from index to digit, optionally tagged
//! with eventually-periodic metadata.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always normalized (positive denominator,
/// coprime parts).
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Digit access shared by finite expansions and streams.
pub trait ContinuedFraction {
    /// Digit `index`, or `None` past the end of a finite expansion.
    fn digit(&self, index: usize) -> Option<BigInt>;
}

/// A finite continued fraction `[d0; d1, ..., dk]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CfExpansion {
    digits: Vec<BigInt>,
}

impl CfExpansion {
    /// Builds an expansion from raw digits. Digits after the first must be
    /// positive. The result is not canonicalized.
    pub fn new(digits: Vec<BigInt>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::InvalidParameters("empty continued fraction".into()));
        }
        if let Some(index) = digits.iter().skip(1).position(|d| !d.is_positive()) {
            return Err(Error::InvalidDigit { index: index + 1 });
        }
        Ok(CfExpansion { digits })
    }

    pub fn from_i64(digits: &[i64]) -> Result<Self> {
        Self::new(digits.iter().map(|&d| BigInt::from(d)).collect())
    }

    pub fn digits(&self) -> &[BigInt] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.digits.len() == 1 || !self.digits.last().is_some_and(|d| d.is_one())
    }

    /// The other expansion of the same value: `[..., dk]` becomes
    /// `[..., dk - 1, 1]` and vice versa. Integers `[d0]` become `[d0 - 1; 1]`.
    pub fn alternate(&self) -> CfExpansion {
        let mut digits = self.digits.clone();
        if self.is_canonical() {
            let last = digits.pop().expect("non-empty");
            digits.push(last - 1);
            digits.push(BigInt::one());
        } else {
            digits.pop();
            *digits.last_mut().expect("length > 1") += 1;
        }
        CfExpansion { digits }
    }

    pub fn digit_sum(&self) -> BigInt {
        self.digits.iter().sum()
    }

    pub fn value(&self) -> Rational {
        cf_value(self)
    }
}

impl ContinuedFraction for CfExpansion {
    fn digit(&self, index: usize) -> Option<BigInt> {
        self.digits.get(index).cloned()
    }
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.digits[0])?;
        for (i, d) in self.digits.iter().enumerate().skip(1) {
            let sep = if i == 1 { "; " } else { ", " };
            write!(f, "{sep}{d}")?;
        }
        write!(f, "]")
    }
}

/// Expansion of `r` by repeated floor division. The output is canonical.
pub fn cf_expand(r: &Rational) -> CfExpansion {
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let mut digits = Vec::new();
    while !den.is_zero() {
        let (q, rem) = num.div_mod_floor(&den);
        digits.push(q);
        num = den;
        den = rem;
    }
    CfExpansion { digits }
}

pub fn cf_value(cf: &CfExpansion) -> Rational {
    let mut digits = cf.digits.iter().rev();
    let mut acc = Rational::from_integer(digits.next().expect("non-empty").clone());
    for d in digits {
        acc = Rational::from_integer(d.clone()) + acc.recip();
    }
    acc
}

/// Merges a trailing digit 1 into its predecessor.
pub fn cf_canonicalize(cf: &CfExpansion) -> CfExpansion {
    if cf.is_canonical() {
        cf.clone()
    } else {
        cf.alternate()
    }
}

/// Convergent numerators and denominators `(p_k, q_k)` of a continued
/// fraction, via the standard three-term recurrence.
pub struct Convergents<'a, C: ContinuedFraction + ?Sized> {
    cf: &'a C,
    index: usize,
    prev: (BigInt, BigInt),
    curr: (BigInt, BigInt),
}

impl<'a, C: ContinuedFraction + ?Sized> Convergents<'a, C> {
    pub fn new(cf: &'a C) -> Self {
        Convergents {
            cf,
            index: 0,
            // (p_{-2}, q_{-2}) = (0, 1), (p_{-1}, q_{-1}) = (1, 0)
            prev: (BigInt::zero(), BigInt::one()),
            curr: (BigInt::one(), BigInt::zero()),
        }
    }
}

impl<C: ContinuedFraction + ?Sized> Iterator for Convergents<'_, C> {
    type Item = Result<(BigInt, BigInt)>;

    fn next(&mut self) -> Option<Self::Item> {
        let d = self.cf.digit(self.index)?;
        if self.index > 0 && !d.is_positive() {
            return Some(Err(Error::InvalidDigit { index: self.index }));
        }
        let p = &d * &self.curr.0 + &self.prev.0;
        let q = &d * &self.curr.1 + &self.prev.1;
        self.prev = std::mem::replace(&mut self.curr, (p.clone(), q.clone()));
        self.index += 1;
        Some(Ok((p, q)))
    }
}

/// The first `count` convergents. Fails if a finite expansion has fewer
/// digits than requested.
pub fn cf_convergents<C: ContinuedFraction + ?Sized>(cf: &C, count: usize) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(count);
    for item in Convergents::new(cf).take(count) {
        let (p, q) = item?;
        out.push(Rational::new(p, q));
    }
    if out.len() < count {
        return Err(Error::InsufficientDigits {
            requested: count,
            available: out.len(),
        });
    }
    Ok(out)
}

type DigitFn = dyn Fn(usize) -> BigInt + Send + Sync;

/// Preperiod and period digits of an eventually periodic stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Periodicity {
    pub preperiod: Vec<BigInt>,
    pub period: Vec<BigInt>,
}

/// An infinite continued fraction given by a pure digit function.
#[derive(Clone)]
pub struct CfStream {
    source: Arc<DigitFn>,
    periodicity: Option<Periodicity>,
}

impl CfStream {
    /// Wraps a digit function. It must be pure and return positive digits
    /// for every index >= 1; violations surface as [`Error::InvalidDigit`]
    /// when the digit is consumed.
    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(usize) -> BigInt + Send + Sync + 'static,
    {
        CfStream {
            source: Arc::new(f),
            periodicity: None,
        }
    }

    pub fn periodic(preperiod: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidParameters("empty period".into()));
        }
        if let Some(index) = preperiod
            .iter()
            .chain(period.iter())
            .enumerate()
            .skip(1)
            .find(|(_, d)| !d.is_positive())
            .map(|(i, _)| i)
        {
            return Err(Error::InvalidDigit { index });
        }
        if preperiod.is_empty() && !period[0].is_positive() {
            return Err(Error::InvalidDigit { index: period.len() });
        }
        let meta = Periodicity { preperiod, period };
        let table = meta.clone();
        let source = move |i: usize| {
            let pre = table.preperiod.len();
            if i < pre {
                table.preperiod[i].clone()
            } else {
                table.period[(i - pre) % table.period.len()].clone()
            }
        };
        Ok(CfStream {
            source: Arc::new(source),
            periodicity: Some(meta),
        })
    }

    /// `[1; 2, 2, 2, ...]`, the expansion of the square root of two.
    pub fn sqrt2() -> Self {
        Self::periodic(vec![BigInt::one()], vec![BigInt::from(2)]).expect("valid digits")
    }

    pub fn periodicity(&self) -> Option<&Periodicity> {
        self.periodicity.as_ref()
    }

    pub fn digit_at(&self, index: usize) -> BigInt {
        (self.source)(index)
    }

    /// The first `n` digits.
    pub fn prefix(&self, n: usize) -> Vec<BigInt> {
        (0..n).map(|i| self.digit_at(i)).collect()
    }
}

impl ContinuedFraction for CfStream {
    fn digit(&self, index: usize) -> Option<BigInt> {
        Some(self.digit_at(index))
    }
}

impl fmt::Debug for CfStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.periodicity {
            Some(p) => f
                .debug_struct("CfStream")
                .field("preperiod", &p.preperiod)
                .field("period", &p.period)
                .finish(),
            None => f
                .debug_struct("CfStream")
                .field("prefix", &self.prefix(6))
                .finish_non_exhaustive(),
        }
    }
}

/// Sign of `rho - t` for an irrational stream `rho`.
///
/// Consecutive convergents bracket `rho` strictly, so the answer is known as
/// soon as `t` falls on or outside a bracket. Gives up with
/// [`Error::Indecisive`] after `max_iters` brackets, which is what happens
/// when the stream actually equals `t`.
pub fn stream_compare(rho: &CfStream, t: &Rational, max_iters: usize) -> Result<Ordering> {
    let mut convergents = Convergents::new(rho);
    let Some(first) = convergents.next() else {
        unreachable!("streams are infinite")
    };
    let (p, q) = first?;
    let mut prev = Rational::new(p, q);
    for _ in 0..max_iters {
        let (p, q) = convergents.next().expect("streams are infinite")?;
        let curr = Rational::new(p, q);
        let (lo, hi) = if prev < curr { (&prev, &curr) } else { (&curr, &prev) };
        if t <= lo {
            return Ok(Ordering::Greater);
        }
        if t >= hi {
            return Ok(Ordering::Less);
        }
        prev = curr;
    }
    Err(Error::Indecisive { iters: max_iters })
}

/// Iteration cap used by value comparisons against streams.
pub const DEFAULT_COMPARE_ITERS: usize = 256;
