//! Blow-up resolution of the cusp `x^b = y^a`.
//!
//! Every chart that shows up has coordinates `(c1, c2)` given by a
//! unimodular pair of Laurent monomials in `x, y`, and the total transform
//! of the curve there is `sign * c1^A * c2^B * C`, where `c1^A c2^B` is the
//! exceptional part and `C` is either a binomial `c1^s - c2^t` through the
//! origin or `1 - c1^k c2^l`, which misses it. Blow-ups always happen at
//! the chart origin, so this symbolic state is closed under blowing up.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactnum::{integer, Rational};
use crate::laurent::{expand_from_chart, lattice_solve, ChartBasis, LaurentPolynomial, Monomial};
use crate::valtree::{check_coprime_pair, positive_path, PathStatus, PositivePath, TreeVertex};
use crate::valuation::MonomialValuation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProperTransform {
    /// `c1^s - c2^t` with `gcd(s, t) = 1`.
    ThroughOrigin { s: u64, t: u64 },
    /// `1 - c1^k c2^l`.
    MissesOrigin { k: u64, l: u64 },
}

impl ProperTransform {
    /// The transform as a polynomial in chart coordinates.
    pub fn polynomial(&self) -> Result<LaurentPolynomial> {
        let e = |n: u64| i64::try_from(n).map_err(|_| Error::ExponentOverflow);
        Ok(match *self {
            ProperTransform::ThroughOrigin { s, t } => {
                LaurentPolynomial::from_int_terms(&[(e(s)?, 0, 1), (0, e(t)?, -1)])
            }
            ProperTransform::MissesOrigin { k, l } => {
                LaurentPolynomial::from_int_terms(&[(0, 0, 1), (e(k)?, e(l)?, -1)])
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChartState {
    pub basis: ChartBasis,
    /// Exceptional multiplicity along `c1 = 0`.
    pub exc_a: u64,
    /// Exceptional multiplicity along `c2 = 0`.
    pub exc_b: u64,
    pub proper: ProperTransform,
    /// `+1` or `-1`; the total transform is `sign * c1^A c2^B * proper`.
    pub sign: i8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Resolved,
    CuspSingular,
    TangentialCrossing,
    TriplePoint,
}

impl Classification {
    pub fn is_resolved(&self) -> bool {
        *self == Classification::Resolved
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Resolved => "resolved",
            Classification::CuspSingular => "cusp_singular",
            Classification::TangentialCrossing => "tangential_crossing",
            Classification::TriplePoint => "triple_point",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn check_curve_params(a: i64, b: i64) -> Result<()> {
    if b < 2 {
        return Err(Error::InvalidParameters(format!("need a > b > 1, got ({a}, {b})")));
    }
    check_coprime_pair(a, b)
}

/// The chart `(x, y)` carrying `x^b - y^a`.
pub fn initial_chart(a: i64, b: i64) -> Result<ChartState> {
    check_curve_params(a, b)?;
    Ok(ChartState {
        basis: ChartBasis::identity(),
        exc_a: 0,
        exc_b: 0,
        proper: ProperTransform::ThroughOrigin {
            s: b as u64,
            t: a as u64,
        },
        sign: 1,
    })
}

/// Blows up the origin of `c`, returning the charts `(c1, c2/c1)` and
/// `(c2, c1/c2)` in that order.
pub fn blow_up(c: &ChartState) -> Result<(ChartState, ChartState)> {
    let ProperTransform::ThroughOrigin { s, t } = c.proper else {
        return Err(Error::NotThroughOrigin);
    };
    let (c1, c2) = (c.basis.f, c.basis.g);
    let w1 = c2.checked_div(c1).ok_or(Error::ExponentOverflow)?;
    let w2 = c1.checked_div(c2).ok_or(Error::ExponentOverflow)?;
    let exc = c.exc_a + c.exc_b + s.min(t);

    // c2 = c1 * w:  c1^s - c1^t w^t
    let (proper1, flip1) = if s > t {
        (ProperTransform::ThroughOrigin { s: s - t, t }, false)
    } else {
        (ProperTransform::MissesOrigin { k: t - s, l: t }, false)
    };
    let first = ChartState {
        basis: ChartBasis { f: c1, g: w1 },
        exc_a: exc,
        exc_b: c.exc_b,
        proper: proper1,
        sign: if flip1 { -c.sign } else { c.sign },
    };

    // c1 = c2 * w:  c2^s w^s - c2^t, written with c2 first
    let (proper2, flip2) = if t > s {
        (ProperTransform::ThroughOrigin { s: t - s, t: s }, true)
    } else {
        (ProperTransform::MissesOrigin { k: s - t, l: s }, true)
    };
    let second = ChartState {
        basis: ChartBasis { f: c2, g: w2 },
        exc_a: exc,
        exc_b: c.exc_a,
        proper: proper2,
        sign: if flip2 { -c.sign } else { c.sign },
    };
    Ok((first, second))
}

/// Local picture at the chart origin.
pub fn classify(c: &ChartState) -> Classification {
    let ProperTransform::ThroughOrigin { s, t } = c.proper else {
        return Classification::Resolved;
    };
    match (s, t) {
        (s, t) if s >= 2 && t >= 2 => Classification::CuspSingular,
        // c2 = c1^s is tangent to the line c2 = 0
        (_, 1) if s >= 2 => {
            if c.exc_b >= 1 {
                Classification::TangentialCrossing
            } else {
                Classification::Resolved
            }
        }
        (1, _) if t >= 2 => {
            if c.exc_a >= 1 {
                Classification::TangentialCrossing
            } else {
                Classification::Resolved
            }
        }
        _ => {
            if c.exc_a >= 1 && c.exc_b >= 1 {
                Classification::TriplePoint
            } else {
                Classification::Resolved
            }
        }
    }
}

/// An irreducible piece of the total transform in one chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    /// `c1 = 0` (first) or `c2 = 0` (second).
    ExceptionalLine { first: bool },
    /// `c1^s - c2^t`.
    Binomial { s: u64, t: u64 },
    /// `1 - c1^k c2^l`.
    UnitMinusMonomial { k: u64, l: u64 },
}

fn divides(characteristic: u64, n: u64) -> bool {
    if characteristic == 0 {
        n == 0
    } else {
        n.is_multiple_of(characteristic)
    }
}

/// Jacobian criterion over a field of the given characteristic (0 for
/// characteristic zero).
pub fn is_smooth_component(component: Component, characteristic: u64) -> bool {
    match component {
        Component::ExceptionalLine { .. } => true,
        Component::Binomial { s, t } => {
            let singular_at_origin = s >= 2 && t >= 2;
            // away from the origin both partials vanish only if p | s and p | t
            let singular_elsewhere = divides(characteristic, s) && divides(characteristic, t);
            !singular_at_origin && !singular_elsewhere
        }
        // on the curve c1, c2 != 0, so the gradient vanishes iff p | k and p | l
        Component::UnitMinusMonomial { k, l } => !(divides(characteristic, k) && divides(characteristic, l)),
    }
}

/// Off-origin meetings of the proper transform with exceptional lines.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OffOriginCheck {
    /// Rational intersection points where transversality was confirmed.
    pub verified: usize,
    /// Rational intersection points where the two tangents coincide.
    pub failures: usize,
    /// Intersection points with irrational coordinates; not examined.
    pub skipped: usize,
}

impl OffOriginCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl ChartState {
    pub fn components(&self) -> Vec<Component> {
        let mut out = Vec::new();
        if self.exc_a > 0 {
            out.push(Component::ExceptionalLine { first: true });
        }
        if self.exc_b > 0 {
            out.push(Component::ExceptionalLine { first: false });
        }
        out.push(match self.proper {
            ProperTransform::ThroughOrigin { s, t } => Component::Binomial { s, t },
            ProperTransform::MissesOrigin { k, l } => Component::UnitMinusMonomial { k, l },
        });
        out
    }

    /// `sign * c1^A c2^B * proper` written back in `x, y`.
    pub fn reconstruct(&self) -> Result<LaurentPolynomial> {
        let a = i64::try_from(self.exc_a).map_err(|_| Error::ExponentOverflow)?;
        let b = i64::try_from(self.exc_b).map_err(|_| Error::ExponentOverflow)?;
        let exceptional = LaurentPolynomial::term(Monomial::new(a, b), integer(self.sign as i64));
        let local = &exceptional * &self.proper.polynomial()?;
        expand_from_chart(&local, &self.basis)
    }

    /// `Some(1)` if the chart reproduces `x^b - y^a`, `Some(-1)` if it
    /// reproduces its negative, `None` otherwise.
    pub fn reconstruction_sign(&self, a: i64, b: i64) -> Result<Option<i8>> {
        let cusp = cusp_polynomial(a, b);
        let got = self.reconstruct()?;
        Ok(if got == cusp {
            Some(1)
        } else if got == -&cusp {
            Some(-1)
        } else {
            None
        })
    }

    /// The chart state for `basis` computed directly from the lattice
    /// coordinates of `x^b` and `y^a`, without following blow-ups.
    pub fn direct(a: i64, b: i64, basis: ChartBasis) -> Result<ChartState> {
        let (a1, b1) = lattice_solve(Monomial::new(b, 0), &basis)?;
        let (a2, b2) = lattice_solve(Monomial::new(0, a), &basis)?;
        let (ea, eb) = (a1.min(a2), b1.min(b2));
        if ea < 0 || eb < 0 {
            return Err(Error::InvariantViolation(format!(
                "negative exceptional exponent in chart ({}, {})",
                basis.f, basis.g
            )));
        }
        // x^b - y^a = c1^A c2^B (c^e1 - c^e2)
        let e1 = ((a1 - ea) as u64, (b1 - eb) as u64);
        let e2 = ((a2 - ea) as u64, (b2 - eb) as u64);
        let (proper, sign) = match (e1, e2) {
            ((0, 0), (k, l)) => (ProperTransform::MissesOrigin { k, l }, 1),
            ((k, l), (0, 0)) => (ProperTransform::MissesOrigin { k, l }, -1),
            ((s, 0), (0, t)) => (ProperTransform::ThroughOrigin { s, t }, 1),
            ((0, t), (s, 0)) => (ProperTransform::ThroughOrigin { s, t }, -1),
            _ => {
                return Err(Error::InvariantViolation(format!(
                    "curve in chart ({}, {}) is not a binomial of the expected shape",
                    basis.f, basis.g
                )))
            }
        };
        Ok(ChartState {
            basis,
            exc_a: ea as u64,
            exc_b: eb as u64,
            proper,
            sign,
        })
    }

    /// Checks transversality where the proper transform meets an exceptional
    /// line away from the origin. Only `1 - c1^k c2^l` with `k = 0` (or
    /// `l = 0`) meets a coordinate axis, at the points where the other
    /// coordinate is an `l`-th root of unity; the rational ones are checked.
    pub fn off_origin_crossings(&self, characteristic: u64) -> OffOriginCheck {
        let mut check = OffOriginCheck::default();
        let ProperTransform::MissesOrigin { k, l } = self.proper else {
            // c1^s = c2^t meets the axes only at the origin
            return check;
        };
        let mut visit = |present: bool, own: u64, other: u64| {
            if !present || own != 0 || other == 0 {
                return;
            }
            // roots of z^other = 1 in the prime field: 1, and -1 for even
            // exponents when the characteristic is not 2
            let rational_roots: usize = if other.is_multiple_of(2) && characteristic != 2 {
                2
            } else {
                1
            };
            // the gradient of 1 - z^other at a root is -other * root^(other-1),
            // independent of the axis direction
            if divides(characteristic, other) {
                check.failures += rational_roots;
            } else {
                check.verified += rational_roots;
            }
            if characteristic == 0 {
                check.skipped += other as usize - rational_roots;
            } else {
                check.skipped += (other as usize).saturating_sub(rational_roots);
            }
        };
        visit(self.exc_a > 0, k, l);
        visit(self.exc_b > 0, l, k);
        check
    }
}

fn power(m: Monomial, e: u64) -> Option<String> {
    let s = m.to_string();
    match e {
        0 => None,
        1 => Some(s),
        _ if s.contains(['/', '*']) => Some(format!("({s})^{e}")),
        _ => Some(format!("{s}^{e}")),
    }
}

/// The total transform as an expression in `x, y`, e.g.
/// `-y^2 * (y - (x/y)^2)`.
impl fmt::Display for ChartState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c1, c2) = (self.basis.f, self.basis.g);
        let proper = match self.proper {
            ProperTransform::ThroughOrigin { s, t } => format!(
                "{} - {}",
                power(c1, s).unwrap_or_else(|| "1".into()),
                power(c2, t).unwrap_or_else(|| "1".into())
            ),
            ProperTransform::MissesOrigin { k, l } => {
                let m: Vec<String> = [power(c1, k), power(c2, l)].into_iter().flatten().collect();
                if m.is_empty() {
                    "1 - 1".into()
                } else {
                    format!("1 - {}", m.join(" * "))
                }
            }
        };
        let mut factors: Vec<String> = [power(c1, self.exc_a), power(c2, self.exc_b)]
            .into_iter()
            .flatten()
            .collect();
        factors.push(format!("({proper})"));
        if self.sign < 0 {
            f.write_str("-")?;
        }
        f.write_str(&factors.join(" * "))
    }
}

pub fn cusp_polynomial(a: i64, b: i64) -> LaurentPolynomial {
    LaurentPolynomial::from_terms([
        (Monomial::new(b, 0), Rational::from_integer(1.into())),
        (Monomial::new(0, a), Rational::from_integer((-1).into())),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowUpStep {
    pub chart: ChartState,
    pub classification: Classification,
    pub children: [(ChartState, Classification); 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTrace {
    pub a: i64,
    pub b: i64,
    pub steps: Vec<BlowUpStep>,
}

impl ResolutionTrace {
    pub fn blow_up_count(&self) -> usize {
        self.steps.len()
    }

    /// Every chart in the trace: the initial chart and both children of
    /// every step.
    pub fn charts(&self) -> impl Iterator<Item = &ChartState> {
        self.steps
            .first()
            .map(|s| &s.chart)
            .into_iter()
            .chain(self.steps.iter().flat_map(|s| s.children.iter().map(|(c, _)| c)))
    }
}

/// Blows up the unique unresolved chart until every chart is resolved.
pub fn resolve(a: i64, b: i64) -> Result<ResolutionTrace> {
    let mut chart = initial_chart(a, b)?;
    let mut classification = classify(&chart);
    let mut steps = Vec::new();
    // digit sum of a/b never exceeds a
    let cap = a as usize + 1;
    while !classification.is_resolved() {
        if steps.len() >= cap {
            return Err(Error::InvariantViolation(format!(
                "({a}, {b}) not resolved after {cap} blow-ups"
            )));
        }
        let (c1, c2) = blow_up(&chart)?;
        let children = [(c1, classify(&c1)), (c2, classify(&c2))];
        let mut bad = children.iter().filter(|(_, k)| !k.is_resolved());
        let next = bad.next().copied();
        if bad.next().is_some() {
            return Err(Error::InvariantViolation(format!(
                "both children of chart ({}, {}) are unresolved",
                chart.basis.f, chart.basis.g
            )));
        }
        steps.push(BlowUpStep {
            chart,
            classification,
            children,
        });
        match next {
            Some((c, k)) => {
                chart = c;
                classification = k;
            }
            None => break,
        }
    }
    Ok(ResolutionTrace { a, b, steps })
}

/// The charts that were blown up, as tree vertices.
pub fn bad_vertex_path(trace: &ResolutionTrace) -> PositivePath {
    PositivePath {
        vertices: trace.steps.iter().map(|s| TreeVertex::from(s.chart.basis)).collect(),
        status: PathStatus::Complete,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub a: i64,
    pub b: i64,
    pub bad_path: PositivePath,
    pub positive_path: PositivePath,
    pub equal: bool,
}

/// Compares the blown-up charts with the positive path of
/// `nu(x) = a, nu(y) = b`.
pub fn check_theorem(a: i64, b: i64) -> Result<TheoremCheck> {
    check_curve_params(a, b)?;
    let bad_path = bad_vertex_path(&resolve(a, b)?);
    let nu = MonomialValuation::integral(a, b)?;
    let path = positive_path(&nu, a as usize + 1)?;
    let equal = path.is_complete() && bad_path.vertices == path.vertices;
    Ok(TheoremCheck {
        a,
        b,
        bad_path,
        positive_path: path,
        equal,
    })
}

/// `gcd(s, t) = 1` for a through-origin transform.
pub fn is_coprime_transform(p: &ProperTransform) -> bool {
    match *p {
        ProperTransform::ThroughOrigin { s, t } => s.gcd(&t) == 1,
        ProperTransform::MissesOrigin { .. } => true,
    }
}
