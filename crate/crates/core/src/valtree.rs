//! The valuation tree and positive paths.
//!
//! Vertices are rings `k[f, g]` for Laurent monomials `f, g` forming a
//! unimodular pair; `k[f, g]` has children `k[f, g/f]` and `k[g, f/g]`. The
//! tree is never stored; children are generated on demand.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactnum::{cf_expand, CfExpansion, Rational};
use crate::laurent::{ChartBasis, Monomial};
use crate::valuation::{MonomialValuation, Value};

/// Vertex cap for positive paths that never terminate.
pub const DEFAULT_MAX_STEPS: usize = 64;

/// The ring `k[f, g]`. Equality ignores generator order.
#[derive(Clone, Copy, Debug, Eq)]
pub struct TreeVertex {
    pub f: Monomial,
    pub g: Monomial,
}

impl TreeVertex {
    pub fn new(f: Monomial, g: Monomial) -> Result<Self> {
        ChartBasis::new(f, g)?;
        Ok(TreeVertex { f, g })
    }

    /// `k[x, y]`.
    pub fn root() -> Self {
        TreeVertex {
            f: Monomial::X,
            g: Monomial::Y,
        }
    }

    pub fn basis(&self) -> ChartBasis {
        ChartBasis { f: self.f, g: self.g }
    }

    pub fn contains_generator(&self, m: Monomial) -> bool {
        self.f == m || self.g == m
    }

    fn sorted(&self) -> (Monomial, Monomial) {
        if self.f <= self.g {
            (self.f, self.g)
        } else {
            (self.g, self.f)
        }
    }
}

impl PartialEq for TreeVertex {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Hash for TreeVertex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sorted().hash(state);
    }
}

impl From<ChartBasis> for TreeVertex {
    fn from(b: ChartBasis) -> Self {
        TreeVertex { f: b.f, g: b.g }
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[{}, {}]", self.f, self.g)
    }
}

/// `(k[f, g/f], k[g, f/g])`.
pub fn children(v: &TreeVertex) -> Result<(TreeVertex, TreeVertex)> {
    let g_over_f = v.g.checked_div(v.f).ok_or(Error::ExponentOverflow)?;
    let f_over_g = v.f.checked_div(v.g).ok_or(Error::ExponentOverflow)?;
    Ok((TreeVertex { f: v.f, g: g_over_f }, TreeVertex { f: v.g, g: f_over_g }))
}

pub fn is_positive(nu: &MonomialValuation, v: &TreeVertex) -> Result<bool> {
    Ok(nu.is_positive(nu.value_of_monomial(v.f))? && nu.is_positive(nu.value_of_monomial(v.g))?)
}

/// The unique positive child of a positive vertex, or `None` when the two
/// generators have equal value (both quotients then have value zero).
pub fn positive_child(nu: &MonomialValuation, v: &TreeVertex) -> Result<Option<TreeVertex>> {
    let (via_f, via_g) = children(v)?;
    Ok(
        match nu.compare(nu.value_of_monomial(v.f), nu.value_of_monomial(v.g))? {
            Ordering::Less => Some(via_f),
            Ordering::Greater => Some(via_g),
            Ordering::Equal => None,
        },
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathStatus {
    Complete,
    /// The walk stopped after this many vertices while a positive child
    /// still existed.
    Truncated {
        at: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivePath {
    pub vertices: Vec<TreeVertex>,
    pub status: PathStatus,
}

impl PositivePath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.status == PathStatus::Complete
    }

    pub fn last(&self) -> Option<&TreeVertex> {
        self.vertices.last()
    }
}

/// Walks the positive path from `k[x, y]`, keeping at most `max_steps`
/// vertices.
pub fn positive_path(nu: &MonomialValuation, max_steps: usize) -> Result<PositivePath> {
    if max_steps == 0 {
        return Err(Error::InvalidParameters("max_steps must be positive".into()));
    }
    let root = TreeVertex::root();
    if !is_positive(nu, &root)? {
        return Err(Error::RootNotPositive);
    }
    if nu.compare(Value::new(1, 0), Value::new(0, 1))? == Ordering::Equal {
        return Err(Error::DegenerateRatio);
    }
    let mut vertices = vec![root];
    let mut current = root;
    loop {
        let next = positive_child(nu, &current)?;
        match next {
            None => {
                return Ok(PositivePath {
                    vertices,
                    status: PathStatus::Complete,
                })
            }
            Some(_) if vertices.len() == max_steps => {
                return Ok(PositivePath {
                    vertices,
                    status: PathStatus::Truncated { at: max_steps },
                })
            }
            Some(child) => {
                vertices.push(child);
                current = child;
            }
        }
    }
}

/// A maximal run of path vertices `k[s, t/s^m]`, `m = 1..=length`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Branch {
    pub s: Monomial,
    pub t: Monomial,
    pub length: u64,
}

/// Splits a path into monotone branches. `k[x, y]` counts as the `m = 0`
/// member of the first branch and does not add to its length.
pub fn branch_decomposition(path: &PositivePath) -> Result<Vec<Branch>> {
    if path.len() < 2 {
        return Err(Error::InvalidParameters("path needs at least two vertices".into()));
    }
    let (root, second) = (path.vertices[0], path.vertices[1]);
    // first branch is B(s, t) where s is the generator of the root kept by
    // the second vertex
    let (mut s, mut t) = if second.contains_generator(root.g) {
        (root.g, root.f)
    } else {
        (root.f, root.g)
    };
    let mut w = t;
    let mut length = 0u64;
    let mut out = Vec::new();
    for next in &path.vertices[1..] {
        let along = w.checked_div(s).ok_or(Error::ExponentOverflow)?;
        let across = s.checked_div(w).ok_or(Error::ExponentOverflow)?;
        if *next == (TreeVertex { f: s, g: along }) {
            length += 1;
            w = along;
        } else if *next == (TreeVertex { f: w, g: across }) {
            if length > 0 {
                out.push(Branch { s, t, length });
            }
            t = s;
            s = w;
            w = across;
            length = 1;
        } else {
            return Err(Error::InvariantViolation(format!(
                "{next} is not a child of k[{s}, {w}]"
            )));
        }
    }
    out.push(Branch { s, t, length });
    Ok(out)
}

/// Result of comparing branch lengths with continued-fraction digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfCorrespondence {
    pub a: i64,
    pub b: i64,
    pub branch_lengths: Vec<u64>,
    pub digits: CfExpansion,
    /// Digits with the last one decremented (and dropped if it reaches 0).
    pub expected_lengths: Vec<u64>,
    pub matches: bool,
}

pub(crate) fn check_coprime_pair(a: i64, b: i64) -> Result<()> {
    if b < 1 || a <= b {
        return Err(Error::InvalidParameters(format!("need a > b >= 1, got ({a}, {b})")));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    Ok(())
}

/// Walks the positive path for `nu(x) = a`, `nu(y) = b` and checks that
/// its branch lengths are the canonical digits of `a/b` with the last digit
/// decreased by one.
pub fn cf_correspondence_check(a: i64, b: i64) -> Result<CfCorrespondence> {
    check_coprime_pair(a, b)?;
    let nu = MonomialValuation::integral(a, b)?;
    let steps = usize::try_from(a).unwrap_or(usize::MAX).saturating_add(1);
    let path = positive_path(&nu, steps)?;
    if !path.is_complete() {
        return Err(Error::InvariantViolation(format!(
            "path for ({a}, {b}) did not terminate"
        )));
    }
    let branch_lengths: Vec<u64> = branch_decomposition(&path)?.iter().map(|br| br.length).collect();
    let digits = cf_expand(&Rational::new(BigInt::from(a), BigInt::from(b)));
    let mut expected: Vec<BigInt> = digits.digits().to_vec();
    if let Some(last) = expected.last_mut() {
        *last -= BigInt::one();
    }
    if expected.last().is_some_and(|d| *d == BigInt::from(0)) {
        expected.pop();
    }
    let expected_lengths = expected
        .iter()
        .map(|d| d.to_u64().ok_or(Error::ExponentOverflow))
        .collect::<Result<Vec<_>>>()?;
    let matches = branch_lengths == expected_lengths;
    Ok(CfCorrespondence {
        a,
        b,
        branch_lengths,
        digits,
        expected_lengths,
        matches,
    })
}

/// The `Z^2`-valued valuation with `nu(f) = (0, 1)` and `nu(g) = (1, 0)`,
/// found by inverting the exponent matrix of `{f, g}`. Under it every
/// `g/f^t` is positive, so the path runs down `k[f, g/f^t]` forever.
pub fn lex_valuation_from_tail(f: Monomial, g: Monomial) -> Result<MonomialValuation> {
    let basis = ChartBasis::new(f, g)?;
    let det = basis.det();
    let nu_f = (0i64, 1i64);
    let nu_g = (1i64, 0i64);
    // rows (f.ex, f.ey), (g.ex, g.ey); inverse is adj / det with det = +-1
    let solve = |k: usize| -> (i64, i64) {
        let pick = |p: (i64, i64)| if k == 0 { p.0 } else { p.1 };
        let nx = (g.ey * pick(nu_f) - f.ey * pick(nu_g)) * det;
        let ny = (-g.ex * pick(nu_f) + f.ex * pick(nu_g)) * det;
        (nx, ny)
    };
    let (nx0, ny0) = solve(0);
    let (nx1, ny1) = solve(1);
    Ok(MonomialValuation::lex((nx0, nx1), (ny0, ny1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CfStream;
    use crate::valuation::ValueGroup;

    fn m(ex: i64, ey: i64) -> Monomial {
        Monomial::new(ex, ey)
    }

    fn v(f: (i64, i64), g: (i64, i64)) -> TreeVertex {
        TreeVertex::new(m(f.0, f.1), m(g.0, g.1)).unwrap()
    }

    #[test]
    fn children_examples() {
        assert_eq!(
            children(&TreeVertex::root()).unwrap(),
            (v((1, 0), (-1, 1)), v((0, 1), (1, -1)))
        );
        let (a, b) = children(&v((0, 1), (1, -1))).unwrap();
        assert_eq!(a, v((0, 1), (1, -2)));
        assert_eq!(b, v((1, -1), (-1, 2)));
    }

    #[test]
    fn unordered_identity() {
        assert_eq!(v((1, 0), (0, 1)), v((0, 1), (1, 0)));
        assert!(TreeVertex::new(m(1, 1), m(1, 1)).is_err());
    }

    #[test]
    fn positive_child_examples() {
        let nu = MonomialValuation::integral(3, 2).unwrap();
        assert_eq!(
            positive_child(&nu, &TreeVertex::root()).unwrap(),
            Some(v((0, 1), (1, -1)))
        );
        assert_eq!(positive_child(&nu, &v((1, -1), (-1, 2))).unwrap(), None);
        let nu = MonomialValuation::integral(24, 7).unwrap();
        assert_eq!(
            positive_child(&nu, &v((0, 1), (1, -3))).unwrap(),
            Some(v((1, -3), (-1, 4)))
        );
    }

    #[test]
    fn path_3_2() {
        let nu = MonomialValuation::integral(3, 2).unwrap();
        let path = positive_path(&nu, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(
            path.vertices,
            vec![TreeVertex::root(), v((0, 1), (1, -1)), v((1, -1), (-1, 2))]
        );
        assert!(path.is_complete());
    }

    #[test]
    fn path_sqrt2_truncates() {
        let nu = MonomialValuation::stream(CfStream::sqrt2()).unwrap();
        let path = positive_path(&nu, 10).unwrap();
        assert_eq!(path.len(), 10);
        assert_eq!(path.status, PathStatus::Truncated { at: 10 });
    }

    #[test]
    fn path_stops_exactly_at_cap() {
        let nu = MonomialValuation::integral(24, 7).unwrap();
        assert!(positive_path(&nu, 8).unwrap().is_complete());
        assert_eq!(positive_path(&nu, 7).unwrap().status, PathStatus::Truncated { at: 7 });
    }

    #[test]
    fn degenerate_and_invalid() {
        let nu = MonomialValuation::integral(2, 2).unwrap();
        assert_eq!(positive_path(&nu, 10), Err(Error::DegenerateRatio));
        let nu = MonomialValuation::lex((1, 0), (-1, 0));
        assert_eq!(positive_path(&nu, 10), Err(Error::RootNotPositive));
        let nu = MonomialValuation::integral(3, 2).unwrap();
        assert!(positive_path(&nu, 0).is_err());
    }

    #[test]
    fn swapped_valuation_walks_the_other_side() {
        let nu = MonomialValuation::integral(2, 3).unwrap();
        assert!(nu.group().swapped().unwrap());
        let path = positive_path(&nu, 10).unwrap();
        assert_eq!(path.vertices[1], v((1, 0), (-1, 1)));
        assert_eq!(path.len(), 3);
        let lengths: Vec<u64> = branch_decomposition(&path).unwrap().iter().map(|b| b.length).collect();
        assert_eq!(lengths, vec![1, 1]);
    }

    #[test]
    fn branches() {
        let nu = MonomialValuation::integral(24, 7).unwrap();
        let path = positive_path(&nu, DEFAULT_MAX_STEPS).unwrap();
        let br = branch_decomposition(&path).unwrap();
        assert_eq!(
            br,
            vec![
                Branch {
                    s: m(0, 1),
                    t: m(1, 0),
                    length: 3
                },
                Branch {
                    s: m(1, -3),
                    t: m(0, 1),
                    length: 2
                },
                Branch {
                    s: m(-2, 7),
                    t: m(1, -3),
                    length: 2
                },
            ]
        );
        let nu = MonomialValuation::integral(3, 2).unwrap();
        let path = positive_path(&nu, DEFAULT_MAX_STEPS).unwrap();
        let lengths: Vec<u64> = branch_decomposition(&path).unwrap().iter().map(|b| b.length).collect();
        assert_eq!(lengths, vec![1, 1]);
        let nu = MonomialValuation::integral(5, 1).unwrap();
        let path = positive_path(&nu, DEFAULT_MAX_STEPS).unwrap();
        let br = branch_decomposition(&path).unwrap();
        assert_eq!(
            br,
            vec![Branch {
                s: m(0, 1),
                t: m(1, 0),
                length: 4
            }]
        );
    }

    #[test]
    fn branch_needs_two_vertices() {
        let p = PositivePath {
            vertices: vec![TreeVertex::root()],
            status: PathStatus::Complete,
        };
        assert!(branch_decomposition(&p).is_err());
    }

    #[test]
    fn correspondence_examples() {
        let r = cf_correspondence_check(24, 7).unwrap();
        assert_eq!(r.branch_lengths, vec![3, 2, 2]);
        assert!(r.matches);
        let r = cf_correspondence_check(3, 2).unwrap();
        assert_eq!(r.branch_lengths, vec![1, 1]);
        assert!(r.matches);
        assert_eq!(cf_correspondence_check(6, 4), Err(Error::NotCoprime { a: 6, b: 4 }));
        assert!(cf_correspondence_check(2, 3).is_err());
    }

    #[test]
    fn lex_from_tail() {
        let nu = lex_valuation_from_tail(Monomial::Y, Monomial::X).unwrap();
        match nu.group() {
            ValueGroup::LexZ2 { vx, vy } => assert_eq!((*vx, *vy), ((1, 0), (0, 1))),
            other => panic!("unexpected group {other:?}"),
        }
        let (f, g) = (m(1, -1), m(-1, 2));
        let nu = lex_valuation_from_tail(f, g).unwrap();
        let ValueGroup::LexZ2 { vx, vy } = nu.group().clone() else {
            unreachable!()
        };
        let eval = |mm: Monomial| (mm.ex * vx.0 + mm.ey * vy.0, mm.ex * vx.1 + mm.ey * vy.1);
        assert_eq!(eval(f), (0, 1));
        assert_eq!(eval(g), (1, 0));
        assert!(lex_valuation_from_tail(m(2, 0), m(0, 1)).is_err());
    }
}
