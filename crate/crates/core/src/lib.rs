//! Exact arithmetic for monomial valuations on `k(x, y)`.
//!
//! Continued fractions of rationals and of periodic irrationals drive the
//! positive path of a valuation through the tree of rings `k[f, g]`. For
//! `nu(x) = a`, `nu(y) = b` that path coincides with the charts blown up
//! while resolving the cusp `x^b = y^a`, which [`resolution`] simulates
//! symbolically.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod expr;
pub mod laurent;
pub mod render;
pub mod resolution;
pub mod valring;
pub mod valtree;
pub mod valuation;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{cf_convergents, cf_expand, cf_value, stream_compare, CfExpansion, CfStream, Rational};
pub use expr::{parse_expression, parse_rational_function};
pub use laurent::{lattice_solve, rewrite_in_chart, ChartBasis, LaurentPolynomial, Monomial, RationalFunction};
pub use resolution::{blow_up, check_theorem, classify, initial_chart, resolve, ChartState, Classification};
pub use valring::{membership_by_value, membership_structural, membership_union, ring_generators, RingPresentation};
pub use valtree::{branch_decomposition, cf_correspondence_check, positive_path, PositivePath, TreeVertex};
pub use valuation::{MonomialValuation, Value, ValueGroup};
pub use verify::run_verify;
