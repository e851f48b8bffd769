//! Exact-arithmetic toolkit for extremal bounds on the hard-core model over
//! cubic graphs.
//!
//! The pipeline: enumerate the local-view configurations a cubic graph of a
//! given girth can present around a vertex, compute each view's partition
//! functions and neighbor statistics as exact rational functions, pose the
//! induced linear programs over exact rationals, and verify dual certificates
//! symbolically — over Q, or over Q(√15) when an interval endpoint is
//! irrational. Brute-force graph computations (independence polynomials,
//! configuration distributions of the named cage graphs) provide the oracle
//! side of every cross-check.
//!
//! The polynomial and rational-function core is generic over the coefficient
//! field through the [`exactmath::Scalar`] trait; the two instantiations used
//! here are aliased below.

pub mod certify;
pub mod exactmath;
pub mod graphs;
pub mod localview;
pub mod lp;

pub use exactmath::{Quad, Rat, Scalar};

/// Polynomial over the rationals.
pub type QPoly = exactmath::Poly<Rat>;
/// Polynomial over Q(√15).
pub type KPoly = exactmath::Poly<Quad>;
/// Rational function over the rationals.
pub type QRatFunc = exactmath::RatFunc<Rat>;
/// Rational function over Q(√15).
pub type KRatFunc = exactmath::RatFunc<Quad>;

/// Parse an exact rational in `p/q` form (or a plain integer).
pub fn parse_rational(s: &str) -> Result<Rat, exactmath::ExactMathError> {
    <Rat as Scalar>::parse_scalar(s)
}
