//! Exact arithmetic: rationals, the quadratic extension Q(√15), dense
//! univariate polynomials and reduced rational functions over them.

mod poly;
mod ratfunc;
mod scalar;

pub use poly::{mobius_substitute, Poly, Positivity, Var, DEFAULT_POLYA_LIMIT};
pub use ratfunc::RatFunc;
pub use scalar::{Quad, Rat, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactMathError {
    #[error("polynomial variables differ: {0} vs {1}")]
    VariableMismatch(Var, Var),
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}
