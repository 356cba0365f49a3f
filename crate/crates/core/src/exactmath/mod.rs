//! Exact arbitrary-precision rational scalars, dense univariate polynomials,
//! rational functions, and Sturm-sequence real-root counting.
//!
//! Everything downstream is built on these types. All arithmetic is exact:
//! no floating point enters until the final rounding step in the numerical
//! verification layer.

mod polynomial;
mod ratfunc;
pub mod rational;
mod sturm;

pub use polynomial::Polynomial;
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use sturm::sturm_root_count;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactMathError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("root counting on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial vanishes at interval endpoint {0}; perturb the endpoint")]
    EndpointRoot(String),
    #[error("invalid interval: lower bound must be strictly below upper bound")]
    EmptyInterval,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}
