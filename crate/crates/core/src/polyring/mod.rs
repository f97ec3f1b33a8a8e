//! Exact coefficients, monomials and orders, sparse multivariate
//! polynomials, ring maps, and the text format for polynomials.

mod coeff;
mod monomial;
mod parse;
mod poly;
mod ring;
mod subst;

use thiserror::Error;

pub use coeff::{Coeff, Field, Fp, DEFAULT_PRIME};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_poly, ParseError};
pub use poly::{Poly, WeightClass};
pub use ring::PolyRing;
pub use subst::{substitute, RingMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("invalid variable name `{0}`")]
    BadVariableName(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("{0} is not a prime modulus below 2^31")]
    BadModulus(u32),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("block split {split} exceeds {nvars} variables")]
    BadBlock { split: usize, nvars: usize },
    #[error("expected {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
}
