//! Exact-arithmetic machinery for a braid group action on l-tuples of
//! factored rational functions, and the cyclicity (highest-weight)
//! certificates it yields for ordered tensor products of
//! Kirillov-Reshetikhin modules.
//!
//! Everything is computed over Gaussian rationals plus at most one formal
//! parameter per root; no floating point anywhere.

pub mod braid;
pub mod cli;
pub mod cyclicity;
pub mod json;
pub mod lie;
pub mod rational;
pub mod ratfun;
pub mod weyl;

pub use lie::{Family, LieDatum, LieType};
pub use rational::{GaussRat, Rat};
pub use ratfun::{FactoredRational, RationalTuple, SymbolicPoint};
pub use weyl::{WeightVector, WeylWord};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: {constraint}")]
    InvalidRank {
        family: &'static str,
        rank: usize,
        constraint: &'static str,
    },
    #[error("node index {node} out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("suffix index {index} out of range 0..={len}")]
    SuffixOutOfRange { index: usize, len: usize },
    #[error("tuples belong to different Lie data: {left} vs {right}")]
    DatumMismatch { left: String, right: String },
    #[error("no candidate node numbering validates for {family}: tried {tried:?}")]
    NoNumberingValidates {
        family: &'static str,
        tried: Vec<String>,
    },
    #[error("a factor root still carries the formal parameter {param:?}: {hint}")]
    SymbolicRoot { param: String, hint: &'static str },
    #[error("root {root} does not have the form ({expected})·parameter + constant")]
    BadRootShape { root: String, expected: String },
    #[error(
        "component {node} of the prefix image at j = {prefix} is not a polynomial: {component}"
    )]
    NonPolynomialPrefix {
        node: usize,
        prefix: usize,
        component: String,
    },
    #[error("cyclicity value {value} has denominator not dividing 2; investigate before trusting the table")]
    BadDenominator { value: String },
    #[error("multiplicity for a coefficient must be nonzero")]
    ZeroMultiplicity,
    #[error("a parameter coefficient of zero requires the parameter to be absent")]
    ZeroParamCoeff,
    #[error("word is not reduced: {reason}")]
    NotReduced { reason: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
