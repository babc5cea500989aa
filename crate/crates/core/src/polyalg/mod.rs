//! Sparse multivariate polynomials over the rationals, with global and
//! local monomial orderings.

mod monomial;
mod names;
mod order;
mod polynomial;

use thiserror::Error;

pub use monomial::{minimize_monomials, Monomial};
pub use names::VarNames;
pub use order::{MonomialOrder, OrderKind};
pub use polynomial::{coeff, Coeff, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation on the zero polynomial")]
    ZeroPolynomial,
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("priority {0:?} is not a permutation of the variable slots")]
    InvalidPriority(Vec<usize>),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl PolyError {
    pub fn code(&self) -> &'static str {
        match self {
            PolyError::ZeroPolynomial => "ZeroPolynomial",
            PolyError::ArityMismatch { .. } => "ArityMismatch",
            PolyError::InvalidPriority(_) => "InvalidPriority",
            PolyError::UnknownVariable(_) => "UnknownVariable",
            PolyError::Parse(_) => "ParseError",
        }
    }
}
