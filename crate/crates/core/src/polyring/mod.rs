//! Exact polynomial arithmetic over the rationals.
//!
//! [`Polynomial`] is the universal value type of the crate. [`UniPoly`] holds
//! integer Hilbert numerators and [`TaylorSeries`] the truncated expansions
//! used by the degree formulas.

mod matrix;
mod monomial;
mod poly;
mod text;
mod unipoly;

pub use matrix::{det_bareiss, det_cofactor, maximal_minors, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use poly::{poly_arith, poly_divide_exact, ArithOp, Polynomial};
pub use unipoly::{series_ops, SeriesOp, TaylorSeries, UniPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("ring context mismatch: {left} vs {right} variables")]
    RingMismatch { left: usize, right: usize },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("series with zero constant term is not invertible")]
    NonUnitInversion,
    #[error("{0} variables requested, at most {MAX_VARS} supported")]
    TooManyVariables(usize),
    #[error("monomial exponent does not fit the inline representation")]
    ExponentOverflow,
    #[error("matrix shape error: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
}
