//! Exact algebra for Vandermonde varieties.
//!
//! The crate builds the ideals of rank-deficient generalized Vandermonde
//! matrices, computes their Gröbner bases, dimensions, Hilbert series and
//! degrees, compares closed-form Hilbert/degree formulas against that oracle,
//! certifies relation families among Schur polynomials, and runs the
//! desk-scale searches on linear recurrence varieties.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and no
//! floating point is used anywhere.

pub mod closed_forms;
pub mod groebner;
pub mod ideal;
pub mod polyring;
pub mod recurrences;
pub mod regularity_lab;
pub mod relations;
pub mod symmetric;

pub use polyring::{Monomial, MonomialOrder, PolyError, Polynomial, TaylorSeries, UniPoly};
