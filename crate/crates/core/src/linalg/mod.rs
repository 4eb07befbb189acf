//! Exact rational scalars, dense matrices and echelonized subspaces.

mod frame;
mod matrix;
mod scalar;
mod subspace;

pub use frame::Frame;
pub use matrix::{combine, is_zero_vector, unit_vector, LinearMap, Matrix};
pub use scalar::{
    format_rational, frac, gaussian, lift, parse_rational, rat, rational_sqrt, Field, Gaussian, Rational,
};
pub use subspace::{commutant, Subspace};

/// Vector over the rationals.
pub type Vector = Vec<Rational>;
