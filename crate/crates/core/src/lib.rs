//! Exact 3j-symbols and Clebsch-Gordan coefficients for gl(3).
//!
//! Basis vectors of irreducibles are realized as Γ-series in the minors of a
//! 3×3 matrix; the 3j-symbol of a triple is a signed, binomially weighted
//! Γ-series over a 30-variable lattice divided by three normalizing series.
//! The [`oracle`] module recomputes everything by brute-force polynomial
//! expansion in the matrix entries.

pub mod agkz;
pub mod alphabet;
mod error;
pub mod gamma;
pub mod lattice;
pub mod linsolve;
pub mod oracle;
pub mod pattern;
pub mod poly;
pub mod scalar;
pub mod threej;

pub use error::{Error, Result};
pub use pattern::{GtPattern, HighestWeight, ShiftVector6};

/// Arbitrary-precision rational; every returned coefficient has this type.
pub type Rational = num_rational::BigRational;
/// Polynomial with rational coefficients.
pub type QPoly = poly::SparsePoly<Rational>;
