//! Exact scalar arithmetic and dense linear algebra.
//!
//! Rationals are `num_rational::BigRational`; cyclotomic numbers and matrices
//! are built on top of them. There is no floating-point path.

mod cyclo;
mod matrix;
pub mod poly;
pub mod scalar;

pub use cyclo::{CycField, CycNum};
pub use matrix::{kron, ExactMatrix};
pub use poly::{cyclotomic_polynomial, euler_phi};
pub use scalar::{parse_rational, parse_root_of_unity};

/// Arbitrary-precision rational in canonical form.
pub type Rational = num_rational::BigRational;
