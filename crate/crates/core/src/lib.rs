//! Exact invariants of twisted families of multipartite state spaces.
//!
//! Everything here runs over exact scalars: arbitrary-precision rationals and
//! cyclotomic fields. The modules are layered bottom-up:
//!
//! - [`exactmath`]: rationals, cyclotomic numbers, dense exact matrices.
//! - [`tensorstate`]: mixed-radix indexing, flattenings, Schmidt rank.
//! - [`weylmono`]: clock/shift operators, symbol-algebra representations,
//!   loop monodromy and exact Segre-stabilizer membership.
//! - [`detinv`]: dimensions, degrees and Hilbert data of rank loci.
//! - [`reduce`]: splitting-type tensor decompositions on the projective line
//!   and torsion/degree predicates.
//! - [`spinchain`]: the four-site one-magnon chain whose glued ground state
//!   becomes entangled.

pub mod detinv;
pub mod error;
pub mod exactmath;
pub mod reduce;
pub mod spinchain;
pub mod tensorstate;
pub mod weylmono;

pub use error::{Error, Result};
pub use exactmath::{cyclotomic_polynomial, kron, CycField, CycNum, ExactMatrix, Rational};
pub use tensorstate::{Bipartition, StateVector, SubsystemType};

