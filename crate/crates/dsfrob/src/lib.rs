//! Exact-rational pipeline from a simple Lie algebra to the polynomial
//! Frobenius manifold on the Slodowy slice of its principal nilpotent
//! element.
//!
//! The stages: build the algebra and its principal sl2 triple, normalize an
//! sl2-adapted basis, form the cyclic element and opposite Cartan data,
//! gauge-fix the Drinfeld-Sokolov generators, reduce the bihamiltonian
//! structure, cross-check the leading terms by Dirac reduction, then solve
//! for flat coordinates and the WDVV prepotential. Everything is computed
//! over arbitrary-precision rationals; there is no floating point anywhere.

pub mod error;
pub mod linalg;
pub mod qn;
pub mod upoly;

pub mod cyclic;
pub mod liealg;
pub mod sl2basis;

pub use error::{Error, Result};
