//! Jones polarization vectors, dyadic (outer-product) constructions and the
//! Pauli spin algebra, together with tools that check how the three connect.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`] small dense complex matrices (2×2 and 3×3) with commutators,
//!   anticommutators, structural predicates and scalar-multiple matching.
//! * [`jones`] normalized Jones vectors, the four standard polarization
//!   states and plane-wave field evaluation.
//! * [`dyadics`] outer products, the parametrized dyad pairs and projector
//!   dyads built from two Jones vectors, and closed-form commutator entries.
//! * [`pauli`] Pauli matrices, spin-½ operators, ladder operators and an
//!   algebra self-check.
//! * [`reproduction`] the three reference constructions and their
//!   discrepancy ledger.
//! * [`sweep`] brute-force search of the parameter grid for dyad
//!   combinations proportional to Pauli matrices.
//! * [`cli`] the command-line surface and its text/JSON rendering.

pub mod algebra;
pub mod cli;
pub mod dyadics;
mod error;
pub mod jones;
pub mod pauli;
pub mod reproduction;
pub mod sweep;

pub use algebra::{CMatrix, ScalarMatch, DEFAULT_TOL};
pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Shorthand for building a [`Complex64`].
#[inline]
pub const fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
