//! Multigraded computer algebra for determinantal-type ideals over prime fields.
//!
//! The crate computes ℤⁿ-graded generic initial ideals of ideals of minors of a
//! generic matrix whose columns are graded independently, certifies or refutes
//! the Cartwright-Sturmfels property with machine-checkable witnesses, and
//! carries the supporting machinery: a Buchberger engine, multigraded Hilbert
//! numerators (K-polynomials), polarization and Alexander duality, and the
//! combinatorics of (hyper)graph minor ideals.
//!
//! Entry points:
//! - [`models`] builds the ideals (minors, binomial edge ideals, hypergraph
//!   minor ideals).
//! - [`multigrading::multigraded_gin`] and [`multigrading::check_cs`] run the
//!   sampling pipeline.
//! - [`combinatorics::predict_gin_generators`] gives the closed-form prediction
//!   for binomial edge ideals.
//! - [`cli`] backs the `csgin` binary.

pub mod algebra;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod models;
pub mod multigrading;
pub mod report;

pub use error::{Error, Result};
