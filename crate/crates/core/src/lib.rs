//! Exact graded algebra: Fock operators, jet polynomials, variational
//! calculus and BRST identity checks for Yang–Mills type models.

#![allow(clippy::needless_range_loop)]

pub mod checks;
pub mod config;
mod error;
pub mod fock;
pub mod gauge;
pub mod jet;
pub mod random;
pub mod report;
pub mod scalar;
pub mod varcalc;

pub use error::Error;
pub use jet::{JetPolynomial, JetSpace};
pub use scalar::{Grade, ThetaFlag, GQ};
