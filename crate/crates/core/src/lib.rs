//! Exact construction and verification of the Pastro biorthogonal
//! polynomials, the q-difference operator triple `X, Y, Z` that governs
//! them, their discrete biorthogonality on a q-grid, and the algebra the
//! triple generates.
//!
//! Every quantity is an exact rational, so each identity is checked as a
//! literal equality. See the `examples/` directory for one runnable program
//! per capability.

pub mod algebra;
pub mod biorth;
pub mod cli;
pub mod error;
pub mod pastro;
pub mod qcore;
pub mod qdiff;
pub mod report;

pub use error::{Error, Result};
pub use qcore::{rat, LaurentPoly, QParams, Rational};
pub use report::{Check, Status};
