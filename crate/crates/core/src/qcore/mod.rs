//! Arithmetic substrate: exact rationals, Laurent polynomials, q-Pochhammer
//! symbols and terminating basic hypergeometric series.

mod laurent;
mod params;
mod qseries;
mod scalar;

pub use laurent::LaurentPoly;
pub use params::QParams;
pub use qseries::{phi10_terminating, phi21_terminating, qpochhammer, qpow};
pub use scalar::{rat, Rational};
