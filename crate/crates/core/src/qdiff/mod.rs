//! The q-difference operator triple `X, Y, Z` as symbolic operators, and the
//! identities they satisfy on the Pastro polynomials.

mod operator;
mod verify;

pub use operator::{make_operators, OperatorTriple, OperatorWitness, QDiffOperator};
pub use verify::{verify_contiguity, verify_gevp, verify_qdiff_equation, verify_recurrence};
