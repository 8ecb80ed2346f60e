//! Verification outcomes.
//!
//! Every check carries a short anchor naming the identity it verifies and,
//! on failure, a witness: the first place where the two sides differ.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::qcore::{LaurentPoly, QParams, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

/// Result of comparing two sides of an identity: `Err` holds the witness.
pub type Outcome = std::result::Result<(), String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_anchor: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            paper_anchor: anchor.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witness: None,
        }
    }

    /// Builds a check from a fallible comparison.
    pub fn from_result(
        name: impl Into<String>,
        anchor: impl Into<String>,
        result: Result<Outcome, Error>,
    ) -> Self {
        let mut check = Check::new(name, anchor);
        match result {
            Ok(Ok(())) => {}
            Ok(Err(witness)) => {
                check.status = Status::Fail;
                check.witness = Some(witness);
            }
            Err(err) => {
                check.status = Status::Error;
                check.witness = Some(err.to_string());
            }
        }
        check
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_params(self, params: &QParams) -> Self {
        self.with_param("q", params.q())
            .with_param("a", params.a())
            .with_param("b", params.b())
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_error(&self) -> bool {
        self.status == Status::Error
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} [{}]", self.status, self.name, self.paper_anchor)?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Runs `f` over `range`, stopping at the first failure and tagging its
/// witness with the index.
pub fn for_each_index<I, F>(range: I, label: &str, mut f: F) -> Result<Outcome, Error>
where
    I: IntoIterator<Item = usize>,
    F: FnMut(usize) -> Result<Outcome, Error>,
{
    for i in range {
        if let Err(w) = f(i)? {
            return Ok(Err(format!("{label}={i}: {w}")));
        }
    }
    Ok(Ok(()))
}

pub fn poly_eq(label: &str, lhs: &LaurentPoly, rhs: &LaurentPoly) -> Outcome {
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some((k, l, r)) => Err(format!("{label}: coefficient of x^{k}: lhs={l} rhs={r}")),
    }
}

pub fn scalar_eq(label: &str, lhs: &Rational, rhs: &Rational) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{label}: lhs={lhs} rhs={rhs}"))
    }
}

pub fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

impl Check {
    /// Folds a sequence of checks into one: the first non-passing check
    /// decides the status, with its name prefixed to the witness.
    pub fn all<I>(name: impl Into<String>, anchor: impl Into<String>, checks: I) -> Check
    where
        I: IntoIterator<Item = Check>,
    {
        let mut out = Check::new(name, anchor);
        for check in checks {
            if !check.passed() {
                out.status = check.status;
                out.witness = Some(match check.witness {
                    Some(w) => format!("{}: {w}", check.name),
                    None => check.name,
                });
                break;
            }
        }
        out
    }
}
