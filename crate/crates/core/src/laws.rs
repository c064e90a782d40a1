//! Law-by-law reports produced by the axiom suites.

use crate::error::{Error, Result};
use std::fmt;

/// Outcome of checking a single law exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: String,
    /// Smallest counterexample tuple found, if the law fails.
    pub witness: Option<Vec<usize>>,
}

impl LawCheck {
    pub fn new(law: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        LawCheck {
            law: law.into(),
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub structure: String,
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn new(structure: impl Into<String>) -> Self {
        LawReport {
            structure: structure.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, law: impl Into<String>, witness: Option<Vec<usize>>) {
        self.checks.push(LawCheck::new(law, witness));
    }

    /// Appends the checks of `other`, prefixing each law with `scope`.
    pub fn absorb(&mut self, scope: &str, other: LawReport) {
        for c in other.checks {
            self.checks.push(LawCheck::new(format!("{scope} {}", c.law), c.witness));
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }

    pub fn first_failure(&self) -> Option<&LawCheck> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn into_result(self) -> Result<()> {
        match self.checks.into_iter().find(|c| !c.passed()) {
            None => Ok(()),
            Some(c) => Err(Error::Law {
                structure: self.structure,
                law: c.law,
                witness: c.witness.unwrap_or_default(),
            }),
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.structure)?;
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "  pass  {}", c.law)?,
                Some(w) => writeln!(f, "  FAIL  {} at {:?}", c.law, w)?,
            }
        }
        Ok(())
    }
}
