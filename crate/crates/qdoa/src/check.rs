//! Report-valued validation results shared by the group, presentation and
//! color modules: every violated axiom is listed with a witness instead of
//! stopping at the first failure.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckIssue {
    /// Which axiom or invariant failed, e.g. "associativity".
    pub rule: String,
    /// Witness data, e.g. "(g,h,k) = (1,2,2)".
    pub witness: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub issues: Vec<CheckIssue>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { issues: Vec::new() }
    }

    pub fn push(&mut self, rule: impl Into<String>, witness: impl Into<String>) {
        self.issues.push(CheckIssue { rule: rule.into(), witness: witness.into() });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.issues.extend(other.issues);
    }

    pub fn passed(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: {}", issue.rule, issue.witness)?;
        }
        Ok(())
    }
}
