//! Verification reports: named checks with pass/fail status and witnesses.

use std::fmt;

/// Outcome of a single check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckOutcome {
    Pass,
    Fail,
    /// The check does not apply to the given weights.
    NotApplicable,
}

/// One named check with its outcome. Failures always carry a witness
/// (a cofactor, a mismatching coefficient index, an offending degree, ...).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub name: String,
    pub outcome: CheckOutcome,
    pub witness: Option<String>,
}

impl VerificationReport {
    pub fn pass(name: impl Into<String>) -> Self {
        VerificationReport { name: name.into(), outcome: CheckOutcome::Pass, witness: None }
    }

    pub fn pass_with(name: impl Into<String>, witness: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            outcome: CheckOutcome::Pass,
            witness: Some(witness.into()),
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            outcome: CheckOutcome::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn not_applicable(name: impl Into<String>, reason: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            outcome: CheckOutcome::NotApplicable,
            witness: Some(reason.into()),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == CheckOutcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == CheckOutcome::Fail
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.outcome {
            CheckOutcome::Pass => "pass",
            CheckOutcome::Fail => "FAIL",
            CheckOutcome::NotApplicable => "n/a",
        };
        match &self.witness {
            Some(w) => write!(f, "{}: {} ({})", self.name, status, w),
            None => write!(f, "{}: {}", self.name, status),
        }
    }
}
