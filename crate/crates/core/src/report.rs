use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{format_coefficient, Coefficient, Index};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One disagreement between the two sides of a checked identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    pub degree: u64,
    /// `None` for checks that are not indexed by a symbol (integer identities).
    pub index: Option<Index>,
    pub expected: String,
    pub actual: String,
}

impl Mismatch {
    pub fn exact(degree: u64, index: Option<Index>, expected: &Coefficient, actual: &Coefficient) -> Self {
        Mismatch {
            degree,
            index,
            expected: format_coefficient(expected),
            actual: format_coefficient(actual),
        }
    }
}

/// Outcome of one verification. `status` is derived from `mismatches` and
/// cannot disagree with it, including after deserialization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawReport")]
pub struct Report {
    identity: String,
    parameter: u64,
    status: Status,
    mismatches: Vec<Mismatch>,
}

#[derive(Deserialize)]
struct RawReport {
    identity: String,
    parameter: u64,
    status: Status,
    mismatches: Vec<Mismatch>,
}

impl TryFrom<RawReport> for Report {
    type Error = String;

    fn try_from(raw: RawReport) -> Result<Self, String> {
        let report = Report::new(raw.identity, raw.parameter, raw.mismatches);
        if report.status != raw.status {
            return Err(format!("status {:?} contradicts {} mismatches", raw.status, report.mismatches.len()));
        }
        Ok(report)
    }
}

impl Report {
    pub fn new(identity: impl Into<String>, parameter: u64, mismatches: Vec<Mismatch>) -> Self {
        let status = if mismatches.is_empty() { Status::Pass } else { Status::Fail };
        Report { identity: identity.into(), parameter, status, mismatches }
    }

    pub fn identity(&self) -> &str {
        &self.identity
    }

    pub fn parameter(&self) -> u64 {
        self.parameter
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn mismatches(&self) -> &[Mismatch] {
        &self.mismatches
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} ({})", self.identity, self.parameter)?;
        for m in &self.mismatches {
            write!(f, "\n  degree {}", m.degree)?;
            if let Some(ix) = &m.index {
                write!(f, " {ix}")?;
            }
            write!(f, ": expected {}, got {}", m.expected, m.actual)?;
        }
        Ok(())
    }
}
