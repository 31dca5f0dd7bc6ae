//! Check records produced by the identity checks and verification suites.

use std::fmt;

use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One compared quantity: what was expected, what was computed, and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    /// The identity being checked, written out as a formula.
    pub anchor: String,
    pub parameters: String,
    pub expected: Vec<BigInt>,
    pub actual: Vec<BigInt>,
    pub status: Status,
    /// Why a check was skipped, or extra detail on a failure.
    pub note: Option<String>,
}

impl CheckRecord {
    /// Passes iff `expected == actual` and `extra_ok` holds.
    pub fn compare(
        name: impl Into<String>,
        anchor: impl Into<String>,
        parameters: impl Into<String>,
        expected: Vec<BigInt>,
        actual: Vec<BigInt>,
        extra_ok: bool,
    ) -> Self {
        let status = if expected == actual && extra_ok {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            name: name.into(),
            anchor: anchor.into(),
            parameters: parameters.into(),
            expected,
            actual,
            status,
            note: None,
        }
    }

    pub fn skipped(
        name: impl Into<String>,
        anchor: impl Into<String>,
        parameters: impl Into<String>,
        reason: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            parameters: parameters.into(),
            expected: Vec::new(),
            actual: Vec::new(),
            status: Status::Skipped,
            note: Some(reason.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// An ordered collection of check records.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn extend(&mut self, records: impl IntoIterator<Item = CheckRecord>) {
        self.checks.extend(records);
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(Status::Fail) > 0
    }
}
