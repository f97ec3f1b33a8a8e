//! Verdicts for the computable claims about jet schemes: nilpotent
//! witnesses, main components, fiber-dimension comparisons, singular loci
//! and the failure of flatness, plus a runner for the whole claim suite.

mod claims;
mod suite;

use std::fmt;
use std::time::Duration;

pub use claims::{
    flatness_fiber_gap, irreducibility_failure_check, main_component, nilpotent_witness, quadric_x1_report,
    singular_point, smooth_jets_report, structure_report, MainComponent,
};
pub use suite::{claim_ids, run_suite, SuiteOptions};

use crate::polyring::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

/// Outcome of checking one claim. All quantities are exact, so there is no
/// numeric tolerance: equalities must hold exactly and bounds as stated.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub claim: String,
    pub status: Status,
    pub computed: Vec<(String, Value)>,
    pub expected: String,
    pub note: String,
    pub field: Field,
    pub elapsed: Duration,
}

impl Verdict {
    pub(crate) fn new(claim: &str, field: Field, expected: impl Into<String>) -> Self {
        Verdict {
            claim: claim.to_string(),
            status: Status::Pass,
            computed: Vec::new(),
            expected: expected.into(),
            note: String::new(),
            field,
            elapsed: Duration::ZERO,
        }
    }

    pub(crate) fn record(&mut self, key: &str, v: impl Into<Value>) {
        self.computed.push((key.to_string(), v.into()));
    }

    /// Records a requirement; any false one turns the verdict into a failure.
    pub(crate) fn require(&mut self, ok: bool) {
        if !ok {
            self.status = Status::Fail;
        }
    }

    pub(crate) fn add_note(&mut self, note: &str) {
        if !self.note.is_empty() {
            self.note.push_str("; ");
        }
        self.note.push_str(note);
    }

    pub fn value(&self, key: &str) -> Option<&Value> {
        self.computed.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn int(&self, key: &str) -> Option<i64> {
        match self.value(key) {
            Some(Value::Int(n)) => Some(*n),
            _ => None,
        }
    }

    pub fn flag(&self, key: &str) -> Option<bool> {
        match self.value(key) {
            Some(Value::Bool(b)) => Some(*b),
            _ => None,
        }
    }

    /// Computed in positive characteristic, so only probabilistic evidence
    /// for statements about characteristic zero.
    pub fn char_p(&self) -> bool {
        !self.field.is_exact_char_zero()
    }

    /// `key=value` pairs joined by spaces.
    pub fn computed_summary(&self) -> String {
        self.computed
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}
