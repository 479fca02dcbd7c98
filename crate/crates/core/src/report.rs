//! Structured pass/fail records for identity and inequality checks.
//!
//! Every checker in the crate returns a [`CheckReport`] rather than a
//! bare boolean: the per-index residuals (zero for identities) and slacks
//! (nonnegative for inequalities) are the interesting output, because
//! equality cases identify the extremal constructions.

use serde::Serialize;
use std::collections::BTreeMap;

/// A residual or slack value; integral entries serialize as integers so
/// reports stay exact where the arithmetic is exact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Real(f64),
}

impl Value {
    pub fn as_f64(self) -> f64 {
        match self {
            Value::Int(v) => v as f64,
            Value::Real(v) => v,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Real(v) => write!(f, "{v:.6}"),
        }
    }
}

/// One indexed entry of a check: `ok` means the entry satisfies the
/// check's relation (`= 0` for identities, `>= 0` for bounds).
#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub label: String,
    pub value: Value,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Outcome of one named identity or inequality check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    pub residuals: Vec<Entry>,
    /// Inputs that determine the result: field, seed, Betti numbers, ...
    pub context: BTreeMap<String, serde_json::Value>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            pass: true,
            residuals: Vec::new(),
            context: BTreeMap::new(),
        }
    }

    /// Records an identity residual: ok iff exactly zero.
    pub fn residual(&mut self, label: impl Into<String>, value: i64) -> &mut Self {
        self.push(Entry {
            label: label.into(),
            value: Value::Int(value),
            ok: value == 0,
            note: None,
        })
    }

    /// Records a lower-bound slack: ok iff nonnegative.
    pub fn slack(&mut self, label: impl Into<String>, value: i64) -> &mut Self {
        self.push(Entry {
            label: label.into(),
            value: Value::Int(value),
            ok: value >= 0,
            note: None,
        })
    }

    /// Records a real-valued slack with a guard band for values computed
    /// through floating point (pseudopower bounds). Near-boundary cases
    /// are noted instead of silently passing or failing.
    pub fn slack_real(&mut self, label: impl Into<String>, value: f64, guard: f64) -> &mut Self {
        let note = if value.abs() < guard {
            Some(format!("within {guard:e} of the boundary"))
        } else {
            None
        };
        self.push(Entry {
            label: label.into(),
            value: Value::Real(value),
            ok: value >= -guard,
            note,
        })
    }

    /// Records a plain condition with a descriptive label.
    pub fn condition(&mut self, label: impl Into<String>, ok: bool) -> &mut Self {
        self.push(Entry {
            label: label.into(),
            value: Value::Int(if ok { 0 } else { 1 }),
            ok,
            note: None,
        })
    }

    fn push(&mut self, entry: Entry) -> &mut Self {
        self.pass &= entry.ok;
        self.residuals.push(entry);
        self
    }

    pub fn with_context(mut self, key: &str, value: impl Serialize) -> Self {
        self.context.insert(
            key.to_string(),
            serde_json::to_value(value).expect("context serializes"),
        );
        self
    }

    pub fn set_context(&mut self, key: &str, value: impl Serialize) {
        self.context.insert(
            key.to_string(),
            serde_json::to_value(value).expect("context serializes"),
        );
    }

    /// Largest absolute residual, for summaries.
    pub fn max_abs_residual(&self) -> f64 {
        self.residuals
            .iter()
            .map(|e| e.value.as_f64().abs())
            .fold(0.0, f64::max)
    }
}
