use std::collections::BTreeMap;
use std::time::Instant;

use ado_forge_core::engine::VerificationReport;
use ado_forge_core::AdoError;
use serde::Serialize;
use serde_json::Value;

/// Machine-readable summary of one invocation, written to stderr as a single JSON line.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub input_digests: BTreeMap<String, String>,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub timings_ms: BTreeMap<&'static str, f64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub dims: BTreeMap<&'static str, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl RunReport {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            input_digests: BTreeMap::new(),
            outcome: "ok",
            error_kind: None,
            message: None,
            timings_ms: BTreeMap::new(),
            dims: BTreeMap::new(),
            verification: None,
            details: None,
        }
    }

    /// Runs `f`, recording its wall time under `phase`.
    pub fn time<T>(&mut self, phase: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings_ms.insert(phase, start.elapsed().as_secs_f64() * 1e3);
        out
    }

    pub fn fail(&mut self, failure: &Failure) {
        self.outcome = "error";
        self.error_kind = Some(failure.kind.clone());
        self.message = Some(failure.message.clone());
    }

    pub fn emit(&self) {
        eprintln!("{}", serde_json::to_string(self).expect("report serializes"));
    }
}

/// An error with its exit code and report kind.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub kind: String,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, kind: &str, message: impl Into<String>) -> Self {
        Self {
            code,
            kind: kind.to_string(),
            message: message.into(),
        }
    }

    pub fn io(path: &str, e: std::io::Error) -> Self {
        Self::new(2, "IoError", format!("{path}: {e}"))
    }
}

impl From<AdoError> for Failure {
    fn from(e: AdoError) -> Self {
        let code = match e {
            AdoError::Parse(_) => 2,
            AdoError::NotNilpotent(_) => 3,
            AdoError::BudgetExceeded { .. } | AdoError::TensorBudgetExceeded { .. } => 4,
            _ => 1,
        };
        Self::new(code, e.kind(), e.to_string())
    }
}
