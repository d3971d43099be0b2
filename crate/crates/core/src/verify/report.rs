use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numerics::{residual_passes, Mode};

/// Maximum number of failure witnesses kept per report.
pub const MAX_WITNESSES: usize = 8;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub mode: Mode,
    pub samples: usize,
    pub seed: u64,
    pub residual: f64,
    pub tolerance: f64,
    pub exhaustive: bool,
    pub witnesses: Vec<String>,
    pub pass: bool,
}

impl VerificationReport {
    /// Builds a report from per-sample outcomes; `pass` is derived, never
    /// supplied.
    pub fn from_outcomes(
        name: impl Into<String>,
        mode: Mode,
        seed: u64,
        tolerance: f64,
        exhaustive: bool,
        outcomes: impl IntoIterator<Item = Outcome>,
    ) -> Self {
        let mut residual: f64 = 0.0;
        let mut witnesses = Vec::new();
        let mut samples = 0;
        for o in outcomes {
            samples += 1;
            residual = residual.max(o.residual);
            if let Some(w) = o.witness {
                if witnesses.len() < MAX_WITNESSES {
                    witnesses.push(w);
                }
            }
        }
        let mut report = Self {
            name: name.into(),
            mode,
            samples,
            seed,
            residual,
            tolerance,
            exhaustive,
            witnesses,
            pass: false,
        };
        report.pass = report.witnesses.is_empty() && residual_passes(mode, residual, tolerance);
        report
    }

    /// Conjunction of several reports under a new name.
    pub fn combine(name: impl Into<String>, parts: &[VerificationReport]) -> Self {
        let first = parts.first();
        let mut witnesses: Vec<String> = Vec::new();
        for p in parts {
            for w in &p.witnesses {
                if witnesses.len() < MAX_WITNESSES {
                    witnesses.push(format!("[{}] {w}", p.name));
                }
            }
        }
        Self {
            name: name.into(),
            mode: first.map_or(Mode::Exact, |p| p.mode),
            samples: parts.iter().map(|p| p.samples).sum(),
            seed: first.map_or(0, |p| p.seed),
            residual: parts.iter().map(|p| p.residual).fold(0.0, f64::max),
            tolerance: first.map_or(0.0, |p| p.tolerance),
            exhaustive: parts.iter().all(|p| p.exhaustive),
            witnesses,
            pass: parts.iter().all(|p| p.pass),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<6} {:<44} {:<5} samples={:<6} residual={:.3e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.mode,
            self.samples,
            self.residual
        )?;
        if let Some(w) = self.witnesses.first() {
            write!(f, "  witness: {w}")?;
        }
        Ok(())
    }
}

/// Per-sample residual with an optional failure witness.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub residual: f64,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn ok() -> Self {
        Self { residual: 0.0, witness: None }
    }

    /// Records `residual`; the witness is rendered only on failure.
    /// Infinite residuals (e.g. mismatched discrete components) are clamped
    /// to `f64::MAX` so reports stay serializable.
    pub fn check(mode: Mode, tol: f64, residual: f64, witness: impl FnOnce() -> String) -> Self {
        let residual = if residual.is_nan() { f64::MAX } else { residual.min(f64::MAX) };
        let witness = (!residual_passes(mode, residual, tol)).then(witness);
        Self { residual, witness }
    }

    /// A boolean condition; failure carries residual 1.
    pub fn require(condition: bool, witness: impl FnOnce() -> String) -> Self {
        if condition {
            Self::ok()
        } else {
            Self { residual: 1.0, witness: Some(witness()) }
        }
    }

    /// Worst of several outcomes for the same sample.
    pub fn worst(outcomes: impl IntoIterator<Item = Outcome>) -> Self {
        outcomes.into_iter().fold(Self::ok(), |acc, o| Self {
            residual: acc.residual.max(o.residual),
            witness: acc.witness.or(o.witness),
        })
    }
}

/// A run of several checks, as written by `--report`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub reports: Vec<VerificationReport>,
    pub pass: bool,
}

impl ReportDocument {
    pub fn new(reports: Vec<VerificationReport>) -> Self {
        let pass = reports.iter().all(|r| r.pass);
        Self { reports, pass }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports contain only finite numbers and strings")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
