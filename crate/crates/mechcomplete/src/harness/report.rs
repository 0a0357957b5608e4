//! Verification report: measured scalars against declared tolerances.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct Expected {
    pub value: f64,
    pub tolerance: f64,
    /// Where the target comes from (equilibrium law, frozen oracle, ...).
    pub provenance: String,
    /// Calibration targets are reported with residuals but do not gate
    /// `passed`; the hard criteria (dichotomy, boundary fidelity, limits)
    /// carry the gate.
    pub calibration: bool,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub scenario_name: String,
    pub measured: BTreeMap<String, f64>,
    pub expected: BTreeMap<String, Expected>,
    pub notes: Vec<String>,
    pub artifacts: Vec<PathBuf>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(scenario_name: &str) -> Self {
        VerificationReport {
            scenario_name: scenario_name.to_string(),
            measured: BTreeMap::new(),
            expected: BTreeMap::new(),
            notes: Vec::new(),
            artifacts: Vec::new(),
            passed: false,
        }
    }

    pub fn record(&mut self, key: &str, value: f64) {
        self.measured.insert(key.to_string(), value);
    }

    pub fn expect(&mut self, key: &str, value: f64, tolerance: f64, provenance: &str) {
        self.expected.insert(
            key.to_string(),
            Expected {
                value,
                tolerance,
                provenance: provenance.to_string(),
                calibration: false,
            },
        );
    }

    pub fn expect_calibration(&mut self, key: &str, value: f64, tolerance: f64, provenance: &str) {
        self.expected.insert(
            key.to_string(),
            Expected {
                value,
                tolerance,
                provenance: provenance.to_string(),
                calibration: true,
            },
        );
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn entry_ok(&self, key: &str, exp: &Expected) -> Option<bool> {
        self.measured
            .get(key)
            .map(|m| (m - exp.value).abs() <= exp.tolerance)
    }

    /// Computes `passed`: every hard expectation has a measured value within
    /// tolerance.
    pub fn finalize(&mut self) -> bool {
        self.passed = self
            .expected
            .iter()
            .filter(|(_, e)| !e.calibration)
            .all(|(k, e)| self.entry_ok(k, e).unwrap_or(false));
        self.passed
    }

    /// Plain-text rendering with one pass/fail line per expectation.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scenario: {}", self.scenario_name);
        for (key, exp) in &self.expected {
            let measured = self.measured.get(key);
            let status = match (self.entry_ok(key, exp), exp.calibration) {
                (Some(true), false) => "PASS",
                (Some(true), true) => "CALIB-OK",
                (Some(false), false) => "FAIL",
                (Some(false), true) => "CALIB-MISS",
                (None, _) => "MISSING",
            };
            match measured {
                Some(m) => {
                    let _ = write!(
                        out,
                        "  [{status}] {key}: measured {m:.6e} expected {:.6e} +/- {:.3e} ({})",
                        exp.value, exp.tolerance, exp.provenance
                    );
                    if status == "CALIB-MISS" {
                        let _ = write!(out, " — residual {:+.6e}", m - exp.value);
                    }
                    out.push('\n');
                }
                None => {
                    let _ = writeln!(
                        out,
                        "  [{status}] {key}: no measurement, expected {:.6e} +/- {:.3e} ({})",
                        exp.value, exp.tolerance, exp.provenance
                    );
                }
            }
        }
        for (key, m) in &self.measured {
            if !self.expected.contains_key(key) {
                let _ = writeln!(out, "  [info] {key}: {m:.6e}");
            }
        }
        for note in &self.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        // File names only: reports stay byte-identical across output roots.
        for artifact in &self.artifacts {
            if let Some(name) = artifact.file_name().and_then(|n| n.to_str()) {
                let _ = writeln!(out, "  artifact: {name}");
            }
        }
        let _ = writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }

    /// Writes `report.txt` into `dir` and registers it as an artifact.
    pub fn write_report(&mut self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join("report.txt");
        // Render after adding the artifact so the listing is complete.
        self.artifacts.push(path.clone());
        self.artifacts.sort();
        self.artifacts.dedup();
        std::fs::write(&path, self.render())?;
        Ok(())
    }

    /// Writes an artifact file into `dir` and registers it.
    pub fn write_artifact(&mut self, dir: &Path, name: &str, content: &str) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(name);
        std::fs::write(&path, content)?;
        self.artifacts.push(path);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passed_requires_all_hard_entries_in_tolerance() {
        let mut r = VerificationReport::new("demo");
        r.expect("a", 1.0, 0.1, "unit");
        r.record("a", 1.05);
        assert!(r.finalize());
        r.record("a", 1.2);
        assert!(!r.finalize());
    }

    #[test]
    fn calibration_misses_do_not_gate() {
        let mut r = VerificationReport::new("demo");
        r.expect("hard", 1.0, 0.1, "unit");
        r.record("hard", 1.0);
        r.expect_calibration("endpoint", 8.9, 1.0, "band");
        r.record("endpoint", 45.99);
        assert!(r.finalize());
        let text = r.render();
        assert!(text.contains("CALIB-MISS"));
        assert!(text.contains("residual"));
        assert!(text.contains("result: PASS"));
    }

    #[test]
    fn missing_measurement_fails() {
        let mut r = VerificationReport::new("demo");
        r.expect("a", 1.0, 0.1, "unit");
        assert!(!r.finalize());
        assert!(r.render().contains("MISSING"));
    }
}
