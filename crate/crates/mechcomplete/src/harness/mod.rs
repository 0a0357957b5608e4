//! Named verification scenarios with declared tolerances, each writing
//! `report.txt` plus plot-ready CSV data into its own directory.

pub mod capillary;
pub mod deborah;
pub mod fields;
pub mod pressurization;
pub mod report;
pub mod stress_path;

pub use capillary::verify_capillary;
pub use deborah::{
    deborah_sweep, diffusivity_decomposition, verify_deborah, DeborahPoint, DiffusivityRow,
};
pub use fields::field_snapshot_check;
pub use pressurization::verify_undrained_pressurization;
pub use report::{Expected, VerificationReport};
pub use stress_path::stress_path_comparison;

use std::path::Path;

use crate::error::{Error, Result};
use crate::reasoning::scenario::ScenarioSpec;
use crate::solver::config::SolverConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Capillary,
    Pressurization,
    Deborah,
    StressPath,
    Fields,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "capillary" => Suite::Capillary,
            "pressurization" => Suite::Pressurization,
            "deborah" => Suite::Deborah,
            "stresspath" => Suite::StressPath,
            "fields" => Suite::Fields,
            other => return Err(Error::InvalidConfig(format!("unknown suite `{other}`"))),
        })
    }
}

/// Runs the selected suite(s); each scenario owns a subdirectory of
/// `out_root`.
pub fn run_suite(
    suite: Suite,
    scenario: &ScenarioSpec,
    config: &SolverConfig,
    out_root: &Path,
) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    let want = |s: Suite| suite == Suite::All || suite == s;

    if want(Suite::Capillary) {
        reports.push(verify_capillary(&out_root.join("capillary"))?);
    }
    if want(Suite::Pressurization) {
        reports.push(verify_undrained_pressurization(
            scenario,
            &out_root.join("pressurization"),
        )?);
    }
    if want(Suite::Deborah) {
        reports.push(verify_deborah(scenario, &out_root.join("deborah"))?);
    }
    if want(Suite::StressPath) {
        reports.push(stress_path_comparison(
            scenario,
            config,
            &out_root.join("stresspath"),
        )?);
    }
    if want(Suite::Fields) {
        reports.push(field_snapshot_check(
            scenario,
            config,
            scenario.loading.t_end_s,
            &out_root.join("fields"),
        )?);
    }
    Ok(reports)
}
