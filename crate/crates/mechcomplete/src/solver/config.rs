//! Solver configuration and run modes.

use serde::{Deserialize, Serialize};

use crate::constitutive::mcc::ReturnMapConfig;
use crate::error::{Error, Result};
use crate::reasoning::plan::ModelPlan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Use the plan the reasoning pass emits.
    Auto,
    /// Force the no-flux, source-only plan.
    Naive,
    /// Force the source + intrinsic-sink plan with a drained boundary.
    Completed,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Mode::Auto,
            "naive" => Mode::Naive,
            "completed" => Mode::Completed,
            other => return Err(Error::InvalidConfig(format!("unknown mode `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Operator-splitting time step (s).
    pub dt: f64,
    /// Skempton coefficient scaling the pressurization increment.
    pub b_skempton: f64,
    pub nr: usize,
    pub nz: usize,
    /// Residual max-norm tolerance of the implicit hydraulic solve (Pa).
    pub hyd_tol_pa: f64,
    /// Sweep budget of the implicit hydraulic solve.
    pub hyd_max_sweeps: usize,
    /// Return-map iteration budget.
    pub return_map_max_iter: usize,
    /// Times at which field snapshots are captured; empty means "at t_end".
    pub snapshot_times_s: Vec<f64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            dt: 0.5,
            b_skempton: 1.0,
            nr: 25,
            nz: 50,
            hyd_tol_pa: 1.0,
            hyd_max_sweeps: 10_000,
            return_map_max_iter: 50,
            snapshot_times_s: Vec::new(),
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dt <= 0.0 || !self.dt.is_finite() {
            return Err(Error::InvalidConfig("dt must be positive".into()));
        }
        if self.nr == 0 || self.nz == 0 {
            return Err(Error::InvalidConfig(
                "grid must have at least one cell".into(),
            ));
        }
        if !(self.b_skempton > 0.0 && self.b_skempton <= 1.0) {
            return Err(Error::InvalidConfig("Skempton B must lie in (0, 1]".into()));
        }
        Ok(())
    }

    pub fn return_map_config(&self) -> ReturnMapConfig {
        ReturnMapConfig {
            max_iter: self.return_map_max_iter,
        }
    }
}

/// A forced mode must agree with an explicitly supplied plan.
pub fn check_mode_plan(mode: Mode, plan: &ModelPlan) -> Result<()> {
    match mode {
        Mode::Auto => Ok(()),
        Mode::Naive if !plan.has_sink() => Ok(()),
        Mode::Completed if plan.has_sink() => Ok(()),
        _ => Err(Error::InvalidConfig(format!(
            "mode {mode:?} inconsistent with plan (sink terms: {:?})",
            plan.pressure_sink_terms
        ))),
    }
}
