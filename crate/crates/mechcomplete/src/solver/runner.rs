//! Time loop: thermal -> hydraulic -> mechanical per step, with trace rows,
//! snapshot capture, and early halt on a sticky failure verdict.

use crate::constitutive::fluid::FluidModel;
use crate::constitutive::mcc::{FailureMode, MccParams, MccState};
use crate::error::Result;
use crate::reasoning::plan::ModelPlan;
use crate::reasoning::scenario::ScenarioSpec;
use crate::solver::config::SolverConfig;
use crate::solver::grid::AxiGrid;
use crate::solver::hydraulic::{apply_pressurization, implicit_darcy_solve};
use crate::solver::mechanical::mechanical_step;
use crate::solver::state::{FieldState, Snapshot};
use crate::solver::thermal::thermal_step;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub t_s: f64,
    pub p_eff_pa: f64,
    pub q_pa: f64,
    pub uw_mean_pa: f64,
    pub uw_max_pa: f64,
    pub t_center_k: f64,
    pub t_rim_k: f64,
    pub verdict: FailureMode,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunOutcome {
    pub verdict: FailureMode,
    pub t_final: f64,
    /// Crossing time of the first non-safe verdict, when any.
    pub t_fail: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct RunResult {
    pub trace: Vec<TraceRow>,
    pub snapshots: Vec<Snapshot>,
    pub outcome: RunOutcome,
    /// Total SOR sweeps spent in the implicit hydraulic solves.
    pub sweeps_total: usize,
}

pub struct Simulation {
    scenario: ScenarioSpec,
    config: SolverConfig,
    grid: AxiGrid,
    fluid: FluidModel,
    mcc: MccParams,
    state: FieldState,
    source_on: bool,
    sink_on: bool,
    drained_boundary: bool,
    t_fail: Option<f64>,
    sweeps_total: usize,
}

impl Simulation {
    pub fn new(scenario: &ScenarioSpec, config: &SolverConfig, plan: &ModelPlan) -> Result<Self> {
        scenario.validate()?;
        config.validate()?;
        let grid = AxiGrid::new(
            config.nr,
            config.nz,
            scenario.geometry.radius_m,
            scenario.geometry.height_m,
        );
        let mcc = scenario.mcc_params();
        mcc.validate()?;
        let stress = MccState {
            p_eff: scenario.initial.mean_effective_stress_pa,
            q: scenario.initial.deviatoric_stress_pa,
            p_c: scenario.material.preconsolidation_pa,
            eps_v_p: 0.0,
        };
        let state = FieldState::uniform(
            &grid,
            scenario.initial.temperature_k,
            scenario.initial.pore_pressure_pa,
            stress,
        );
        Ok(Simulation {
            scenario: scenario.clone(),
            config: config.clone(),
            fluid: scenario.fluid_model(),
            mcc,
            grid,
            state,
            source_on: !plan.pressure_source_terms.is_empty(),
            sink_on: plan.has_sink(),
            drained_boundary: plan.hydraulic_bc == crate::reasoning::plan::HydraulicBc::Drained,
            t_fail: None,
            sweeps_total: 0,
        })
    }

    /// Resumes from an existing field state (must match the grid size).
    pub fn from_state(
        scenario: &ScenarioSpec,
        config: &SolverConfig,
        plan: &ModelPlan,
        state: FieldState,
    ) -> Result<Self> {
        let mut sim = Self::new(scenario, config, plan)?;
        assert_eq!(state.temperature.len(), sim.grid.n_cells());
        sim.state = state;
        Ok(sim)
    }

    pub fn state(&self) -> &FieldState {
        &self.state
    }

    pub fn grid(&self) -> &AxiGrid {
        &self.grid
    }

    pub fn snapshot(&self) -> Snapshot {
        let t_bnd = self.scenario.boundary_temperature(self.state.t);
        let u_bnd = self
            .drained_boundary
            .then_some(self.scenario.initial.pore_pressure_pa);
        Snapshot::capture(&self.state, &self.grid, t_bnd, u_bnd)
    }

    fn trace_row(&self) -> TraceRow {
        TraceRow {
            t_s: self.state.t,
            p_eff_pa: self.state.stress.p_eff,
            q_pa: self.state.stress.q,
            uw_mean_pa: self.grid.weighted_mean(&self.state.u_w),
            uw_max_pa: self.state.u_w_max(),
            t_center_k: self.state.temperature[self.grid.idx(0, self.grid.nz / 2)],
            t_rim_k: self.scenario.boundary_temperature(self.state.t),
            verdict: self.state.verdict.state,
        }
    }

    /// Advances the state by `dt` (thermal, hydraulic, mechanical in order).
    pub fn step(&mut self, dt: f64) -> Result<TraceRow> {
        let t0 = self.state.t;
        let prev_temp = self.state.temperature.clone();

        thermal_step(
            &mut self.state.temperature,
            &self.grid,
            dt,
            self.scenario.material.thermal_diffusivity_m2_per_s,
            t0,
            &|t| self.scenario.boundary_temperature(t),
        );
        let d_temp: Vec<f64> = self
            .state
            .temperature
            .iter()
            .zip(&prev_temp)
            .map(|(new, old)| new - old)
            .collect();

        if self.source_on {
            apply_pressurization(
                &mut self.state.u_w,
                &self.state.temperature,
                &d_temp,
                self.config.b_skempton,
                &self.fluid,
            )?;
        }
        if self.sink_on {
            self.sweeps_total += implicit_darcy_solve(
                &mut self.state.u_w,
                &self.state.temperature,
                &self.grid,
                dt,
                self.scenario.material.permeability_m2,
                self.scenario.material.specific_storage_per_pa,
                &self.fluid,
                self.drained_boundary
                    .then_some(self.scenario.initial.pore_pressure_pa),
                self.config.hyd_tol_pa,
                self.config.hyd_max_sweeps,
            )?;
        }

        let u_mean = self.grid.weighted_mean(&self.state.u_w);
        let u_max = self.state.u_w_max();
        let update = mechanical_step(
            &self.state.stress,
            self.scenario.mean_total_stress(),
            self.scenario.deviatoric_total_stress(),
            u_mean,
            u_max,
            &self.mcc,
            &self.config.return_map_config(),
        )?;

        self.state.t = t0 + dt;
        self.state.stress = update.stress;
        if self.state.verdict.is_safe() {
            self.state.verdict = update.verdict;
            if !update.verdict.is_safe() {
                self.t_fail = Some(self.state.t);
            }
        }
        Ok(self.trace_row())
    }

    /// Runs to the scenario's end time (or the first failure), capturing
    /// snapshots at the configured times (default: the final time).
    pub fn run(&mut self) -> Result<RunResult> {
        let t_end = self.scenario.loading.t_end_s;
        let mut wanted: Vec<f64> = if self.config.snapshot_times_s.is_empty() {
            vec![t_end]
        } else {
            self.config.snapshot_times_s.clone()
        };
        wanted.sort_by(f64::total_cmp);

        let mut trace = vec![self.trace_row()];
        let mut snapshots = Vec::new();
        let mut next_snap = 0;

        while self.state.t < t_end - 1e-9 {
            let dt = self.config.dt.min(t_end - self.state.t);
            let t_before = self.state.t;
            let row = self.step(dt)?;
            trace.push(row);

            while next_snap < wanted.len() && wanted[next_snap] <= self.state.t + 1e-9 {
                if wanted[next_snap] > t_before - 1e-9 {
                    snapshots.push(self.snapshot());
                }
                next_snap += 1;
            }

            if !self.state.verdict.is_safe() {
                // Halt; keep a terminal snapshot at the crossing time.
                if snapshots.last().map(|s: &Snapshot| s.t_s) != Some(self.state.t) {
                    snapshots.push(self.snapshot());
                }
                break;
            }
        }

        Ok(RunResult {
            trace,
            snapshots,
            outcome: RunOutcome {
                verdict: self.state.verdict.state,
                t_final: self.state.t,
                t_fail: self.t_fail,
            },
            sweeps_total: self.sweeps_total,
        })
    }
}

/// Convenience wrapper: build and run in one call.
pub fn run_with_plan(
    scenario: &ScenarioSpec,
    config: &SolverConfig,
    plan: &ModelPlan,
) -> Result<RunResult> {
    Simulation::new(scenario, config, plan)?.run()
}
