//! 2D axisymmetric finite-difference engine executing the staggered
//! thermal -> hydraulic -> mechanical splitting under either the naive
//! (no-flux) or the completed (drained, Darcy sink) model plan.

pub mod config;
pub mod grid;
pub mod hydraulic;
pub mod mechanical;
pub mod output;
pub mod runner;
pub mod state;
pub mod thermal;

pub use config::{check_mode_plan, Mode, SolverConfig};
pub use grid::AxiGrid;
pub use output::{snapshot_pressure_file, snapshot_temperature_file, trace_csv, write_run_outputs};
pub use runner::{run_with_plan, RunOutcome, RunResult, Simulation, TraceRow};
pub use state::{FieldState, Snapshot};
