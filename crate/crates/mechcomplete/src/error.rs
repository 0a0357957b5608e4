//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A field name that is not in the closed ontology and has no alias.
    #[error("unknown field `{0}`: not a canonical field or registered alias")]
    UnknownField(String),

    /// Malformed skill file, bad unit string, missing kernel parameter, etc.
    #[error("schema error: {0}")]
    Schema(String),

    /// Two skills with the same id (including collision with an intrinsic prior).
    #[error("duplicate skill id `{0}`")]
    DuplicateId(String),

    /// A skill's input field has no producer and is not scenario-given.
    #[error("skill `{skill}` requires `{field}`, which no skill produces and the scenario does not provide")]
    UnsatisfiableInput { skill: String, field: String },

    /// The regime demands a dissipation sink but no latent sink skill exists.
    #[error("regime `{regime}` demands a pressure sink but the graph holds no latent sink skill")]
    MissingPrior { regime: String },

    /// Thermal pressurization coefficient would be non-positive.
    #[error("thermal pressurization coefficient non-positive: alpha_f = {alpha_f} <= alpha_s = {alpha_s}")]
    NegativeCoefficient { alpha_f: f64, alpha_s: f64 },

    /// Input outside a kernel's validity range.
    #[error("{quantity} = {value} outside valid range [{lo}, {hi}]")]
    OutOfRange {
        quantity: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// Return-map Newton iteration exhausted its budget.
    #[error("return map failed to converge within {iterations} iterations (residual {residual})")]
    NoConvergence { iterations: usize, residual: f64 },

    /// Implicit diffusion solve exhausted its sweep budget.
    #[error("implicit hydraulic solve: residual {residual} Pa after {sweeps} sweeps (tolerance {tolerance} Pa)")]
    LinearSolveFailure {
        sweeps: usize,
        residual: f64,
        tolerance: f64,
    },

    /// Scenario file violates a ScenarioSpec invariant.
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    /// CLI/config-level misuse (bad override path, inconsistent mode, ...).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
