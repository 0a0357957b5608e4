//! Evaluation kernels for the governing laws: MCC plasticity with return
//! mapping and failure envelopes, temperature-dependent fluid properties and
//! the thermal pressurization coefficient, hydraulic diffusivity, and the
//! capillary-rise ODE used in unit verification.

pub mod capillary;
pub mod fluid;
pub mod mcc;

pub use capillary::{capillary_rise_step, integrate_rise, RiseTrace, TubeConfig};
pub use fluid::{hydraulic_diffusivity, AlphaFModel, FluidModel, VogelParams};
pub use mcc::{
    elastic_moduli, failure_check, hardening_update, hvorslev_q, return_map, yield_function,
    yield_tolerance, FailureMode, FailureVerdict, MccParams, MccState, ReturnMapConfig,
    ReturnOutcome,
};
