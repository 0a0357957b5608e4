//! Regime-aware mechanism completion for coupled thermo-hydro-mechanical
//! simulation of a heated, saturated rock cylinder.
//!
//! The pipeline has four layers:
//!
//! 1. [`skills`] — a registry of constitutive skills (governing-law kernels
//!    with input/output fields and applicability constraints) over a closed
//!    field ontology, joining a retrieved skill file with built-in intrinsic
//!    priors (Darcy flow, heat conduction, Arrhenius-type viscosity).
//! 2. [`reasoning`] — assembles a causal graph from registry + scenario,
//!    prunes inapplicable mechanisms, classifies the hydraulic regime through
//!    the Deborah number (fluid-diffusion time over loading time), completes
//!    missing dissipation paths, and emits a [`reasoning::ModelPlan`].
//! 3. [`constitutive`] — the evaluation kernels: Modified Cam-Clay plasticity
//!    with closest-point return mapping and failure envelopes, Vogel
//!    viscosity, the thermal pressurization coefficient, hydraulic
//!    diffusivity, and capillary rise.
//! 4. [`solver`] — a 2D axisymmetric finite-difference engine running the
//!    staggered thermal -> hydraulic -> mechanical splitting under the
//!    emitted (or forced) plan.
//!
//! [`harness`] packages named verification scenarios with declared
//! tolerances, and [`cli`] exposes the pipeline as subcommands.
//!
//! ## Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release --example plan_pipeline
//! cargo run --release --example graph_export
//! cargo run --release --example run_comparison
//! cargo run --release --example capillary_rise
//! cargo run --release --example undrained_heating
//! cargo run --release --example deborah_sweep
//! cargo run --release --example diffusivity_decomposition
//! cargo run --release --example stress_path
//! cargo run --release --example field_snapshots
//! cargo run --release --example permeability_sweep
//! ```

pub mod cli;
pub mod constitutive;
pub mod error;
pub mod harness;
pub mod reasoning;
pub mod skills;
pub mod solver;

pub use error::{Error, Result};
