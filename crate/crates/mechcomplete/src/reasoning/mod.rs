//! The reasoning pass: graph assembly from registry + scenario, deductive
//! pruning, Deborah-number regime classification, intrinsic mechanism
//! completion, and plan emission for the solver.

pub mod graph;
pub mod plan;
pub mod regime;
pub mod scenario;

pub use graph::{
    assemble_graph, complete_mechanisms, export_graph, prune, CausalGraph, Edge, EdgeStatus,
};
pub use plan::{emit_plan, HydraulicBc, ModelPlan};
pub use regime::{
    classify, compute_regime, deborah_number, Regime, RegimeReport, RegimeThresholds,
};
pub use scenario::{HydraulicBcChoice, ScenarioSpec, ROTHBACH_SCENARIO_TOML};

use crate::error::Result;
use crate::skills::registry::SkillRegistry;

/// Output of the full reasoning pass.
#[derive(Debug, Clone)]
pub struct ReasonedModel {
    pub report: RegimeReport,
    pub graph: CausalGraph,
    pub plan: ModelPlan,
}

/// Assemble, prune, classify, complete, and emit in one call.
pub fn reason(registry: &SkillRegistry, scenario: &ScenarioSpec) -> Result<ReasonedModel> {
    let thresholds = RegimeThresholds::default();
    let report = compute_regime(scenario, &thresholds)?;
    let graph = assemble_graph(registry, scenario)?;
    let graph = prune(&graph, registry, scenario)?;
    let graph = complete_mechanisms(&graph, registry, &report)?;
    let plan = emit_plan(&graph, registry, &report, scenario)?;
    Ok(ReasonedModel {
        report,
        graph,
        plan,
    })
}
