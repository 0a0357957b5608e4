//! Model plan: the reasoning kernel's output telling the solver which
//! source/sink terms to assemble and which hydraulic boundary to apply.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reasoning::graph::{CausalGraph, EdgeStatus};
use crate::reasoning::regime::RegimeReport;
use crate::reasoning::scenario::{HydraulicBcChoice, ScenarioSpec};
use crate::skills::registry::SkillRegistry;
use crate::skills::skill::KernelRole;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HydraulicBc {
    Drained,
    NoFlux,
}

impl std::fmt::Display for HydraulicBc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HydraulicBc::Drained => "drained",
            HydraulicBc::NoFlux => "no_flux",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelPlan {
    /// Skills carried into the solver (active + activated), sorted.
    pub active_skills: Vec<String>,
    pub pressure_source_terms: Vec<String>,
    pub pressure_sink_terms: Vec<String>,
    pub hydraulic_bc: HydraulicBc,
    /// Human-readable pruning/completion rationales.
    pub notes: Vec<String>,
}

impl ModelPlan {
    pub fn has_sink(&self) -> bool {
        !self.pressure_sink_terms.is_empty()
    }

    /// The no-flux plan a literature-only reading produces: pressurization
    /// source, no dissipation path.
    pub fn naive() -> Self {
        ModelPlan {
            active_skills: vec!["thermal_pressurization".into()],
            pressure_source_terms: vec!["thermal_pressurization".into()],
            pressure_sink_terms: vec![],
            hydraulic_bc: HydraulicBc::NoFlux,
            notes: vec![],
        }
    }

    /// The completed plan: source plus the intrinsic dissipation sink under a
    /// drained boundary.
    pub fn completed() -> Self {
        ModelPlan {
            active_skills: vec!["darcy_flow".into(), "thermal_pressurization".into()],
            pressure_source_terms: vec!["thermal_pressurization".into()],
            pressure_sink_terms: vec!["darcy_flow".into()],
            hydraulic_bc: HydraulicBc::Drained,
            notes: vec![],
        }
    }
}

/// Compiles the completed graph into a plan. Pruned and latent edges are
/// never emitted; the boundary condition follows the sink unless the
/// scenario pins it explicitly.
pub fn emit_plan(
    graph: &CausalGraph,
    registry: &SkillRegistry,
    report: &RegimeReport,
    scenario: &ScenarioSpec,
) -> Result<ModelPlan> {
    let mut active_skills: Vec<String> = Vec::new();
    let mut sources: Vec<String> = Vec::new();
    let mut sinks: Vec<String> = Vec::new();
    let mut notes: Vec<String> = Vec::new();

    notes.push(format!(
        "regime {} (De = {:.3e}, tau_diff = {:.3e} s, tau_load = {:.3e} s)",
        report.regime, report.deborah, report.tau_diff, report.tau_load
    ));

    for edge in &graph.edges {
        match edge.status {
            EdgeStatus::Active | EdgeStatus::Activated => {
                let skill = registry.get(&edge.skill_id).ok_or_else(|| {
                    Error::Schema(format!("plan references unknown skill `{}`", edge.skill_id))
                })?;
                if !active_skills.contains(&edge.skill_id) {
                    active_skills.push(edge.skill_id.clone());
                    match skill.kernel.role() {
                        KernelRole::PressureSource => sources.push(edge.skill_id.clone()),
                        KernelRole::PressureSink => sinks.push(edge.skill_id.clone()),
                        _ => {}
                    }
                }
                if edge.status == EdgeStatus::Activated {
                    notes.push(format!("activated {}: {}", edge.skill_id, edge.reason));
                }
            }
            EdgeStatus::Pruned => {
                notes.push(format!("pruned {}: {}", edge.skill_id, edge.reason));
            }
            EdgeStatus::Latent => {}
        }
    }
    active_skills.sort();
    sources.sort();
    sinks.sort();

    let hydraulic_bc = match scenario.hydraulic.bc {
        HydraulicBcChoice::Auto => {
            if sinks.is_empty() {
                HydraulicBc::NoFlux
            } else {
                HydraulicBc::Drained
            }
        }
        HydraulicBcChoice::Drained => {
            notes.push("hydraulic bc pinned to drained by the scenario".into());
            HydraulicBc::Drained
        }
        HydraulicBcChoice::NoFlux => {
            notes.push("hydraulic bc pinned to no_flux by the scenario".into());
            HydraulicBc::NoFlux
        }
    };

    Ok(ModelPlan {
        active_skills,
        pressure_source_terms: sources,
        pressure_sink_terms: sinks,
        hydraulic_bc,
        notes,
    })
}
