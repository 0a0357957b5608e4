//! Causal graph over field variables: assembly from the registry, deductive
//! pruning against the scenario, regime-driven mechanism completion, and a
//! deterministic DOT export.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reasoning::regime::{Regime, RegimeReport};
use crate::reasoning::scenario::ScenarioSpec;
use crate::skills::ontology::FieldId;
use crate::skills::registry::SkillRegistry;
use crate::skills::skill::{KernelRole, Provenance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeStatus {
    /// Retrieved skill, currently part of the model.
    Active,
    /// Ruled out for this scenario.
    Pruned,
    /// Intrinsic prior held in reserve.
    Latent,
    /// Intrinsic prior promoted into the model.
    Activated,
}

impl std::fmt::Display for EdgeStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EdgeStatus::Active => "active",
            EdgeStatus::Pruned => "pruned",
            EdgeStatus::Latent => "latent",
            EdgeStatus::Activated => "activated",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub skill_id: String,
    pub from: FieldId,
    pub to: FieldId,
    pub status: EdgeStatus,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CausalGraph {
    pub nodes: BTreeSet<FieldId>,
    /// Sorted by (skill_id, to) at assembly; order is stable thereafter.
    pub edges: Vec<Edge>,
}

impl CausalGraph {
    pub fn edge(&self, skill_id: &str, to: FieldId) -> Option<&Edge> {
        self.edges
            .iter()
            .find(|e| e.skill_id == skill_id && e.to == to)
    }

    pub fn edges_with_status(&self, status: EdgeStatus) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.status == status)
    }

    fn check_endpoints(&self) -> bool {
        self.edges
            .iter()
            .all(|e| self.nodes.contains(&e.from) && self.nodes.contains(&e.to))
    }
}

/// Builds the graph: one edge per (skill, output) pair whose inputs are all
/// reachable from the scenario-provided fields. Retrieved skills start
/// active, intrinsic skills start latent.
pub fn assemble_graph(registry: &SkillRegistry, scenario: &ScenarioSpec) -> Result<CausalGraph> {
    let mut reachable = scenario.provided_fields();

    // Fixpoint over skill connectivity.
    let mut usable: BTreeSet<&str> = BTreeSet::new();
    loop {
        let mut grew = false;
        for skill in registry.iter() {
            if usable.contains(skill.id.as_str()) {
                continue;
            }
            if skill.inputs.iter().all(|f| reachable.contains(f)) {
                usable.insert(skill.id.as_str());
                // A newly usable skill only matters to others through any
                // newly reachable output fields.
                for out in &skill.outputs {
                    if reachable.insert(*out) {
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }

    for skill in registry.iter() {
        if !usable.contains(skill.id.as_str()) {
            let missing = skill
                .inputs
                .iter()
                .find(|f| !reachable.contains(f))
                .copied()
                .expect("unusable skill has an unreachable input");
            return Err(Error::UnsatisfiableInput {
                skill: skill.id.clone(),
                field: missing.canonical_name().to_string(),
            });
        }
    }

    let mut nodes = scenario.provided_fields();
    let mut edges = Vec::new();
    for skill in registry.iter() {
        let status = match skill.provenance {
            Provenance::Retrieved => EdgeStatus::Active,
            Provenance::Intrinsic => EdgeStatus::Latent,
        };
        let from = skill
            .primary_input()
            .ok_or_else(|| Error::Schema(format!("skill `{}` has no inputs", skill.id)))?;
        for out in &skill.outputs {
            nodes.insert(from);
            nodes.insert(*out);
            edges.push(Edge {
                skill_id: skill.id.clone(),
                from,
                to: *out,
                status,
                reason: String::new(),
            });
        }
        for input in &skill.inputs {
            nodes.insert(*input);
        }
    }
    edges.sort_by(|a, b| (a.skill_id.as_str(), a.to).cmp(&(b.skill_id.as_str(), b.to)));

    let graph = CausalGraph { nodes, edges };
    debug_assert!(graph.check_endpoints());
    Ok(graph)
}

/// Deductive pruning: an active edge is pruned when its skill's applicability
/// predicate fails under the scenario, or when the scenario analytically
/// forces its output gradient to zero (full saturation kills the
/// capillary-pressure gradient).
pub fn prune(
    graph: &CausalGraph,
    registry: &SkillRegistry,
    scenario: &ScenarioSpec,
) -> Result<CausalGraph> {
    let mut out = graph.clone();
    for edge in &mut out.edges {
        if edge.status != EdgeStatus::Active {
            continue;
        }
        let skill = registry.get(&edge.skill_id).ok_or_else(|| {
            Error::Schema(format!("edge references unknown skill `{}`", edge.skill_id))
        })?;

        let mut reason: Option<String> = None;
        for predicate in &skill.applicability {
            if !predicate.eval(scenario)? {
                reason = Some(format!(
                    "applicability failed: {} — scenario has {} = {}",
                    predicate.describe(),
                    predicate.field,
                    crate::skills::skill::Applicability::scenario_value(predicate.field, scenario)?,
                ));
                break;
            }
        }
        if reason.is_none()
            && edge.to == FieldId::CapillaryPressure
            && (scenario.initial.saturation - 1.0).abs() <= 1e-9
        {
            reason = Some(
                "fully saturated scenario (saturation = 1) forces a zero capillary-pressure gradient"
                    .to_string(),
            );
        }
        if let Some(reason) = reason {
            edge.status = EdgeStatus::Pruned;
            edge.reason = reason;
        }
    }
    Ok(out)
}

/// Inductive completion: when the regime allows drainage but no surviving
/// edge supplies a pressure sink, the latent intrinsic sink is activated.
/// The transitional band activates it as well (dissipation degrades
/// gracefully toward the undrained limit as k falls; omitting it cannot
/// recover drained behavior).
pub fn complete_mechanisms(
    graph: &CausalGraph,
    registry: &SkillRegistry,
    report: &RegimeReport,
) -> Result<CausalGraph> {
    let mut out = graph.clone();
    if report.regime == Regime::Undrained {
        return Ok(out);
    }

    let is_sink = |skill_id: &str| -> bool {
        registry
            .get(skill_id)
            .map(|s| s.kernel.role() == KernelRole::PressureSink)
            .unwrap_or(false)
    };

    let has_live_sink = out.edges.iter().any(|e| {
        matches!(e.status, EdgeStatus::Active | EdgeStatus::Activated) && is_sink(&e.skill_id)
    });
    if has_live_sink {
        return Ok(out);
    }

    let mut activated = false;
    for edge in &mut out.edges {
        if edge.status == EdgeStatus::Latent && is_sink(&edge.skill_id) {
            edge.status = EdgeStatus::Activated;
            edge.reason = match report.regime {
                Regime::Drained => format!(
                    "regime drained (De = {:.3e}) demands a dissipation path; intrinsic sink activated",
                    report.deborah
                ),
                Regime::Transitional => format!(
                    "regime transitional (De = {:.3e}); sink activated conservatively",
                    report.deborah
                ),
                Regime::Undrained => unreachable!(),
            };
            activated = true;
        }
    }
    if !activated {
        return Err(Error::MissingPrior {
            regime: report.regime.to_string(),
        });
    }
    Ok(out)
}

/// Deterministic DOT serialization. Edge colors follow the status legend:
/// dark blue for active retrieved paths, green for pruned, orange for
/// intrinsic (latent dashed, activated solid).
pub fn export_graph(graph: &CausalGraph) -> String {
    let mut out = String::new();
    out.push_str("digraph causal {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=ellipse, fontname=\"Helvetica\"];\n");
    for node in &graph.nodes {
        let _ = writeln!(out, "  \"{node}\";");
    }
    for edge in &graph.edges {
        let (color, style) = match edge.status {
            EdgeStatus::Active => ("darkblue", "solid"),
            EdgeStatus::Pruned => ("green", "dashed"),
            EdgeStatus::Latent => ("orange", "dotted"),
            EdgeStatus::Activated => ("orange", "solid"),
        };
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{} [{}]\", color={}, style={}];",
            edge.from, edge.to, edge.skill_id, edge.status, color, style
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reasoning::regime::{compute_regime, RegimeThresholds};
    use crate::skills::registry::{intrinsic_priors, SkillRegistry, DEFAULT_SKILL_FILE};
    use crate::skills::skill::{ConstitutiveSkill, KernelId};

    fn default_registry() -> SkillRegistry {
        SkillRegistry::from_json_str(DEFAULT_SKILL_FILE).unwrap()
    }

    fn paper_scenario() -> ScenarioSpec {
        ScenarioSpec::rothbach()
    }

    #[test]
    fn assembly_statuses_follow_provenance() {
        let graph = assemble_graph(&default_registry(), &paper_scenario()).unwrap();
        assert_eq!(
            graph
                .edge("thermal_pressurization", FieldId::PorePressure)
                .unwrap()
                .status,
            EdgeStatus::Active
        );
        assert_eq!(
            graph
                .edge("capillary_saturation", FieldId::CapillaryPressure)
                .unwrap()
                .status,
            EdgeStatus::Active
        );
        assert_eq!(
            graph
                .edge("darcy_flow", FieldId::PorePressure)
                .unwrap()
                .status,
            EdgeStatus::Latent
        );
    }

    #[test]
    fn intrinsic_only_registry_assembles_all_latent() {
        let reg = SkillRegistry::from_json_str("").unwrap();
        let graph = assemble_graph(&reg, &paper_scenario()).unwrap();
        assert!(graph.edges.iter().all(|e| e.status == EdgeStatus::Latent));
    }

    #[test]
    fn unreachable_input_is_an_error() {
        let mut skills = intrinsic_priors();
        skills.push(ConstitutiveSkill {
            id: "orphan".into(),
            kernel: KernelId::DarcySink,
            params: Default::default(),
            // fluid_flux has no producer in the default library.
            inputs: [FieldId::FluidFlux].into_iter().collect(),
            outputs: [FieldId::PorePressure].into_iter().collect(),
            applicability: vec![],
            provenance: crate::skills::skill::Provenance::Retrieved,
        });
        let reg = SkillRegistry::from_parts(skills).unwrap();
        let err = assemble_graph(&reg, &paper_scenario()).unwrap_err();
        assert!(matches!(
            err,
            Error::UnsatisfiableInput { ref skill, ref field }
                if skill == "orphan" && field == "fluid_flux"
        ));
    }

    #[test]
    fn saturated_scenario_prunes_capillary_with_reason() {
        let reg = default_registry();
        let scenario = paper_scenario();
        let graph = assemble_graph(&reg, &scenario).unwrap();
        let pruned = prune(&graph, &reg, &scenario).unwrap();
        let edge = pruned
            .edge("capillary_saturation", FieldId::CapillaryPressure)
            .unwrap();
        assert_eq!(edge.status, EdgeStatus::Pruned);
        assert!(edge.reason.contains("satur"), "reason: {}", edge.reason);
        // The pressurization law stays active for the saturated case.
        assert_eq!(
            pruned
                .edge("thermal_pressurization", FieldId::PorePressure)
                .unwrap()
                .status,
            EdgeStatus::Active
        );
    }

    #[test]
    fn partially_saturated_scenario_keeps_capillary() {
        let reg = default_registry();
        let mut scenario = paper_scenario();
        scenario.initial.saturation = 0.8;
        let graph = assemble_graph(&reg, &scenario).unwrap();
        let pruned = prune(&graph, &reg, &scenario).unwrap();
        assert_eq!(
            pruned
                .edge("capillary_saturation", FieldId::CapillaryPressure)
                .unwrap()
                .status,
            EdgeStatus::Active
        );
    }

    #[test]
    fn prune_without_predicates_is_identity() {
        let reg = SkillRegistry::from_json_str("").unwrap();
        let mut scenario = paper_scenario();
        scenario.initial.saturation = 0.8;
        let graph = assemble_graph(&reg, &scenario).unwrap();
        let pruned = prune(&graph, &reg, &scenario).unwrap();
        assert_eq!(graph, pruned);
    }

    #[test]
    fn prune_is_idempotent() {
        let reg = default_registry();
        let scenario = paper_scenario();
        let graph = assemble_graph(&reg, &scenario).unwrap();
        let once = prune(&graph, &reg, &scenario).unwrap();
        let twice = prune(&once, &reg, &scenario).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn drained_regime_activates_darcy() {
        let reg = default_registry();
        let scenario = paper_scenario();
        let report = compute_regime(&scenario, &RegimeThresholds::default()).unwrap();
        let graph = prune(&assemble_graph(&reg, &scenario).unwrap(), &reg, &scenario).unwrap();
        let completed = complete_mechanisms(&graph, &reg, &report).unwrap();
        let edge = completed.edge("darcy_flow", FieldId::PorePressure).unwrap();
        assert_eq!(edge.status, EdgeStatus::Activated);
        assert!(!edge.reason.is_empty());
        // Only the sink edge flips; other intrinsic paths stay latent.
        assert_eq!(
            completed
                .edge("arrhenius_viscosity", FieldId::FluidViscosity)
                .unwrap()
                .status,
            EdgeStatus::Latent
        );
    }

    #[test]
    fn undrained_regime_leaves_latent() {
        let reg = default_registry();
        let mut scenario = paper_scenario();
        scenario.material.permeability_m2 = 1.0e-20;
        let report = compute_regime(&scenario, &RegimeThresholds::default()).unwrap();
        let graph = prune(&assemble_graph(&reg, &scenario).unwrap(), &reg, &scenario).unwrap();
        let completed = complete_mechanisms(&graph, &reg, &report).unwrap();
        assert_eq!(
            completed
                .edge("darcy_flow", FieldId::PorePressure)
                .unwrap()
                .status,
            EdgeStatus::Latent
        );
    }

    #[test]
    fn missing_prior_error_without_intrinsics() {
        let reg = SkillRegistry::from_parts(
            default_registry()
                .iter()
                .filter(|s| s.provenance == crate::skills::skill::Provenance::Retrieved)
                .cloned()
                .collect(),
        )
        .unwrap();
        // Viscosity input is unreachable without the intrinsic producer, so
        // drop the saturated-law inputs down to scenario-provided fields only.
        let scenario = paper_scenario();
        let report = compute_regime(&scenario, &RegimeThresholds::default()).unwrap();
        let graph = assemble_graph(&reg, &scenario).unwrap();
        let pruned = prune(&graph, &reg, &scenario).unwrap();
        assert!(matches!(
            complete_mechanisms(&pruned, &reg, &report),
            Err(Error::MissingPrior { .. })
        ));
    }

    #[test]
    fn completion_is_idempotent() {
        let reg = default_registry();
        let scenario = paper_scenario();
        let report = compute_regime(&scenario, &RegimeThresholds::default()).unwrap();
        let graph = prune(&assemble_graph(&reg, &scenario).unwrap(), &reg, &scenario).unwrap();
        let once = complete_mechanisms(&graph, &reg, &report).unwrap();
        let twice = complete_mechanisms(&once, &reg, &report).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn export_contains_one_pruned_and_one_activated_edge() {
        let reg = default_registry();
        let scenario = paper_scenario();
        let report = compute_regime(&scenario, &RegimeThresholds::default()).unwrap();
        let graph = complete_mechanisms(
            &prune(&assemble_graph(&reg, &scenario).unwrap(), &reg, &scenario).unwrap(),
            &reg,
            &report,
        )
        .unwrap();
        let dot = export_graph(&graph);
        assert_eq!(dot.matches("[pruned]").count(), 1, "{dot}");
        assert_eq!(dot.matches("[activated]").count(), 1, "{dot}");
        assert!(dot.contains("color=darkblue"));
        assert!(dot.contains("color=green"));
        assert!(dot.contains("color=orange"));
    }

    #[test]
    fn export_empty_graph_is_valid() {
        let dot = export_graph(&CausalGraph::default());
        assert!(dot.starts_with("digraph causal {"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn export_is_deterministic() {
        let reg = default_registry();
        let scenario = paper_scenario();
        let graph = assemble_graph(&reg, &scenario).unwrap();
        assert_eq!(export_graph(&graph), export_graph(&graph));
    }
}
