//! Full reasoning pass on the reference scenario: assemble the causal graph
//! from the skill library, prune what the scenario rules out, classify the
//! hydraulic regime, complete the missing dissipation path, and print the
//! resulting model plan.

use mechcomplete::reasoning::{reason, ScenarioSpec};
use mechcomplete::skills::{SkillRegistry, DEFAULT_SKILL_FILE};

fn main() -> mechcomplete::Result<()> {
    let registry = SkillRegistry::from_json_str(DEFAULT_SKILL_FILE)?;
    let scenario = ScenarioSpec::rothbach();

    println!("skills in the registry:");
    for skill in registry.iter() {
        println!(
            "  {} [{}] {:?} -> {:?}",
            skill.id,
            skill.provenance,
            skill
                .inputs
                .iter()
                .map(|f| f.canonical_name())
                .collect::<Vec<_>>(),
            skill
                .outputs
                .iter()
                .map(|f| f.canonical_name())
                .collect::<Vec<_>>(),
        );
    }
    println!();

    let model = reason(&registry, &scenario)?;
    println!(
        "regime: {} (De = {:.3e} = tau_diff {:.3e} s / tau_load {:.3e} s)",
        model.report.regime, model.report.deborah, model.report.tau_diff, model.report.tau_load
    );
    println!();

    println!("causal graph after prune + completion:");
    for edge in &model.graph.edges {
        println!(
            "  [{}] {}: {} -> {}",
            edge.status, edge.skill_id, edge.from, edge.to
        );
        if !edge.reason.is_empty() {
            println!("        {}", edge.reason);
        }
    }
    println!();

    println!("model plan:");
    println!("  active skills: {}", model.plan.active_skills.join(", "));
    println!(
        "  pressure sources: {}",
        model.plan.pressure_source_terms.join(", ")
    );
    println!(
        "  pressure sinks: {}",
        model.plan.pressure_sink_terms.join(", ")
    );
    println!("  hydraulic bc: {}", model.plan.hydraulic_bc);
    Ok(())
}
