//! Permeability sweep: one reasoned + solved run per value. The regime
//! column flips from drained to undrained as k falls, and failure verdicts
//! only appear on the undrained side.

use mechcomplete::reasoning::{reason, ScenarioSpec};
use mechcomplete::skills::{SkillRegistry, DEFAULT_SKILL_FILE};
use mechcomplete::solver::{run_with_plan, SolverConfig};

fn main() -> mechcomplete::Result<()> {
    let registry = SkillRegistry::from_json_str(DEFAULT_SKILL_FILE)?;
    let config = SolverConfig::default();

    println!(
        "{:>8} {:>12} {:>14} {:>16} {:>18}",
        "k (m^2)", "De", "regime", "final p' (MPa)", "verdict"
    );
    for exp in [14, 15, 16, 17, 18, 19, 20] {
        let mut scenario = ScenarioSpec::rothbach();
        scenario.material.permeability_m2 = 10f64.powi(-exp);
        let model = reason(&registry, &scenario)?;
        let result = run_with_plan(&scenario, &config, &model.plan)?;
        let last = result.trace.last().unwrap();
        println!(
            "{:>8.0e} {:>12.3e} {:>14} {:>16.2} {:>18}",
            scenario.material.permeability_m2,
            model.report.deborah,
            model.report.regime.to_string(),
            last.p_eff_pa / 1e6,
            result.outcome.verdict.to_string(),
        );
    }
    Ok(())
}
