//! Runs the same heated-cylinder scenario under both plans and writes the
//! full outputs (trace CSV, snapshots, MANIFEST) for each.

use std::path::Path;

use mechcomplete::reasoning::{ModelPlan, ScenarioSpec};
use mechcomplete::solver::{run_with_plan, write_run_outputs, SolverConfig};

fn main() -> mechcomplete::Result<()> {
    let scenario = ScenarioSpec::rothbach();
    let config = SolverConfig::default();
    let out = Path::new("out/examples/run_comparison");

    for (name, plan) in [
        ("naive", ModelPlan::naive()),
        ("completed", ModelPlan::completed()),
    ] {
        let result = run_with_plan(&scenario, &config, &plan)?;
        let last = result.trace.last().unwrap();
        println!(
            "{name:9} -> {} at t = {:.1} s | p' = {:.2} MPa, mean u_w = {:.2} MPa, peak u_w = {:.2} MPa",
            result.outcome.verdict,
            result.outcome.t_final,
            last.p_eff_pa / 1e6,
            last.uw_mean_pa / 1e6,
            last.uw_max_pa / 1e6,
        );
        if let Some(t) = result.outcome.t_fail {
            println!("{name:9}    failure crossed at t = {t:.1} s");
        }
        let dir = out.join(name);
        write_run_outputs(&dir, &result)?;
        println!("{name:9}    outputs in {}", dir.display());
    }
    Ok(())
}
