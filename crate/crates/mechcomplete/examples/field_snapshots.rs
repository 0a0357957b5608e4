//! Field snapshots of the completed run at the end of heating: temperature
//! front from the rim, pore pressure draining toward it.

use std::path::Path;

use mechcomplete::harness::field_snapshot_check;
use mechcomplete::reasoning::ScenarioSpec;
use mechcomplete::solver::SolverConfig;

fn main() -> mechcomplete::Result<()> {
    let scenario = ScenarioSpec::rothbach();
    let out = Path::new("out/examples/field_snapshots");
    let report = field_snapshot_check(
        &scenario,
        &SolverConfig::default(),
        scenario.loading.t_end_s,
        out,
    )?;
    print!("{}", report.render());
    println!("radial profiles: {}", out.join("fig6.csv").display());
    Ok(())
}
