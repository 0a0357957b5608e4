//! Effective stress paths of the naive and completed models against the
//! failure envelopes: the headline divergence between a false fracture
//! prediction and a stable endpoint.

use std::path::Path;

use mechcomplete::harness::stress_path_comparison;
use mechcomplete::reasoning::ScenarioSpec;
use mechcomplete::solver::SolverConfig;

fn main() -> mechcomplete::Result<()> {
    let out = Path::new("out/examples/stress_path");
    let report = stress_path_comparison(&ScenarioSpec::rothbach(), &SolverConfig::default(), out)?;
    print!("{}", report.render());
    println!("paths: {}", out.join("fig5.csv").display());
    println!("envelopes: {}", out.join("fig5_envelopes.csv").display());
    Ok(())
}
