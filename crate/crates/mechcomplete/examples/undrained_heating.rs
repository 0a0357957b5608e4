//! Undrained heating of a 0D reduction (single cell, no-flux): the pressure
//! slope against temperature must reproduce B * Lambda from the closed form.

use std::path::Path;

use mechcomplete::harness::verify_undrained_pressurization;
use mechcomplete::reasoning::ScenarioSpec;

fn main() -> mechcomplete::Result<()> {
    let out = Path::new("out/examples/undrained_heating");
    let report = verify_undrained_pressurization(&ScenarioSpec::rothbach(), out)?;
    print!("{}", report.render());
    println!("evolution data: {}", out.join("fig3b.csv").display());
    Ok(())
}
