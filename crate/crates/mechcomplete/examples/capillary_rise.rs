//! Capillary-rise unit verification: integrate the rise ODE until the rate
//! vanishes and compare against the equilibrium height from Jurin's law.

use std::path::Path;

use mechcomplete::harness::verify_capillary;

fn main() -> mechcomplete::Result<()> {
    let out = Path::new("out/examples/capillary_rise");
    let report = verify_capillary(out)?;
    print!("{}", report.render());
    println!("transient data: {}", out.join("fig3a.csv").display());
    Ok(())
}
