//! Deborah number versus temperature for a family of permeabilities: the
//! regime map that decides whether the dissipation mechanism is needed.

use std::path::Path;

use mechcomplete::harness::{deborah_sweep, verify_deborah};
use mechcomplete::reasoning::ScenarioSpec;

fn main() -> mechcomplete::Result<()> {
    let scenario = ScenarioSpec::rothbach();

    // Compact console table at three temperatures.
    let k_family = [1e-14, 1e-15, 1e-16, 1e-17, 1e-18, 1e-20];
    let t_probe = [298.15, 373.15, 473.15];
    println!("De(k, T) with the regime per point:");
    println!(
        "{:>8} | {:>22} {:>22} {:>22}",
        "k (m^2)", "25 C", "100 C", "200 C"
    );
    for &k in &k_family {
        let points = deborah_sweep(&scenario, &[k], &t_probe)?;
        let cell = |i: usize| format!("{:.3e} ({})", points[i].deborah, points[i].regime);
        println!(
            "{k:>8.0e} | {:>22} {:>22} {:>22}",
            cell(0),
            cell(1),
            cell(2)
        );
    }
    println!();

    let out = Path::new("out/examples/deborah_sweep");
    let report = verify_deborah(&scenario, out)?;
    print!("{}", report.render());
    println!("sweep data: {}", out.join("fig4a.csv").display());
    Ok(())
}
