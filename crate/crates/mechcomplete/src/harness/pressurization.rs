//! Undrained pressurization unit verification: the 0D reduction's pressure
//! slope against temperature must equal B * Lambda from the independent
//! closed form.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::Result;
use crate::harness::report::VerificationReport;
use crate::reasoning::plan::ModelPlan;
use crate::reasoning::scenario::ScenarioSpec;
use crate::solver::config::SolverConfig;
use crate::solver::runner::run_with_plan;

fn zero_d_config() -> SolverConfig {
    SolverConfig {
        nr: 1,
        nz: 1,
        ..SolverConfig::default()
    }
}

pub fn verify_undrained_pressurization(
    scenario: &ScenarioSpec,
    out_dir: &Path,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("pressurization");
    let config = zero_d_config();

    let result = run_with_plan(scenario, &config, &ModelPlan::naive())?;
    let first = result.trace.first().unwrap();
    let last = result.trace.last().unwrap();

    // Slope against the cell's own temperature; exact for a constant
    // expansion coefficient regardless of the thermal lag.
    let slope = (last.uw_mean_pa - first.uw_mean_pa) / (last.t_center_k - first.t_center_k);
    let fluid = scenario.fluid_model();
    let b_lambda = config.b_skempton * fluid.lambda_tp(scenario.initial.temperature_k)?;

    report.record("slope_pa_per_k", slope);
    report.record("b_lambda_pa_per_k", b_lambda);
    report.record(
        "slope_vs_b_lambda_rel_err",
        (slope - b_lambda).abs() / b_lambda,
    );
    report.expect(
        "slope_vs_b_lambda_rel_err",
        0.0,
        1.0e-3,
        "internal consistency of the 0D reduction",
    );
    // Frozen oracle: (3.0e-4 - 3.3e-5)/(4.0e-10 + 2.0e-11) = 0.6357 MPa/K.
    report.expect(
        "slope_pa_per_k",
        0.636e6,
        0.005 * 0.636e6,
        "pressurization coefficient, closed form",
    );

    // Zero heating produces zero pressure change.
    let mut still = scenario.clone();
    still.loading.heating_rate_k_per_s = 0.0;
    let still_run = run_with_plan(&still, &config, &ModelPlan::naive())?;
    let du_max = still_run
        .trace
        .iter()
        .map(|row| (row.uw_mean_pa - still.initial.pore_pressure_pa).abs())
        .fold(0.0, f64::max);
    report.record("du_without_heating_pa", du_max);
    report.expect(
        "du_without_heating_pa",
        0.0,
        1.0e-9,
        "no source without heating",
    );

    let mut csv = String::from("t_s,T_C,uw_MPa\n");
    for row in &result.trace {
        let _ = writeln!(
            csv,
            "{:.3},{:.4},{:.6}",
            row.t_s,
            row.t_center_k - 273.15,
            row.uw_mean_pa / 1e6
        );
    }
    report.write_artifact(out_dir, "fig3b.csv", &csv)?;

    report.finalize();
    report.write_report(out_dir)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pressurization_verification_passes() {
        let dir = std::env::temp_dir().join("mc_harness_pressurization");
        let _ = std::fs::remove_dir_all(&dir);
        let report = verify_undrained_pressurization(&ScenarioSpec::rothbach(), &dir).unwrap();
        assert!(report.passed, "{}", report.render());
        // Internal consistency is near machine precision.
        assert!(report.measured["slope_vs_b_lambda_rel_err"] < 1e-9);
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn corrupted_coefficient_fails_the_frozen_check() {
        let dir = std::env::temp_dir().join("mc_harness_pressurization_neg");
        let _ = std::fs::remove_dir_all(&dir);
        let mut scenario = ScenarioSpec::rothbach();
        // Halve the fluid expansion: the slope internal consistency still
        // holds, but the frozen closed-form target is missed.
        scenario.fluid.alpha_f_per_k = 1.5e-4;
        let report = verify_undrained_pressurization(&scenario, &dir).unwrap();
        assert!(!report.passed);
        let _ = std::fs::remove_dir_all(&dir);
    }
}
