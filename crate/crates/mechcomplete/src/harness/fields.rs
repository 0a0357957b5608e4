//! Field-snapshot checks on the completed run: boundary fidelity and the
//! direction of the radial gradients at the snapshot time.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::harness::report::VerificationReport;
use crate::reasoning::plan::ModelPlan;
use crate::reasoning::scenario::ScenarioSpec;
use crate::solver::config::SolverConfig;
use crate::solver::runner::run_with_plan;

pub fn field_snapshot_check(
    scenario: &ScenarioSpec,
    config: &SolverConfig,
    snapshot_time_s: f64,
    out_dir: &Path,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("fields");

    let mut config = config.clone();
    config.snapshot_times_s = vec![snapshot_time_s];
    let result = run_with_plan(scenario, &config, &ModelPlan::completed())?;
    let snapshot = result
        .snapshots
        .iter()
        .find(|s| (s.t_s - snapshot_time_s).abs() < 1e-6)
        .ok_or_else(|| {
            Error::InvalidConfig(format!(
                "run ended at {:.1} s before the requested snapshot at {snapshot_time_s} s",
                result.outcome.t_final
            ))
        })?;

    let t_row = snapshot.mid_profile(&snapshot.temperature_k);
    let u_row = snapshot.mid_profile(&snapshot.u_w_pa);

    // Boundary fidelity: the rim column holds the applied values exactly.
    report.record("rim_uw_pa", *u_row.last().unwrap());
    report.expect(
        "rim_uw_pa",
        scenario.initial.pore_pressure_pa,
        0.0,
        "drainage boundary holds the initial pressure",
    );
    report.record("rim_t_c", t_row.last().unwrap() - 273.15);
    report.expect(
        "rim_t_c",
        scenario.boundary_temperature(snapshot_time_s) - 273.15,
        1.0e-9,
        "boundary ramp value at the snapshot time",
    );

    // Gradient directions: temperature falls rim -> core, pressure falls
    // core -> rim.
    let t_monotone = t_row.windows(2).all(|w| w[1] >= w[0] - 1e-9);
    report.record("t_monotone_in_r", if t_monotone { 1.0 } else { 0.0 });
    report.expect(
        "t_monotone_in_r",
        1.0,
        0.0,
        "conductive front advances inward",
    );

    let u_monotone = u_row.windows(2).all(|w| w[1] <= w[0] + 1e-9);
    report.record("uw_monotone_out_r", if u_monotone { 1.0 } else { 0.0 });
    report.expect("uw_monotone_out_r", 1.0, 0.0, "fluid drains toward the rim");

    let core_drop = u_row[0] - u_row.last().unwrap();
    report.record("core_minus_rim_uw_pa", core_drop);
    report.record("core_above_rim", if core_drop > 0.0 { 1.0 } else { 0.0 });
    report.expect(
        "core_above_rim",
        1.0,
        0.0,
        "strictly positive core-to-rim pressure drop",
    );

    let mut csv = String::from("r_m,T_C,uw_MPa\n");
    for ((r, t), u) in snapshot.r_m.iter().zip(t_row).zip(u_row) {
        let _ = writeln!(csv, "{:.6},{:.4},{:.6}", r, t - 273.15, u / 1e6);
    }
    report.write_artifact(out_dir, "fig6.csv", &csv)?;

    report.finalize();
    report.write_report(out_dir)?;
    Ok(report)
}
