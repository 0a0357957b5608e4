//! Capillary-rise unit verification: the transient must converge to the
//! equilibrium height with no overshoot.

use std::fmt::Write as _;
use std::path::Path;

use crate::constitutive::capillary::{integrate_rise, TubeConfig};
use crate::error::{Error, Result};
use crate::harness::report::VerificationReport;
use crate::skills::registry::{SkillRegistry, DEFAULT_SKILL_FILE};

/// Tube parameters as carried by the retrieved capillary skill.
pub fn tube_from_registry(registry: &SkillRegistry) -> Result<TubeConfig> {
    let skill = registry
        .get("capillary_saturation")
        .ok_or_else(|| Error::Schema("registry lacks capillary_saturation".into()))?;
    let get = |symbol: &str| {
        skill
            .param(symbol)
            .ok_or_else(|| Error::Schema(format!("capillary skill lacks `{symbol}`")))
    };
    Ok(TubeConfig {
        r: get("r_tube")?,
        gamma: get("gamma")?,
        theta: get("theta")?,
        rho: get("rho")?,
        mu: get("mu")?,
        g: get("g")?,
    })
}

pub fn verify_capillary(out_dir: &Path) -> Result<VerificationReport> {
    let registry = SkillRegistry::from_json_str(DEFAULT_SKILL_FILE)?;
    let tube = tube_from_registry(&registry)?;
    let mut report = VerificationReport::new("capillary");

    let trace = integrate_rise(&tube, 1e-9, 80_000_000);
    let h_eq = tube.jurin_height();

    report.record("h_final_m", trace.h_final);
    report.expect(
        "h_final_m",
        0.2968,
        1.0e-3,
        "equilibrium height, Jurin's law",
    );
    report.record("jurin_height_m", h_eq);
    report.record("monotone", if trace.monotone { 1.0 } else { 0.0 });
    report.expect("monotone", 1.0, 0.0, "no overshoot along the transient");
    report.record("overshoot_fraction", trace.max_overshoot / h_eq);
    report.expect(
        "overshoot_fraction",
        0.0,
        1.0e-3,
        "overshoot under 0.1% of H",
    );

    // Homogeneity: doubling the surface tension doubles the equilibrium.
    let doubled = TubeConfig {
        gamma: 2.0 * tube.gamma,
        ..tube
    };
    let trace2 = integrate_rise(&doubled, 1e-9, 80_000_000);
    report.record("gamma_doubling_ratio", trace2.h_final / trace.h_final);
    report.expect(
        "gamma_doubling_ratio",
        2.0,
        2.0e-3,
        "Jurin homogeneity in gamma",
    );

    let mut csv = String::from("t_s,h_m\n");
    for (t, h) in &trace.samples {
        let _ = writeln!(csv, "{t:.6},{h:.8}");
    }
    report.write_artifact(out_dir, "fig3a.csv", &csv)?;

    report.finalize();
    report.write_report(out_dir)?;
    Ok(report)
}
