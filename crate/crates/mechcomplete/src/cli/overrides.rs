//! Dotted-path parameter overrides (`material.k=1e-20`), validated against
//! the scenario/solver schema before a run.

use crate::error::{Error, Result};
use crate::reasoning::scenario::{HydraulicBcChoice, ScenarioSpec};
use crate::solver::config::SolverConfig;

fn parse_f64(path: &str, value: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .map_err(|_| Error::InvalidConfig(format!("override {path}: `{value}` is not a number")))
}

fn parse_usize(path: &str, value: &str) -> Result<usize> {
    value
        .parse::<usize>()
        .map_err(|_| Error::InvalidConfig(format!("override {path}: `{value}` is not an integer")))
}

/// Splits `path=value`.
pub fn split_assignment(raw: &str) -> Result<(&str, &str)> {
    raw.split_once('=')
        .map(|(p, v)| (p.trim(), v.trim()))
        .ok_or_else(|| {
            Error::InvalidConfig(format!("override `{raw}` is not of the form path=value"))
        })
}

/// Applies one override to the scenario or solver config.
pub fn apply_override(
    scenario: &mut ScenarioSpec,
    config: &mut SolverConfig,
    raw: &str,
) -> Result<()> {
    let (path, value) = split_assignment(raw)?;
    match path {
        "geometry.radius" => scenario.geometry.radius_m = parse_f64(path, value)?,
        "geometry.height" => scenario.geometry.height_m = parse_f64(path, value)?,

        "material.m" => scenario.material.critical_state_slope = parse_f64(path, value)?,
        "material.p_c0" => scenario.material.preconsolidation_pa = parse_f64(path, value)?,
        "material.lambda" => scenario.material.compression_index = parse_f64(path, value)?,
        "material.kappa" => scenario.material.recompression_index = parse_f64(path, value)?,
        "material.e0" => scenario.material.void_ratio = parse_f64(path, value)?,
        "material.nu" => scenario.material.poisson_ratio = parse_f64(path, value)?,
        "material.k" => scenario.material.permeability_m2 = parse_f64(path, value)?,
        "material.c_f" => scenario.material.fluid_compressibility_per_pa = parse_f64(path, value)?,
        "material.c_s" => scenario.material.solid_compressibility_per_pa = parse_f64(path, value)?,
        "material.s_s" => scenario.material.specific_storage_per_pa = parse_f64(path, value)?,
        "material.lambda_t" => {
            scenario.material.thermal_conductivity_w_per_m_k = parse_f64(path, value)?
        }
        "material.c_p" => scenario.material.heat_capacity_j_per_kg_k = parse_f64(path, value)?,
        "material.alpha_s" => scenario.material.solid_expansion_per_k = parse_f64(path, value)?,
        "material.alpha_th" => {
            scenario.material.thermal_diffusivity_m2_per_s = parse_f64(path, value)?
        }
        "material.hvorslev_slope" => scenario.material.hvorslev_slope = parse_f64(path, value)?,

        "fluid.alpha_f" => scenario.fluid.alpha_f_per_k = parse_f64(path, value)?,
        "fluid.alpha_f_slope" => scenario.fluid.alpha_f_slope_per_k = parse_f64(path, value)?,
        "fluid.c_phi" => scenario.fluid.pore_compressibility_per_pa = Some(parse_f64(path, value)?),
        "fluid.mu_a" => scenario.fluid.vogel_a_pa_s = parse_f64(path, value)?,
        "fluid.mu_b" => scenario.fluid.vogel_b_k = parse_f64(path, value)?,
        "fluid.mu_c" => scenario.fluid.vogel_c_k = parse_f64(path, value)?,
        "fluid.s_s_slope" => scenario.fluid.s_s_temp_slope_per_k = parse_f64(path, value)?,

        "initial.p_eff" => scenario.initial.mean_effective_stress_pa = parse_f64(path, value)?,
        "initial.q" => scenario.initial.deviatoric_stress_pa = parse_f64(path, value)?,
        "initial.u_w0" => scenario.initial.pore_pressure_pa = parse_f64(path, value)?,
        "initial.t0" => scenario.initial.temperature_k = parse_f64(path, value)?,
        "initial.s_r" => scenario.initial.saturation = parse_f64(path, value)?,

        "loading.heating_rate" => scenario.loading.heating_rate_k_per_s = parse_f64(path, value)?,
        "loading.t_end" => scenario.loading.t_end_s = parse_f64(path, value)?,
        "loading.sigma_radial" => scenario.loading.sigma_radial_pa = parse_f64(path, value)?,
        "loading.sigma_axial" => scenario.loading.sigma_axial_pa = parse_f64(path, value)?,
        "loading.t_bnd_max" => {
            scenario.loading.boundary_temperature_max_k = parse_f64(path, value)?
        }

        "hydraulic.bc" => {
            scenario.hydraulic.bc = match value {
                "auto" => HydraulicBcChoice::Auto,
                "drained" => HydraulicBcChoice::Drained,
                "no_flux" => HydraulicBcChoice::NoFlux,
                other => {
                    return Err(Error::InvalidConfig(format!(
                        "hydraulic.bc must be auto|drained|no_flux, got `{other}`"
                    )))
                }
            }
        }
        "characteristic_length" => scenario.characteristic_length_m = Some(parse_f64(path, value)?),

        "solver.dt" => config.dt = parse_f64(path, value)?,
        "solver.b" => config.b_skempton = parse_f64(path, value)?,
        "solver.nr" => config.nr = parse_usize(path, value)?,
        "solver.nz" => config.nz = parse_usize(path, value)?,
        "solver.hyd_tol" => config.hyd_tol_pa = parse_f64(path, value)?,
        "solver.hyd_max_sweeps" => config.hyd_max_sweeps = parse_usize(path, value)?,

        other => {
            return Err(Error::InvalidConfig(format!(
                "unknown override path `{other}`"
            )))
        }
    }
    Ok(())
}

/// Applies a batch of overrides and re-validates the result.
pub fn apply_all(
    scenario: &mut ScenarioSpec,
    config: &mut SolverConfig,
    sets: &[String],
) -> Result<()> {
    for raw in sets {
        apply_override(scenario, config, raw)?;
    }
    scenario.validate()?;
    config.validate()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permeability_override_applies() {
        let mut scenario = ScenarioSpec::rothbach();
        let mut config = SolverConfig::default();
        apply_all(&mut scenario, &mut config, &["material.k=1e-20".into()]).unwrap();
        assert_eq!(scenario.material.permeability_m2, 1e-20);
    }

    #[test]
    fn solver_paths_apply() {
        let mut scenario = ScenarioSpec::rothbach();
        let mut config = SolverConfig::default();
        apply_all(
            &mut scenario,
            &mut config,
            &["solver.dt=5.0".into(), "solver.nr=50".into()],
        )
        .unwrap();
        assert_eq!(config.dt, 5.0);
        assert_eq!(config.nr, 50);
    }

    #[test]
    fn unknown_path_rejected() {
        let mut scenario = ScenarioSpec::rothbach();
        let mut config = SolverConfig::default();
        assert!(matches!(
            apply_all(&mut scenario, &mut config, &["material.bogus=1".into()]),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn invalid_result_rejected_by_validation() {
        let mut scenario = ScenarioSpec::rothbach();
        let mut config = SolverConfig::default();
        assert!(apply_all(&mut scenario, &mut config, &["initial.s_r=1.5".into()]).is_err());
    }

    #[test]
    fn malformed_assignment_rejected() {
        let mut scenario = ScenarioSpec::rothbach();
        let mut config = SolverConfig::default();
        assert!(apply_all(&mut scenario, &mut config, &["material.k".into()]).is_err());
    }
}
