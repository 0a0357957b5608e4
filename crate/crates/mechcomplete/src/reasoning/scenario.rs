//! Simulation scenario: geometry, material constants, fluid models, initial
//! state and loading program. Loaded from a TOML (or JSON) file with explicit
//! units in the key names.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constitutive::fluid::{AlphaFModel, FluidModel, VogelParams};
use crate::constitutive::mcc::MccParams;
use crate::error::{Error, Result};
use crate::skills::ontology::FieldId;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Geometry {
    pub radius_m: f64,
    pub height_m: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialParams {
    pub critical_state_slope: f64,
    pub preconsolidation_pa: f64,
    pub compression_index: f64,
    pub recompression_index: f64,
    pub void_ratio: f64,
    pub poisson_ratio: f64,
    pub permeability_m2: f64,
    pub fluid_compressibility_per_pa: f64,
    pub solid_compressibility_per_pa: f64,
    pub specific_storage_per_pa: f64,
    pub thermal_conductivity_w_per_m_k: f64,
    pub heat_capacity_j_per_kg_k: f64,
    pub solid_expansion_per_k: f64,
    pub thermal_diffusivity_m2_per_s: f64,
    /// Slope of the Hvorslev line (dq/dp'); kept with the material constants.
    #[serde(default = "default_hvorslev_slope")]
    pub hvorslev_slope: f64,
}

fn default_hvorslev_slope() -> f64 {
    0.70
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViscosityModelKind {
    Vogel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaFModelKind {
    Constant,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FluidSpec {
    pub viscosity_model: ViscosityModelKind,
    #[serde(default = "default_vogel_a")]
    pub vogel_a_pa_s: f64,
    #[serde(default = "default_vogel_b")]
    pub vogel_b_k: f64,
    #[serde(default = "default_vogel_c")]
    pub vogel_c_k: f64,
    pub alpha_f_model: AlphaFModelKind,
    #[serde(default = "default_alpha_f")]
    pub alpha_f_per_k: f64,
    /// Relative slope of the optional linear alpha_f ramp (per K).
    #[serde(default)]
    pub alpha_f_slope_per_k: f64,
    /// Pore compressibility; defaults to the solid compressibility.
    #[serde(default)]
    pub pore_compressibility_per_pa: Option<f64>,
    /// Relative slope of an optional linear storage law S_s(T); zero keeps
    /// the storage constant. Feeds the diffusivity decomposition only.
    #[serde(default)]
    pub s_s_temp_slope_per_k: f64,
}

fn default_vogel_a() -> f64 {
    2.414e-5
}
fn default_vogel_b() -> f64 {
    247.8
}
fn default_vogel_c() -> f64 {
    140.0
}
fn default_alpha_f() -> f64 {
    3.0e-4
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialState {
    pub mean_effective_stress_pa: f64,
    pub deviatoric_stress_pa: f64,
    pub pore_pressure_pa: f64,
    pub temperature_k: f64,
    pub saturation: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Loading {
    pub heating_rate_k_per_s: f64,
    pub t_end_s: f64,
    pub sigma_radial_pa: f64,
    pub sigma_axial_pa: f64,
    /// Boundary-temperature cap; the ramp holds once it is reached.
    #[serde(default = "default_t_bnd_max")]
    pub boundary_temperature_max_k: f64,
}

fn default_t_bnd_max() -> f64 {
    473.15
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HydraulicBcChoice {
    /// Let the reasoning pass pick drained vs no-flux.
    Auto,
    Drained,
    NoFlux,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HydraulicSpec {
    pub bc: HydraulicBcChoice,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    pub geometry: Geometry,
    pub material: MaterialParams,
    pub fluid: FluidSpec,
    pub initial: InitialState,
    pub loading: Loading,
    pub hydraulic: HydraulicSpec,
    /// Drainage-path length for the timescale analysis; defaults to the
    /// specimen radius.
    #[serde(default)]
    pub characteristic_length_m: Option<f64>,
}

/// Shipped scenario file for the heated-sandstone reference case.
pub const ROTHBACH_SCENARIO_TOML: &str = include_str!("../../data/scenario_rothbach.toml");

impl ScenarioSpec {
    /// The heated saturated sandstone reference scenario.
    pub fn rothbach() -> Self {
        let spec: ScenarioSpec =
            toml::from_str(ROTHBACH_SCENARIO_TOML).expect("embedded scenario parses");
        spec.validate().expect("embedded scenario is valid");
        spec
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let spec: ScenarioSpec = if path.extension().and_then(|e| e.to_str()) == Some("json") {
            serde_json::from_str(&text)
                .map_err(|e| Error::InvalidScenario(format!("{}: {e}", path.display())))?
        } else {
            toml::from_str(&text)
                .map_err(|e| Error::InvalidScenario(format!("{}: {e}", path.display())))?
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string_pretty(self).expect("scenario serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidScenario(msg));

        let positive: [(&str, f64); 16] = [
            ("geometry.radius_m", self.geometry.radius_m),
            ("geometry.height_m", self.geometry.height_m),
            (
                "material.critical_state_slope",
                self.material.critical_state_slope,
            ),
            (
                "material.preconsolidation_pa",
                self.material.preconsolidation_pa,
            ),
            (
                "material.compression_index",
                self.material.compression_index,
            ),
            (
                "material.recompression_index",
                self.material.recompression_index,
            ),
            ("material.void_ratio", self.material.void_ratio),
            ("material.permeability_m2", self.material.permeability_m2),
            (
                "material.fluid_compressibility_per_pa",
                self.material.fluid_compressibility_per_pa,
            ),
            (
                "material.solid_compressibility_per_pa",
                self.material.solid_compressibility_per_pa,
            ),
            (
                "material.specific_storage_per_pa",
                self.material.specific_storage_per_pa,
            ),
            (
                "material.thermal_conductivity_w_per_m_k",
                self.material.thermal_conductivity_w_per_m_k,
            ),
            (
                "material.heat_capacity_j_per_kg_k",
                self.material.heat_capacity_j_per_kg_k,
            ),
            (
                "material.thermal_diffusivity_m2_per_s",
                self.material.thermal_diffusivity_m2_per_s,
            ),
            ("initial.temperature_k", self.initial.temperature_k),
            ("loading.t_end_s", self.loading.t_end_s),
        ];
        for (name, value) in positive {
            if value <= 0.0 || !value.is_finite() {
                return fail(format!("{name} must be strictly positive, got {value}"));
            }
        }

        let non_negative = [
            (
                "initial.mean_effective_stress_pa",
                self.initial.mean_effective_stress_pa,
            ),
            (
                "initial.deviatoric_stress_pa",
                self.initial.deviatoric_stress_pa,
            ),
            ("initial.pore_pressure_pa", self.initial.pore_pressure_pa),
            ("loading.sigma_radial_pa", self.loading.sigma_radial_pa),
            ("loading.sigma_axial_pa", self.loading.sigma_axial_pa),
            (
                "loading.heating_rate_k_per_s",
                self.loading.heating_rate_k_per_s,
            ),
        ];
        for (name, value) in non_negative {
            if value < 0.0 || !value.is_finite() {
                return fail(format!("{name} must be non-negative, got {value}"));
            }
        }

        if !(0.0..=1.0).contains(&self.initial.saturation) {
            return fail(format!(
                "initial.saturation must lie in [0, 1], got {}",
                self.initial.saturation
            ));
        }
        if self.material.compression_index <= self.material.recompression_index {
            return fail("material compression index must exceed recompression index".into());
        }
        if !(0.0 < self.material.poisson_ratio && self.material.poisson_ratio < 0.5) {
            return fail("material.poisson_ratio must be in (0, 0.5)".into());
        }

        // Effective-stress consistency: p'_0 = (sigma_a + 2 sigma_r)/3 - u_w0
        // within 1%.
        let p_total = (self.loading.sigma_axial_pa + 2.0 * self.loading.sigma_radial_pa) / 3.0;
        let p_eff_implied = p_total - self.initial.pore_pressure_pa;
        let p_eff = self.initial.mean_effective_stress_pa;
        if (p_eff - p_eff_implied).abs() > 0.01 * p_eff.abs().max(1.0) {
            return fail(format!(
                "initial mean effective stress {p_eff} Pa inconsistent with totals \
                 (implied {p_eff_implied} Pa differs by more than 1%)"
            ));
        }
        Ok(())
    }

    /// Fields whose values the scenario provides directly; graph assembly
    /// treats these as the reachability roots.
    pub fn provided_fields(&self) -> std::collections::BTreeSet<FieldId> {
        [
            FieldId::Temperature,
            FieldId::PorePressure,
            FieldId::Saturation,
            FieldId::EffectiveStress,
            FieldId::DeviatoricStress,
            FieldId::PreconsolidationPressure,
            FieldId::Porosity,
        ]
        .into_iter()
        .collect()
    }

    pub fn characteristic_length(&self) -> f64 {
        self.characteristic_length_m
            .unwrap_or(self.geometry.radius_m)
    }

    pub fn mcc_params(&self) -> MccParams {
        MccParams {
            m: self.material.critical_state_slope,
            lambda_c: self.material.compression_index,
            kappa_c: self.material.recompression_index,
            e0: self.material.void_ratio,
            nu: self.material.poisson_ratio,
            p_c0: self.material.preconsolidation_pa,
            hvorslev_slope: self.material.hvorslev_slope,
        }
    }

    pub fn fluid_model(&self) -> FluidModel {
        FluidModel {
            c_f: self.material.fluid_compressibility_per_pa,
            alpha_s: self.material.solid_expansion_per_k,
            c_phi: self
                .fluid
                .pore_compressibility_per_pa
                .unwrap_or(self.material.solid_compressibility_per_pa),
            viscosity: VogelParams {
                a_pa_s: self.fluid.vogel_a_pa_s,
                b_k: self.fluid.vogel_b_k,
                c_k: self.fluid.vogel_c_k,
            },
            alpha_f: AlphaFModel {
                base_per_k: self.fluid.alpha_f_per_k,
                slope_per_k: match self.fluid.alpha_f_model {
                    AlphaFModelKind::Constant => 0.0,
                    AlphaFModelKind::Linear => self.fluid.alpha_f_slope_per_k,
                },
                t_ref_k: self.initial.temperature_k,
            },
        }
    }

    /// Mean total stress (sigma_axial + 2 sigma_radial) / 3.
    pub fn mean_total_stress(&self) -> f64 {
        (self.loading.sigma_axial_pa + 2.0 * self.loading.sigma_radial_pa) / 3.0
    }

    /// Deviatoric total stress sigma_axial - sigma_radial.
    pub fn deviatoric_total_stress(&self) -> f64 {
        self.loading.sigma_axial_pa - self.loading.sigma_radial_pa
    }

    /// Boundary temperature at time `t`: linear ramp, held at the cap.
    pub fn boundary_temperature(&self, t: f64) -> f64 {
        (self.initial.temperature_k + self.loading.heating_rate_k_per_s * t)
            .min(self.loading.boundary_temperature_max_k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rothbach_defaults_are_valid() {
        let s = ScenarioSpec::rothbach();
        assert_eq!(s.geometry.radius_m, 0.025);
        assert_eq!(s.material.permeability_m2, 1.0e-16);
        assert_eq!(s.initial.pore_pressure_pa, 4.0e6);
        assert_eq!(s.mean_total_stress(), 50.0e6);
        assert_eq!(s.deviatoric_total_stress(), 15.0e6);
        assert_eq!(s.boundary_temperature(175.0), 473.15);
        assert_eq!(s.boundary_temperature(200.0), 473.15);
    }

    #[test]
    fn toml_round_trip_preserves_scenario() {
        let s = ScenarioSpec::rothbach();
        let text = s.to_toml_string();
        let back: ScenarioSpec = toml::from_str(&text).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn saturation_out_of_range_rejected() {
        let mut s = ScenarioSpec::rothbach();
        s.initial.saturation = 1.2;
        assert!(matches!(s.validate(), Err(Error::InvalidScenario(_))));
    }

    #[test]
    fn negative_permeability_rejected() {
        let mut s = ScenarioSpec::rothbach();
        s.material.permeability_m2 = -1.0e-16;
        assert!(matches!(s.validate(), Err(Error::InvalidScenario(_))));
    }

    #[test]
    fn inconsistent_effective_stress_rejected() {
        let mut s = ScenarioSpec::rothbach();
        s.initial.mean_effective_stress_pa = 40.0e6; // implied is 46 MPa
        assert!(matches!(s.validate(), Err(Error::InvalidScenario(_))));
    }
}
