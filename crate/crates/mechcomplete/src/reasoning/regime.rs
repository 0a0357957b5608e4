//! Timescale competition analysis: fluid-diffusion time against thermal
//! loading time, classified through the Deborah number.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::reasoning::scenario::ScenarioSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Drained,
    Undrained,
    Transitional,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Drained => "drained",
            Regime::Undrained => "undrained",
            Regime::Transitional => "transitional",
        })
    }
}

/// Classification thresholds: a decade of margin on each side of De = 1
/// operationalizes "much less" / "much greater".
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeThresholds {
    pub de_lo: f64,
    pub de_hi: f64,
}

impl Default for RegimeThresholds {
    fn default() -> Self {
        RegimeThresholds {
            de_lo: 0.1,
            de_hi: 10.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    /// Characteristic fluid-diffusion time L^2 mu beta / k (s).
    pub tau_diff: f64,
    /// Loading timescale (s).
    pub tau_load: f64,
    /// De = tau_diff / tau_load.
    pub deborah: f64,
    pub regime: Regime,
    /// Storage coefficient used as beta (1/Pa).
    pub beta_used: f64,
}

pub fn classify(deborah: f64, thresholds: &RegimeThresholds) -> Regime {
    if deborah < thresholds.de_lo {
        Regime::Drained
    } else if deborah > thresholds.de_hi {
        Regime::Undrained
    } else {
        Regime::Transitional
    }
}

/// Deborah number for explicit inputs: De = L^2 mu beta / (k t_load).
pub fn deborah_number(
    length_m: f64,
    mu_pa_s: f64,
    beta_per_pa: f64,
    k_m2: f64,
    t_load_s: f64,
) -> f64 {
    length_m * length_m * mu_pa_s * beta_per_pa / (k_m2 * t_load_s)
}

/// Regime report for a scenario: L is the drainage-path length (specimen
/// radius by default), beta the specific storage, viscosity evaluated at the
/// initial temperature, and the loading duration as t_load.
pub fn compute_regime(
    scenario: &ScenarioSpec,
    thresholds: &RegimeThresholds,
) -> Result<RegimeReport> {
    let fluid = scenario.fluid_model();
    let mu = fluid.viscosity(scenario.initial.temperature_k)?;
    let beta = scenario.material.specific_storage_per_pa;
    let length = scenario.characteristic_length();
    let k = scenario.material.permeability_m2;
    let tau_load = scenario.loading.t_end_s;
    let tau_diff = length * length * mu * beta / k;
    let deborah = tau_diff / tau_load;
    Ok(RegimeReport {
        tau_diff,
        tau_load,
        deborah,
        regime: classify(deborah, thresholds),
        beta_used: beta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reasoning::scenario::ScenarioSpec;
    use proptest::prelude::*;

    fn rel_err(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn reference_scenario_is_drained() {
        let report =
            compute_regime(&ScenarioSpec::rothbach(), &RegimeThresholds::default()).unwrap();
        // Frozen: 0.025^2 * mu(298.15K) * 1.28e-10 / (1e-16 * 175) = 4.0706e-3.
        assert!(
            rel_err(report.deborah, 4.0706e-3) < 1e-3,
            "De = {}",
            report.deborah
        );
        assert_eq!(report.regime, Regime::Drained);
        assert!(rel_err(report.tau_diff, 0.71235) < 1e-3);
        assert_eq!(report.tau_load, 175.0);
        assert_eq!(report.deborah, report.tau_diff / report.tau_load);
    }

    #[test]
    fn low_permeability_is_undrained() {
        let mut s = ScenarioSpec::rothbach();
        s.material.permeability_m2 = 1.0e-20;
        let report = compute_regime(&s, &RegimeThresholds::default()).unwrap();
        assert!(
            rel_err(report.deborah, 40.706) < 1e-3,
            "De = {}",
            report.deborah
        );
        assert_eq!(report.regime, Regime::Undrained);
    }

    #[test]
    fn unity_deborah_is_transitional() {
        let mut s = ScenarioSpec::rothbach();
        // k chosen so that De = 1 exactly for the scenario's own viscosity.
        let fluid = s.fluid_model();
        let mu = fluid.viscosity(s.initial.temperature_k).unwrap();
        s.material.permeability_m2 =
            s.geometry.radius_m.powi(2) * mu * s.material.specific_storage_per_pa
                / s.loading.t_end_s;
        let report = compute_regime(&s, &RegimeThresholds::default()).unwrap();
        assert!(rel_err(report.deborah, 1.0) < 1e-12);
        assert_eq!(report.regime, Regime::Transitional);
    }

    proptest! {
        /// De falls with permeability and rises with viscosity, beta, L^2 and
        /// inverse loading time.
        #[test]
        fn deborah_monotonicity(
            k in 1e-20f64..1e-13,
            scale in 1.01f64..10.0,
        ) {
            let (l, mu, beta, t) = (0.025, 8.9e-4, 1.28e-10, 175.0);
            let base = deborah_number(l, mu, beta, k, t);
            prop_assert!(deborah_number(l, mu, beta, k * scale, t) < base);
            prop_assert!(deborah_number(l, mu * scale, beta, k, t) > base);
            prop_assert!(deborah_number(l, mu, beta * scale, k, t) > base);
            prop_assert!(deborah_number(l * scale, mu, beta, k, t) > base);
            prop_assert!(deborah_number(l, mu, beta, k, t * scale) < base);
        }

        /// Scaling both timescales by the same factor leaves the regime
        /// unchanged: De is a pure ratio.
        #[test]
        fn regime_invariant_under_common_scaling(
            tau_diff in 1e-3f64..1e4,
            tau_load in 1e-1f64..1e4,
            c in 1e-3f64..1e3,
        ) {
            let thresholds = RegimeThresholds::default();
            let r1 = classify(tau_diff / tau_load, &thresholds);
            let r2 = classify((c * tau_diff) / (c * tau_load), &thresholds);
            prop_assert_eq!(r1, r2);
        }
    }
}
