//! Temperature-dependent fluid properties: Vogel viscosity, the thermal
//! pressurization coefficient, and hydraulic diffusivity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Valid temperature window for the liquid-water viscosity correlation.
pub const T_MIN_K: f64 = 273.15;
pub const T_MAX_K: f64 = 573.15;

/// Vogel correlation constants, mu = a * 10^(b / (T - c)).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VogelParams {
    pub a_pa_s: f64,
    pub b_k: f64,
    pub c_k: f64,
}

impl Default for VogelParams {
    fn default() -> Self {
        // Standard liquid-water fit, good to a few percent over 0-200 C.
        VogelParams {
            a_pa_s: 2.414e-5,
            b_k: 247.8,
            c_k: 140.0,
        }
    }
}

/// Fluid thermal-expansion model: constant, or a linear ramp about t_ref.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaFModel {
    pub base_per_k: f64,
    pub slope_per_k: f64,
    pub t_ref_k: f64,
}

impl Default for AlphaFModel {
    fn default() -> Self {
        AlphaFModel {
            base_per_k: 3.0e-4,
            slope_per_k: 0.0,
            t_ref_k: 298.15,
        }
    }
}

/// Fluid and pore-space constants entering the pressure balance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FluidModel {
    /// Fluid compressibility (1/Pa).
    pub c_f: f64,
    /// Solid-skeleton expansion coefficient (1/K).
    pub alpha_s: f64,
    /// Pore compressibility (1/Pa).
    pub c_phi: f64,
    pub viscosity: VogelParams,
    pub alpha_f: AlphaFModel,
}

impl Default for FluidModel {
    fn default() -> Self {
        FluidModel {
            c_f: 4.0e-10,
            alpha_s: 3.3e-5,
            c_phi: 2.0e-11,
            viscosity: VogelParams::default(),
            alpha_f: AlphaFModel::default(),
        }
    }
}

impl FluidModel {
    /// Dynamic viscosity of the pore fluid at temperature `t_k`.
    pub fn viscosity(&self, t_k: f64) -> Result<f64> {
        if !(T_MIN_K..=T_MAX_K).contains(&t_k) {
            return Err(Error::OutOfRange {
                quantity: "temperature",
                value: t_k,
                lo: T_MIN_K,
                hi: T_MAX_K,
            });
        }
        debug_assert!(t_k > self.viscosity.c_k, "singularity guard");
        let v = &self.viscosity;
        Ok(v.a_pa_s * 10f64.powf(v.b_k / (t_k - v.c_k)))
    }

    /// Fluid thermal-expansion coefficient at temperature `t_k`.
    pub fn alpha_f(&self, t_k: f64) -> f64 {
        let m = &self.alpha_f;
        m.base_per_k * (1.0 + m.slope_per_k * (t_k - m.t_ref_k))
    }

    /// Thermal pressurization coefficient (Pa/K) at temperature `t_k`:
    /// the differential expansion of fluid against skeleton divided by the
    /// combined compressibility of fluid and pore space.
    pub fn lambda_tp(&self, t_k: f64) -> Result<f64> {
        let alpha_f = self.alpha_f(t_k);
        if alpha_f <= self.alpha_s {
            return Err(Error::NegativeCoefficient {
                alpha_f,
                alpha_s: self.alpha_s,
            });
        }
        Ok((alpha_f - self.alpha_s) / (self.c_f + self.c_phi))
    }
}

/// Hydraulic diffusivity c_hyd = k / (mu * S_s), in m^2/s.
pub fn hydraulic_diffusivity(k_m2: f64, mu_pa_s: f64, s_s_per_pa: f64) -> f64 {
    debug_assert!(k_m2 > 0.0 && mu_pa_s > 0.0 && s_s_per_pa > 0.0);
    k_m2 / (mu_pa_s * s_s_per_pa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel_err(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn viscosity_at_room_temperature() {
        let fluid = FluidModel::default();
        let mu = fluid.viscosity(298.15).unwrap();
        // Frozen: 2.414e-5 * 10^(247.8/158.15)
        assert!(rel_err(mu, 8.9044e-4) < 1e-4, "mu = {mu}");
        // Water sanity band.
        assert!((8.0e-4..=1.0e-3).contains(&mu));
    }

    #[test]
    fn viscosity_at_200c() {
        let fluid = FluidModel::default();
        let mu = fluid.viscosity(473.15).unwrap();
        assert!(rel_err(mu, 1.33828e-4) < 1e-4, "mu = {mu}");
    }

    #[test]
    fn viscosity_rejects_out_of_range() {
        let fluid = FluidModel::default();
        assert!(matches!(
            fluid.viscosity(250.0),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            fluid.viscosity(600.0),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn lambda_tp_with_table_defaults() {
        let fluid = FluidModel::default();
        let lam = fluid.lambda_tp(298.15).unwrap();
        // Frozen: (3.0e-4 - 3.3e-5) / (4.0e-10 + 2.0e-11)
        assert!(rel_err(lam, 635714.2857142857) < 1e-12, "lambda = {lam}");
    }

    #[test]
    fn lambda_tp_degenerate_boundary() {
        let fluid = FluidModel {
            alpha_f: AlphaFModel {
                base_per_k: 3.3e-5,
                ..Default::default()
            },
            ..Default::default()
        };
        assert!(matches!(
            fluid.lambda_tp(298.15),
            Err(Error::NegativeCoefficient { .. })
        ));
    }

    #[test]
    fn lambda_tp_homogeneity_in_compressibilities() {
        let base = FluidModel::default();
        let doubled = FluidModel {
            c_f: 2.0 * base.c_f,
            c_phi: 2.0 * base.c_phi,
            ..base
        };
        let l1 = base.lambda_tp(298.15).unwrap();
        let l2 = doubled.lambda_tp(298.15).unwrap();
        assert!(rel_err(l2, l1 / 2.0) < 1e-12);
    }

    #[test]
    fn diffusivity_example() {
        let c = hydraulic_diffusivity(1e-16, 8.9e-4, 1.28e-10);
        assert!(rel_err(c, 8.77809e-4) < 1e-4, "c_hyd = {c}");
    }

    #[test]
    fn diffusivity_halving_mu_doubles() {
        let c1 = hydraulic_diffusivity(1e-16, 8.9e-4, 1.28e-10);
        let c2 = hydraulic_diffusivity(1e-16, 4.45e-4, 1.28e-10);
        assert!(rel_err(c2, 2.0 * c1) < 1e-12);
    }

    #[test]
    fn diffusivity_ratio_cancels_to_viscosity_ratio() {
        let fluid = FluidModel::default();
        let t0 = 298.15;
        for t in [323.15, 373.15, 437.15, 473.15] {
            let mu0 = fluid.viscosity(t0).unwrap();
            let mu = fluid.viscosity(t).unwrap();
            let ratio = hydraulic_diffusivity(1e-16, mu, 1.28e-10)
                / hydraulic_diffusivity(1e-16, mu0, 1.28e-10);
            assert!(rel_err(ratio, mu0 / mu) < 1e-12);
        }
    }

    proptest! {
        /// mu strictly decreasing over the valid range.
        #[test]
        fn viscosity_strictly_decreasing(t in 273.15f64..573.0) {
            let fluid = FluidModel::default();
            let dt = 0.1;
            let lo = fluid.viscosity(t).unwrap();
            let hi = fluid.viscosity((t + dt).min(T_MAX_K)).unwrap();
            prop_assert!(hi < lo);
        }
    }
}
