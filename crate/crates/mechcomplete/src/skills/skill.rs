//! Constitutive skill schema: a governing-law kernel bundled with its
//! interaction manifold and applicability constraints.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reasoning::scenario::ScenarioSpec;
use crate::skills::ontology::FieldId;

/// Identifies one of the built-in evaluation kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelId {
    /// Pore-pressure rise from differential thermal expansion (source term).
    ThermalPressurization,
    /// Capillary rise dynamics toward the Jurin equilibrium height.
    CapillaryRise,
    /// Darcy diffusion of pore pressure toward a drainage boundary (sink term).
    DarcySink,
    /// Conductive heat transport through the specimen.
    HeatDiffusion,
    /// Arrhenius-type (Vogel) temperature dependence of liquid viscosity.
    VogelViscosity,
}

/// How a kernel participates in the pore-pressure balance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelRole {
    PressureSource,
    PressureSink,
    Transport,
    Property,
}

impl KernelId {
    pub fn role(self) -> KernelRole {
        match self {
            KernelId::ThermalPressurization => KernelRole::PressureSource,
            KernelId::DarcySink => KernelRole::PressureSink,
            KernelId::HeatDiffusion => KernelRole::Transport,
            KernelId::CapillaryRise | KernelId::VogelViscosity => KernelRole::Property,
        }
    }

    /// Parameter symbols the kernel reads from the skill's parameter map.
    /// Intrinsic transport kernels resolve their constants from the scenario.
    pub fn required_params(self) -> &'static [&'static str] {
        match self {
            KernelId::ThermalPressurization => &["alpha_f", "alpha_s", "c_f", "c_phi"],
            KernelId::CapillaryRise => &["gamma", "theta", "r_tube", "rho", "mu", "g"],
            KernelId::DarcySink => &[],
            KernelId::HeatDiffusion => &[],
            KernelId::VogelViscosity => &["a", "b", "c"],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            KernelId::ThermalPressurization => "thermal_pressurization",
            KernelId::CapillaryRise => "capillary_rise",
            KernelId::DarcySink => "darcy_sink",
            KernelId::HeatDiffusion => "heat_diffusion",
            KernelId::VogelViscosity => "vogel_viscosity",
        }
    }
}

impl fmt::Display for KernelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Fixed SI unit expected for each parameter symbol.
pub fn expected_unit(symbol: &str) -> Option<&'static str> {
    Some(match symbol {
        "alpha_f" | "alpha_s" => "1/K",
        "c_f" | "c_phi" | "s_s" => "1/Pa",
        "k" => "m^2",
        "alpha_th" => "m^2/s",
        "a" | "mu" => "Pa.s",
        "b" | "c" => "K",
        "gamma" => "N/m",
        "theta" => "rad",
        "r_tube" => "m",
        "rho" => "kg/m^3",
        "g" => "m/s^2",
        _ => return None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Retrieved,
    Intrinsic,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Retrieved => "retrieved",
            Provenance::Intrinsic => "intrinsic",
        })
    }
}

/// A parameter value with its declared unit string.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Param {
    pub value: f64,
    pub unit_checked: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CmpOp {
    #[serde(rename = "==")]
    Eq,
    #[serde(rename = "!=")]
    Ne,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl fmt::Display for CmpOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CmpOp::Eq => "==",
            CmpOp::Ne => "!=",
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Gt => ">",
            CmpOp::Ge => ">=",
        })
    }
}

const EQ_TOL: f64 = 1e-9;

/// One applicability constraint: the skill is valid only while the named
/// scenario quantity satisfies `field op value`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Applicability {
    /// Human-readable label for the constraint (used in pruning reasons).
    pub predicate: String,
    pub field: FieldId,
    pub op: CmpOp,
    pub value: f64,
}

impl Applicability {
    /// Scenario quantity addressed by an applicability predicate.
    pub fn scenario_value(field: FieldId, scenario: &ScenarioSpec) -> Result<f64> {
        match field {
            FieldId::Saturation => Ok(scenario.initial.saturation),
            FieldId::Temperature => Ok(scenario.initial.temperature_k),
            FieldId::PorePressure => Ok(scenario.initial.pore_pressure_pa),
            other => Err(Error::Schema(format!(
                "applicability predicate over `{other}` is not scenario-addressable"
            ))),
        }
    }

    pub fn eval(&self, scenario: &ScenarioSpec) -> Result<bool> {
        let lhs = Self::scenario_value(self.field, scenario)?;
        Ok(match self.op {
            CmpOp::Eq => (lhs - self.value).abs() <= EQ_TOL,
            CmpOp::Ne => (lhs - self.value).abs() > EQ_TOL,
            CmpOp::Lt => lhs < self.value,
            CmpOp::Le => lhs <= self.value,
            CmpOp::Gt => lhs > self.value,
            CmpOp::Ge => lhs >= self.value,
        })
    }

    pub fn describe(&self) -> String {
        format!(
            "{} ({} {} {})",
            self.predicate, self.field, self.op, self.value
        )
    }
}

/// A governing-law kernel with its input/output fields and validity domain.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstitutiveSkill {
    pub id: String,
    pub kernel: KernelId,
    pub params: BTreeMap<String, Param>,
    pub inputs: BTreeSet<FieldId>,
    pub outputs: BTreeSet<FieldId>,
    pub applicability: Vec<Applicability>,
    pub provenance: Provenance,
}

impl ConstitutiveSkill {
    /// Checks the schema invariants: disjoint manifold and a complete
    /// parameter map for the kernel.
    pub fn validate(&self) -> Result<()> {
        if let Some(shared) = self.inputs.intersection(&self.outputs).next() {
            return Err(Error::Schema(format!(
                "skill `{}`: field `{shared}` appears in both inputs and outputs",
                self.id
            )));
        }
        for symbol in self.kernel.required_params() {
            if !self.params.contains_key(*symbol) {
                return Err(Error::Schema(format!(
                    "skill `{}`: kernel `{}` requires parameter `{symbol}`",
                    self.id, self.kernel
                )));
            }
        }
        Ok(())
    }

    pub fn param(&self, symbol: &str) -> Option<f64> {
        self.params.get(symbol).map(|p| p.value)
    }

    /// The representative driving field for graph edges (first input in
    /// canonical order).
    pub fn primary_input(&self) -> Option<FieldId> {
        self.inputs.iter().next().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal_skill() -> ConstitutiveSkill {
        ConstitutiveSkill {
            id: "darcy_flow".into(),
            kernel: KernelId::DarcySink,
            params: BTreeMap::new(),
            inputs: [FieldId::FluidViscosity].into_iter().collect(),
            outputs: [FieldId::PorePressure].into_iter().collect(),
            applicability: vec![],
            provenance: Provenance::Intrinsic,
        }
    }

    #[test]
    fn disjoint_manifold_enforced() {
        let mut skill = minimal_skill();
        skill.outputs.insert(FieldId::FluidViscosity);
        assert!(matches!(skill.validate(), Err(Error::Schema(_))));
    }

    #[test]
    fn missing_kernel_param_rejected() {
        let mut skill = minimal_skill();
        skill.kernel = KernelId::VogelViscosity;
        assert!(matches!(skill.validate(), Err(Error::Schema(_))));
    }

    #[test]
    fn unit_table_covers_kernel_params() {
        for kernel in [
            KernelId::ThermalPressurization,
            KernelId::CapillaryRise,
            KernelId::DarcySink,
            KernelId::HeatDiffusion,
            KernelId::VogelViscosity,
        ] {
            for symbol in kernel.required_params() {
                assert!(expected_unit(symbol).is_some(), "no unit for {symbol}");
            }
        }
    }
}
