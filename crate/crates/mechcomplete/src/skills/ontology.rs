//! Closed ontology of field variables and the canonicalization layer.
//!
//! The vocabulary is a fixed set of 11 state variables; raw names from skill
//! files are normalized (case, whitespace, separators) and resolved through an
//! alias table shipped as a data file. Unknown names are rejected, never
//! silently created.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Canonical field-variable identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldId {
    Temperature,
    PorePressure,
    EffectiveStress,
    Saturation,
    FluidViscosity,
    FluidFlux,
    CapillaryPressure,
    ThermalStrain,
    PreconsolidationPressure,
    DeviatoricStress,
    Porosity,
}

impl FieldId {
    pub const ALL: [FieldId; 11] = [
        FieldId::Temperature,
        FieldId::PorePressure,
        FieldId::EffectiveStress,
        FieldId::Saturation,
        FieldId::FluidViscosity,
        FieldId::FluidFlux,
        FieldId::CapillaryPressure,
        FieldId::ThermalStrain,
        FieldId::PreconsolidationPressure,
        FieldId::DeviatoricStress,
        FieldId::Porosity,
    ];

    pub fn canonical_name(self) -> &'static str {
        match self {
            FieldId::Temperature => "temperature",
            FieldId::PorePressure => "pore_pressure",
            FieldId::EffectiveStress => "effective_stress",
            FieldId::Saturation => "saturation",
            FieldId::FluidViscosity => "fluid_viscosity",
            FieldId::FluidFlux => "fluid_flux",
            FieldId::CapillaryPressure => "capillary_pressure",
            FieldId::ThermalStrain => "thermal_strain",
            FieldId::PreconsolidationPressure => "preconsolidation_pressure",
            FieldId::DeviatoricStress => "deviatoric_stress",
            FieldId::Porosity => "porosity",
        }
    }
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.canonical_name())
    }
}

/// Alias table over the closed vocabulary.
#[derive(Debug, Clone)]
pub struct Ontology {
    aliases: BTreeMap<String, FieldId>,
}

const ALIAS_TABLE: &str = include_str!("../../data/field_aliases.json");

/// Lowercase, trim, and collapse separator runs to a single underscore.
fn normalize(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    let mut prev_sep = true;
    for ch in raw.trim().chars() {
        if ch.is_whitespace() || ch == '-' || ch == '_' {
            if !prev_sep {
                out.push('_');
                prev_sep = true;
            }
        } else {
            for lc in ch.to_lowercase() {
                out.push(lc);
            }
            prev_sep = false;
        }
    }
    while out.ends_with('_') {
        out.pop();
    }
    out
}

impl Ontology {
    /// The built-in ontology: canonical names plus the shipped alias table.
    pub fn builtin() -> Self {
        let mut aliases = BTreeMap::new();
        for field in FieldId::ALL {
            aliases.insert(field.canonical_name().to_string(), field);
        }
        let table: BTreeMap<String, String> =
            serde_json::from_str(ALIAS_TABLE).expect("embedded alias table is valid JSON");
        for (alias, canon) in table {
            let field = aliases
                .get(canon.as_str())
                .copied()
                .expect("alias table targets a canonical field");
            aliases.insert(normalize(&alias), field);
        }
        Ontology { aliases }
    }

    /// Resolve a raw name to its canonical field id.
    ///
    /// Case- and whitespace-insensitive; returns `UnknownField` when nothing
    /// matches.
    pub fn canonicalize(&self, raw: &str) -> Result<FieldId> {
        self.aliases
            .get(&normalize(raw))
            .copied()
            .ok_or_else(|| Error::UnknownField(raw.to_string()))
    }
}

impl Default for Ontology {
    fn default() -> Self {
        Self::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pwp_resolves_to_pore_pressure() {
        let ont = Ontology::builtin();
        assert_eq!(ont.canonicalize("PWP").unwrap(), FieldId::PorePressure);
    }

    #[test]
    fn canonical_name_is_identity() {
        let ont = Ontology::builtin();
        assert_eq!(
            ont.canonicalize("pore_pressure").unwrap(),
            FieldId::PorePressure
        );
    }

    #[test]
    fn normalization_handles_case_and_whitespace() {
        let ont = Ontology::builtin();
        assert_eq!(
            ont.canonicalize("Temperature ").unwrap(),
            FieldId::Temperature
        );
        assert_eq!(
            ont.canonicalize("  Pore   Pressure").unwrap(),
            FieldId::PorePressure
        );
    }

    #[test]
    fn unknown_name_is_rejected() {
        let ont = Ontology::builtin();
        assert!(matches!(
            ont.canonicalize("entropy"),
            Err(Error::UnknownField(_))
        ));
    }

    #[test]
    fn every_canonical_field_resolves_to_itself() {
        let ont = Ontology::builtin();
        for field in FieldId::ALL {
            assert_eq!(ont.canonicalize(field.canonical_name()).unwrap(), field);
        }
    }

    proptest! {
        /// canonicalize(canonicalize(x)) == canonicalize(x) for any noisy
        /// rendering of a known alias.
        #[test]
        fn canonicalize_is_idempotent(idx in 0usize..11, pad in "[ \t]{0,3}", upper in any::<bool>()) {
            let ont = Ontology::builtin();
            let base = FieldId::ALL[idx].canonical_name();
            let noisy = if upper {
                format!("{pad}{}{pad}", base.to_uppercase())
            } else {
                format!("{pad}{base}{pad}")
            };
            let once = ont.canonicalize(&noisy).unwrap();
            let twice = ont.canonicalize(once.canonical_name()).unwrap();
            prop_assert_eq!(once, twice);
        }
    }
}
