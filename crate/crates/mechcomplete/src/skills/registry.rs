//! Skill registry: loads retrieved skills from a JSON file and always joins
//! them with the built-in intrinsic priors. Immutable after load.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::skills::ontology::{FieldId, Ontology};
use crate::skills::skill::{
    expected_unit, Applicability, CmpOp, ConstitutiveSkill, KernelId, Param, Provenance,
};

/// Default retrieved-skill file for the heated-sandstone scenario.
pub const DEFAULT_SKILL_FILE: &str = include_str!("../../data/skills.json");

#[derive(Debug, Deserialize)]
struct SkillFile {
    skills: Vec<SkillEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SkillEntry {
    id: String,
    kernel: String,
    #[serde(default)]
    params: BTreeMap<String, ParamEntry>,
    inputs: Vec<String>,
    outputs: Vec<String>,
    #[serde(default)]
    applicability: Vec<PredicateEntry>,
    provenance: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamEntry {
    value: f64,
    unit: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PredicateEntry {
    predicate: String,
    field: String,
    op: String,
    value: f64,
}

fn parse_kernel(name: &str) -> Result<KernelId> {
    Ok(match name {
        "thermal_pressurization" => KernelId::ThermalPressurization,
        "capillary_rise" => KernelId::CapillaryRise,
        "darcy_sink" => KernelId::DarcySink,
        "heat_diffusion" => KernelId::HeatDiffusion,
        "vogel_viscosity" => KernelId::VogelViscosity,
        other => return Err(Error::Schema(format!("unknown kernel `{other}`"))),
    })
}

fn parse_op(op: &str) -> Result<CmpOp> {
    Ok(match op {
        "==" => CmpOp::Eq,
        "!=" => CmpOp::Ne,
        "<" => CmpOp::Lt,
        "<=" => CmpOp::Le,
        ">" => CmpOp::Gt,
        ">=" => CmpOp::Ge,
        other => return Err(Error::Schema(format!("unknown comparison op `{other}`"))),
    })
}

/// Registry of constitutive skills keyed by id, plus the field ontology.
#[derive(Debug, Clone)]
pub struct SkillRegistry {
    skills: BTreeMap<String, ConstitutiveSkill>,
    ontology: Ontology,
}

impl SkillRegistry {
    /// Loads a skill file and joins it with the intrinsic priors.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text)
    }

    /// Same as [`SkillRegistry::load`] but from an in-memory document.
    /// An empty document yields the intrinsic priors alone.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let ontology = Ontology::builtin();
        let entries: Vec<SkillEntry> = if text.trim().is_empty() {
            Vec::new()
        } else {
            let file: SkillFile = serde_json::from_str(text)
                .map_err(|e| Error::Schema(format!("skill file: {e}")))?;
            file.skills
        };

        let mut skills: BTreeMap<String, ConstitutiveSkill> = BTreeMap::new();
        for prior in intrinsic_priors() {
            skills.insert(prior.id.clone(), prior);
        }
        for entry in entries {
            let skill = convert_entry(entry, &ontology)?;
            if skills.contains_key(&skill.id) {
                return Err(Error::DuplicateId(skill.id));
            }
            skill.validate()?;
            skills.insert(skill.id.clone(), skill);
        }
        Ok(SkillRegistry { skills, ontology })
    }

    /// Builds a registry from explicit skills without injecting the intrinsic
    /// priors. Intended for tests and for probing degraded configurations.
    pub fn from_parts(skills: Vec<ConstitutiveSkill>) -> Result<Self> {
        let ontology = Ontology::builtin();
        let mut map = BTreeMap::new();
        for skill in skills {
            skill.validate()?;
            if map.insert(skill.id.clone(), skill.clone()).is_some() {
                return Err(Error::DuplicateId(skill.id));
            }
        }
        Ok(SkillRegistry {
            skills: map,
            ontology,
        })
    }

    pub fn ontology(&self) -> &Ontology {
        &self.ontology
    }

    pub fn get(&self, id: &str) -> Option<&ConstitutiveSkill> {
        self.skills.get(id)
    }

    pub fn len(&self) -> usize {
        self.skills.len()
    }

    pub fn is_empty(&self) -> bool {
        self.skills.is_empty()
    }

    /// All skills in id order.
    pub fn iter(&self) -> impl Iterator<Item = &ConstitutiveSkill> {
        self.skills.values()
    }

    /// All skills whose outputs contain `field`, sorted by id.
    pub fn query_by_output(&self, field: FieldId) -> Vec<&ConstitutiveSkill> {
        self.skills
            .values()
            .filter(|s| s.outputs.contains(&field))
            .collect()
    }
}

fn convert_entry(entry: SkillEntry, ontology: &Ontology) -> Result<ConstitutiveSkill> {
    let kernel = parse_kernel(&entry.kernel)?;
    let provenance = match entry.provenance.as_str() {
        "retrieved" => Provenance::Retrieved,
        "intrinsic" => Provenance::Intrinsic,
        other => {
            return Err(Error::Schema(format!(
                "skill `{}`: unknown provenance `{other}`",
                entry.id
            )))
        }
    };

    let mut params = BTreeMap::new();
    for (symbol, p) in entry.params {
        let expected = expected_unit(&symbol).ok_or_else(|| {
            Error::Schema(format!(
                "skill `{}`: unknown parameter `{symbol}`",
                entry.id
            ))
        })?;
        if p.unit != expected {
            return Err(Error::Schema(format!(
                "skill `{}`: parameter `{symbol}` has unit `{}`, expected `{expected}`",
                entry.id, p.unit
            )));
        }
        params.insert(
            symbol,
            Param {
                value: p.value,
                unit_checked: true,
            },
        );
    }

    let inputs = entry
        .inputs
        .iter()
        .map(|name| ontology.canonicalize(name))
        .collect::<Result<_>>()?;
    let outputs = entry
        .outputs
        .iter()
        .map(|name| ontology.canonicalize(name))
        .collect::<Result<_>>()?;

    let applicability = entry
        .applicability
        .into_iter()
        .map(|p| {
            Ok(Applicability {
                predicate: p.predicate,
                field: ontology.canonicalize(&p.field)?,
                op: parse_op(&p.op)?,
                value: p.value,
            })
        })
        .collect::<Result<_>>()?;

    Ok(ConstitutiveSkill {
        id: entry.id,
        kernel,
        params,
        inputs,
        outputs,
        applicability,
        provenance,
    })
}

fn param(value: f64) -> Param {
    Param {
        value,
        unit_checked: true,
    }
}

/// The built-in intrinsic priors standing in for latent physical knowledge:
/// Darcy flow, heat conduction, and the Arrhenius-type viscosity law. These
/// are code-registered constants, present in every registry.
pub fn intrinsic_priors() -> Vec<ConstitutiveSkill> {
    vec![
        ConstitutiveSkill {
            id: "darcy_flow".into(),
            kernel: KernelId::DarcySink,
            params: BTreeMap::new(),
            inputs: [FieldId::FluidViscosity].into_iter().collect(),
            outputs: [FieldId::PorePressure].into_iter().collect(),
            applicability: vec![],
            provenance: Provenance::Intrinsic,
        },
        ConstitutiveSkill {
            id: "heat_conduction".into(),
            kernel: KernelId::HeatDiffusion,
            params: BTreeMap::new(),
            inputs: [FieldId::Temperature].into_iter().collect(),
            outputs: [FieldId::ThermalStrain].into_iter().collect(),
            applicability: vec![],
            provenance: Provenance::Intrinsic,
        },
        ConstitutiveSkill {
            id: "arrhenius_viscosity".into(),
            kernel: KernelId::VogelViscosity,
            params: [
                ("a".to_string(), param(2.414e-5)),
                ("b".to_string(), param(247.8)),
                ("c".to_string(), param(140.0)),
            ]
            .into_iter()
            .collect(),
            inputs: [FieldId::Temperature].into_iter().collect(),
            outputs: [FieldId::FluidViscosity].into_iter().collect(),
            applicability: vec![],
            provenance: Provenance::Intrinsic,
        },
    ]
}
