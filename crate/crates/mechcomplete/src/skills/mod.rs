//! Constitutive-skill schema, the canonical field ontology, and the registry
//! joining retrieved skill files with the built-in intrinsic priors.

pub mod ontology;
pub mod registry;
pub mod skill;

pub use ontology::{FieldId, Ontology};
pub use registry::{intrinsic_priors, SkillRegistry, DEFAULT_SKILL_FILE};
pub use skill::{
    expected_unit, Applicability, CmpOp, ConstitutiveSkill, KernelId, KernelRole, Param, Provenance,
};
