//! Character tables, unitary irreps and the base-group condition.

pub mod character;
pub mod condition;
pub mod irreps;

pub use character::{
    character_table, character_table_with, normalized_character, CharacterTable,
    CharacterTableDocument, IrrepCharacter, PlancherelDistribution, Tolerances,
};
pub use condition::{
    center_criterion, condition_check, condition_check_with_table, delta_set, verify_simple_delta,
    ConditionReport, InvolutionProfile, ProfileIrrep,
};
pub use irreps::{
    dihedral_irreps, isotypic_projector, match_to_table, regular_decomposition_irreps,
    unitary_irreps, MatrixRep, UnitaryIrrep, MAX_MATRIX_ORDER,
};
