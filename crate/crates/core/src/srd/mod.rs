//! Parameter-level theory of strongly regular designs: spectra, the
//! expected intersection numbers, character tables, parameter extraction
//! from concrete configurations and bundled examples.

mod audit;
mod characters;
mod examples;
mod extract;
mod params;
mod spectrum;
pub mod symbolic;
mod tensor;

pub use audit::{audit_table, transcribed_table, AuditReport, Discrepancy};
pub use characters::{
    character_table, character_table_with, labeled_spectra, spectra, valid_labelings, CharacterRow,
    CharacterTable, LabeledSpectrum, Labeling,
};
pub use examples::{duads, gen_example, gq22_incidence, synthemes, ExampleName};
pub use extract::{extract_srd_params, incidence_designation, relabel_and_extract};
pub use params::{SrdParams, Srg};
pub use spectrum::{srg_spectrum, trace_residual, SrgParams};
pub use tensor::{
    derived_tensor_unchecked, expected_structure_constants, first_negative_entry, symbolic_tensor,
    symbolic_valencies, RELATION_BLOCKS, RELATION_TRANSPOSE,
};
