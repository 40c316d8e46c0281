//! The quantum cohomology ring in its Schubert basis, driven by a
//! multiplication table loaded from data.

mod element;
mod label;
mod table;
mod verify;

pub use element::SchubertElement;
pub use label::{Label, BETTI, DIMENSION};
pub use table::{LabelRecord, MultiplicationTable, ProductRecord, TableFile, TermRecord};
pub use verify::{
    check_associativity, check_chevalley, check_chevalley_slots, check_duality, check_grading, check_gw_symmetry,
    check_identity, check_positivity, check_symmetry, verify_table,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchubertError {
    #[error("unknown Schubert label {0:?}")]
    UnknownLabel(String),
    #[error("cannot parse Schubert element {0:?}")]
    ParseElement(String),
    #[error("malformed table: {0}")]
    Data(String),
}

impl MultiplicationTable {
    pub fn shipped() -> Self {
        Self::from_json(crate::data::TABLE_JSON).expect("shipped table is well formed")
    }
}
