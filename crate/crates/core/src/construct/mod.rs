//! PDA constructions.
//!
//! Every function here that returns a [`PdaArray`] (except the raw block map
//! [`psi`]) validates its output before returning it, so a successful call
//! doubles as a check of the construction's parameter claim.

mod dual;
mod labels;
mod mn;
pub mod params;
mod recursive;

use thiserror::Error;

use crate::pda::{PdaError, ValidationReport};

pub use dual::dual;
pub use labels::{expand_labels, label_matrices, ExpandedLabels, LabelMatrices};
pub use mn::{binomial, mn_pda};
pub use params::{ParamError, ParamTuple, Provenance};
pub use recursive::{psi, recursive_extend, ExtensionPlan};

/// Arrays above this many cells are refused rather than allocated.
pub const MAX_CELLS: u128 = 1 << 28;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("{0} overflows 128-bit arithmetic")]
    Overflow(String),
    #[error("array would have {cells} cells (limit {MAX_CELLS})")]
    TooLarge { cells: u128 },
    #[error("input array is not a PDA:\n{0}")]
    InvalidInput(Box<ValidationReport>),
    #[error("construction produced an array that is not a PDA:\n{0}")]
    InvalidOutput(Box<ValidationReport>),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Structure(#[from] PdaError),
}

pub(crate) fn check_size(rows: u128, cols: u128) -> Result<(), ConstructionError> {
    let cells = rows
        .checked_mul(cols)
        .ok_or_else(|| ConstructionError::Overflow("array size".into()))?;
    if cells > MAX_CELLS {
        return Err(ConstructionError::TooLarge { cells });
    }
    Ok(())
}

pub(crate) fn require_valid(
    p: &crate::pda::PdaArray,
    on_fail: fn(Box<ValidationReport>) -> ConstructionError,
) -> Result<ValidationReport, ConstructionError> {
    let report = crate::pda::validate(p);
    if report.is_pda() {
        Ok(report)
    } else {
        Err(on_fail(Box::new(report)))
    }
}
