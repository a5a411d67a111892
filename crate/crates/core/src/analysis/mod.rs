//! Parameter-space analysis: exact `(M/N, R, F)` points, the MN comparison
//! ratios, memory sharing, the cyclic-code scheme equivalence and the
//! comparison tables.
//!
//! Everything is exact (`BigRational` / `BigUint`) until a value is rendered
//! for display.

mod decimal;
mod point;
mod ratio;
pub mod reference;
mod share;
mod table;
mod tang;

use thiserror::Error;

use crate::construct::ParamError;

pub use crate::construct::Provenance;
pub use decimal::{render_decimal, render_fraction};
pub use point::SchemePoint;
pub use ratio::{entropy, mn_ratio, MnRatio};
pub use share::{
    base_points_lemma2, base_points_lemma2_family, base_points_mn, best_share, enumerate_shares,
    memory_share, ShareChoice,
};
pub use table::{
    default_rows, make_table, Baseline, BaselineKind, ComparisonRow, RowParams, Table, TableFormat,
    TableId,
};
pub use tang::{tang_equivalence, TangReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("{0}")]
    Domain(String),
    #[error("MN baseline memory point is not integral: K1={k1} does not divide (K1+K2)·t with K2={k2}, t={t}")]
    NonIntegralBaseline { k1: u64, k2: u64, t: u64 },
    #[error("invalid memory-sharing weights: {0}")]
    Lambda(String),
    #[error("no memory-sharing combination reaches M/N = {0}")]
    NoCandidates(String),
    #[error("configuration outside the extension range: {0}")]
    Configuration(String),
    #[error(transparent)]
    Param(#[from] ParamError),
}
