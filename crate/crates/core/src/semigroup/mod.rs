//! Hilbert functions of plane curve germs from exact jet-matrix ranks, value
//! semigroups of branches, and the comparison with H-functions of their links.

mod germ;
mod hilbert;
pub mod linalg;
mod suite;

use thiserror::Error;

use crate::hfunc::HError;
use crate::laurent::PolyError;

pub use germ::{
    branch_semigroup, germ_catalog, germ_catalog_entries, germ_from_json, intersection_multiplicity, load_germ,
    BranchParam, CurveGerm, GermEntry, Semigroup, Series,
};
pub use hilbert::{HilbertOracle, RankCertificate};
pub use suite::{bridge_check, hilbert_property_suite, semicontinuity_check, PropertyReport};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("TRUNCATION-TOO-SMALL: {0}")]
    TruncationTooSmall(String),
    #[error("MISSING-IMPLICIT: no implicit equation and no intersection matrix")]
    MissingImplicit,
    #[error("not a germ: {0}")]
    NotAGerm(String),
    #[error("parametrization is not reduced: {0}")]
    NotReduced(String),
    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),
    #[error("unknown germ {0:?}")]
    UnknownGerm(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error(transparent)]
    H(#[from] HError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
