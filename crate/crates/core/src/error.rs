use alloc::string::String;
use alloc::vec::Vec;

use crate::lattice::Weight;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid root datum at {path}: {message}")]
    InvalidDatum { path: String, message: String },

    #[error("order functional vanishes on root {root}")]
    InvalidOrder { root: Weight },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element is not in the span of the basis")]
    NotInSpan,

    #[error("element is not in the even Cartan subalgebra")]
    NotCartan,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not implemented: {0}")]
    Unsupported(String),

    #[error("no Steinberg decomposition of {weight} within the search bounds ({} frontier weights explored)", frontier.len())]
    DecompositionFailed { weight: Weight, frontier: Vec<Weight> },
}

impl Error {
    /// Short machine-readable tag for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::InvalidDatum { .. } => "invalid_datum",
            Error::InvalidOrder { .. } => "invalid_order",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::NotInSpan => "not_in_span",
            Error::NotCartan => "not_cartan",
            Error::Precondition(_) => "precondition",
            Error::Unsupported(_) => "unsupported",
            Error::DecompositionFailed { .. } => "decomposition_failed",
        }
    }
}
