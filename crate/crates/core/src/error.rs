use thiserror::Error;

use crate::grid::OneBased;
use crate::validate::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Cell count or dimension does not match the declared shape.
    #[error("shape error: {0}")]
    Shape(String),
    /// A parameter is outside the range an operation accepts.
    #[error("range error: {0}")]
    Range(String),
    #[error("a, b and c must not all be equal (got {0})")]
    AllEqual(usize),
    #[error("not a layer of the unused-symbol array: {0}")]
    NotALayer(Violation),
    /// Zero-based cell and symbol; displayed one-based.
    #[error("forced cell {} = {} is not in the cell's set", OneBased(.coords), .symbol + 1)]
    ForcedConflict { coords: Vec<usize>, symbol: usize },
    #[error("hypercuboid is already a full hypercube")]
    AlreadyFull,
    #[error("depth equals order; delta-regularity divides by (n-k)^2 = 0")]
    DegenerateDepth,
    #[error("validation failed: {0}")]
    Validation(Violation),
    #[error("parse error: {0}")]
    Parse(String),
}
