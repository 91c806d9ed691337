//! Latin hypercuboids and `(n^d,k)`-arrays of symbol sets.
//!
//! A hypercuboid of dimension `d`, order `n` and depth `k` is an
//! `n x ... x n x k` array over `[n]` with no symbol repeated on any
//! axis-parallel line. It is *extendible* when a further layer fits and
//! *completable* when it sits inside a full Latin hypercube. Both questions
//! reduce to finding layers of the array of unused symbols `U_H`, which is
//! what [`solve`] decides by complete search.
//!
//! * [`construct`]: cyclic hypercubes, developments, lifts, `U_H`, complements,
//!   and explicit unavoidable / nonlayerable arrays.
//! * [`solve`]: layer search, decomposition, extendibility, completability,
//!   matching-based completion of rectangles, avoidability, delta-regularity and
//!   exhaustive small-order searches.
//! * [`sample`]: seeded random squares, hypercuboids and realisable arrays.
//! * [`verify`]: slow independent oracles.
//! * [`format`]: the JSON interchange format and text rendering.

pub mod construct;
mod error;
pub mod format;
mod grid;
mod model;
mod outcome;
pub mod sample;
pub mod solve;
mod symbol_set;
mod validate;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{Grid, LineRef, OneBased};
pub use model::{CellSets, ConstraintArray, Hypercuboid, Layer, PartialAssignment, SetArray, Shape};
pub use outcome::{Budget, Meter, Pool, SolveOutcome, Stats, Verdict};
pub use symbol_set::{SymbolSet, MAX_ORDER};
pub use validate::{
    is_extension_of, is_layer_of, validate_hypercuboid, validate_layer, validate_set_array, Validity,
    Violation,
};
