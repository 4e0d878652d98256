//! Finite Kripke frames, the ◀/□/◇ operators, the box-pre fixpoint
//! lattice, and formula evaluation.

mod frame;
mod model;
mod worldset;

use thiserror::Error;

pub use frame::{FiniteFrame, DEFAULT_FIXPOINT_BOUND};
pub use model::{Model, ValidationReport, ValuationFailure};
pub use worldset::{WorldSet, MAX_WORLDS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("world set has size {found}, frame has {expected} worlds")]
    SizeMismatch { expected: usize, found: usize },
    #[error("world {world} out of range for a frame of {size} worlds")]
    WorldOutOfRange { world: usize, size: usize },
    #[error("frames are limited to {} worlds, got {size}", MAX_WORLDS)]
    TooManyWorlds { size: usize },
    #[error("frame has {size} worlds, exhaustive bound is {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("{set:?} is not a fixpoint")]
    NotFixpoint { set: Vec<usize> },
    #[error("not a box-pre model: {0}")]
    InvalidModel(ValidationReport),
}
