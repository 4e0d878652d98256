//! Frame and model enumeration, countermodel search, rule-instance
//! correctness, and seeded random models.

mod class;
mod countermodel;
mod enumerate;
mod random;

use thiserror::Error;

use crate::semantics::SemanticsError;

pub use class::ModelClass;
pub use countermodel::{check_rule_instance, find_countermodel, Correctness, CountermodelReport};
pub use enumerate::{
    enumerate_class_frames, enumerate_frames, enumerate_kripke_models, enumerate_models,
    frame_kripke_models, frame_models,
};
pub use random::{random_kripke_model, random_model, RANDOM_MAX_WORLDS};

/// Largest world count for exhaustive enumeration.
pub const EXHAUSTIVE_BOUND: usize = 4;
/// Frames drawn before random sampling gives up on a class.
pub const REJECTION_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("{n} worlds exceeds the bound of {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("no frame in class {class} after {budget} samples")]
    RejectionBudget { class: String, budget: usize },
    #[error("models need at least one world")]
    NoWorlds,
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}
