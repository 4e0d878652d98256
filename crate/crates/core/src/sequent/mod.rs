//! Sequent derivations for the systems K, F1 and F2 and their checker.

mod check;
mod derivation;
mod macros;
mod rules;

pub use check::{check_derivation, check_set_consequence, Reject, RejectReason};
pub use derivation::{
    ChainParams, Derivation, IPremise, MacroCall, PropCertificate, Rule, Sequent, System,
};
pub use macros::{expand_macro, macro_conclusion, macro_premises, MacroError};
pub use rules::{RuleInstance, RuleKind};
