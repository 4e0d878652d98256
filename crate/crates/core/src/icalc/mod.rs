//! The i-formula calculi I1 and I2(γ): derivations, checking, derived
//! rules, and a bounded saturation prover.

mod check;
mod derivation;
mod macros;
mod saturate;

pub use check::{check_ideriv, check_ideriv_from, IReject, IRejectReason};
pub use derivation::{IDerivation, IMacroCall, IRule, ISystem};
pub use macros::{expand_imacro, imacro_conclusion, imacro_premises, IMacroError};
pub use saturate::{
    saturate, NotFoundReason, SaturateConfig, SaturateOutcome, UniverseViolation, DEFAULT_MAX_STEPS,
};
