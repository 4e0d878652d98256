//! Formulas, i-formulas, the ASCII grammar, and implication-disjunction
//! pattern extraction.

mod decompose;
mod formula;
mod iformula;
mod parse;

pub use decompose::{decompose, i_gamma, reconstruct_pattern, Decomposition};
pub use formula::{letters_of, subformulas_of, Formula};
pub use iformula::{EmptySideError, IFormula};
pub use parse::{parse, parse_iformula, ParseError};

/// Canonical text form; `parse(&print(f)) == f`.
pub fn print(f: &Formula) -> String {
    f.to_string()
}
