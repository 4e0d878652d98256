//! Bundled models and the formula sets of the two worked examples.
//!
//! Letters: `p` is `p0`, `q` is `p1`; in the examples the implication
//! components are `p0..p3` and the distinguished formula is `p2` (first
//! example) or `p4` (second example).

use crate::json::{model_from_json, FormatError};
use crate::semantics::Model;
use crate::syntax::{parse, Formula};

pub const NECESSITY_MODEL_JSON: &str = include_str!("../assets/necessity5.json");
pub const MP_SURROGATE_JSON: &str = include_str!("../assets/mp3.json");

/// World names of the five-point model, by index.
pub const NECESSITY_WORLD_NAMES: [&str; 5] = ["a", "b", "c", "d", "e"];

/// The five-point model refuting `((⊤→p)∨q) ∧ ((p→⊥)∨q) ⊢ q` at `a`
/// without (Prop₁). Loaded unvalidated; callers check it.
pub fn necessity_model() -> Result<Model, FormatError> {
    model_from_json(NECESSITY_MODEL_JSON)
}

/// The three-world D₁ model where `p, p → q` hold at world 0 but `q` fails.
pub fn mp_surrogate() -> Result<Model, FormatError> {
    model_from_json(MP_SURROGATE_JSON)
}

fn f(text: &str) -> Formula {
    parse(text).expect("bundled formula parses")
}

/// `((⊤→p)∨q) ∧ ((p→⊥)∨q)`
pub fn necessity_formula() -> Formula {
    f("((top -> p0) | p1) & ((p0 -> bot) | p1)")
}

/// The first example's assumptions with `φ₁ = p0`, `φ₂ = p1`, `γ = p2`.
pub fn example1_gamma() -> (Vec<Formula>, Formula) {
    (
        vec![
            f("(top -> p0) | ((top -> p1) | p2)"),
            f("(p0 -> bot) | p2"),
            f("(p1 -> bot) | p2"),
        ],
        f("p2"),
    )
}

/// The second example's assumptions with `α₁ = p0`, `α₂ = p1`, `β₁ = p2`,
/// `β₂ = p3`, `γ = p4`.
pub fn example2_gamma() -> (Vec<Formula>, Formula) {
    (
        vec![
            f("(top -> p0) | p4"),
            f("(top -> p1) | p4"),
            f("(top -> ((p0 -> p2) | ((p1 -> p3) | p4))) | p4"),
            f("(p2 -> bot) | p4"),
            f("(p3 -> bot) | p4"),
        ],
        f("p4"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame_props::classify;

    #[test]
    fn bundled_models_are_valid() {
        let m = necessity_model().unwrap();
        assert!(m.validate().is_valid());
        let c = classify(m.frame());
        assert!(c.strongly_pseudo_reflexive && c.weakly_pseudo_symmetric);

        let m = mp_surrogate().unwrap();
        assert!(m.validate().is_valid());
        let c = classify(m.frame());
        assert!(c.pseudo_reflexive && c.pseudo_symmetric);
    }

    #[test]
    fn example_sets_parse() {
        assert_eq!(example1_gamma().0.len(), 3);
        assert_eq!(example2_gamma().0.len(), 5);
    }
}
