use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::frame_props::{classify, FrameClassification};
use crate::semantics::Model;
use crate::sequent::Sequent;
use crate::syntax::{letters_of, Formula};

use super::enumerate::{enumerate_class_frames, frame_models};
use super::{ModelClass, SearchError};

/// A model and world satisfying every assumption and refuting the goal.
#[derive(Clone, Debug)]
pub struct CountermodelReport {
    pub model: Model,
    pub world: usize,
    pub satisfied: Vec<Formula>,
    pub refuted: Formula,
    pub class_certificate: FrameClassification,
}

impl CountermodelReport {
    /// Re-evaluates and re-classifies from scratch.
    pub fn verify(&self, class: &ModelClass) -> Result<(), String> {
        if !self.model.validate().is_valid() {
            return Err("model valuation is not box-pre".into());
        }
        let c = classify(self.model.frame());
        if c != self.class_certificate {
            return Err("stored classification does not match the frame".into());
        }
        if !class.admits(&c) {
            return Err(format!("frame is not in class {class}"));
        }
        if let Some(f) = self
            .satisfied
            .iter()
            .find(|f| !self.model.satisfies(self.world, f))
        {
            return Err(format!("world {} does not satisfy {f}", self.world));
        }
        if self.model.satisfies(self.world, &self.refuted) {
            return Err(format!("world {} satisfies {}", self.world, self.refuted));
        }
        Ok(())
    }
}

/// The first countermodel (smallest world count, then frame order, then
/// valuation order, then world) to `assumptions ⊨ goal` in the class.
pub fn find_countermodel(
    assumptions: &[Formula],
    goal: &Formula,
    class: &ModelClass,
    max_n: usize,
) -> Result<Option<CountermodelReport>, SearchError> {
    let letters: BTreeSet<u32> = letters_of(assumptions.iter().chain([goal]));
    for n in 1..=max_n {
        let frames = enumerate_class_frames(n, class)?;
        let found = frames.par_iter().find_map_first(|frame| {
            frame_models(frame, &letters).find_map(|model| {
                let mut candidates = model.eval(goal).complement();
                for a in assumptions {
                    if candidates.is_empty() {
                        break;
                    }
                    candidates = candidates.intersection(&model.eval(a));
                }
                candidates.first().map(|world| (model, world))
            })
        });
        if let Some((model, world)) = found {
            let class_certificate = classify(model.frame());
            return Ok(Some(CountermodelReport {
                model,
                world,
                satisfied: assumptions.to_vec(),
                refuted: goal.clone(),
                class_certificate,
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Correctness {
    Correct,
    /// Every premise holds but the conclusion fails at `world`.
    Incorrect {
        world: usize,
    },
}

/// Whether `eval(lhs) ⊆ eval(rhs)` for every premise implies the same for
/// the conclusion.
pub fn check_rule_instance(
    model: &Model,
    premises: &[Sequent],
    conclusion: &Sequent,
) -> Correctness {
    let holds = |s: &Sequent| model.eval(&s.lhs).is_subset(&model.eval(&s.rhs));
    if !premises.iter().all(holds) {
        return Correctness::Correct;
    }
    match model
        .eval(&conclusion.lhs)
        .difference(&model.eval(&conclusion.rhs))
        .first()
    {
        None => Correctness::Correct,
        Some(world) => Correctness::Incorrect { world },
    }
}
