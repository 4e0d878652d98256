use std::collections::BTreeMap;

use crate::syntax::{Formula, IFormula};

use super::frame::FiniteFrame;
use super::worldset::WorldSet;
use super::SemanticsError;

/// A letter whose value is not a fixpoint of the frame's closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationFailure {
    pub letter: u32,
    pub value: WorldSet,
    pub closure: WorldSet,
}

/// Result of checking the closure condition on a valuation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<ValuationFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_valid() {
            return write!(f, "valid box-pre model");
        }
        for (i, fail) in self.failures.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "p{}: value {} is not a fixpoint (closure is {})",
                fail.letter, fail.value, fail.closure
            )?;
        }
        Ok(())
    }
}

/// A finite Kripke model. Letters missing from the valuation denote the
/// least fixpoint `box(∅)`.
///
/// Models built with [`Model::new`] are guaranteed to be box-pre models;
/// [`Model::kripke`] accepts any valuation and records whether the closure
/// condition holds in [`Model::is_box_pre`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    frame: FiniteFrame,
    valuation: BTreeMap<u32, WorldSet>,
    box_pre: bool,
}

impl Model {
    /// Builds a box-pre model; fails if any letter's value is not a fixpoint.
    pub fn new(
        frame: FiniteFrame,
        valuation: BTreeMap<u32, WorldSet>,
    ) -> Result<Self, SemanticsError> {
        let model = Model::kripke(frame, valuation)?;
        if model.box_pre {
            Ok(model)
        } else {
            Err(SemanticsError::InvalidModel(model.validate()))
        }
    }

    /// Builds a model without requiring the closure condition.
    pub fn kripke(
        frame: FiniteFrame,
        valuation: BTreeMap<u32, WorldSet>,
    ) -> Result<Self, SemanticsError> {
        for value in valuation.values() {
            if value.size() != frame.size() {
                return Err(SemanticsError::SizeMismatch {
                    expected: frame.size(),
                    found: value.size(),
                });
            }
        }
        let box_pre = valuation.values().all(|v| frame.closure_of(v) == *v);
        Ok(Model {
            frame,
            valuation,
            box_pre,
        })
    }

    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    pub fn valuation(&self) -> &BTreeMap<u32, WorldSet> {
        &self.valuation
    }

    pub fn size(&self) -> usize {
        self.frame.size()
    }

    pub fn is_box_pre(&self) -> bool {
        self.box_pre
    }

    pub fn value(&self, letter: u32) -> WorldSet {
        self.valuation
            .get(&letter)
            .copied()
            .unwrap_or_else(|| self.frame.bottom())
    }

    /// Lists every letter whose value is not a fixpoint.
    pub fn validate(&self) -> ValidationReport {
        let failures = self
            .valuation
            .iter()
            .filter_map(|(&letter, value)| {
                let closure = self.frame.closure_of(value);
                (closure != *value).then_some(ValuationFailure {
                    letter,
                    value: *value,
                    closure,
                })
            })
            .collect();
        ValidationReport { failures }
    }

    /// Truth set of a formula.
    pub fn eval(&self, f: &Formula) -> WorldSet {
        match f {
            Formula::Bot => self.frame.bottom(),
            Formula::Letter(i) => self.value(*i),
            Formula::And(l, r) => self.eval(l).intersection(&self.eval(r)),
            Formula::Or(l, r) => self.frame.closure_of(&self.eval(l).union(&self.eval(r))),
            Formula::Imp(l, r) => {
                let body = self.eval(l).complement().union(&self.eval(r));
                self.frame.box_of(&body)
            }
        }
    }

    pub fn satisfies(&self, world: usize, f: &Formula) -> bool {
        self.eval(f).contains(world)
    }

    /// Intersection of the truth sets of `formulas` (the full set when empty).
    pub fn eval_all<'a, I>(&self, formulas: I) -> WorldSet
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        formulas.into_iter().fold(self.frame.full_set(), |acc, f| {
            acc.intersection(&self.eval(f))
        })
    }

    /// Truth set of an i-formula: the complement of the antecedents'
    /// intersection, united with the union of the succedents' truth sets.
    pub fn eval_iformula(&self, i: &IFormula) -> WorldSet {
        let succ = i
            .succ()
            .iter()
            .fold(self.frame.empty_set(), |acc, f| acc.union(&self.eval(f)));
        self.eval_all(i.ante()).complement().union(&succ)
    }

    /// Variant of [`Model::eval_iformula`] that reads the succedent side as
    /// the formula disjunction (closure of the union). Kept for comparison;
    /// i-Cut is not sound under this reading.
    pub fn eval_iformula_as_formula(&self, i: &IFormula) -> WorldSet {
        let succ = self.eval(&Formula::disj(i.succ().iter().cloned()));
        self.eval_all(i.ante()).complement().union(&succ)
    }

    /// Intersection of i-formula truth sets (the full set when empty).
    pub fn eval_iformulas<'a, I>(&self, items: I) -> WorldSet
    where
        I: IntoIterator<Item = &'a IFormula>,
    {
        items.into_iter().fold(self.frame.full_set(), |acc, i| {
            acc.intersection(&self.eval_iformula(i))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse, parse_iformula};

    fn ws(size: usize, worlds: &[usize]) -> WorldSet {
        WorldSet::from_worlds(size, worlds.iter().copied())
    }

    fn mp_surrogate() -> Model {
        let frame = FiniteFrame::new(3, [(0, 1), (0, 2), (1, 2), (2, 2)]).unwrap();
        Model::new(
            frame,
            BTreeMap::from([(0, ws(3, &[0, 1, 2])), (1, ws(3, &[1, 2]))]),
        )
        .unwrap()
    }

    #[test]
    fn validation_examples() {
        let f = FiniteFrame::new(2, [(0, 1)]).unwrap();
        let ok = Model::new(f.clone(), BTreeMap::from([(0, f.bottom())])).unwrap();
        assert!(ok.validate().is_valid());

        let bad = Model::kripke(f.clone(), BTreeMap::from([(0, ws(2, &[0]))])).unwrap();
        assert!(!bad.is_box_pre());
        let report = bad.validate();
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].closure, ws(2, &[0, 1]));
        assert!(matches!(
            Model::new(f, BTreeMap::from([(0, ws(2, &[0]))])),
            Err(SemanticsError::InvalidModel(_))
        ));
        assert!(mp_surrogate().validate().is_valid());
    }

    #[test]
    fn eval_surrogate() {
        let m = mp_surrogate();
        assert_eq!(m.eval(&parse("p0 -> p1").unwrap()), m.frame().full_set());
        assert!(!m.satisfies(0, &parse("p1").unwrap()));
        assert!(m.satisfies(0, &parse("p0").unwrap()));
    }

    #[test]
    fn default_letters_are_bottom() {
        let f = FiniteFrame::new(2, [(0, 1)]).unwrap();
        let m = Model::new(f, BTreeMap::new()).unwrap();
        assert_eq!(m.eval(&parse("p7").unwrap()), ws(2, &[1]));
        assert_eq!(m.eval(&Formula::top()), ws(2, &[0, 1]));
    }

    #[test]
    fn iformula_examples() {
        let m = mp_surrogate();
        assert_eq!(
            m.eval_iformula(&parse_iformula("{p0} => {p0}").unwrap()),
            m.frame().full_set()
        );
        // no dead ends: ⊤ is everywhere and ⊥ nowhere
        assert!(m.eval_iformula(&IFormula::falsum()).is_empty());

        let f = FiniteFrame::new(2, [(0, 1)]).unwrap();
        let m = Model::new(f, BTreeMap::new()).unwrap();
        assert_eq!(
            m.eval_iformula(&parse_iformula("{p0, p1} => {p2}").unwrap()),
            ws(2, &[0, 1])
        );
    }
}
