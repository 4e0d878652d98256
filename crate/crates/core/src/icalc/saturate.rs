//! A bounded prover for i-formula goals: given-clause resolution over a
//! finite universe of formulas, with (i-Cut) as the resolution step.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap};

use thiserror::Error;

use crate::syntax::{decompose, subformulas_of, Formula, IFormula};

use super::derivation::{IDerivation, IMacroCall, IRule, ISystem};

pub const DEFAULT_MAX_STEPS: usize = 10_000;

#[derive(Clone, Debug, Default)]
pub struct SaturateConfig {
    /// Formulas allowed in derived i-formulas; defaults to the
    /// subformulas of the premises and the goal.
    pub universe: Option<BTreeSet<Formula>>,
    /// Maximum number of derived i-formulas kept; defaults to
    /// [`DEFAULT_MAX_STEPS`].
    pub max_steps: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("formula {0} of the query is outside the universe")]
pub struct UniverseViolation(pub Formula);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotFoundReason {
    /// Every consequence inside the universe was generated.
    SaturationComplete,
    /// Stopped at the step limit.
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SaturateOutcome {
    /// A derivation whose open assumptions are exactly the premises.
    Found(IDerivation),
    NotFound {
        reason: NotFoundReason,
        steps: usize,
    },
}

#[derive(Clone, Debug)]
enum Origin {
    Premise,
    Axiom(IRule),
    Cut {
        cut: Formula,
        left: usize,
        right: usize,
    },
}

struct Clause {
    iformula: IFormula,
    origin: Origin,
}

/// Searches for a derivation of `goal` from `premises` in `system`.
pub fn saturate(
    premises: &[IFormula],
    goal: &IFormula,
    system: &ISystem,
    config: &SaturateConfig,
) -> Result<SaturateOutcome, UniverseViolation> {
    let query: Vec<&Formula> = premises
        .iter()
        .chain([goal])
        .flat_map(|i| i.formulas())
        .collect();
    let universe = match &config.universe {
        Some(u) => {
            if let Some(bad) = query.iter().find(|f| !u.contains(f)) {
                return Err(UniverseViolation((*bad).clone()));
            }
            u.clone()
        }
        None => subformulas_of(query.iter().copied()),
    };
    let declared: BTreeSet<IFormula> = premises.iter().cloned().collect();
    let max_steps = config.max_steps.unwrap_or(DEFAULT_MAX_STEPS);

    if goal.is_axiom() {
        let d = IDerivation::axiom(goal.clone(), IRule::IA);
        return Ok(SaturateOutcome::Found(with_all_premises(d, &declared)));
    }

    let mut state = State::default();
    for p in &declared {
        state.offer(p.clone(), Origin::Premise);
    }
    for (i, rule) in axioms(&universe, system) {
        state.offer(i, Origin::Axiom(rule));
    }

    let mut steps = 0;
    loop {
        if let Some(d) = state.derivation_of(goal) {
            return Ok(SaturateOutcome::Found(with_all_premises(d, &declared)));
        }
        let Some(Reverse((_, given))) = state.passive.pop() else {
            return Ok(SaturateOutcome::NotFound {
                reason: NotFoundReason::SaturationComplete,
                steps,
            });
        };
        let mut fresh = Vec::new();
        for &other in &state.active {
            fresh.extend(resolvents(&state.clauses, given, other));
            fresh.extend(resolvents(&state.clauses, other, given));
        }
        fresh.extend(resolvents(&state.clauses, given, given));
        state.active.push(given);
        for (i, origin) in fresh {
            if state.offer(i, origin) {
                steps += 1;
                if steps >= max_steps {
                    if let Some(d) = state.derivation_of(goal) {
                        return Ok(SaturateOutcome::Found(with_all_premises(d, &declared)));
                    }
                    return Ok(SaturateOutcome::NotFound {
                        reason: NotFoundReason::BudgetExhausted,
                        steps,
                    });
                }
            }
        }
    }
}

/// Wraps `d` so that it depends on every declared premise.
fn with_all_premises(d: IDerivation, declared: &BTreeSet<IFormula>) -> IDerivation {
    let used = d.leaves();
    let extra: Vec<IFormula> = declared.difference(&used).cloned().collect();
    if extra.is_empty() {
        return d;
    }
    let conclusion = d.conclusion.clone();
    IDerivation::new(conclusion, IRule::Macro(IMacroCall::Mon { extra }), vec![d])
}

fn axioms(universe: &BTreeSet<Formula>, system: &ISystem) -> Vec<(IFormula, IRule)> {
    let single = |a: &Formula, b: &Formula| {
        IFormula::from_lists([a.clone()], [b.clone()]).expect("nonempty")
    };
    let mut out = Vec::new();
    for f in universe {
        if let Some((l, r)) = f.as_and() {
            if universe.contains(l) && universe.contains(r) {
                out.push((single(f, l), IRule::IAndL1));
                out.push((single(f, r), IRule::IAndL2));
                let both =
                    IFormula::from_lists([l.clone(), r.clone()], [f.clone()]).expect("nonempty");
                out.push((both, IRule::IAndR));
            }
        }
        if let Some(gamma) = system.gamma() {
            for dec in decompose(f, gamma) {
                let parts_ok = dec
                    .pairs
                    .iter()
                    .all(|(a, b)| universe.contains(a) && universe.contains(b));
                if !parts_ok {
                    continue;
                }
                let ante = dec.pairs.iter().map(|(a, _)| a.clone()).chain([f.clone()]);
                let succ = dec.pairs.iter().map(|(_, b)| b.clone());
                let i = IFormula::from_lists(ante, succ).expect("nonempty");
                out.push((i, IRule::GammaRefl { pairs: dec.pairs }));
            }
        }
    }
    out
}

fn resolvents(clauses: &[Clause], left: usize, right: usize) -> Vec<(IFormula, Origin)> {
    let (l, r) = (&clauses[left].iformula, &clauses[right].iformula);
    let mut out = Vec::new();
    for phi in l.succ().intersection(r.ante()) {
        let mut ante = l.ante().clone();
        ante.extend(r.ante().iter().filter(|f| *f != phi).cloned());
        let mut succ: BTreeSet<Formula> = l.succ().iter().filter(|f| *f != phi).cloned().collect();
        succ.extend(r.succ().iter().cloned());
        let i = IFormula::new(ante, succ).expect("nonempty");
        out.push((
            i,
            Origin::Cut {
                cut: phi.clone(),
                left,
                right,
            },
        ));
    }
    out
}

#[derive(Default)]
struct State {
    clauses: Vec<Clause>,
    index: HashMap<IFormula, usize>,
    active: Vec<usize>,
    passive: BinaryHeap<Reverse<(usize, usize)>>,
}

impl State {
    /// Adds a new clause unless it is a tautology or already subsumed.
    fn offer(&mut self, i: IFormula, origin: Origin) -> bool {
        if i.is_axiom() || self.index.contains_key(&i) {
            return false;
        }
        if self.clauses.iter().any(|c| c.iformula.subsumes(&i)) {
            return false;
        }
        let k = self.clauses.len();
        let weight = i.ante().len() + i.succ().len();
        self.index.insert(i.clone(), k);
        self.clauses.push(Clause {
            iformula: i,
            origin,
        });
        self.passive.push(Reverse((weight, k)));
        true
    }

    /// A derivation of `goal` from a clause that weakens to it, if any.
    fn derivation_of(&self, goal: &IFormula) -> Option<IDerivation> {
        let k = self
            .clauses
            .iter()
            .position(|c| c.iformula.subsumes(goal))?;
        let d = self.tree(k);
        if d.conclusion == *goal {
            return Some(d);
        }
        let call = IMacroCall::IMon {
            from: d.conclusion.clone(),
            to: goal.clone(),
        };
        Some(IDerivation::new(goal.clone(), IRule::Macro(call), vec![d]))
    }

    fn tree(&self, k: usize) -> IDerivation {
        let mut memo: HashMap<usize, IDerivation> = HashMap::new();
        self.tree_memo(k, &mut memo)
    }

    fn tree_memo(&self, k: usize, memo: &mut HashMap<usize, IDerivation>) -> IDerivation {
        if let Some(d) = memo.get(&k) {
            return d.clone();
        }
        let c = &self.clauses[k];
        let d = match &c.origin {
            Origin::Premise => IDerivation::assumption(c.iformula.clone()),
            Origin::Axiom(rule) => IDerivation::axiom(c.iformula.clone(), rule.clone()),
            Origin::Cut { cut, left, right } => {
                let l = self.tree_memo(*left, memo);
                let r = self.tree_memo(*right, memo);
                IDerivation::cut(c.iformula.clone(), cut.clone(), l, r)
            }
        };
        memo.insert(k, d.clone());
        d
    }
}
