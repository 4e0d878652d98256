use std::collections::BTreeSet;

use thiserror::Error;

use crate::path::{NodePath, PathStep};
use crate::syntax::{reconstruct_pattern, Formula, IFormula};

use super::derivation::{IDerivation, IRule, ISystem};
use super::macros::{expand_imacro, IMacroError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IRejectReason {
    #[error("rule {rule} is not available in {system}")]
    Unavailable { rule: &'static str, system: String },
    #[error("{rule} expects {expected} premises, found {found}")]
    PremiseCount {
        rule: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("conclusion is not an instance of {rule}: {detail}")]
    Shape { rule: &'static str, detail: String },
    #[error("macro expansion failed: {0}")]
    Macro(#[from] IMacroError),
    #[error("assumption {0} is not among the declared premises")]
    Undeclared(IFormula),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("rejected at {path}: {reason}")]
pub struct IReject {
    pub path: NodePath,
    pub reason: IRejectReason,
}

fn shape(rule: &'static str, detail: impl Into<String>) -> IRejectReason {
    IRejectReason::Shape {
        rule,
        detail: detail.into(),
    }
}

fn set_of<'a, I: IntoIterator<Item = &'a Formula>>(items: I) -> BTreeSet<Formula> {
    items.into_iter().cloned().collect()
}

/// Checks an i-derivation and returns the assumptions it depends on.
pub fn check_ideriv(d: &IDerivation, system: &ISystem) -> Result<BTreeSet<IFormula>, IReject> {
    let mut open = BTreeSet::new();
    check_node(d, system, &NodePath::root(), &mut open)?;
    Ok(open)
}

/// Checks an i-derivation whose assumptions must all lie in `declared`.
pub fn check_ideriv_from(
    d: &IDerivation,
    system: &ISystem,
    declared: &BTreeSet<IFormula>,
) -> Result<BTreeSet<IFormula>, IReject> {
    let open = check_ideriv(d, system)?;
    if let Some(extra) = open.iter().find(|a| !declared.contains(a)) {
        return Err(IReject {
            path: NodePath::root(),
            reason: IRejectReason::Undeclared(extra.clone()),
        });
    }
    Ok(open)
}

fn check_node(
    d: &IDerivation,
    system: &ISystem,
    path: &NodePath,
    open: &mut BTreeSet<IFormula>,
) -> Result<(), IReject> {
    let reject = |reason| IReject {
        path: path.clone(),
        reason,
    };
    let expect_premises = |n: usize| {
        if d.premises.len() == n {
            Ok(())
        } else {
            Err(reject(IRejectReason::PremiseCount {
                rule: d.rule.name(),
                expected: n,
                found: d.premises.len(),
            }))
        }
    };
    let c = &d.conclusion;

    match &d.rule {
        IRule::Assumption => {
            expect_premises(0)?;
            open.insert(c.clone());
        }
        IRule::IA => {
            expect_premises(0)?;
            if !c.is_axiom() {
                return Err(reject(shape(
                    "IA",
                    "antecedents and succedents are disjoint",
                )));
            }
        }
        IRule::IAndL1 | IRule::IAndL2 => {
            expect_premises(0)?;
            let name = d.rule.name();
            let [conj] =
                single(c.ante()).ok_or_else(|| reject(shape(name, "expected one antecedent")))?;
            let (l, r) = conj
                .as_and()
                .ok_or_else(|| reject(shape(name, "antecedent is not a conjunction")))?;
            let want = if d.rule == IRule::IAndL1 { l } else { r };
            if c.succ().len() != 1 || !c.succ().contains(want) {
                return Err(reject(shape(
                    name,
                    "succedent is not the projected conjunct",
                )));
            }
        }
        IRule::IAndR => {
            expect_premises(0)?;
            let [conj] =
                single(c.succ()).ok_or_else(|| reject(shape("IAndR", "expected one succedent")))?;
            let (l, r) = conj
                .as_and()
                .ok_or_else(|| reject(shape("IAndR", "succedent is not a conjunction")))?;
            if *c.ante() != set_of([l, r]) {
                return Err(reject(shape(
                    "IAndR",
                    "antecedents are not the two conjuncts",
                )));
            }
        }
        IRule::GammaRefl { pairs } => {
            expect_premises(0)?;
            let Some(gamma) = system.gamma() else {
                return Err(reject(IRejectReason::Unavailable {
                    rule: "GammaRefl",
                    system: system.to_string(),
                }));
            };
            if pairs.is_empty() {
                return Err(reject(shape("GammaRefl", "needs at least one pair")));
            }
            let mut ante = set_of(pairs.iter().map(|(a, _)| a));
            ante.insert(reconstruct_pattern(pairs, gamma));
            let succ = set_of(pairs.iter().map(|(_, b)| b));
            if *c.ante() != ante || *c.succ() != succ {
                return Err(reject(shape(
                    "GammaRefl",
                    "conclusion does not match the pairs",
                )));
            }
        }
        IRule::ICut { cut } => {
            expect_premises(2)?;
            let (left, right) = (&d.premises[0].conclusion, &d.premises[1].conclusion);
            if !left.succ().contains(cut) {
                return Err(reject(shape(
                    "ICut",
                    "cut formula missing from left succedents",
                )));
            }
            if !right.ante().contains(cut) {
                return Err(reject(shape(
                    "ICut",
                    "cut formula missing from right antecedents",
                )));
            }
            if !cut_conclusion_ok(left, right, cut, c) {
                return Err(reject(shape(
                    "ICut",
                    "conclusion is not the cut of the premises",
                )));
            }
            for (i, p) in d.premises.iter().enumerate() {
                check_node(p, system, &path.child(PathStep::Premise(i)), open)?;
            }
        }
        IRule::Macro(call) => {
            let expansion = expand_imacro(call, &d.premises).map_err(|e| reject(e.into()))?;
            if expansion.conclusion != *c {
                return Err(reject(shape(
                    call.name(),
                    "expansion concludes a different i-formula",
                )));
            }
            check_node(&expansion, system, &path.child(PathStep::Expansion), open)?;
            if let super::derivation::IMacroCall::Mon { extra } = call {
                open.extend(extra.iter().cloned());
            }
        }
    }
    Ok(())
}

fn single(side: &BTreeSet<Formula>) -> Option<[&Formula; 1]> {
    if side.len() == 1 {
        side.iter().next().map(|f| [f])
    } else {
        None
    }
}

/// The conclusion may keep or drop the cut formula on each side, since
/// `Θ₁` and `Δ₂` are allowed to contain it.
fn cut_conclusion_ok(left: &IFormula, right: &IFormula, cut: &Formula, c: &IFormula) -> bool {
    let mut right_ante_dropped = right.ante().clone();
    right_ante_dropped.remove(cut);
    let mut left_succ_dropped = left.succ().clone();
    left_succ_dropped.remove(cut);

    let antes = [
        left.ante()
            .union(&right_ante_dropped)
            .cloned()
            .collect::<BTreeSet<_>>(),
        left.ante().union(right.ante()).cloned().collect(),
    ];
    let succs = [
        left_succ_dropped
            .union(right.succ())
            .cloned()
            .collect::<BTreeSet<_>>(),
        left.succ().union(right.succ()).cloned().collect(),
    ];
    antes.contains(c.ante()) && succs.contains(c.succ())
}
