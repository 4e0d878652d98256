use std::collections::BTreeSet;

use thiserror::Error;

use crate::syntax::{Formula, IFormula};

use super::derivation::{IDerivation, IMacroCall, IRule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IMacroError {
    #[error("{name} expects {expected} premises, found {found}")]
    PremiseCount {
        name: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{name} premise {index} should be {expected}, found {found}")]
    PremiseMismatch {
        name: &'static str,
        index: usize,
        expected: IFormula,
        found: IFormula,
    },
    #[error("{name}: {param} must be nonempty")]
    EmptyParameter {
        name: &'static str,
        param: &'static str,
    },
    #[error("IMon: {from} does not weaken to {to}")]
    NotWeakening { from: IFormula, to: IFormula },
}

fn set(items: &[Formula]) -> BTreeSet<Formula> {
    items.iter().cloned().collect()
}

fn iformula(
    ante: BTreeSet<Formula>,
    succ: BTreeSet<Formula>,
    name: &'static str,
) -> Result<IFormula, IMacroError> {
    IFormula::new(ante, succ).map_err(|_| IMacroError::EmptyParameter {
        name,
        param: "side",
    })
}

fn expect_count(
    name: &'static str,
    premises: &[IDerivation],
    expected: usize,
) -> Result<(), IMacroError> {
    if premises.len() == expected {
        Ok(())
    } else {
        Err(IMacroError::PremiseCount {
            name,
            expected,
            found: premises.len(),
        })
    }
}

fn expect_premise(
    name: &'static str,
    premises: &[IDerivation],
    index: usize,
    expected: &IFormula,
) -> Result<(), IMacroError> {
    let found = &premises[index].conclusion;
    if found == expected {
        Ok(())
    } else {
        Err(IMacroError::PremiseMismatch {
            name,
            index,
            expected: expected.clone(),
            found: found.clone(),
        })
    }
}

/// The i-formulas a macro call needs as premises, in order.
pub fn imacro_premises(call: &IMacroCall) -> Result<Vec<IFormula>, IMacroError> {
    match call {
        IMacroCall::IMon { from, .. } => Ok(vec![from.clone()]),
        IMacroCall::Mon { .. } => Ok(Vec::new()),
        IMacroCall::ICut1 {
            theta,
            delta1,
            theta1,
            delta2,
            theta2,
        } => {
            let name = "ICut1";
            let theta = set(theta);
            if theta.is_empty() {
                return Err(IMacroError::EmptyParameter {
                    name,
                    param: "theta",
                });
            }
            let mut first = set(theta1);
            first.extend(theta.iter().cloned());
            let mut out = vec![iformula(set(delta1), first, name)?];
            for p in &theta {
                let mut ante = set(delta2);
                ante.insert(p.clone());
                out.push(iformula(ante, set(theta2), name)?);
            }
            Ok(out)
        }
        IMacroCall::ICut2 {
            delta,
            delta1,
            theta1,
            delta2,
            theta2,
        } => {
            let name = "ICut2";
            let delta = set(delta);
            if delta.is_empty() {
                return Err(IMacroError::EmptyParameter {
                    name,
                    param: "delta",
                });
            }
            let mut out = Vec::new();
            for phi in &delta {
                let mut succ = set(theta1);
                succ.insert(phi.clone());
                out.push(iformula(set(delta1), succ, name)?);
            }
            let mut last = set(delta2);
            last.extend(delta.iter().cloned());
            out.push(iformula(last, set(theta2), name)?);
            Ok(out)
        }
    }
}

/// Expands a derived i-rule into basic i-rules, with the given premise
/// derivations plugged in where the rule's premises are used.
pub fn expand_imacro(
    call: &IMacroCall,
    premises: &[IDerivation],
) -> Result<IDerivation, IMacroError> {
    match call {
        IMacroCall::Mon { .. } => {
            expect_count("Mon", premises, 1)?;
            Ok(premises[0].clone())
        }
        IMacroCall::IMon { from, to } => {
            expect_count("IMon", premises, 1)?;
            expect_premise("IMon", premises, 0, from)?;
            if !from.subsumes(to) {
                return Err(IMacroError::NotWeakening {
                    from: from.clone(),
                    to: to.clone(),
                });
            }
            if from == to {
                return Ok(premises[0].clone());
            }
            let phi = from.succ().iter().next().expect("nonempty").clone();
            let mut ante = to.ante().clone();
            ante.insert(phi.clone());
            let ia = IDerivation::axiom(iformula(ante, to.succ().clone(), "IMon")?, IRule::IA);
            Ok(IDerivation::cut(to.clone(), phi, premises[0].clone(), ia))
        }
        IMacroCall::ICut1 {
            theta,
            theta1,
            delta2,
            theta2,
            ..
        } => {
            let name = "ICut1";
            let wanted = imacro_premises(call)?;
            expect_count(name, premises, wanted.len())?;
            for (i, w) in wanted.iter().enumerate() {
                expect_premise(name, premises, i, w)?;
            }
            let (delta2, theta1, theta2) = (set(delta2), set(theta1), set(theta2));
            let mut cur = premises[0].clone();
            let theta = set(theta);
            for (p, right) in theta.iter().zip(&premises[1..]) {
                let mut ante = cur.conclusion.ante().clone();
                ante.extend(delta2.iter().cloned());
                let mut succ = cur.conclusion.succ().clone();
                if !theta1.contains(p) {
                    succ.remove(p);
                }
                succ.extend(theta2.iter().cloned());
                let conclusion = iformula(ante, succ, name)?;
                cur = IDerivation::cut(conclusion, p.clone(), cur, right.clone());
            }
            Ok(cur)
        }
        IMacroCall::ICut2 {
            delta,
            delta1,
            theta1,
            delta2,
            ..
        } => {
            let name = "ICut2";
            let wanted = imacro_premises(call)?;
            expect_count(name, premises, wanted.len())?;
            for (i, w) in wanted.iter().enumerate() {
                expect_premise(name, premises, i, w)?;
            }
            let (delta1, theta1, delta2) = (set(delta1), set(theta1), set(delta2));
            let delta = set(delta);
            let mut cur = premises.last().expect("nonempty").clone();
            for (phi, left) in delta.iter().zip(premises) {
                let mut ante = delta1.clone();
                ante.extend(cur.conclusion.ante().iter().filter(|f| *f != phi).cloned());
                if delta2.contains(phi) {
                    ante.insert(phi.clone());
                }
                let mut succ = theta1.clone();
                succ.extend(cur.conclusion.succ().iter().cloned());
                let conclusion = iformula(ante, succ, name)?;
                cur = IDerivation::cut(conclusion, phi.clone(), left.clone(), cur);
            }
            Ok(cur)
        }
    }
}

/// The conclusion a macro call derives.
pub fn imacro_conclusion(
    call: &IMacroCall,
    premises: &[IDerivation],
) -> Result<IFormula, IMacroError> {
    expand_imacro(call, premises).map(|d| d.conclusion)
}
