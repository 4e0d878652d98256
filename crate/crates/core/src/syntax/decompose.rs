use std::collections::BTreeSet;

use super::formula::Formula;
use super::iformula::IFormula;

/// A reading of a formula as `(φ₁→ψ₁) | ((φ₂→ψ₂) | (… | tail))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    pub pairs: Vec<(Formula, Formula)>,
    pub tail: Formula,
}

impl Decomposition {
    /// Rebuilds the right-nested disjunction.
    pub fn reconstruct(&self) -> Formula {
        reconstruct_pattern(&self.pairs, &self.tail)
    }

    /// `{φ₁,…,φₙ} ⊐ {ψ₁,…,ψₙ}`; `None` when there are no pairs.
    pub fn iformula(&self) -> Option<IFormula> {
        IFormula::from_lists(
            self.pairs.iter().map(|(a, _)| a.clone()),
            self.pairs.iter().map(|(_, b)| b.clone()),
        )
        .ok()
    }
}

/// `(φ₁→ψ₁) | ((φ₂→ψ₂) | (… | tail))`, right-nested.
pub fn reconstruct_pattern(pairs: &[(Formula, Formula)], tail: &Formula) -> Formula {
    pairs.iter().rev().fold(tail.clone(), |acc, (a, b)| {
        Formula::or(Formula::imp(a.clone(), b.clone()), acc)
    })
}

/// Every way to read `theta` along its right `|`-spine as a nonempty run of
/// implications followed by `gamma`.
pub fn decompose(theta: &Formula, gamma: &Formula) -> Vec<Decomposition> {
    let mut found = Vec::new();
    let mut pairs = Vec::new();
    let mut rest = theta;
    while let Formula::Or(head, tail) = rest {
        let Some((a, b)) = head.as_imp() else { break };
        pairs.push((a.clone(), b.clone()));
        if **tail == *gamma {
            found.push(Decomposition {
                pairs: pairs.clone(),
                tail: gamma.clone(),
            });
        }
        rest = tail;
    }
    found
}

/// The extracted i-formulas of every decomposition of every member of `gamma_set`.
pub fn i_gamma<'a, I>(gamma_set: I, gamma: &Formula) -> BTreeSet<IFormula>
where
    I: IntoIterator<Item = &'a Formula>,
{
    gamma_set
        .into_iter()
        .flat_map(|theta| decompose(theta, gamma))
        .filter_map(|d| d.iformula())
        .collect()
}
