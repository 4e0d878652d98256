use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("i-formula sides must be nonempty")]
pub struct EmptySideError;

/// An i-formula `Δ ⊐ Θ`: two nonempty finite sets of formulas.
///
/// Sides are duplicate-free and ordered, so equality is set equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IFormula {
    ante: BTreeSet<Formula>,
    succ: BTreeSet<Formula>,
}

impl IFormula {
    pub fn new(ante: BTreeSet<Formula>, succ: BTreeSet<Formula>) -> Result<Self, EmptySideError> {
        if ante.is_empty() || succ.is_empty() {
            return Err(EmptySideError);
        }
        Ok(IFormula { ante, succ })
    }

    pub fn from_lists<A, S>(ante: A, succ: S) -> Result<Self, EmptySideError>
    where
        A: IntoIterator<Item = Formula>,
        S: IntoIterator<Item = Formula>,
    {
        IFormula::new(ante.into_iter().collect(), succ.into_iter().collect())
    }

    /// The i-formula `{⊤} ⊐ {⊥}`.
    pub fn falsum() -> Self {
        IFormula::from_lists([Formula::top()], [Formula::Bot]).expect("nonempty")
    }

    pub fn ante(&self) -> &BTreeSet<Formula> {
        &self.ante
    }

    pub fn succ(&self) -> &BTreeSet<Formula> {
        &self.succ
    }

    /// Both sides share a formula (the (i-A) side condition).
    pub fn is_axiom(&self) -> bool {
        self.ante.iter().any(|f| self.succ.contains(f))
    }

    /// `self` weakens to `other` when both of its sides are subsets.
    pub fn subsumes(&self, other: &IFormula) -> bool {
        self.ante.is_subset(&other.ante) && self.succ.is_subset(&other.succ)
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.ante.iter().chain(self.succ.iter())
    }
}

fn write_side(side: &BTreeSet<Formula>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{{")?;
    for (i, g) in side.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{g}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for IFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_side(&self.ante, f)?;
        write!(f, " => ")?;
        write_side(&self.succ, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_iformula;

    #[test]
    fn set_semantics() {
        let a = IFormula::from_lists(
            [Formula::letter(1), Formula::letter(0), Formula::letter(1)],
            [Formula::Bot],
        )
        .unwrap();
        let b =
            IFormula::from_lists([Formula::letter(0), Formula::letter(1)], [Formula::Bot]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "{p0, p1} => {bot}");
        assert_eq!(parse_iformula(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn empty_sides_rejected() {
        assert!(IFormula::from_lists([], [Formula::Bot]).is_err());
        assert!(IFormula::from_lists([Formula::Bot], []).is_err());
    }

    #[test]
    fn axiom_and_subsumption() {
        let i = parse_iformula("{p0, p1} => {p1, p2}").unwrap();
        assert!(i.is_axiom());
        let small = parse_iformula("{p0} => {p2}").unwrap();
        assert!(!small.is_axiom());
        assert!(small.subsumes(&i));
        assert!(!i.subsumes(&small));
    }
}
