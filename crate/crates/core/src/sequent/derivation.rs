use std::fmt;

use crate::icalc::IDerivation;
use crate::syntax::Formula;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequent {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Sequent {
    pub fn new(lhs: Formula, rhs: Formula) -> Self {
        Sequent { lhs, rhs }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum System {
    /// Basic rules only.
    K,
    /// Basic rules, (Abs), (¬¬I), (Prop₁).
    F1,
    /// Basic rules, (¬¬I), (Refl₁), (Refl₂), (Prop₂).
    F2,
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            System::K => "K",
            System::F1 => "F1",
            System::F2 => "F2",
        };
        f.write_str(s)
    }
}

/// The indexed families `αⱼ, βⱼ, ψⱼ` and the shared `χ` of the
/// (→-∨.s) and (Refl) schemas.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainParams {
    pub alphas: Vec<Formula>,
    pub betas: Vec<Formula>,
    pub psis: Vec<Formula>,
    pub chi: Formula,
}

impl ChainParams {
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// `⋁ⱼ (αⱼ → βⱼ)`
    pub fn implications(&self) -> Formula {
        Formula::disj(
            self.alphas
                .iter()
                .zip(&self.betas)
                .map(|(a, b)| Formula::imp(a.clone(), b.clone()))
                .collect::<Vec<_>>(),
        )
    }

    /// `⋀ⱼ (ψⱼ ∧ αⱼ)`
    pub fn guarded_antecedents(&self) -> Formula {
        Formula::conj(
            self.psis
                .iter()
                .zip(&self.alphas)
                .map(|(p, a)| Formula::and(p.clone(), a.clone()))
                .collect::<Vec<_>>(),
        )
    }

    /// `ψⱼ ∧ βⱼ`
    pub fn guarded_consequent(&self, j: usize) -> Formula {
        Formula::and(self.psis[j].clone(), self.betas[j].clone())
    }

    /// `⋀ⱼ ((ψⱼ ∧ βⱼ) → χ)`
    pub fn consequent_implications(&self) -> Formula {
        Formula::conj(
            (0..self.len())
                .map(|j| Formula::imp(self.guarded_consequent(j), self.chi.clone()))
                .collect::<Vec<_>>(),
        )
    }
}

/// One decomposition of a witness theorem, by index into the witness list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IPremise {
    pub witness: usize,
    pub pairs: Vec<(Formula, Formula)>,
}

/// The finite data a (Prop) node carries: theorems of its antecedent with
/// their derivations, chosen decompositions, and an i-derivation of
/// `{⊤} ⊐ {⊥}` from the extracted i-formulas.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PropCertificate {
    pub witnesses: Vec<(Formula, Derivation)>,
    pub i_premises: Vec<IPremise>,
    pub i_derivation: IDerivation,
}

/// Derived rules, each expanding into basic rules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MacroCall {
    /// From `⋀Γ ⊢ φ` infer `⋀Δ ⊢ φ` when every member of `Γ` occurs in `Δ`.
    Mon {
        gamma: Vec<Formula>,
        delta: Vec<Formula>,
        phi: Formula,
    },
    /// `χ ⊢ ⊤`
    Top { chi: Formula },
    /// `χ ⊢ φ → φ`
    ImpRefl { phi: Formula, chi: Formula },
    /// `⋀ⱼ (αⱼ → βⱼ) ⊢ ⋀ⱼ αⱼ → ⋀ⱼ βⱼ`
    AndImpAnd {
        alphas: Vec<Formula>,
        betas: Vec<Formula>,
    },
    /// From `α ⊢ β` infer `¬β ⊢ ¬α`.
    NegAntitone { alpha: Formula, beta: Formula },
}

impl MacroCall {
    pub fn name(&self) -> &'static str {
        match self {
            MacroCall::Mon { .. } => "Mon",
            MacroCall::Top { .. } => "Top",
            MacroCall::ImpRefl { .. } => "ImpRefl",
            MacroCall::AndImpAnd { .. } => "AndImpAnd",
            MacroCall::NegAntitone { .. } => "NegAntitone",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    A,
    Cut,
    Bot,
    AndR,
    AndL1,
    AndL2,
    OrR1,
    OrR2,
    OrL,
    DT0,
    ImpAnd,
    ImpTr,
    ImpOrS(ChainParams),
    Abs,
    DNI,
    Refl1(ChainParams),
    Refl2(ChainParams),
    Prop1(Box<PropCertificate>),
    Prop2(Box<PropCertificate>),
    Macro(MacroCall),
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::A => "A",
            Rule::Cut => "Cut",
            Rule::Bot => "Bot",
            Rule::AndR => "AndR",
            Rule::AndL1 => "AndL1",
            Rule::AndL2 => "AndL2",
            Rule::OrR1 => "OrR1",
            Rule::OrR2 => "OrR2",
            Rule::OrL => "OrL",
            Rule::DT0 => "DT0",
            Rule::ImpAnd => "ImpAnd",
            Rule::ImpTr => "ImpTr",
            Rule::ImpOrS(_) => "ImpOrS",
            Rule::Abs => "Abs",
            Rule::DNI => "DNI",
            Rule::Refl1(_) => "Refl1",
            Rule::Refl2(_) => "Refl2",
            Rule::Prop1(_) => "Prop1",
            Rule::Prop2(_) => "Prop2",
            Rule::Macro(_) => "Macro",
        }
    }

    pub fn available_in(&self, system: System) -> bool {
        match self {
            Rule::Abs | Rule::Prop1(_) => system == System::F1,
            Rule::DNI => system != System::K,
            Rule::Refl1(_) | Rule::Refl2(_) | Rule::Prop2(_) => system == System::F2,
            _ => true,
        }
    }
}

/// A rule-labelled sequent proof tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub conclusion: Sequent,
    pub rule: Rule,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn new(lhs: Formula, rhs: Formula, rule: Rule, premises: Vec<Derivation>) -> Self {
        Derivation {
            conclusion: Sequent::new(lhs, rhs),
            rule,
            premises,
        }
    }

    pub fn leaf(lhs: Formula, rhs: Formula, rule: Rule) -> Self {
        Derivation::new(lhs, rhs, rule, Vec::new())
    }

    pub fn lhs(&self) -> &Formula {
        &self.conclusion.lhs
    }

    pub fn rhs(&self) -> &Formula {
        &self.conclusion.rhs
    }

    /// `α ⊢ γ` from `α ⊢ β` and `β ⊢ γ`.
    pub fn cut(left: Derivation, right: Derivation) -> Self {
        let lhs = left.lhs().clone();
        let rhs = right.rhs().clone();
        Derivation::new(lhs, rhs, Rule::Cut, vec![left, right])
    }

    /// `χ ⊢ α ∧ β` from `χ ⊢ α` and `χ ⊢ β`.
    pub fn and_r(left: Derivation, right: Derivation) -> Self {
        let lhs = left.lhs().clone();
        let rhs = Formula::and(left.rhs().clone(), right.rhs().clone());
        Derivation::new(lhs, rhs, Rule::AndR, vec![left, right])
    }

    /// `χ ⊢ α → β` from `α ⊢ β`.
    pub fn dt0(chi: Formula, premise: Derivation) -> Self {
        let rhs = Formula::imp(premise.lhs().clone(), premise.rhs().clone());
        Derivation::new(chi, rhs, Rule::DT0, vec![premise])
    }

    pub fn node_count(&self) -> usize {
        let inner = match &self.rule {
            Rule::Prop1(c) | Rule::Prop2(c) => {
                c.witnesses.iter().map(|(_, d)| d.node_count()).sum()
            }
            _ => 0,
        };
        1 + inner
            + self
                .premises
                .iter()
                .map(Derivation::node_count)
                .sum::<usize>()
    }
}
