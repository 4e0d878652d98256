use std::collections::BTreeSet;
use std::fmt;

use crate::syntax::{Formula, IFormula};

/// Which i-formula calculus a certificate is checked in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ISystem {
    /// The basic i-rules.
    I1,
    /// The basic i-rules plus (γ-Refl) for the given γ.
    I2(Formula),
}

impl ISystem {
    pub fn gamma(&self) -> Option<&Formula> {
        match self {
            ISystem::I1 => None,
            ISystem::I2(g) => Some(g),
        }
    }
}

impl fmt::Display for ISystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ISystem::I1 => write!(f, "I1"),
            ISystem::I2(g) => write!(f, "I2({g})"),
        }
    }
}

/// Derived i-rules that expand into basic i-rule trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IMacroCall {
    /// `Δ₁ ⊐ Θ₁ ⊩ Δ₂ ⊐ Θ₂` for `Δ₁ ⊆ Δ₂`, `Θ₁ ⊆ Θ₂`.
    IMon { from: IFormula, to: IFormula },
    /// `{Δ₁ ⊐ Θ₁ ∪ Θ} ∪ {Δ₂ ∪ {p} ⊐ Θ₂ | p ∈ Θ} ⊩ Δ₁ ∪ Δ₂ ⊐ Θ₁ ∪ Θ₂`
    ICut1 {
        theta: Vec<Formula>,
        delta1: Vec<Formula>,
        theta1: Vec<Formula>,
        delta2: Vec<Formula>,
        theta2: Vec<Formula>,
    },
    /// `{Δ₁ ⊐ Θ₁ ∪ {φ} | φ ∈ Δ} ∪ {Δ₂ ∪ Δ ⊐ Θ₂} ⊩ Δ₁ ∪ Δ₂ ⊐ Θ₁ ∪ Θ₂`
    ICut2 {
        delta: Vec<Formula>,
        delta1: Vec<Formula>,
        theta1: Vec<Formula>,
        delta2: Vec<Formula>,
        theta2: Vec<Formula>,
    },
    /// Weakening of the assumption set: the single premise's tree, with
    /// `extra` added to the assumptions it depends on.
    Mon { extra: Vec<IFormula> },
}

impl IMacroCall {
    pub fn name(&self) -> &'static str {
        match self {
            IMacroCall::IMon { .. } => "IMon",
            IMacroCall::ICut1 { .. } => "ICut1",
            IMacroCall::ICut2 { .. } => "ICut2",
            IMacroCall::Mon { .. } => "Mon",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IRule {
    /// An open assumption leaf.
    Assumption,
    /// `⊩ Δ ⊐ Θ` when `Δ ∩ Θ ≠ ∅`.
    IA,
    /// From `Δ₁ ⊐ Θ₁ ∪ {φ}` and `Δ₂ ∪ {φ} ⊐ Θ₂` infer `Δ₁ ∪ Δ₂ ⊐ Θ₁ ∪ Θ₂`.
    ICut {
        cut: Formula,
    },
    /// `⊩ {φ ∧ ψ} ⊐ {φ}`
    IAndL1,
    /// `⊩ {φ ∧ ψ} ⊐ {ψ}`
    IAndL2,
    /// `⊩ {φ, ψ} ⊐ {φ ∧ ψ}`
    IAndR,
    /// `⊩ {φ₁,…,φₙ, (φ₁→ψ₁) ∨ (… ∨ γ)} ⊐ {ψ₁,…,ψₙ}`, in `I2(γ)` only.
    GammaRefl {
        pairs: Vec<(Formula, Formula)>,
    },
    Macro(IMacroCall),
}

impl IRule {
    pub fn name(&self) -> &'static str {
        match self {
            IRule::Assumption => "Assumption",
            IRule::IA => "IA",
            IRule::ICut { .. } => "ICut",
            IRule::IAndL1 => "IAndL1",
            IRule::IAndL2 => "IAndL2",
            IRule::IAndR => "IAndR",
            IRule::GammaRefl { .. } => "GammaRefl",
            IRule::Macro(_) => "IMacro",
        }
    }
}

/// A rule-labelled i-formula proof tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IDerivation {
    pub conclusion: IFormula,
    pub rule: IRule,
    pub premises: Vec<IDerivation>,
}

impl IDerivation {
    pub fn new(conclusion: IFormula, rule: IRule, premises: Vec<IDerivation>) -> Self {
        IDerivation {
            conclusion,
            rule,
            premises,
        }
    }

    pub fn assumption(conclusion: IFormula) -> Self {
        IDerivation::new(conclusion, IRule::Assumption, Vec::new())
    }

    pub fn axiom(conclusion: IFormula, rule: IRule) -> Self {
        IDerivation::new(conclusion, rule, Vec::new())
    }

    pub fn cut(conclusion: IFormula, cut: Formula, left: IDerivation, right: IDerivation) -> Self {
        IDerivation::new(conclusion, IRule::ICut { cut }, vec![left, right])
    }

    /// Assumption leaves, without expanding macros.
    pub fn leaves(&self) -> BTreeSet<IFormula> {
        let mut out = BTreeSet::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut BTreeSet<IFormula>) {
        if self.rule == IRule::Assumption {
            out.insert(self.conclusion.clone());
        }
        for p in &self.premises {
            p.collect_leaves(out);
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(IDerivation::node_count)
            .sum::<usize>()
    }

    /// Replaces assumption leaves by the first derivation in `by` with the
    /// same conclusion.
    pub fn substitute(self, by: &[IDerivation]) -> IDerivation {
        if self.rule == IRule::Assumption {
            if let Some(d) = by.iter().find(|d| d.conclusion == self.conclusion) {
                return d.clone();
            }
            return self;
        }
        IDerivation {
            conclusion: self.conclusion,
            rule: self.rule,
            premises: self
                .premises
                .into_iter()
                .map(|p| p.substitute(by))
                .collect(),
        }
    }
}
