use crate::syntax::Formula;

use super::derivation::{ChainParams, Derivation, Rule, Sequent};

/// A fully instantiated non-(Prop) rule: its premise sequents and
/// conclusion are determined by the parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RuleInstance {
    A {
        alpha: Formula,
    },
    Cut {
        alpha: Formula,
        beta: Formula,
        gamma: Formula,
    },
    Bot {
        alpha: Formula,
    },
    AndR {
        chi: Formula,
        alpha: Formula,
        beta: Formula,
    },
    AndL1 {
        alpha: Formula,
        beta: Formula,
    },
    AndL2 {
        alpha: Formula,
        beta: Formula,
    },
    OrR1 {
        alpha: Formula,
        beta: Formula,
    },
    OrR2 {
        alpha: Formula,
        beta: Formula,
    },
    OrL {
        alpha: Formula,
        beta: Formula,
        chi: Formula,
    },
    DT0 {
        chi: Formula,
        alpha: Formula,
        beta: Formula,
    },
    ImpAnd {
        alpha: Formula,
        beta: Formula,
        gamma: Formula,
    },
    ImpTr {
        alpha: Formula,
        beta: Formula,
        gamma: Formula,
    },
    ImpOrS(ChainParams),
    Abs {
        alpha: Formula,
    },
    DNI {
        alpha: Formula,
    },
    Refl1(ChainParams),
    Refl2(ChainParams),
}

fn seq(lhs: Formula, rhs: Formula) -> Sequent {
    Sequent::new(lhs, rhs)
}

fn imp(a: &Formula, b: &Formula) -> Formula {
    Formula::imp(a.clone(), b.clone())
}

fn and(a: &Formula, b: &Formula) -> Formula {
    Formula::and(a.clone(), b.clone())
}

fn or(a: &Formula, b: &Formula) -> Formula {
    Formula::or(a.clone(), b.clone())
}

impl RuleInstance {
    pub fn kind(&self) -> RuleKind {
        match self {
            RuleInstance::A { .. } => RuleKind::A,
            RuleInstance::Cut { .. } => RuleKind::Cut,
            RuleInstance::Bot { .. } => RuleKind::Bot,
            RuleInstance::AndR { .. } => RuleKind::AndR,
            RuleInstance::AndL1 { .. } => RuleKind::AndL1,
            RuleInstance::AndL2 { .. } => RuleKind::AndL2,
            RuleInstance::OrR1 { .. } => RuleKind::OrR1,
            RuleInstance::OrR2 { .. } => RuleKind::OrR2,
            RuleInstance::OrL { .. } => RuleKind::OrL,
            RuleInstance::DT0 { .. } => RuleKind::DT0,
            RuleInstance::ImpAnd { .. } => RuleKind::ImpAnd,
            RuleInstance::ImpTr { .. } => RuleKind::ImpTr,
            RuleInstance::ImpOrS(_) => RuleKind::ImpOrS,
            RuleInstance::Abs { .. } => RuleKind::Abs,
            RuleInstance::DNI { .. } => RuleKind::DNI,
            RuleInstance::Refl1(_) => RuleKind::Refl1,
            RuleInstance::Refl2(_) => RuleKind::Refl2,
        }
    }

    /// The rule label a derivation node for this instance carries.
    pub fn rule(&self) -> Rule {
        match self {
            RuleInstance::A { .. } => Rule::A,
            RuleInstance::Cut { .. } => Rule::Cut,
            RuleInstance::Bot { .. } => Rule::Bot,
            RuleInstance::AndR { .. } => Rule::AndR,
            RuleInstance::AndL1 { .. } => Rule::AndL1,
            RuleInstance::AndL2 { .. } => Rule::AndL2,
            RuleInstance::OrR1 { .. } => Rule::OrR1,
            RuleInstance::OrR2 { .. } => Rule::OrR2,
            RuleInstance::OrL { .. } => Rule::OrL,
            RuleInstance::DT0 { .. } => Rule::DT0,
            RuleInstance::ImpAnd { .. } => Rule::ImpAnd,
            RuleInstance::ImpTr { .. } => Rule::ImpTr,
            RuleInstance::ImpOrS(p) => Rule::ImpOrS(p.clone()),
            RuleInstance::Abs { .. } => Rule::Abs,
            RuleInstance::DNI { .. } => Rule::DNI,
            RuleInstance::Refl1(p) => Rule::Refl1(p.clone()),
            RuleInstance::Refl2(p) => Rule::Refl2(p.clone()),
        }
    }

    /// A derivation node for this instance over the given premise trees.
    pub fn derive(&self, premises: Vec<Derivation>) -> Derivation {
        let Sequent { lhs, rhs } = self.conclusion();
        Derivation::new(lhs, rhs, self.rule(), premises)
    }

    pub fn premises(&self) -> Vec<Sequent> {
        match self {
            RuleInstance::Cut { alpha, beta, gamma } => {
                vec![
                    seq(alpha.clone(), beta.clone()),
                    seq(beta.clone(), gamma.clone()),
                ]
            }
            RuleInstance::AndR { chi, alpha, beta } => {
                vec![
                    seq(chi.clone(), alpha.clone()),
                    seq(chi.clone(), beta.clone()),
                ]
            }
            RuleInstance::OrL { alpha, beta, chi } => {
                vec![
                    seq(alpha.clone(), chi.clone()),
                    seq(beta.clone(), chi.clone()),
                ]
            }
            RuleInstance::DT0 { alpha, beta, .. } => vec![seq(alpha.clone(), beta.clone())],
            RuleInstance::Refl1(p) => (0..p.len())
                .map(|j| seq(p.guarded_consequent(j), p.chi.clone()))
                .collect(),
            _ => Vec::new(),
        }
    }

    pub fn conclusion(&self) -> Sequent {
        match self {
            RuleInstance::A { alpha } => seq(alpha.clone(), alpha.clone()),
            RuleInstance::Cut { alpha, gamma, .. } => seq(alpha.clone(), gamma.clone()),
            RuleInstance::Bot { alpha } => seq(Formula::Bot, alpha.clone()),
            RuleInstance::AndR { chi, alpha, beta } => seq(chi.clone(), and(alpha, beta)),
            RuleInstance::AndL1 { alpha, beta } => seq(and(alpha, beta), alpha.clone()),
            RuleInstance::AndL2 { alpha, beta } => seq(and(alpha, beta), beta.clone()),
            RuleInstance::OrR1 { alpha, beta } => seq(alpha.clone(), or(alpha, beta)),
            RuleInstance::OrR2 { alpha, beta } => seq(beta.clone(), or(alpha, beta)),
            RuleInstance::OrL { alpha, beta, chi } => seq(or(alpha, beta), chi.clone()),
            RuleInstance::DT0 { chi, alpha, beta } => seq(chi.clone(), imp(alpha, beta)),
            RuleInstance::ImpAnd { alpha, beta, gamma } => seq(
                and(&imp(alpha, beta), &imp(alpha, gamma)),
                imp(alpha, &and(beta, gamma)),
            ),
            RuleInstance::ImpTr { alpha, beta, gamma } => {
                seq(and(&imp(alpha, beta), &imp(beta, gamma)), imp(alpha, gamma))
            }
            RuleInstance::ImpOrS(p) => seq(
                and(&p.implications(), &p.consequent_implications()),
                imp(&p.guarded_antecedents(), &p.chi),
            ),
            RuleInstance::Abs { alpha } => {
                seq(and(alpha, &Formula::neg(alpha.clone())), Formula::Bot)
            }
            RuleInstance::DNI { alpha } => {
                seq(alpha.clone(), Formula::neg(Formula::neg(alpha.clone())))
            }
            RuleInstance::Refl1(p) => seq(
                and(&p.guarded_antecedents(), &p.implications()),
                p.chi.clone(),
            ),
            RuleInstance::Refl2(p) => seq(
                p.consequent_implications(),
                imp(&and(&p.guarded_antecedents(), &p.implications()), &p.chi),
            ),
        }
    }
}

/// Rule names without parameters, for sweeping over instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleKind {
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
    ImpOrS,
    Abs,
    DNI,
    Refl1,
    Refl2,
}

impl RuleKind {
    pub const BASIC: [RuleKind; 13] = [
        RuleKind::A,
        RuleKind::Cut,
        RuleKind::Bot,
        RuleKind::AndR,
        RuleKind::AndL1,
        RuleKind::AndL2,
        RuleKind::OrR1,
        RuleKind::OrR2,
        RuleKind::OrL,
        RuleKind::DT0,
        RuleKind::ImpAnd,
        RuleKind::ImpTr,
        RuleKind::ImpOrS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleKind::A => "A",
            RuleKind::Cut => "Cut",
            RuleKind::Bot => "Bot",
            RuleKind::AndR => "AndR",
            RuleKind::AndL1 => "AndL1",
            RuleKind::AndL2 => "AndL2",
            RuleKind::OrR1 => "OrR1",
            RuleKind::OrR2 => "OrR2",
            RuleKind::OrL => "OrL",
            RuleKind::DT0 => "DT0",
            RuleKind::ImpAnd => "ImpAnd",
            RuleKind::ImpTr => "ImpTr",
            RuleKind::ImpOrS => "ImpOrS",
            RuleKind::Abs => "Abs",
            RuleKind::DNI => "DNI",
            RuleKind::Refl1 => "Refl1",
            RuleKind::Refl2 => "Refl2",
        }
    }

    /// Builds an instance, drawing each parameter from `next`. Chain rules
    /// get `n` indexed triples.
    pub fn instantiate<F: FnMut() -> Formula>(self, mut next: F, n: usize) -> RuleInstance {
        let chain = |next: &mut F| ChainParams {
            alphas: (0..n).map(|_| next()).collect(),
            betas: (0..n).map(|_| next()).collect(),
            psis: (0..n).map(|_| next()).collect(),
            chi: next(),
        };
        match self {
            RuleKind::A => RuleInstance::A { alpha: next() },
            RuleKind::Cut => RuleInstance::Cut {
                alpha: next(),
                beta: next(),
                gamma: next(),
            },
            RuleKind::Bot => RuleInstance::Bot { alpha: next() },
            RuleKind::AndR => RuleInstance::AndR {
                chi: next(),
                alpha: next(),
                beta: next(),
            },
            RuleKind::AndL1 => RuleInstance::AndL1 {
                alpha: next(),
                beta: next(),
            },
            RuleKind::AndL2 => RuleInstance::AndL2 {
                alpha: next(),
                beta: next(),
            },
            RuleKind::OrR1 => RuleInstance::OrR1 {
                alpha: next(),
                beta: next(),
            },
            RuleKind::OrR2 => RuleInstance::OrR2 {
                alpha: next(),
                beta: next(),
            },
            RuleKind::OrL => RuleInstance::OrL {
                alpha: next(),
                beta: next(),
                chi: next(),
            },
            RuleKind::DT0 => RuleInstance::DT0 {
                chi: next(),
                alpha: next(),
                beta: next(),
            },
            RuleKind::ImpAnd => RuleInstance::ImpAnd {
                alpha: next(),
                beta: next(),
                gamma: next(),
            },
            RuleKind::ImpTr => RuleInstance::ImpTr {
                alpha: next(),
                beta: next(),
                gamma: next(),
            },
            RuleKind::ImpOrS => RuleInstance::ImpOrS(chain(&mut next)),
            RuleKind::Abs => RuleInstance::Abs { alpha: next() },
            RuleKind::DNI => RuleInstance::DNI { alpha: next() },
            RuleKind::Refl1 => RuleInstance::Refl1(chain(&mut next)),
            RuleKind::Refl2 => RuleInstance::Refl2(chain(&mut next)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn single(alpha: &str, beta: &str, psi: &str, chi: &str) -> ChainParams {
        ChainParams {
            alphas: vec![f(alpha)],
            betas: vec![f(beta)],
            psis: vec![f(psi)],
            chi: f(chi),
        }
    }

    #[test]
    fn refl1_modus_ponens_shape() {
        let r = RuleInstance::Refl1(single("p0", "p1", "top", "p1"));
        assert_eq!(r.premises(), vec![Sequent::new(f("top & p1"), f("p1"))]);
        assert_eq!(
            r.conclusion(),
            Sequent::new(f("(top & p0) & (p0 -> p1)"), f("p1"))
        );
    }

    #[test]
    fn chain_schemas_fold_right() {
        let p = ChainParams {
            alphas: vec![f("p0"), f("p1")],
            betas: vec![f("p2"), f("p3")],
            psis: vec![f("p4"), f("p5")],
            chi: f("p6"),
        };
        let s = RuleInstance::ImpOrS(p.clone()).conclusion();
        assert_eq!(
            s.lhs,
            f("((p0 -> p2) | (p1 -> p3)) & ((p4 & p2 -> p6) & (p5 & p3 -> p6))")
        );
        assert_eq!(s.rhs, f("(p4 & p0) & (p5 & p1) -> p6"));
        let s = RuleInstance::Refl2(p).conclusion();
        assert_eq!(
            s.rhs,
            f("((p4 & p0) & (p5 & p1)) & ((p0 -> p2) | (p1 -> p3)) -> p6")
        );
    }

    #[test]
    fn abs_and_dni() {
        assert_eq!(
            RuleInstance::Abs { alpha: f("p0") }.conclusion(),
            Sequent::new(f("p0 & ~p0"), Formula::Bot)
        );
        assert_eq!(
            RuleInstance::DNI { alpha: f("p0") }.conclusion(),
            Sequent::new(f("p0"), f("(p0 -> bot) -> bot"))
        );
    }
}
