//! Ready-made derivations: modus ponens from (Refl₁), and (Prop) certificates
//! for the necessity formula and the two worked examples.

use crate::icalc::{
    saturate, IDerivation, ISystem, SaturateConfig, SaturateOutcome, UniverseViolation,
};
use crate::sequent::{
    ChainParams, Derivation, IPremise, MacroCall, PropCertificate, Rule, RuleInstance, System,
};
use crate::syntax::{decompose, Formula, IFormula};

/// `α ∧ (α → β) ⊢ β` in F2, via (Refl₁) with `n = 1`, `ψ₁ = ⊤`, `χ = β`.
pub fn modus_ponens(alpha: &Formula, beta: &Formula) -> Derivation {
    let lhs = Formula::and(alpha.clone(), Formula::imp(alpha.clone(), beta.clone()));
    let params = ChainParams {
        alphas: vec![alpha.clone()],
        betas: vec![beta.clone()],
        psis: vec![Formula::top()],
        chi: beta.clone(),
    };
    let premise = Derivation::leaf(
        Formula::and(Formula::top(), beta.clone()),
        beta.clone(),
        Rule::AndL2,
    );
    let refl_lhs = Formula::and(
        Formula::and(Formula::top(), alpha.clone()),
        Formula::imp(alpha.clone(), beta.clone()),
    );
    let refl = Derivation::new(refl_lhs, beta.clone(), Rule::Refl1(params), vec![premise]);

    let top = Derivation::leaf(
        lhs.clone(),
        Formula::top(),
        Rule::Macro(MacroCall::Top { chi: lhs.clone() }),
    );
    let left = Derivation::leaf(lhs.clone(), alpha.clone(), Rule::AndL1);
    let right = Derivation::leaf(
        lhs.clone(),
        Formula::imp(alpha.clone(), beta.clone()),
        Rule::AndL2,
    );
    let rearranged = Derivation::and_r(Derivation::and_r(top, left), right);
    Derivation::cut(rearranged, refl)
}

/// `⋀items ⊢ items[k]`, by (Mon) from the axiom `items[k] ⊢ items[k]`.
pub fn conj_member(items: &[Formula], k: usize) -> Derivation {
    let member = items[k].clone();
    let premise = Derivation::leaf(member.clone(), member.clone(), Rule::A);
    let call = MacroCall::Mon {
        gamma: vec![member.clone()],
        delta: items.to_vec(),
        phi: member.clone(),
    };
    Derivation::new(
        Formula::conj(items.to_vec()),
        member,
        Rule::Macro(call),
        vec![premise],
    )
}

fn single_pair(a: Formula, b: Formula) -> Vec<(Formula, Formula)> {
    vec![(a, b)]
}

fn extracted(pairs: &[(Formula, Formula)]) -> IFormula {
    IFormula::from_lists(
        pairs.iter().map(|(a, _)| a.clone()),
        pairs.iter().map(|(_, b)| b.clone()),
    )
    .expect("nonempty pairs")
}

/// Chains (i-Cut) steps: each step cuts `formula` between the running
/// derivation and `other`, with the running one on the left when
/// `running_left`.
fn cut_chain(start: IDerivation, steps: Vec<(Formula, IDerivation, bool)>) -> IDerivation {
    steps
        .into_iter()
        .fold(start, |cur, (phi, other, running_left)| {
            let (left, right) = if running_left {
                (cur, other)
            } else {
                (other, cur)
            };
            let mut ante = left.conclusion.ante().clone();
            ante.extend(
                right
                    .conclusion
                    .ante()
                    .iter()
                    .filter(|f| **f != phi)
                    .cloned(),
            );
            let mut succ: std::collections::BTreeSet<Formula> = left
                .conclusion
                .succ()
                .iter()
                .filter(|f| **f != phi)
                .cloned()
                .collect();
            succ.extend(right.conclusion.succ().iter().cloned());
            let conclusion = IFormula::new(ante, succ).expect("nonempty sides");
            IDerivation::cut(conclusion, phi, left, right)
        })
}

/// `((⊤→p)∨q) ∧ ((p→⊥)∨q) ⊢ q` in F1 by (Prop₁).
pub fn necessity_prop1() -> Derivation {
    let p = Formula::letter(0);
    let q = Formula::letter(1);
    let theta1 = Formula::or(Formula::imp(Formula::top(), p.clone()), q.clone());
    let theta2 = Formula::or(Formula::imp(p.clone(), Formula::Bot), q.clone());
    let alpha = Formula::and(theta1.clone(), theta2.clone());

    let w1 = Derivation::leaf(alpha.clone(), theta1.clone(), Rule::AndL1);
    let w2 = Derivation::leaf(alpha.clone(), theta2.clone(), Rule::AndL2);
    let pairs1 = single_pair(Formula::top(), p.clone());
    let pairs2 = single_pair(p.clone(), Formula::Bot);
    let i_derivation = IDerivation::cut(
        IFormula::falsum(),
        p,
        IDerivation::assumption(extracted(&pairs1)),
        IDerivation::assumption(extracted(&pairs2)),
    );
    let cert = PropCertificate {
        witnesses: vec![(theta1, w1), (theta2, w2)],
        i_premises: vec![
            IPremise {
                witness: 0,
                pairs: pairs1,
            },
            IPremise {
                witness: 1,
                pairs: pairs2,
            },
        ],
        i_derivation,
    };
    Derivation::leaf(alpha, q, Rule::Prop1(Box::new(cert)))
}

/// The only decomposition of `theta` against `gamma`.
fn only_decomposition(theta: &Formula, gamma: &Formula) -> Vec<(Formula, Formula)> {
    let ds = decompose(theta, gamma);
    assert_eq!(ds.len(), 1, "expected a single decomposition of {theta}");
    ds.into_iter().next().expect("one").pairs
}

fn witnesses_for(gamma_set: &[Formula]) -> Vec<(Formula, Derivation)> {
    (0..gamma_set.len())
        .map(|k| (gamma_set[k].clone(), conj_member(gamma_set, k)))
        .collect()
}

/// `⋀Γ₁ ⊢ γ` in F1 by (Prop₁), for the first worked example.
pub fn example1_prop1() -> Derivation {
    let (gamma_set, gamma) = crate::bundled::example1_gamma();
    let i_premises: Vec<IPremise> = (0..gamma_set.len())
        .map(|k| IPremise {
            witness: k,
            pairs: only_decomposition(&gamma_set[k], &gamma),
        })
        .collect();
    let leaf = |k: usize| IDerivation::assumption(extracted(&i_premises[k].pairs));
    // {⊤}⊐{p0,p1} cut p0 with {p0}⊐{⊥}, then p1 with {p1}⊐{⊥}
    let i_derivation = cut_chain(
        leaf(0),
        vec![
            (Formula::letter(0), leaf(1), true),
            (Formula::letter(1), leaf(2), true),
        ],
    );
    let cert = PropCertificate {
        witnesses: witnesses_for(&gamma_set),
        i_premises,
        i_derivation,
    };
    Derivation::leaf(Formula::conj(gamma_set), gamma, Rule::Prop1(Box::new(cert)))
}

/// `⋀Γ₂ ⊢ γ` in F2 by (Prop₂), for the second worked example.
pub fn example2_prop2() -> Derivation {
    let (gamma_set, gamma) = crate::bundled::example2_gamma();
    let i_premises: Vec<IPremise> = (0..gamma_set.len())
        .map(|k| IPremise {
            witness: k,
            pairs: only_decomposition(&gamma_set[k], &gamma),
        })
        .collect();
    let leaf = |k: usize| IDerivation::assumption(extracted(&i_premises[k].pairs));
    let (a1, a2, b1, b2) = (
        Formula::letter(0),
        Formula::letter(1),
        Formula::letter(2),
        Formula::letter(3),
    );
    // {⊤} ⊐ {θ} where θ = (α₁→β₁) ∨ ((α₂→β₂) ∨ γ)
    let theta = i_premises[2].pairs[0].1.clone();
    let refl_pairs = vec![(a1.clone(), b1.clone()), (a2.clone(), b2.clone())];
    let refl = IDerivation::axiom(
        IFormula::from_lists(
            [a1.clone(), a2.clone(), theta.clone()],
            [b1.clone(), b2.clone()],
        )
        .expect("nonempty"),
        crate::icalc::IRule::GammaRefl { pairs: refl_pairs },
    );
    let i_derivation = cut_chain(
        leaf(2),
        vec![
            (theta, refl, true),
            (a1, leaf(0), false),
            (a2, leaf(1), false),
            (b1, leaf(3), true),
            (b2, leaf(4), true),
        ],
    );
    let cert = PropCertificate {
        witnesses: witnesses_for(&gamma_set),
        i_premises,
        i_derivation,
    };
    Derivation::leaf(Formula::conj(gamma_set), gamma, Rule::Prop2(Box::new(cert)))
}

/// Which (Prop) rule to certify with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropRule {
    Prop1,
    Prop2,
}

/// Builds a (Prop) certificate for `alpha ⊢ gamma` from the given theorems
/// of `alpha`, extracting every decomposition and searching for the
/// i-derivation with [`saturate`]. `None` when the search fails.
pub fn prop_by_saturation(
    rule: PropRule,
    alpha: &Formula,
    gamma: &Formula,
    witnesses: Vec<(Formula, Derivation)>,
) -> Result<Option<Derivation>, UniverseViolation> {
    let mut i_premises = Vec::new();
    for (k, (theta, _)) in witnesses.iter().enumerate() {
        for d in decompose(theta, gamma) {
            i_premises.push(IPremise {
                witness: k,
                pairs: d.pairs,
            });
        }
    }
    let mut premises: Vec<IFormula> = i_premises.iter().map(|p| extracted(&p.pairs)).collect();
    premises.sort();
    premises.dedup();
    let system = match rule {
        PropRule::Prop1 => ISystem::I1,
        PropRule::Prop2 => ISystem::I2(gamma.clone()),
    };
    let outcome = saturate(
        &premises,
        &IFormula::falsum(),
        &system,
        &SaturateConfig::default(),
    )?;
    let SaturateOutcome::Found(i_derivation) = outcome else {
        return Ok(None);
    };
    let cert = Box::new(PropCertificate {
        witnesses,
        i_premises,
        i_derivation,
    });
    let rule = match rule {
        PropRule::Prop1 => Rule::Prop1(cert),
        PropRule::Prop2 => Rule::Prop2(cert),
    };
    Ok(Some(Derivation::leaf(alpha.clone(), gamma.clone(), rule)))
}

/// A named derivation and the system it is checked in.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub system: System,
    pub derivation: Derivation,
}

fn p(i: u32) -> Formula {
    Formula::letter(i)
}

fn chain(
    alphas: Vec<Formula>,
    betas: Vec<Formula>,
    psis: Vec<Formula>,
    chi: Formula,
) -> ChainParams {
    ChainParams {
        alphas,
        betas,
        psis,
        chi,
    }
}

fn macro_node(call: MacroCall, premises: Vec<Derivation>) -> Derivation {
    let s = crate::sequent::macro_conclusion(&call).expect("well-formed macro call");
    Derivation::new(s.lhs, s.rhs, Rule::Macro(call), premises)
}

/// Every derivation shipped with the library, each accepted in its system.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let mut push = |name, system, derivation| {
        out.push(CorpusEntry {
            name,
            system,
            derivation,
        })
    };

    push(
        "identity",
        System::K,
        RuleInstance::A { alpha: p(0) }.derive(vec![]),
    );
    push(
        "ex_falso",
        System::K,
        RuleInstance::Bot { alpha: p(0) }.derive(vec![]),
    );

    let and01 = Formula::and(p(0), p(1));
    let and_comm = Derivation::and_r(
        RuleInstance::AndL2 {
            alpha: p(0),
            beta: p(1),
        }
        .derive(vec![]),
        RuleInstance::AndL1 {
            alpha: p(0),
            beta: p(1),
        }
        .derive(vec![]),
    );
    push("and_comm", System::K, and_comm);

    let or_comm = RuleInstance::OrL {
        alpha: p(0),
        beta: p(1),
        chi: Formula::or(p(1), p(0)),
    }
    .derive(vec![
        RuleInstance::OrR2 {
            alpha: p(1),
            beta: p(0),
        }
        .derive(vec![]),
        RuleInstance::OrR1 {
            alpha: p(1),
            beta: p(0),
        }
        .derive(vec![]),
    ]);
    push("or_comm", System::K, or_comm);

    let nested = Formula::and(p(1), p(2));
    let deep_projection = Derivation::cut(
        RuleInstance::AndL2 {
            alpha: p(0),
            beta: nested.clone(),
        }
        .derive(vec![]),
        RuleInstance::AndL2 {
            alpha: p(1),
            beta: p(2),
        }
        .derive(vec![]),
    );
    push("deep_projection", System::K, deep_projection);

    let weakened_imp = Derivation::dt0(
        p(3),
        RuleInstance::AndL1 {
            alpha: p(0),
            beta: p(1),
        }
        .derive(vec![]),
    );
    push("strict_projection", System::K, weakened_imp);

    push(
        "imp_and",
        System::K,
        RuleInstance::ImpAnd {
            alpha: p(0),
            beta: p(1),
            gamma: p(2),
        }
        .derive(vec![]),
    );
    push(
        "imp_trans",
        System::K,
        RuleInstance::ImpTr {
            alpha: p(0),
            beta: p(1),
            gamma: p(2),
        }
        .derive(vec![]),
    );
    push(
        "imp_or_split",
        System::K,
        RuleInstance::ImpOrS(chain(
            vec![p(0), p(1)],
            vec![p(2), p(3)],
            vec![p(4), Formula::top()],
            p(5),
        ))
        .derive(vec![]),
    );

    push(
        "macro_top",
        System::K,
        macro_node(MacroCall::Top { chi: p(0) }, vec![]),
    );
    push(
        "macro_imp_refl",
        System::K,
        macro_node(
            MacroCall::ImpRefl {
                phi: p(0),
                chi: p(1),
            },
            vec![],
        ),
    );
    push("macro_mon", System::K, conj_member(&[p(0), p(1), p(2)], 1));
    push(
        "macro_and_imp_and",
        System::K,
        macro_node(
            MacroCall::AndImpAnd {
                alphas: vec![p(0), p(2)],
                betas: vec![p(1), p(3)],
            },
            vec![],
        ),
    );
    push(
        "macro_neg_antitone",
        System::K,
        macro_node(
            MacroCall::NegAntitone {
                alpha: and01.clone(),
                beta: p(0),
            },
            vec![RuleInstance::AndL1 {
                alpha: p(0),
                beta: p(1),
            }
            .derive(vec![])],
        ),
    );

    push(
        "absurdity",
        System::F1,
        RuleInstance::Abs { alpha: p(0) }.derive(vec![]),
    );
    push(
        "double_negation_f1",
        System::F1,
        RuleInstance::DNI { alpha: p(0) }.derive(vec![]),
    );
    push(
        "double_negation_f2",
        System::F2,
        RuleInstance::DNI { alpha: and01 }.derive(vec![]),
    );
    let dni = RuleInstance::DNI { alpha: p(0) }.derive(vec![]);
    push(
        "triple_negation",
        System::F1,
        macro_node(
            MacroCall::NegAntitone {
                alpha: p(0),
                beta: Formula::neg(Formula::neg(p(0))),
            },
            vec![dni],
        ),
    );

    push("modus_ponens", System::F2, modus_ponens(&p(0), &p(1)));
    push(
        "reflexive_chain",
        System::F2,
        RuleInstance::Refl2(chain(
            vec![p(0), p(1)],
            vec![p(2), p(3)],
            vec![Formula::top(), p(4)],
            p(5),
        ))
        .derive(vec![]),
    );
    push("necessity_prop1", System::F1, necessity_prop1());
    push("example1_prop1", System::F1, example1_prop1());
    push("example2_prop2", System::F2, example2_prop2());

    let (gamma_set, gamma) = crate::bundled::example1_gamma();
    let alpha = Formula::conj(gamma_set.clone());
    let saturated = prop_by_saturation(PropRule::Prop1, &alpha, &gamma, witnesses_for(&gamma_set))
        .expect("universe covers the premises")
        .expect("saturation finds the first example");
    push("example1_saturated", System::F1, saturated);
    out
}
