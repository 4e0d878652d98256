use std::collections::BTreeSet;

use thiserror::Error;

use crate::icalc::{check_ideriv, IReject, ISystem};
use crate::path::{NodePath, PathStep};
use crate::syntax::{reconstruct_pattern, Formula, IFormula};

use super::derivation::{ChainParams, Derivation, PropCertificate, Rule, Sequent, System};
use super::macros::{expand_macro, MacroError};
use super::rules::RuleInstance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RejectReason {
    #[error("rule {rule} is not available in {system}")]
    Unavailable { rule: &'static str, system: System },
    #[error("{rule} expects {expected} premises, found {found}")]
    PremiseCount {
        rule: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{rule}: {detail}")]
    Shape { rule: &'static str, detail: String },
    #[error("{rule}: premise {index} should be {expected}, found {found}")]
    PremiseMismatch {
        rule: &'static str,
        index: usize,
        expected: Sequent,
        found: Sequent,
    },
    #[error("macro: {0}")]
    Macro(#[from] MacroError),
    #[error("witness {index}: {detail}")]
    Witness { index: usize, detail: String },
    #[error("i-derivation: {0}")]
    IDerivation(IReject),
    #[error("set consequence: {0}")]
    SetConsequence(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("rejected at {path}: {reason}")]
pub struct Reject {
    pub path: NodePath,
    pub reason: RejectReason,
}

fn shape(rule: &'static str, detail: impl Into<String>) -> RejectReason {
    RejectReason::Shape {
        rule,
        detail: detail.into(),
    }
}

/// Checks that every node of `d` is a correct instance of a rule of `system`.
pub fn check_derivation(d: &Derivation, system: System) -> Result<(), Reject> {
    check_node(d, system, &NodePath::root())
}

/// Checks a certificate for `Γ ⊢ α`: `gamma0` is drawn from `gamma`, and
/// `d` proves `⋀gamma0 ⊢ alpha`.
pub fn check_set_consequence(
    gamma: &[Formula],
    alpha: &Formula,
    gamma0: &[Formula],
    d: &Derivation,
    system: System,
) -> Result<(), Reject> {
    let reject = |detail: String| Reject {
        path: NodePath::root(),
        reason: RejectReason::SetConsequence(detail),
    };
    if let Some(f) = gamma0.iter().find(|f| !gamma.contains(f)) {
        return Err(reject(format!("{f} is not among the assumptions")));
    }
    let expected = Sequent::new(Formula::conj(gamma0.to_vec()), alpha.clone());
    if d.conclusion != expected {
        return Err(reject(format!(
            "derivation concludes {}, expected {expected}",
            d.conclusion
        )));
    }
    check_derivation(d, system)
}

/// Reads the schema parameters of a non-(Prop), non-macro node off its
/// conclusion and premises.
fn instance_of(d: &Derivation) -> Result<RuleInstance, RejectReason> {
    let name = d.rule.name();
    let (lhs, rhs) = (d.lhs().clone(), d.rhs().clone());
    let need =
        |o: Option<(&Formula, &Formula)>, what: &str| -> Result<(Formula, Formula), RejectReason> {
            o.map(|(a, b)| (a.clone(), b.clone()))
                .ok_or_else(|| shape(name, format!("expected {what}")))
        };
    let premise = |i: usize| -> Result<&Sequent, RejectReason> {
        d.premises
            .get(i)
            .map(|p| &p.conclusion)
            .ok_or(RejectReason::PremiseCount {
                rule: name,
                expected: i + 1,
                found: d.premises.len(),
            })
    };
    Ok(match &d.rule {
        Rule::A => RuleInstance::A { alpha: lhs },
        Rule::Cut => {
            let (left, right) = (premise(0)?, premise(1)?);
            RuleInstance::Cut {
                alpha: left.lhs.clone(),
                beta: left.rhs.clone(),
                gamma: right.rhs.clone(),
            }
        }
        Rule::Bot => RuleInstance::Bot { alpha: rhs },
        Rule::AndR => {
            let (alpha, beta) = need(rhs.as_and(), "a conjunction on the right")?;
            RuleInstance::AndR {
                chi: lhs,
                alpha,
                beta,
            }
        }
        Rule::AndL1 | Rule::AndL2 => {
            let (alpha, beta) = need(lhs.as_and(), "a conjunction on the left")?;
            if d.rule == Rule::AndL1 {
                RuleInstance::AndL1 { alpha, beta }
            } else {
                RuleInstance::AndL2 { alpha, beta }
            }
        }
        Rule::OrR1 | Rule::OrR2 => {
            let (alpha, beta) = need(rhs.as_or(), "a disjunction on the right")?;
            if d.rule == Rule::OrR1 {
                RuleInstance::OrR1 { alpha, beta }
            } else {
                RuleInstance::OrR2 { alpha, beta }
            }
        }
        Rule::OrL => {
            let (alpha, beta) = need(lhs.as_or(), "a disjunction on the left")?;
            RuleInstance::OrL {
                alpha,
                beta,
                chi: rhs,
            }
        }
        Rule::DT0 => {
            let (alpha, beta) = need(rhs.as_imp(), "an implication on the right")?;
            RuleInstance::DT0 {
                chi: lhs,
                alpha,
                beta,
            }
        }
        Rule::ImpAnd => {
            let (alpha, both) = need(rhs.as_imp(), "an implication on the right")?;
            let (beta, gamma) = need(both.as_and(), "a conjunctive consequent")?;
            RuleInstance::ImpAnd { alpha, beta, gamma }
        }
        Rule::ImpTr => {
            let (first, second) = need(lhs.as_and(), "a conjunction on the left")?;
            let (alpha, beta) = need(first.as_imp(), "an implication as first conjunct")?;
            let (_, gamma) = need(second.as_imp(), "an implication as second conjunct")?;
            RuleInstance::ImpTr { alpha, beta, gamma }
        }
        Rule::ImpOrS(p) => RuleInstance::ImpOrS(chain_ok(name, p)?.clone()),
        Rule::Abs => {
            let (alpha, _) = need(lhs.as_and(), "a conjunction on the left")?;
            RuleInstance::Abs { alpha }
        }
        Rule::DNI => RuleInstance::DNI { alpha: lhs },
        Rule::Refl1(p) => RuleInstance::Refl1(chain_ok(name, p)?.clone()),
        Rule::Refl2(p) => RuleInstance::Refl2(chain_ok(name, p)?.clone()),
        Rule::Prop1(_) | Rule::Prop2(_) | Rule::Macro(_) => unreachable!("handled by the caller"),
    })
}

fn chain_ok<'a>(rule: &'static str, p: &'a ChainParams) -> Result<&'a ChainParams, RejectReason> {
    if p.alphas.is_empty() {
        return Err(shape(rule, "needs n >= 1"));
    }
    if p.betas.len() != p.alphas.len() || p.psis.len() != p.alphas.len() {
        return Err(shape(rule, "alphas, betas and psis differ in length"));
    }
    Ok(p)
}

fn check_node(d: &Derivation, system: System, path: &NodePath) -> Result<(), Reject> {
    let reject = |reason| Reject {
        path: path.clone(),
        reason,
    };
    if !d.rule.available_in(system) {
        return Err(reject(RejectReason::Unavailable {
            rule: d.rule.name(),
            system,
        }));
    }
    match &d.rule {
        Rule::Macro(call) => {
            let expansion = expand_macro(call, &d.premises).map_err(|e| reject(e.into()))?;
            if expansion.conclusion != d.conclusion {
                return Err(reject(shape(
                    call.name(),
                    format!(
                        "derives {}, node claims {}",
                        expansion.conclusion, d.conclusion
                    ),
                )));
            }
            check_node(&expansion, system, &path.child(PathStep::Expansion))
        }
        Rule::Prop1(cert) | Rule::Prop2(cert) => {
            if !d.premises.is_empty() {
                return Err(reject(RejectReason::PremiseCount {
                    rule: d.rule.name(),
                    expected: 0,
                    found: d.premises.len(),
                }));
            }
            let isystem = match d.rule {
                Rule::Prop1(_) => ISystem::I1,
                _ => ISystem::I2(d.rhs().clone()),
            };
            check_prop(d, cert, &isystem, system, path)
        }
        _ => {
            let instance = instance_of(d).map_err(reject)?;
            let expected = instance.conclusion();
            if expected != d.conclusion {
                return Err(reject(shape(
                    d.rule.name(),
                    format!("conclusion should be {expected}"),
                )));
            }
            let wanted = instance.premises();
            if wanted.len() != d.premises.len() {
                return Err(reject(RejectReason::PremiseCount {
                    rule: d.rule.name(),
                    expected: wanted.len(),
                    found: d.premises.len(),
                }));
            }
            for (i, (w, p)) in wanted.iter().zip(&d.premises).enumerate() {
                if *w != p.conclusion {
                    return Err(reject(RejectReason::PremiseMismatch {
                        rule: d.rule.name(),
                        index: i,
                        expected: w.clone(),
                        found: p.conclusion.clone(),
                    }));
                }
            }
            for (i, p) in d.premises.iter().enumerate() {
                check_node(p, system, &path.child(PathStep::Premise(i)))?;
            }
            Ok(())
        }
    }
}

fn check_prop(
    d: &Derivation,
    cert: &PropCertificate,
    isystem: &ISystem,
    system: System,
    path: &NodePath,
) -> Result<(), Reject> {
    let reject = |reason| Reject {
        path: path.clone(),
        reason,
    };
    let (alpha, gamma) = (d.lhs(), d.rhs());

    for (i, (theta, wd)) in cert.witnesses.iter().enumerate() {
        let expected = Sequent::new(alpha.clone(), theta.clone());
        if wd.conclusion != expected {
            return Err(reject(RejectReason::Witness {
                index: i,
                detail: format!(
                    "derivation concludes {}, expected {expected}",
                    wd.conclusion
                ),
            }));
        }
        check_node(wd, system, &path.child(PathStep::Witness(i)))?;
    }

    let mut extracted = BTreeSet::new();
    for ip in &cert.i_premises {
        let Some((theta, _)) = cert.witnesses.get(ip.witness) else {
            return Err(reject(RejectReason::Witness {
                index: ip.witness,
                detail: "no such witness".into(),
            }));
        };
        if ip.pairs.is_empty() || reconstruct_pattern(&ip.pairs, gamma) != *theta {
            return Err(reject(RejectReason::Witness {
                index: ip.witness,
                detail: format!("pairs do not decompose {theta} against {gamma}"),
            }));
        }
        let i = IFormula::from_lists(
            ip.pairs.iter().map(|(a, _)| a.clone()),
            ip.pairs.iter().map(|(_, b)| b.clone()),
        )
        .expect("nonempty pairs");
        extracted.insert(i);
    }

    let ipath = path.child(PathStep::IDerivation);
    if cert.i_derivation.conclusion != IFormula::falsum() {
        return Err(Reject {
            path: ipath,
            reason: shape(d.rule.name(), "i-derivation must conclude {top} => {bot}"),
        });
    }
    let open = check_ideriv(&cert.i_derivation, isystem).map_err(|e| Reject {
        path: ipath.clone(),
        reason: RejectReason::IDerivation(e),
    })?;
    if open != extracted {
        let detail = match open.difference(&extracted).next() {
            Some(extra) => format!("assumption {extra} is not an extracted i-formula"),
            None => "some extracted i-formula is not used as an assumption".to_string(),
        };
        return Err(Reject {
            path: ipath,
            reason: shape(d.rule.name(), detail),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn axiom_in_k() {
        let d = Derivation::leaf(f("p0"), f("p0"), Rule::A);
        assert!(check_derivation(&d, System::K).is_ok());
        let bad = Derivation::leaf(f("p0"), f("p1"), Rule::A);
        assert!(check_derivation(&bad, System::K).is_err());
    }

    #[test]
    fn dni_gated_by_system() {
        let d = Derivation::leaf(f("p0"), f("(p0 -> bot) -> bot"), Rule::DNI);
        let err = check_derivation(&d, System::K).unwrap_err();
        assert!(matches!(err.reason, RejectReason::Unavailable { .. }));
        assert!(check_derivation(&d, System::F1).is_ok());
        assert!(check_derivation(&d, System::F2).is_ok());

        let abs = Derivation::leaf(f("p0 & ~p0"), Formula::Bot, Rule::Abs);
        assert!(check_derivation(&abs, System::F1).is_ok());
        assert!(check_derivation(&abs, System::F2).is_err());
    }

    #[test]
    fn cut_premises_must_chain() {
        let left = Derivation::leaf(f("p0 & p1"), f("p0"), Rule::AndL1);
        let right = Derivation::leaf(f("p0"), f("p0 | p2"), Rule::OrR1);
        let d = Derivation::cut(left.clone(), right);
        assert!(check_derivation(&d, System::K).is_ok());

        let wrong = Derivation::leaf(f("p1"), f("p1 | p2"), Rule::OrR1);
        let d = Derivation::new(f("p0 & p1"), f("p1 | p2"), Rule::Cut, vec![left, wrong]);
        let err = check_derivation(&d, System::K).unwrap_err();
        assert!(matches!(
            err.reason,
            RejectReason::PremiseMismatch { index: 1, .. }
        ));
    }

    #[test]
    fn failing_leaf_path() {
        let good = Derivation::leaf(f("p0"), f("p0"), Rule::A);
        let bad = Derivation::leaf(f("p0"), f("p0"), Rule::Bot);
        let d = Derivation::and_r(good, bad);
        let err = check_derivation(&d, System::K).unwrap_err();
        assert_eq!(err.path.to_string(), "root/premise[1]");
    }

    #[test]
    fn set_consequence() {
        let d = Derivation::leaf(f("p0"), f("p0"), Rule::A);
        assert!(
            check_set_consequence(&[f("p0"), f("p1")], &f("p0"), &[f("p0")], &d, System::K).is_ok()
        );
        let top = Derivation::leaf(f("top"), f("top"), Rule::A);
        assert!(check_set_consequence(&[], &f("top"), &[], &top, System::K).is_ok());
        let q = Derivation::leaf(f("p1"), f("p1"), Rule::A);
        let err =
            check_set_consequence(&[f("p0")], &f("p1"), &[f("p1")], &q, System::K).unwrap_err();
        assert!(matches!(err.reason, RejectReason::SetConsequence(_)));
    }

    #[test]
    fn chain_params_validated() {
        let p = ChainParams {
            alphas: vec![],
            betas: vec![],
            psis: vec![],
            chi: f("p0"),
        };
        let d = Derivation::leaf(f("p0"), f("p0"), Rule::ImpOrS(p));
        assert!(check_derivation(&d, System::K).is_err());
    }
}
