use thiserror::Error;

use crate::syntax::Formula;

use super::derivation::{Derivation, MacroCall, Rule, Sequent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacroError {
    #[error("{name} expects {expected} premises, found {found}")]
    PremiseCount {
        name: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{name} premise should be {expected}, found {found}")]
    PremiseMismatch {
        name: &'static str,
        expected: Sequent,
        found: Sequent,
    },
    #[error("Mon: {0} is not among the new antecedents")]
    NotSublist(Formula),
    #[error("AndImpAnd needs equally long nonempty lists")]
    BadLists,
}

/// The premise sequents a macro call needs.
pub fn macro_premises(call: &MacroCall) -> Vec<Sequent> {
    match call {
        MacroCall::Mon { gamma, phi, .. } => {
            vec![Sequent::new(Formula::conj(gamma.clone()), phi.clone())]
        }
        MacroCall::NegAntitone { alpha, beta } => vec![Sequent::new(alpha.clone(), beta.clone())],
        _ => Vec::new(),
    }
}

/// The sequent a macro call concludes.
pub fn macro_conclusion(call: &MacroCall) -> Result<Sequent, MacroError> {
    Ok(match call {
        MacroCall::Mon { delta, phi, .. } => {
            Sequent::new(Formula::conj(delta.clone()), phi.clone())
        }
        MacroCall::Top { chi } => Sequent::new(chi.clone(), Formula::top()),
        MacroCall::ImpRefl { phi, chi } => {
            Sequent::new(chi.clone(), Formula::imp(phi.clone(), phi.clone()))
        }
        MacroCall::AndImpAnd { alphas, betas } => {
            if alphas.is_empty() || alphas.len() != betas.len() {
                return Err(MacroError::BadLists);
            }
            let lhs = Formula::conj(
                alphas
                    .iter()
                    .zip(betas)
                    .map(|(a, b)| Formula::imp(a.clone(), b.clone()))
                    .collect::<Vec<_>>(),
            );
            let rhs = Formula::imp(Formula::conj(alphas.clone()), Formula::conj(betas.clone()));
            Sequent::new(lhs, rhs)
        }
        MacroCall::NegAntitone { alpha, beta } => {
            Sequent::new(Formula::neg(beta.clone()), Formula::neg(alpha.clone()))
        }
    })
}

/// Expands a derived rule into a basic-rules tree, using the given
/// premise derivations where the rule's premises are needed.
pub fn expand_macro(call: &MacroCall, premises: &[Derivation]) -> Result<Derivation, MacroError> {
    let wanted = macro_premises(call);
    if premises.len() != wanted.len() {
        return Err(MacroError::PremiseCount {
            name: call.name(),
            expected: wanted.len(),
            found: premises.len(),
        });
    }
    for (w, p) in wanted.iter().zip(premises) {
        if *w != p.conclusion {
            return Err(MacroError::PremiseMismatch {
                name: call.name(),
                expected: w.clone(),
                found: p.conclusion.clone(),
            });
        }
    }
    match call {
        MacroCall::Top { chi } => Ok(top(chi)),
        MacroCall::ImpRefl { phi, chi } => {
            let id = Derivation::leaf(phi.clone(), phi.clone(), Rule::A);
            Ok(Derivation::dt0(chi.clone(), id))
        }
        MacroCall::NegAntitone { alpha, beta } => {
            let neg_beta = Formula::neg(beta.clone());
            let to_beta = Derivation::dt0(neg_beta.clone(), premises[0].clone());
            let id = Derivation::leaf(neg_beta.clone(), neg_beta.clone(), Rule::A);
            let both = Derivation::and_r(to_beta, id);
            let tr = Derivation::leaf(both.rhs().clone(), Formula::neg(alpha.clone()), Rule::ImpTr);
            Ok(Derivation::cut(both, tr))
        }
        MacroCall::Mon { gamma, delta, .. } => {
            if let Some(missing) = gamma.iter().find(|g| !delta.contains(g)) {
                return Err(MacroError::NotSublist(missing.clone()));
            }
            let weaken = conj_intro(delta, gamma);
            Ok(Derivation::cut(weaken, premises[0].clone()))
        }
        MacroCall::AndImpAnd { alphas, betas } => {
            macro_conclusion(call)?;
            Ok(and_imp_and(alphas, betas))
        }
    }
}

/// `χ ⊢ ⊥ → ⊥`
fn top(chi: &Formula) -> Derivation {
    Derivation::dt0(
        chi.clone(),
        Derivation::leaf(Formula::Bot, Formula::Bot, Rule::Bot),
    )
}

/// `⋀ items ⊢ items[k]`
fn projection(items: &[Formula], k: usize) -> Derivation {
    let whole = Formula::conj(items.to_vec());
    if items.len() == 1 {
        return Derivation::leaf(whole.clone(), whole, Rule::A);
    }
    let rest = Formula::conj(items[1..].to_vec());
    if k == 0 {
        return Derivation::leaf(whole, items[0].clone(), Rule::AndL1);
    }
    let drop_head = Derivation::leaf(whole, rest, Rule::AndL2);
    Derivation::cut(drop_head, projection(&items[1..], k - 1))
}

/// `⋀ delta ⊢ ⋀ gamma`, every member of `gamma` occurring in `delta`.
fn conj_intro(delta: &[Formula], gamma: &[Formula]) -> Derivation {
    let lhs = Formula::conj(delta.to_vec());
    match gamma {
        [] => top(&lhs),
        [g] => {
            let k = delta
                .iter()
                .position(|d| d == g)
                .expect("checked membership");
            projection(delta, k)
        }
        [g, rest @ ..] => {
            let k = delta
                .iter()
                .position(|d| d == g)
                .expect("checked membership");
            Derivation::and_r(projection(delta, k), conj_intro(delta, rest))
        }
    }
}

/// `⋀ⱼ(αⱼ→βⱼ) ⊢ ⋀ⱼαⱼ → ⋀ⱼβⱼ` by induction on the length.
fn and_imp_and(alphas: &[Formula], betas: &[Formula]) -> Derivation {
    let imps: Vec<Formula> = alphas
        .iter()
        .zip(betas)
        .map(|(a, b)| Formula::imp(a.clone(), b.clone()))
        .collect();
    let lhs = Formula::conj(imps.clone());
    if alphas.len() == 1 {
        return Derivation::leaf(lhs.clone(), lhs, Rule::A);
    }
    let (a, b) = (&alphas[0], &betas[0]);
    let a_all = Formula::conj(alphas.to_vec());
    let a_rest = Formula::conj(alphas[1..].to_vec());
    let lhs_rest = Formula::conj(imps[1..].to_vec());

    // lhs ⊢ a_all → a, then with a → b by (→tr)
    let to_head = Derivation::dt0(
        lhs.clone(),
        Derivation::leaf(a_all.clone(), a.clone(), Rule::AndL1),
    );
    let head_imp = Derivation::leaf(lhs.clone(), imps[0].clone(), Rule::AndL1);
    let pair = Derivation::and_r(to_head, head_imp);
    let tr = Derivation::leaf(
        pair.rhs().clone(),
        Formula::imp(a_all.clone(), b.clone()),
        Rule::ImpTr,
    );
    let first = Derivation::cut(pair, tr);

    // lhs ⊢ a_all → a_rest, then with the induction hypothesis
    let to_rest = Derivation::dt0(
        lhs.clone(),
        Derivation::leaf(a_all.clone(), a_rest, Rule::AndL2),
    );
    let rest_imp = Derivation::cut(
        Derivation::leaf(lhs.clone(), lhs_rest, Rule::AndL2),
        and_imp_and(&alphas[1..], &betas[1..]),
    );
    let b_rest = Formula::conj(betas[1..].to_vec());
    let pair = Derivation::and_r(to_rest, rest_imp);
    let tr = Derivation::leaf(
        pair.rhs().clone(),
        Formula::imp(a_all.clone(), b_rest),
        Rule::ImpTr,
    );
    let second = Derivation::cut(pair, tr);

    let both = Derivation::and_r(first, second);
    let joined = Derivation::leaf(
        both.rhs().clone(),
        Formula::imp(a_all, Formula::conj(betas.to_vec())),
        Rule::ImpAnd,
    );
    Derivation::cut(both, joined)
}
