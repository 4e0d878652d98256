//! File formats: models, sequent derivations, i-derivations, i-formula lists.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::icalc::{IDerivation, IMacroCall, IRule};
use crate::semantics::{FiniteFrame, Model, SemanticsError, WorldSet};
use crate::sequent::{ChainParams, Derivation, IPremise, MacroCall, PropCertificate, Rule};
use crate::syntax::{parse, parse_iformula, Formula, IFormula, ParseError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{at}: cannot parse {text:?}: {error} (at character {})", error.position())]
    Formula {
        at: String,
        text: String,
        error: ParseError,
    },
    #[error("{at}: {detail}")]
    Shape { at: String, detail: String },
    #[error("{at}: {error}")]
    Semantics { at: String, error: SemanticsError },
}

fn shape(at: &str, detail: impl Into<String>) -> FormatError {
    FormatError::Shape {
        at: at.to_string(),
        detail: detail.into(),
    }
}

fn syntax(e: serde_json::Error) -> FormatError {
    FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn formula(at: &str, text: &str) -> Result<Formula, FormatError> {
    parse(text).map_err(|error| FormatError::Formula {
        at: at.to_string(),
        text: text.to_string(),
        error,
    })
}

fn formulas(at: &str, texts: &[String]) -> Result<Vec<Formula>, FormatError> {
    texts
        .iter()
        .enumerate()
        .map(|(i, t)| formula(&format!("{at}[{i}]"), t))
        .collect()
}

fn strings(fs: &[Formula]) -> Vec<String> {
    fs.iter().map(|f| f.to_string()).collect()
}

fn typed<T: for<'de> Deserialize<'de>>(at: &str, v: &Value) -> Result<T, FormatError> {
    serde_json::from_value(v.clone()).map_err(|e| shape(at, e.to_string()))
}

// ---------------------------------------------------------------- models

#[derive(Serialize, Deserialize)]
struct RawModel {
    worlds: usize,
    relation: Vec<(usize, usize)>,
    #[serde(default)]
    valuation: BTreeMap<String, Vec<usize>>,
}

fn letter_index(key: &str) -> Option<u32> {
    let digits = key.strip_prefix('p')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Reads a model file. The valuation is not required to be box-pre;
/// use [`Model::validate`] or [`Model::is_box_pre`] on the result.
pub fn model_from_json(text: &str) -> Result<Model, FormatError> {
    let raw: RawModel = serde_json::from_str(text).map_err(syntax)?;
    let frame =
        FiniteFrame::new(raw.worlds, raw.relation).map_err(|error| FormatError::Semantics {
            at: "relation".into(),
            error,
        })?;
    let mut valuation = BTreeMap::new();
    for (key, worlds) in raw.valuation {
        let at = format!("valuation.{key}");
        let letter =
            letter_index(&key).ok_or_else(|| shape(&at, "letters are written p<digits>"))?;
        if let Some(&w) = worlds.iter().find(|&&w| w >= raw.worlds) {
            return Err(FormatError::Semantics {
                at,
                error: SemanticsError::WorldOutOfRange {
                    world: w,
                    size: raw.worlds,
                },
            });
        }
        valuation.insert(letter, WorldSet::from_worlds(raw.worlds, worlds));
    }
    Model::kripke(frame, valuation).map_err(|error| FormatError::Semantics {
        at: "valuation".into(),
        error,
    })
}

/// Reads just the frame of a model file.
pub fn frame_from_json(text: &str) -> Result<FiniteFrame, FormatError> {
    model_from_json(text).map(|m| m.frame().clone())
}

pub fn model_to_json(model: &Model) -> Value {
    let valuation: Map<String, Value> = model
        .valuation()
        .iter()
        .map(|(l, v)| (format!("p{l}"), json!(v.to_vec())))
        .collect();
    json!({
        "worlds": model.size(),
        "relation": model.frame().relation(),
        "valuation": valuation,
    })
}

// ---------------------------------------------------------- i-formulas

#[derive(Serialize, Deserialize)]
struct RawIFormula {
    ante: Vec<String>,
    succ: Vec<String>,
}

fn iformula_from_raw(at: &str, raw: &RawIFormula) -> Result<IFormula, FormatError> {
    let ante = formulas(&format!("{at}.ante"), &raw.ante)?;
    let succ = formulas(&format!("{at}.succ"), &raw.succ)?;
    IFormula::from_lists(ante, succ).map_err(|e| shape(at, e.to_string()))
}

pub fn iformula_to_json(i: &IFormula) -> Value {
    json!({
        "ante": i.ante().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "succ": i.succ().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
    })
}

/// Reads a list of i-formulas: either a JSON array of `{"ante","succ"}`
/// objects or one `{..} => {..}` per line (blank lines and `#` comments
/// skipped).
pub fn iformulas_from_text(text: &str) -> Result<Vec<IFormula>, FormatError> {
    if text.trim_start().starts_with('[') {
        let raw: Vec<RawIFormula> = serde_json::from_str(text).map_err(syntax)?;
        return raw
            .iter()
            .enumerate()
            .map(|(i, r)| iformula_from_raw(&format!("[{i}]"), r))
            .collect();
    }
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let i = parse_iformula(line).map_err(|error| FormatError::Formula {
            at: format!("line {}", n + 1),
            text: line.to_string(),
            error,
        })?;
        out.push(i);
    }
    Ok(out)
}

// ------------------------------------------------------- i-derivations

#[derive(Serialize, Deserialize)]
struct RawIDerivation {
    rule: String,
    iformula: RawIFormula,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    params: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    premises: Vec<RawIDerivation>,
}

#[derive(Deserialize)]
struct CutParams {
    cut: String,
}

#[derive(Deserialize)]
struct PairParams {
    pairs: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct IMonParams {
    from: RawIFormula,
    to: RawIFormula,
}

#[derive(Deserialize)]
struct ICut1Params {
    theta: Vec<String>,
    #[serde(default)]
    delta1: Vec<String>,
    #[serde(default)]
    theta1: Vec<String>,
    #[serde(default)]
    delta2: Vec<String>,
    #[serde(default)]
    theta2: Vec<String>,
}

#[derive(Deserialize)]
struct ICut2Params {
    delta: Vec<String>,
    #[serde(default)]
    delta1: Vec<String>,
    #[serde(default)]
    theta1: Vec<String>,
    #[serde(default)]
    delta2: Vec<String>,
    #[serde(default)]
    theta2: Vec<String>,
}

#[derive(Deserialize)]
struct MonParams {
    extra: Vec<RawIFormula>,
}

fn pairs(at: &str, raw: &[(String, String)]) -> Result<Vec<(Formula, Formula)>, FormatError> {
    raw.iter()
        .enumerate()
        .map(|(i, (a, b))| {
            Ok((
                formula(&format!("{at}[{i}][0]"), a)?,
                formula(&format!("{at}[{i}][1]"), b)?,
            ))
        })
        .collect()
}

fn pairs_to_json(ps: &[(Formula, Formula)]) -> Value {
    json!(ps
        .iter()
        .map(|(a, b)| [a.to_string(), b.to_string()])
        .collect::<Vec<_>>())
}

fn imacro_from_raw(at: &str, params: &Value) -> Result<IMacroCall, FormatError> {
    let name = params
        .get("name")
        .and_then(Value::as_str)
        .unwrap_or_default();
    Ok(match name {
        "IMon" => {
            let p: IMonParams = typed(at, params)?;
            IMacroCall::IMon {
                from: iformula_from_raw(&format!("{at}.from"), &p.from)?,
                to: iformula_from_raw(&format!("{at}.to"), &p.to)?,
            }
        }
        "ICut1" => {
            let p: ICut1Params = typed(at, params)?;
            IMacroCall::ICut1 {
                theta: formulas(&format!("{at}.theta"), &p.theta)?,
                delta1: formulas(&format!("{at}.delta1"), &p.delta1)?,
                theta1: formulas(&format!("{at}.theta1"), &p.theta1)?,
                delta2: formulas(&format!("{at}.delta2"), &p.delta2)?,
                theta2: formulas(&format!("{at}.theta2"), &p.theta2)?,
            }
        }
        "ICut2" => {
            let p: ICut2Params = typed(at, params)?;
            IMacroCall::ICut2 {
                delta: formulas(&format!("{at}.delta"), &p.delta)?,
                delta1: formulas(&format!("{at}.delta1"), &p.delta1)?,
                theta1: formulas(&format!("{at}.theta1"), &p.theta1)?,
                delta2: formulas(&format!("{at}.delta2"), &p.delta2)?,
                theta2: formulas(&format!("{at}.theta2"), &p.theta2)?,
            }
        }
        "Mon" => {
            let p: MonParams = typed(at, params)?;
            let extra = p
                .extra
                .iter()
                .enumerate()
                .map(|(i, r)| iformula_from_raw(&format!("{at}.extra[{i}]"), r))
                .collect::<Result<_, _>>()?;
            IMacroCall::Mon { extra }
        }
        other => return Err(shape(at, format!("unknown i-macro {other:?}"))),
    })
}

fn imacro_to_json(call: &IMacroCall) -> Value {
    match call {
        IMacroCall::IMon { from, to } => json!({
            "name": "IMon",
            "from": iformula_to_json(from),
            "to": iformula_to_json(to),
        }),
        IMacroCall::ICut1 {
            theta,
            delta1,
            theta1,
            delta2,
            theta2,
        } => json!({
            "name": "ICut1",
            "theta": strings(theta),
            "delta1": strings(delta1),
            "theta1": strings(theta1),
            "delta2": strings(delta2),
            "theta2": strings(theta2),
        }),
        IMacroCall::ICut2 {
            delta,
            delta1,
            theta1,
            delta2,
            theta2,
        } => json!({
            "name": "ICut2",
            "delta": strings(delta),
            "delta1": strings(delta1),
            "theta1": strings(theta1),
            "delta2": strings(delta2),
            "theta2": strings(theta2),
        }),
        IMacroCall::Mon { extra } => json!({
            "name": "Mon",
            "extra": extra.iter().map(iformula_to_json).collect::<Vec<_>>(),
        }),
    }
}

fn ideriv_from_raw(at: &str, raw: &RawIDerivation) -> Result<IDerivation, FormatError> {
    let conclusion = iformula_from_raw(&format!("{at}.iformula"), &raw.iformula)?;
    let params = Value::Object(raw.params.clone());
    let pat = format!("{at}.params");
    let rule = match raw.rule.as_str() {
        "Assumption" => IRule::Assumption,
        "IA" => IRule::IA,
        "ICut" => {
            let p: CutParams = typed(&pat, &params)?;
            IRule::ICut {
                cut: formula(&format!("{pat}.cut"), &p.cut)?,
            }
        }
        "IAndL1" => IRule::IAndL1,
        "IAndL2" => IRule::IAndL2,
        "IAndR" => IRule::IAndR,
        "GammaRefl" => {
            let p: PairParams = typed(&pat, &params)?;
            IRule::GammaRefl {
                pairs: pairs(&format!("{pat}.pairs"), &p.pairs)?,
            }
        }
        "IMacro" => IRule::Macro(imacro_from_raw(&pat, &params)?),
        other => {
            return Err(shape(
                &format!("{at}.rule"),
                format!("unknown i-rule {other:?}"),
            ))
        }
    };
    let premises = raw
        .premises
        .iter()
        .enumerate()
        .map(|(i, p)| ideriv_from_raw(&format!("{at}.premises[{i}]"), p))
        .collect::<Result<_, _>>()?;
    Ok(IDerivation::new(conclusion, rule, premises))
}

fn ideriv_value(at: &str, v: &Value) -> Result<IDerivation, FormatError> {
    let raw: RawIDerivation = typed(at, v)?;
    ideriv_from_raw(at, &raw)
}

pub fn ideriv_from_json(text: &str) -> Result<IDerivation, FormatError> {
    let v: Value = serde_json::from_str(text).map_err(syntax)?;
    ideriv_value("root", &v)
}

pub fn ideriv_to_json(d: &IDerivation) -> Value {
    let params = match &d.rule {
        IRule::ICut { cut } => json!({ "cut": cut.to_string() }),
        IRule::GammaRefl { pairs } => json!({ "pairs": pairs_to_json(pairs) }),
        IRule::Macro(call) => imacro_to_json(call),
        _ => json!({}),
    };
    let mut node = Map::new();
    node.insert("rule".into(), json!(d.rule.name()));
    node.insert("iformula".into(), iformula_to_json(&d.conclusion));
    if params.as_object().is_some_and(|m| !m.is_empty()) {
        node.insert("params".into(), params);
    }
    if !d.premises.is_empty() {
        node.insert(
            "premises".into(),
            json!(d.premises.iter().map(ideriv_to_json).collect::<Vec<_>>()),
        );
    }
    Value::Object(node)
}

// -------------------------------------------------------- derivations

#[derive(Deserialize)]
struct RawDerivation {
    rule: String,
    lhs: String,
    rhs: String,
    #[serde(default)]
    params: Map<String, Value>,
    #[serde(default)]
    premises: Vec<Value>,
    #[serde(default)]
    witnesses: Vec<RawWitness>,
    #[serde(default)]
    i_premises: Vec<RawIPremise>,
    #[serde(default)]
    i_derivation: Option<Value>,
}

#[derive(Deserialize)]
struct RawWitness {
    formula: String,
    derivation: Value,
}

#[derive(Deserialize)]
struct RawIPremise {
    witness: usize,
    pairs: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct RawChain {
    alphas: Vec<String>,
    betas: Vec<String>,
    psis: Vec<String>,
    chi: String,
}

#[derive(Deserialize)]
struct MonSeqParams {
    gamma: Vec<String>,
    delta: Vec<String>,
    phi: String,
}

#[derive(Deserialize)]
struct ChiParams {
    chi: String,
}

#[derive(Deserialize)]
struct ImpReflParams {
    phi: String,
    chi: String,
}

#[derive(Deserialize)]
struct AndImpAndParams {
    alphas: Vec<String>,
    betas: Vec<String>,
}

#[derive(Deserialize)]
struct NegAntitoneParams {
    alpha: String,
    beta: String,
}

fn chain(at: &str, params: &Value) -> Result<ChainParams, FormatError> {
    let raw: RawChain = typed(at, params)?;
    Ok(ChainParams {
        alphas: formulas(&format!("{at}.alphas"), &raw.alphas)?,
        betas: formulas(&format!("{at}.betas"), &raw.betas)?,
        psis: formulas(&format!("{at}.psis"), &raw.psis)?,
        chi: formula(&format!("{at}.chi"), &raw.chi)?,
    })
}

fn chain_to_json(p: &ChainParams) -> Value {
    json!({
        "alphas": strings(&p.alphas),
        "betas": strings(&p.betas),
        "psis": strings(&p.psis),
        "chi": p.chi.to_string(),
    })
}

fn macro_from_raw(at: &str, params: &Value) -> Result<MacroCall, FormatError> {
    let name = params
        .get("name")
        .and_then(Value::as_str)
        .unwrap_or_default();
    Ok(match name {
        "Mon" => {
            let p: MonSeqParams = typed(at, params)?;
            MacroCall::Mon {
                gamma: formulas(&format!("{at}.gamma"), &p.gamma)?,
                delta: formulas(&format!("{at}.delta"), &p.delta)?,
                phi: formula(&format!("{at}.phi"), &p.phi)?,
            }
        }
        "Top" => {
            let p: ChiParams = typed(at, params)?;
            MacroCall::Top {
                chi: formula(&format!("{at}.chi"), &p.chi)?,
            }
        }
        "ImpRefl" => {
            let p: ImpReflParams = typed(at, params)?;
            MacroCall::ImpRefl {
                phi: formula(&format!("{at}.phi"), &p.phi)?,
                chi: formula(&format!("{at}.chi"), &p.chi)?,
            }
        }
        "AndImpAnd" => {
            let p: AndImpAndParams = typed(at, params)?;
            MacroCall::AndImpAnd {
                alphas: formulas(&format!("{at}.alphas"), &p.alphas)?,
                betas: formulas(&format!("{at}.betas"), &p.betas)?,
            }
        }
        "NegAntitone" => {
            let p: NegAntitoneParams = typed(at, params)?;
            MacroCall::NegAntitone {
                alpha: formula(&format!("{at}.alpha"), &p.alpha)?,
                beta: formula(&format!("{at}.beta"), &p.beta)?,
            }
        }
        other => return Err(shape(at, format!("unknown macro {other:?}"))),
    })
}

fn macro_to_json(call: &MacroCall) -> Value {
    match call {
        MacroCall::Mon { gamma, delta, phi } => json!({
            "name": "Mon",
            "gamma": strings(gamma),
            "delta": strings(delta),
            "phi": phi.to_string(),
        }),
        MacroCall::Top { chi } => json!({ "name": "Top", "chi": chi.to_string() }),
        MacroCall::ImpRefl { phi, chi } => json!({
            "name": "ImpRefl",
            "phi": phi.to_string(),
            "chi": chi.to_string(),
        }),
        MacroCall::AndImpAnd { alphas, betas } => json!({
            "name": "AndImpAnd",
            "alphas": strings(alphas),
            "betas": strings(betas),
        }),
        MacroCall::NegAntitone { alpha, beta } => json!({
            "name": "NegAntitone",
            "alpha": alpha.to_string(),
            "beta": beta.to_string(),
        }),
    }
}

fn prop_from_raw(at: &str, raw: &RawDerivation) -> Result<PropCertificate, FormatError> {
    let witnesses = raw
        .witnesses
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let wat = format!("{at}.witnesses[{i}]");
            Ok((
                formula(&format!("{wat}.formula"), &w.formula)?,
                derivation_value(&format!("{wat}.derivation"), &w.derivation)?,
            ))
        })
        .collect::<Result<_, FormatError>>()?;
    let i_premises = raw
        .i_premises
        .iter()
        .enumerate()
        .map(|(i, p)| {
            Ok(IPremise {
                witness: p.witness,
                pairs: pairs(&format!("{at}.i_premises[{i}].pairs"), &p.pairs)?,
            })
        })
        .collect::<Result<_, FormatError>>()?;
    let iat = format!("{at}.i_derivation");
    let i_derivation = match &raw.i_derivation {
        Some(v) => ideriv_value(&iat, v)?,
        None => return Err(shape(&iat, "missing")),
    };
    Ok(PropCertificate {
        witnesses,
        i_premises,
        i_derivation,
    })
}

fn derivation_value(at: &str, v: &Value) -> Result<Derivation, FormatError> {
    let raw: RawDerivation = typed(at, v)?;
    let lhs = formula(&format!("{at}.lhs"), &raw.lhs)?;
    let rhs = formula(&format!("{at}.rhs"), &raw.rhs)?;
    let params = Value::Object(raw.params.clone());
    let pat = format!("{at}.params");
    let rule = match raw.rule.as_str() {
        "A" => Rule::A,
        "Cut" => Rule::Cut,
        "Bot" => Rule::Bot,
        "AndR" => Rule::AndR,
        "AndL1" => Rule::AndL1,
        "AndL2" => Rule::AndL2,
        "OrR1" => Rule::OrR1,
        "OrR2" => Rule::OrR2,
        "OrL" => Rule::OrL,
        "DT0" => Rule::DT0,
        "ImpAnd" => Rule::ImpAnd,
        "ImpTr" => Rule::ImpTr,
        "ImpOrS" => Rule::ImpOrS(chain(&pat, &params)?),
        "Abs" => Rule::Abs,
        "DNI" => Rule::DNI,
        "Refl1" => Rule::Refl1(chain(&pat, &params)?),
        "Refl2" => Rule::Refl2(chain(&pat, &params)?),
        "Prop1" => Rule::Prop1(Box::new(prop_from_raw(at, &raw)?)),
        "Prop2" => Rule::Prop2(Box::new(prop_from_raw(at, &raw)?)),
        "Macro" => Rule::Macro(macro_from_raw(&pat, &params)?),
        other => {
            return Err(shape(
                &format!("{at}.rule"),
                format!("unknown rule {other:?}"),
            ))
        }
    };
    let premises = raw
        .premises
        .iter()
        .enumerate()
        .map(|(i, p)| derivation_value(&format!("{at}.premises[{i}]"), p))
        .collect::<Result<_, _>>()?;
    Ok(Derivation::new(lhs, rhs, rule, premises))
}

pub fn derivation_from_json(text: &str) -> Result<Derivation, FormatError> {
    let v: Value = serde_json::from_str(text).map_err(syntax)?;
    derivation_value("root", &v)
}

pub fn derivation_to_json(d: &Derivation) -> Value {
    let mut node = Map::new();
    node.insert("rule".into(), json!(d.rule.name()));
    node.insert("lhs".into(), json!(d.lhs().to_string()));
    node.insert("rhs".into(), json!(d.rhs().to_string()));
    let params = match &d.rule {
        Rule::ImpOrS(p) | Rule::Refl1(p) | Rule::Refl2(p) => Some(chain_to_json(p)),
        Rule::Macro(call) => Some(macro_to_json(call)),
        _ => None,
    };
    if let Some(p) = params {
        node.insert("params".into(), p);
    }
    if !d.premises.is_empty() {
        node.insert(
            "premises".into(),
            json!(d
                .premises
                .iter()
                .map(derivation_to_json)
                .collect::<Vec<_>>()),
        );
    }
    if let Rule::Prop1(cert) | Rule::Prop2(cert) = &d.rule {
        let witnesses: Vec<Value> = cert
            .witnesses
            .iter()
            .map(
                |(f, wd)| json!({ "formula": f.to_string(), "derivation": derivation_to_json(wd) }),
            )
            .collect();
        let i_premises: Vec<Value> = cert
            .i_premises
            .iter()
            .map(|p| json!({ "witness": p.witness, "pairs": pairs_to_json(&p.pairs) }))
            .collect();
        node.insert("witnesses".into(), json!(witnesses));
        node.insert("i_premises".into(), json!(i_premises));
        node.insert("i_derivation".into(), ideriv_to_json(&cert.i_derivation));
    }
    Value::Object(node)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequent::Sequent;

    #[test]
    fn model_round_trip() {
        let text = r#"{"worlds": 3, "relation": [[0,1],[0,2],[1,2],[2,2]], "valuation": {"p0": [0,1,2], "p1": [1,2]}}"#;
        let m = model_from_json(text).unwrap();
        assert!(m.is_box_pre());
        let again = model_from_json(&model_to_json(&m).to_string()).unwrap();
        assert_eq!(again.frame(), m.frame());
        assert_eq!(again.valuation(), m.valuation());
    }

    #[test]
    fn model_errors() {
        assert!(matches!(
            model_from_json("{"),
            Err(FormatError::Syntax { .. })
        ));
        let bad_world = r#"{"worlds": 1, "relation": [], "valuation": {"p0": [3]}}"#;
        assert!(matches!(
            model_from_json(bad_world),
            Err(FormatError::Semantics { .. })
        ));
        let bad_letter = r#"{"worlds": 1, "relation": [], "valuation": {"q": [0]}}"#;
        assert!(matches!(
            model_from_json(bad_letter),
            Err(FormatError::Shape { .. })
        ));
        let frame_only = r#"{"worlds": 2, "relation": [[0,1]]}"#;
        assert_eq!(
            frame_from_json(frame_only).unwrap().relation(),
            vec![(0, 1)]
        );
    }

    #[test]
    fn derivation_round_trip() {
        let text = r#"{"rule": "Cut", "lhs": "p0 & p1", "rhs": "p0 | p2", "premises": [
            {"rule": "AndL1", "lhs": "p0 & p1", "rhs": "p0"},
            {"rule": "OrR1", "lhs": "p0", "rhs": "p0 | p2"}]}"#;
        let d = derivation_from_json(text).unwrap();
        assert_eq!(
            d.conclusion,
            Sequent::new(parse("p0 & p1").unwrap(), parse("p0 | p2").unwrap())
        );
        let again = derivation_from_json(&derivation_to_json(&d).to_string()).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn formula_error_location() {
        let text = r#"{"rule": "A", "lhs": "p0 & p1 | p2", "rhs": "p0"}"#;
        match derivation_from_json(text) {
            Err(FormatError::Formula { at, error, .. }) => {
                assert_eq!(at, "root.lhs");
                assert_eq!(error.position(), 8);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn iformula_lists() {
        let lines = "# premises\n{top} => {p0, p1}\n\n{p0} => {bot}\n";
        assert_eq!(iformulas_from_text(lines).unwrap().len(), 2);
        let arr = r#"[{"ante": ["top"], "succ": ["p0"]}]"#;
        assert_eq!(iformulas_from_text(arr).unwrap().len(), 1);
        assert!(iformulas_from_text(r#"[{"ante": [], "succ": ["p0"]}]"#).is_err());
    }

    #[test]
    fn ideriv_round_trip() {
        let text = r#"{"rule": "ICut", "iformula": {"ante": ["top"], "succ": ["bot"]},
            "params": {"cut": "p0"},
            "premises": [
              {"rule": "Assumption", "iformula": {"ante": ["top"], "succ": ["p0"]}},
              {"rule": "Assumption", "iformula": {"ante": ["p0"], "succ": ["bot"]}}]}"#;
        let d = ideriv_from_json(text).unwrap();
        assert_eq!(d.premises.len(), 2);
        assert_eq!(
            ideriv_from_json(&ideriv_to_json(&d).to_string()).unwrap(),
            d
        );
    }
}
