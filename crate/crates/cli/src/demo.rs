use anyhow::Result;
use clap::ValueEnum;
use serde_json::{json, Map, Value};

use sfpl::bundled;
use sfpl::certificates::{example1_prop1, example2_prop2, modus_ponens, necessity_prop1};
use sfpl::frame_props::classify;
use sfpl::icalc::{saturate, ISystem, SaturateConfig, SaturateOutcome};
use sfpl::json::model_to_json;
use sfpl::search::{enumerate_models, find_countermodel, ModelClass};
use sfpl::semantics::Model;
use sfpl::sequent::{check_derivation, Derivation, System};
use sfpl::syntax::{i_gamma, letters_of, parse, Formula, IFormula};

use crate::Report;

#[derive(Clone, Copy, ValueEnum)]
pub enum DemoName {
    Prop1Necessity,
    MpSurrogate,
    Example1,
    Example2,
}

struct Claims {
    lines: Vec<String>,
    items: Vec<Value>,
    ok: bool,
}

impl Claims {
    fn new() -> Self {
        Claims {
            lines: Vec::new(),
            items: Vec::new(),
            ok: true,
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn claim(&mut self, text: impl Into<String>, holds: bool) {
        let text = text.into();
        self.ok &= holds;
        self.lines
            .push(format!("[{}] {text}", if holds { "ok" } else { "FAIL" }));
        self.items.push(json!({ "claim": text, "holds": holds }));
    }

    fn finish(self, name: &str, extra: Map<String, Value>) -> Report {
        let mut body = Map::new();
        body.insert("demo".into(), json!(name));
        body.extend(extra);
        body.insert("claims".into(), Value::Array(self.items));
        body.insert("ok".into(), json!(self.ok));
        Report {
            text: self.lines.join("\n"),
            json: Value::Object(body),
            ok: self.ok,
        }
    }
}

fn f(text: &str) -> Formula {
    parse(text).expect("demo formula parses")
}

fn check_model(claims: &mut Claims, m: &Model, name: &str) -> Map<String, Value> {
    let report = m.validate();
    claims.claim(format!("{name} is a box-pre model"), report.is_valid());
    let c = classify(m.frame());
    claims.note(format!("classification:\n{c}"));
    let mut extra = Map::new();
    extra.insert("model".into(), model_to_json(m));
    extra.insert(
        "classification".into(),
        serde_json::to_value(&c).expect("serializable"),
    );
    extra
}

fn certificate(claims: &mut Claims, label: &str, d: &Derivation, system: System) {
    let verdict = check_derivation(d, system);
    claims.claim(
        format!("{label}: {} accepted in {system}", d.conclusion),
        verdict.is_ok(),
    );
}

/// Worlds, across all models of the class up to three worlds, satisfying
/// the assumptions but not the goal.
fn sweep(
    claims: &mut Claims,
    assumptions: &[Formula],
    goal: &Formula,
    class: &ModelClass,
) -> Result<()> {
    let letters = letters_of(assumptions.iter().chain([goal]));
    let mut models = 0;
    let mut bad = 0;
    for n in 1..=3 {
        for m in enumerate_models(n, &letters, class)? {
            models += 1;
            bad += m.eval_all(assumptions).difference(&m.eval(goal)).len();
        }
    }
    claims.claim(
        format!("no counterexample among {models} {class} models on at most 3 worlds"),
        bad == 0,
    );
    Ok(())
}

fn prove_falsum(
    claims: &mut Claims,
    gamma_set: &[Formula],
    gamma: &Formula,
    system: ISystem,
    expect: bool,
) -> Result<()> {
    let premises: Vec<IFormula> = i_gamma(gamma_set, gamma).into_iter().collect();
    let outcome = saturate(
        &premises,
        &IFormula::falsum(),
        &system,
        &SaturateConfig::default(),
    )?;
    let found = matches!(outcome, SaturateOutcome::Found(_));
    let verb = if expect { "derives" } else { "does not derive" };
    claims.claim(
        format!(
            "{system} {verb} {} from the extracted i-formulas",
            IFormula::falsum()
        ),
        found == expect,
    );
    Ok(())
}

pub fn run(name: DemoName) -> Result<Report> {
    let mut claims = Claims::new();
    match name {
        DemoName::Prop1Necessity => {
            let m = bundled::necessity_model()?;
            let names = bundled::NECESSITY_WORLD_NAMES;
            claims.note(format!(
                "worlds: {}",
                names
                    .iter()
                    .enumerate()
                    .map(|(i, n)| format!("{n}={i}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            claims.note(serde_json::to_string(&model_to_json(&m))?);
            let mut extra = check_model(&mut claims, &m, "the five-point model");
            let c = classify(m.frame());
            claims.claim(
                "frame is strongly pseudo-reflexive",
                c.strongly_pseudo_reflexive,
            );
            claims.claim(
                "frame is weakly pseudo-symmetric",
                c.weakly_pseudo_symmetric,
            );
            let premise = bundled::necessity_formula();
            claims.claim("b satisfies top -> p0", m.satisfies(1, &f("top -> p0")));
            claims.claim("c satisfies p0 -> bot", m.satisfies(2, &f("p0 -> bot")));
            claims.claim(format!("a satisfies {premise}"), m.satisfies(0, &premise));
            claims.claim("a does not satisfy p1", !m.satisfies(0, &f("p1")));
            certificate(
                &mut claims,
                "Prop1 certificate",
                &necessity_prop1(),
                System::F1,
            );
            extra.insert("world_names".into(), json!(names));
            Ok(claims.finish("prop1-necessity", extra))
        }
        DemoName::MpSurrogate => {
            let m = bundled::mp_surrogate()?;
            claims.note(serde_json::to_string(&model_to_json(&m))?);
            let extra = check_model(&mut claims, &m, "the three-world model");
            let c = classify(m.frame());
            claims.claim("frame is in D1", ModelClass::D1.admits(&c));
            claims.claim("frame is not in D2", !ModelClass::D2.admits(&c));
            claims.claim("world 0 satisfies p0", m.satisfies(0, &f("p0")));
            claims.claim("world 0 satisfies p0 -> p1", m.satisfies(0, &f("p0 -> p1")));
            claims.claim("world 0 does not satisfy p1", !m.satisfies(0, &f("p1")));
            let none = find_countermodel(&[f("p0"), f("p0 -> p1")], &f("p1"), &ModelClass::D2, 4)?;
            claims.claim("no D2 countermodel on at most 4 worlds", none.is_none());
            let mp = modus_ponens(&f("p0"), &f("p1"));
            certificate(&mut claims, "modus ponens via Refl1", &mp, System::F2);
            claims.claim(
                "the same derivation is rejected in F1",
                check_derivation(&mp, System::F1).is_err(),
            );
            Ok(claims.finish("mp-surrogate", extra))
        }
        DemoName::Example1 => {
            let (gamma_set, gamma) = bundled::example1_gamma();
            for g in &gamma_set {
                claims.note(format!("assume {g}"));
            }
            claims.note(format!("goal {gamma}"));
            sweep(&mut claims, &gamma_set, &gamma, &ModelClass::D1)?;
            certificate(
                &mut claims,
                "Prop1 certificate",
                &example1_prop1(),
                System::F1,
            );
            prove_falsum(&mut claims, &gamma_set, &gamma, ISystem::I1, true)?;
            Ok(claims.finish("example1", Map::new()))
        }
        DemoName::Example2 => {
            let (gamma_set, gamma) = bundled::example2_gamma();
            for g in &gamma_set {
                claims.note(format!("assume {g}"));
            }
            claims.note(format!("goal {gamma}"));
            sweep(&mut claims, &gamma_set, &gamma, &ModelClass::D2)?;
            certificate(
                &mut claims,
                "Prop2 certificate",
                &example2_prop2(),
                System::F2,
            );
            prove_falsum(
                &mut claims,
                &gamma_set,
                &gamma,
                ISystem::I2(gamma.clone()),
                true,
            )?;
            prove_falsum(&mut claims, &gamma_set, &gamma, ISystem::I1, false)?;
            Ok(claims.finish("example2", Map::new()))
        }
    }
}
