mod demo;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sfpl::frame_props::classify;
use sfpl::icalc::{
    check_ideriv, saturate, ISystem, NotFoundReason, SaturateConfig, SaturateOutcome,
    DEFAULT_MAX_STEPS,
};
use sfpl::json::{
    derivation_from_json, ideriv_from_json, ideriv_to_json, iformula_to_json, iformulas_from_text,
    model_from_json, model_to_json,
};
use sfpl::search::{find_countermodel, ModelClass, EXHAUSTIVE_BOUND};
use sfpl::sequent::{check_derivation, System};
use sfpl::syntax::{parse, parse_iformula, Formula};

#[derive(Parser)]
#[command(
    name = "sfpl",
    version,
    about = "Propositional logic with strict implication over finite Kripke frames"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the truth set of a formula in a model.
    Eval {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        formula: String,
    },
    /// Check that every letter's value is a box-pre fixpoint.
    CheckModel { path: PathBuf },
    /// Decide the six frame conditions of a model file's frame.
    ClassifyFrame { path: PathBuf },
    /// Search models up to a world bound for a countermodel.
    FindCountermodel {
        #[arg(long, default_value = "all")]
        class: ClassArg,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long = "assume")]
        assumptions: Vec<String>,
        #[arg(long)]
        goal: String,
    },
    /// Check a sequent derivation file.
    CheckProof {
        #[arg(long)]
        system: SystemArg,
        path: PathBuf,
    },
    /// Check an i-derivation file.
    CheckIproof {
        #[arg(long)]
        system: ISystemArg,
        #[arg(long)]
        gamma: Option<String>,
        path: PathBuf,
    },
    /// Search for an i-derivation of a goal from premises.
    ProveI {
        #[arg(long)]
        system: ISystemArg,
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        premises: PathBuf,
        #[arg(long)]
        goal: String,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
    },
    /// Replay a bundled example against the engine.
    Demo { name: demo::DemoName },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    All,
    D1,
    D2,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    #[value(name = "K")]
    K,
    #[value(name = "F1")]
    F1,
    #[value(name = "F2")]
    F2,
}

#[derive(Clone, Copy, ValueEnum)]
enum ISystemArg {
    #[value(name = "I1")]
    I1,
    #[value(name = "I2")]
    I2,
}

/// A finished command: what to print and whether the verdict is positive.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn formula(text: &str) -> Result<Formula> {
    parse(text).map_err(|e| anyhow!("cannot parse {text:?}: {e} (at character {})", e.position()))
}

fn i_system(system: ISystemArg, gamma: Option<&str>) -> Result<ISystem> {
    match (system, gamma) {
        (ISystemArg::I1, None) => Ok(ISystem::I1),
        (ISystemArg::I1, Some(_)) => bail!("--gamma is only allowed with --system I2"),
        (ISystemArg::I2, Some(g)) => Ok(ISystem::I2(formula(g)?)),
        (ISystemArg::I2, None) => bail!("--system I2 requires --gamma"),
    }
}

fn run(command: Command) -> Result<Report> {
    match command {
        Command::Eval {
            model,
            formula: text,
        } => {
            let m = model_from_json(&read(&model)?)?;
            let f = formula(&text)?;
            let worlds = m.eval(&f).to_vec();
            Ok(Report {
                text: serde_json::to_string(&worlds)?,
                json: json!({ "formula": f.to_string(), "worlds": worlds }),
                ok: true,
            })
        }
        Command::CheckModel { path } => {
            let m = model_from_json(&read(&path)?)?;
            let report = m.validate();
            let failures: Vec<Value> = report
                .failures
                .iter()
                .map(|f| json!({ "letter": format!("p{}", f.letter), "value": f.value.to_vec(), "closure": f.closure.to_vec() }))
                .collect();
            Ok(Report {
                text: report.to_string(),
                json: json!({ "valid": report.is_valid(), "failures": failures }),
                ok: report.is_valid(),
            })
        }
        Command::ClassifyFrame { path } => {
            let m = model_from_json(&read(&path)?)?;
            let c = classify(m.frame());
            Ok(Report {
                text: c.to_string(),
                json: serde_json::to_value(&c)?,
                ok: true,
            })
        }
        Command::FindCountermodel {
            class,
            max_n,
            assumptions,
            goal,
        } => {
            let class = match class {
                ClassArg::All => ModelClass::AllBoxPre,
                ClassArg::D1 => ModelClass::D1,
                ClassArg::D2 => ModelClass::D2,
            };
            if max_n > EXHAUSTIVE_BOUND {
                bail!("--max-n {max_n} exceeds the exhaustive bound {EXHAUSTIVE_BOUND}");
            }
            let assumptions = assumptions
                .iter()
                .map(|a| formula(a))
                .collect::<Result<Vec<_>>>()?;
            let goal = formula(&goal)?;
            match find_countermodel(&assumptions, &goal, &class, max_n)? {
                None => Ok(Report {
                    text: format!("no countermodel in class {class} up to {max_n} worlds"),
                    json: json!({ "found": false, "class": class.name(), "max_n": max_n }),
                    ok: true,
                }),
                Some(r) => {
                    r.verify(&class)
                        .map_err(|e| anyhow!("countermodel failed its own check: {e}"))?;
                    let model = model_to_json(&r.model);
                    Ok(Report {
                        text: format!(
                            "{}\nworld: {}",
                            serde_json::to_string_pretty(&model)?,
                            r.world
                        ),
                        json: json!({
                            "found": true,
                            "class": class.name(),
                            "model": model,
                            "world": r.world,
                            "classification": r.class_certificate,
                        }),
                        ok: false,
                    })
                }
            }
        }
        Command::CheckProof { system, path } => {
            let d = derivation_from_json(&read(&path)?)?;
            let system = match system {
                SystemArg::K => System::K,
                SystemArg::F1 => System::F1,
                SystemArg::F2 => System::F2,
            };
            let conclusion = d.conclusion.to_string();
            Ok(match check_derivation(&d, system) {
                Ok(()) => Report {
                    text: format!("accepted in {system}: {conclusion}"),
                    json: json!({ "accepted": true, "system": system.to_string(), "conclusion": conclusion }),
                    ok: true,
                },
                Err(r) => Report {
                    text: format!("{r}"),
                    json: json!({ "accepted": false, "system": system.to_string(), "path": r.path.to_string(), "reason": r.reason.to_string() }),
                    ok: false,
                },
            })
        }
        Command::CheckIproof {
            system,
            gamma,
            path,
        } => {
            let system = i_system(system, gamma.as_deref())?;
            let d = ideriv_from_json(&read(&path)?)?;
            Ok(match check_ideriv(&d, &system) {
                Ok(open) => {
                    let mut text = format!("accepted in {system}: {}", d.conclusion);
                    for a in &open {
                        text.push_str(&format!("\n  assumes {a}"));
                    }
                    Report {
                        text,
                        json: json!({
                            "accepted": true,
                            "system": system.to_string(),
                            "conclusion": iformula_to_json(&d.conclusion),
                            "assumptions": open.iter().map(iformula_to_json).collect::<Vec<_>>(),
                        }),
                        ok: true,
                    }
                }
                Err(r) => Report {
                    text: format!("{r}"),
                    json: json!({ "accepted": false, "system": system.to_string(), "path": r.path.to_string(), "reason": r.reason.to_string() }),
                    ok: false,
                },
            })
        }
        Command::ProveI {
            system,
            gamma,
            premises,
            goal,
            max_steps,
        } => {
            let system = i_system(system, gamma.as_deref())?;
            let premises = iformulas_from_text(&read(&premises)?)?;
            let goal = parse_iformula(&goal)
                .map_err(|e| anyhow!("cannot parse goal: {e} (at character {})", e.position()))?;
            let config = SaturateConfig {
                universe: None,
                max_steps: Some(max_steps),
            };
            Ok(match saturate(&premises, &goal, &system, &config)? {
                SaturateOutcome::Found(d) => {
                    let declared: BTreeSet<_> = premises.iter().cloned().collect();
                    sfpl::icalc::check_ideriv_from(&d, &system, &declared)
                        .map_err(|r| anyhow!("prover produced a rejected certificate: {r}"))?;
                    let cert = ideriv_to_json(&d);
                    Report {
                        text: serde_json::to_string_pretty(&cert)?,
                        json: json!({ "found": true, "derivation": cert }),
                        ok: true,
                    }
                }
                SaturateOutcome::NotFound { reason, steps } => {
                    let reason = match reason {
                        NotFoundReason::SaturationComplete => "saturation_complete",
                        NotFoundReason::BudgetExhausted => "budget_exhausted",
                    };
                    Report {
                        text: format!("not found ({reason} after {steps} steps)"),
                        json: json!({ "found": false, "reason": reason, "steps": steps }),
                        ok: false,
                    }
                }
            })
        }
        Command::Demo { name } => demo::run(name),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("JSON values serialize")
                );
            } else {
                println!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
