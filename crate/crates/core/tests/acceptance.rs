//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines are always printed.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use sfpl::bundled;
use sfpl::certificates::corpus;
use sfpl::frame_props::{classify, correspondence_countermodel, FrameProperty};
use sfpl::icalc::{
    check_ideriv, check_ideriv_from, saturate, IDerivation, IRule, ISystem, SaturateConfig,
    SaturateOutcome,
};
use sfpl::sample::FormulaSampler;
use sfpl::search::{
    check_rule_instance, enumerate_class_frames, enumerate_frames, enumerate_kripke_models,
    enumerate_models, find_countermodel, frame_models, random_model, Correctness, ModelClass,
};
use sfpl::semantics::{FiniteFrame, Model, WorldSet};
use sfpl::sequent::{check_derivation, RuleInstance, RuleKind, Sequent, System};
use sfpl::syntax::{i_gamma, letters_of, parse, reconstruct_pattern, Formula, IFormula};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn f(text: &str) -> Formula {
    parse(text).expect("test formula parses")
}

fn letters(ls: &[u32]) -> BTreeSet<u32> {
    ls.iter().copied().collect()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn sequent_holds(model: &Model, s: &Sequent) -> bool {
    model.eval(&s.lhs).is_subset(&model.eval(&s.rhs))
}

fn random_fixpoint_model(
    frame: &FiniteFrame,
    fixpoints: &[WorldSet],
    ls: &BTreeSet<u32>,
    rng: &mut ChaCha8Rng,
) -> Model {
    let valuation = ls
        .iter()
        .map(|&l| (l, *fixpoints.choose(rng).expect("fixpoints")))
        .collect();
    Model::new(frame.clone(), valuation).expect("fixpoint valuation")
}

fn all_frames_up_to(n: usize) -> Vec<FiniteFrame> {
    (1..=n)
        .flat_map(|k| enumerate_frames(k).expect("within bound"))
        .collect()
}

/// Counts worlds satisfying every assumption but not the goal, over every
/// model of the class up to three worlds.
fn sweep(assumptions: &[Formula], goal: &Formula, class: &ModelClass) -> (usize, usize) {
    let ls = letters_of(assumptions.iter().chain([goal]));
    (1..=3)
        .map(|n| {
            let frames = enumerate_class_frames(n, class).expect("within bound");
            frames
                .par_iter()
                .map(|frame| {
                    let mut models = 0;
                    let mut bad = 0;
                    for m in frame_models(frame, &ls) {
                        models += 1;
                        let sat = m.eval_all(assumptions);
                        bad += sat.difference(&m.eval(goal)).len();
                    }
                    (models, bad)
                })
                .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
        })
        .fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
}

fn criterion1() -> Outcome {
    let m = bundled::necessity_model().map_err(|e| e.to_string())?;
    ensure(m.validate().is_valid(), "model is not box-pre")?;
    let c = classify(m.frame());
    ensure(c.strongly_pseudo_reflexive, "not strongly pseudo-reflexive")?;
    ensure(c.weakly_pseudo_symmetric, "not weakly pseudo-symmetric")?;
    let (a, b, cc) = (0, 1, 2);
    ensure(
        m.satisfies(b, &f("top -> p0")),
        "b does not satisfy top -> p",
    )?;
    ensure(
        m.satisfies(cc, &f("p0 -> bot")),
        "c does not satisfy p -> bot",
    )?;
    ensure(
        m.satisfies(a, &bundled::necessity_formula()),
        "a does not satisfy the premise",
    )?;
    ensure(!m.satisfies(a, &f("p1")), "a satisfies q")?;
    Ok("valid, classified, a satisfies the premise and refutes q".into())
}

fn criterion2() -> Outcome {
    let assumptions = [f("p0"), f("p0 -> p1")];
    let goal = f("p1");
    let report = find_countermodel(&assumptions, &goal, &ModelClass::D1, 3)
        .map_err(|e| e.to_string())?
        .ok_or("no D1 countermodel up to 3 worlds")?;
    report.verify(&ModelClass::D1)?;

    let surrogate = bundled::mp_surrogate().map_err(|e| e.to_string())?;
    ensure(
        surrogate.validate().is_valid(),
        "bundled surrogate is not box-pre",
    )?;
    ensure(
        ModelClass::D1.admits(&classify(surrogate.frame())),
        "bundled surrogate is not D1",
    )?;
    ensure(
        surrogate
            .eval_all(&assumptions)
            .difference(&surrogate.eval(&goal))
            .contains(0),
        "bundled surrogate does not refute at world 0",
    )?;

    let start = Instant::now();
    let none =
        find_countermodel(&assumptions, &goal, &ModelClass::D2, 4).map_err(|e| e.to_string())?;
    ensure(none.is_none(), "found a D2 countermodel")?;
    Ok(format!(
        "D1 countermodel on {} worlds at world {}; none in D2 up to 4 worlds ({:.1?})",
        report.model.size(),
        report.world,
        start.elapsed()
    ))
}

fn criterion3() -> Outcome {
    let (gamma_set, gamma) = bundled::example1_gamma();
    let (models, bad) = sweep(&gamma_set, &gamma, &ModelClass::D1);
    ensure(bad == 0, format!("{bad} counterexample worlds"))?;
    Ok(format!("{models} D1 models, 0 counterexamples"))
}

fn criterion4() -> Outcome {
    let (gamma_set, gamma) = bundled::example2_gamma();
    let (models, bad) = sweep(&gamma_set, &gamma, &ModelClass::D2);
    ensure(bad == 0, format!("{bad} counterexample worlds"))?;
    Ok(format!("{models} D2 models, 0 counterexamples"))
}

fn criterion5() -> Outcome {
    let p0 = f("p0");
    let cases = [
        (FrameProperty::StronglyPseudoReflexive, RuleKind::Abs),
        (FrameProperty::WeaklyPseudoSymmetric, RuleKind::DNI),
    ];
    let sampler = FormulaSampler::new(2, 3);
    let ls = letters(&[0, 1]);
    let frames = all_frames_up_to(3);
    let mut refuted = 0;
    let mut sampled = 0;
    for (property, kind) in cases {
        let fixed = match kind {
            RuleKind::Abs => RuleInstance::Abs { alpha: p0.clone() },
            _ => RuleInstance::DNI { alpha: p0.clone() },
        };
        let results: Vec<Result<(usize, usize), String>> = frames
            .par_iter()
            .enumerate()
            .map(|(i, frame)| {
                let c = classify(frame);
                if let Some(w) = c.witness(property) {
                    let m =
                        correspondence_countermodel(frame, w.world).map_err(|e| e.to_string())?;
                    return match check_rule_instance(&m, &fixed.premises(), &fixed.conclusion()) {
                        Correctness::Incorrect { .. } => Ok((1, 0)),
                        Correctness::Correct => Err(format!(
                            "{} not refuted on frame {:?} failing {property}",
                            kind.name(),
                            frame.relation()
                        )),
                    };
                }
                let fixpoints = frame.enumerate_fixpoints().map_err(|e| e.to_string())?;
                let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
                for _ in 0..500 {
                    let inst = kind.instantiate(|| sampler.sample(&mut rng), 1);
                    let m = random_fixpoint_model(frame, &fixpoints, &ls, &mut rng);
                    if let Correctness::Incorrect { world } =
                        check_rule_instance(&m, &inst.premises(), &inst.conclusion())
                    {
                        return Err(format!(
                            "{} incorrect at world {world} on frame {:?} with {property}",
                            kind.name(),
                            frame.relation()
                        ));
                    }
                }
                Ok((0, 500))
            })
            .collect();
        for r in results {
            let (a, b) = r?;
            refuted += a;
            sampled += b;
        }
    }
    Ok(format!(
        "{refuted} failing frames refuted, {sampled} sampled checks on satisfying frames"
    ))
}

const POOL: usize = 1000;
const WINDOW: usize = 16;

fn instance_pool(kind: RuleKind, seed: u64) -> Vec<RuleInstance> {
    let sampler = FormulaSampler::new(2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..POOL)
        .map(|_| {
            let n = rng.gen_range(1..=3);
            let mut next = || sampler.sample(&mut rng);
            let mut inst = kind.instantiate(&mut next, n);
            // nudge instances with premises toward ones whose premises hold
            if let RuleInstance::DT0 { alpha, beta, .. } = &mut inst {
                *beta = Formula::or(alpha.clone(), beta.clone());
            }
            inst
        })
        .collect()
}

fn criterion6() -> Outcome {
    let ls = letters(&[0, 1]);
    let models: Vec<Model> = (1..=3)
        .flat_map(|n| enumerate_models(n, &ls, &ModelClass::AllBoxPre).expect("within bound"))
        .collect();
    let mut checks = 0;
    let mut least_live = usize::MAX;
    for (k, kind) in RuleKind::BASIC.iter().enumerate() {
        let pool = instance_pool(*kind, 100 + k as u64);
        let live: Result<usize, String> = models
            .par_iter()
            .enumerate()
            .map(|(i, m)| {
                let mut live = 0;
                for j in 0..WINDOW {
                    let inst = &pool[(i * WINDOW + j) % POOL];
                    let premises = inst.premises();
                    if let Correctness::Incorrect { world } =
                        check_rule_instance(m, &premises, &inst.conclusion())
                    {
                        return Err(format!(
                            "{} incorrect at world {world}: {inst:?}",
                            kind.name()
                        ));
                    }
                    if premises.iter().all(|s| sequent_holds(m, s)) {
                        live += 1;
                    }
                }
                Ok(live)
            })
            .sum();
        least_live = least_live.min(live?);
        checks += models.len() * WINDOW;
    }

    let non_box_pre = |inst: RuleInstance, ls: BTreeSet<u32>| -> Result<(), String> {
        for n in 1..=3 {
            for m in enumerate_kripke_models(n, &ls, &ModelClass::AllBoxPre).expect("within bound")
            {
                if let Correctness::Incorrect { .. } =
                    check_rule_instance(&m, &inst.premises(), &inst.conclusion())
                {
                    ensure(!m.is_box_pre(), "incorrect on a box-pre model")?;
                    return Ok(());
                }
            }
        }
        Err(format!(
            "{} never incorrect on a Kripke model",
            inst.kind().name()
        ))
    };
    non_box_pre(RuleInstance::Bot { alpha: f("p0") }, letters(&[0]))?;
    non_box_pre(
        RuleInstance::OrL {
            alpha: f("p0"),
            beta: f("p1"),
            chi: f("p2"),
        },
        letters(&[0, 1, 2]),
    )?;

    let reflexive = ModelClass::custom("reflexive", |c| c.reflexive);
    let sampler = FormulaSampler::new(3, 2);
    let mut refl_checks = 0;
    for kind in [RuleKind::Refl1, RuleKind::Refl2] {
        let bad = (0..2000u64).into_par_iter().find_map_any(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(1..=4);
            let m = random_model(&reflexive, n, &letters(&[0, 1, 2]), seed)
                .expect("reflexive frames exist");
            (0..5).find_map(|_| {
                let len = rng.gen_range(1..=3);
                let inst = kind.instantiate(|| sampler.sample(&mut rng), len);
                match check_rule_instance(&m, &inst.premises(), &inst.conclusion()) {
                    Correctness::Correct => None,
                    Correctness::Incorrect { world } => {
                        Some(format!("{} incorrect at world {world}", kind.name()))
                    }
                }
            })
        });
        if let Some(msg) = bad {
            return Err(msg);
        }
        refl_checks += 2000 * 5;
    }
    Ok(format!(
        "{checks} basic-rule checks over {} models ({POOL} instances per rule, at least {least_live} with premises holding); Bot and OrL fail off box-pre; {refl_checks} reflexive checks",
        models.len()
    ))
}

fn criterion7() -> Outcome {
    let corpus = corpus();
    ensure(
        corpus.len() >= 20,
        format!("corpus has only {} entries", corpus.len()),
    )?;
    for e in &corpus {
        check_derivation(&e.derivation, e.system)
            .map_err(|r| format!("{} rejected: {r}", e.name))?;
    }
    let mut checks = 0;
    for e in &corpus {
        let class = match e.system {
            System::K => ModelClass::AllBoxPre,
            System::F1 => ModelClass::D1,
            System::F2 => ModelClass::D2,
        };
        let s = &e.derivation.conclusion;
        let ls = letters_of([&s.lhs, &s.rhs]);
        for seed in 0..200u64 {
            let n = 1 + (seed % 4) as usize;
            let m = random_model(&class, n, &ls, seed).map_err(|err| err.to_string())?;
            ensure(
                sequent_holds(&m, s),
                format!("{} fails on seed {seed}", e.name),
            )?;
            checks += 1;
        }
    }
    Ok(format!(
        "{} certificates accepted, {checks} model checks",
        corpus.len()
    ))
}

/// Builds a random i-derivation bottom-up from a small formula pool, so
/// that every node is an instance of its rule.
fn random_ideriv(rng: &mut ChaCha8Rng, pool: &[Formula], gamma: Option<&Formula>) -> IDerivation {
    let pick = |rng: &mut ChaCha8Rng| pool.choose(rng).expect("pool").clone();
    let side = |rng: &mut ChaCha8Rng| {
        let k = rng.gen_range(1..=2);
        (0..k)
            .map(|_| pool.choose(rng).expect("pool").clone())
            .collect::<BTreeSet<_>>()
    };
    let mut nodes: Vec<IDerivation> = Vec::new();
    let mut cuts = 0;
    while cuts < 3 {
        let choice = rng.gen_range(0..8);
        let node = match choice {
            0 | 1 => {
                IDerivation::assumption(IFormula::new(side(rng), side(rng)).expect("nonempty"))
            }
            2 => {
                let phi = pick(rng);
                let mut ante = side(rng);
                let mut succ = side(rng);
                ante.insert(phi.clone());
                succ.insert(phi);
                IDerivation::axiom(IFormula::new(ante, succ).expect("nonempty"), IRule::IA)
            }
            3 => {
                let (a, b) = (pick(rng), pick(rng));
                let (rule, out) = if rng.gen() {
                    (IRule::IAndL1, a.clone())
                } else {
                    (IRule::IAndL2, b.clone())
                };
                IDerivation::axiom(
                    IFormula::from_lists([Formula::and(a, b)], [out]).expect("nonempty"),
                    rule,
                )
            }
            4 => {
                let (a, b) = (pick(rng), pick(rng));
                IDerivation::axiom(
                    IFormula::from_lists([a.clone(), b.clone()], [Formula::and(a, b)])
                        .expect("nonempty"),
                    IRule::IAndR,
                )
            }
            5 if gamma.is_some() => {
                let pairs: Vec<(Formula, Formula)> = (0..rng.gen_range(1..=2))
                    .map(|_| (pick(rng), pick(rng)))
                    .collect();
                let mut ante: BTreeSet<Formula> = pairs.iter().map(|(a, _)| a.clone()).collect();
                ante.insert(reconstruct_pattern(&pairs, gamma.expect("checked")));
                let succ: BTreeSet<Formula> = pairs.iter().map(|(_, b)| b.clone()).collect();
                IDerivation::axiom(
                    IFormula::new(ante, succ).expect("nonempty"),
                    IRule::GammaRefl { pairs },
                )
            }
            _ => {
                let mut candidates = Vec::new();
                for (i, l) in nodes.iter().enumerate() {
                    for (j, r) in nodes.iter().enumerate() {
                        for phi in l.conclusion.succ().intersection(r.conclusion.ante()) {
                            candidates.push((i, j, phi.clone()));
                        }
                    }
                }
                let Some((i, j, phi)) = candidates.choose(rng).cloned() else {
                    continue;
                };
                let (l, r) = (nodes[i].clone(), nodes[j].clone());
                let mut ante = l.conclusion.ante().clone();
                ante.extend(
                    r.conclusion
                        .ante()
                        .iter()
                        .filter(|x| rng.gen_bool(0.3) || **x != phi)
                        .cloned(),
                );
                let mut succ: BTreeSet<Formula> = r.conclusion.succ().clone();
                let keep = rng.gen_bool(0.3);
                succ.extend(
                    l.conclusion
                        .succ()
                        .iter()
                        .filter(|x| keep || **x != phi)
                        .cloned(),
                );
                cuts += 1;
                IDerivation::cut(IFormula::new(ante, succ).expect("nonempty"), phi, l, r)
            }
        };
        nodes.push(node);
    }
    nodes
        .into_iter()
        .max_by_key(|d| d.node_count())
        .expect("at least one cut")
}

fn formula_pool(rng: &mut ChaCha8Rng, size: usize) -> Vec<Formula> {
    let sampler = FormulaSampler::new(2, 2);
    (0..size).map(|_| sampler.sample(rng)).collect()
}

fn criterion8() -> Outcome {
    let ls = letters(&[0, 1]);
    let kripke: Vec<Model> = (1..=3)
        .flat_map(|n| {
            enumerate_kripke_models(n, &ls, &ModelClass::AllBoxPre).expect("within bound")
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut i1 = Vec::new();
    while i1.len() < 500 {
        let pool = formula_pool(&mut rng, 5);
        let d = random_ideriv(&mut rng, &pool, None);
        let open = check_ideriv(&d, &ISystem::I1)
            .map_err(|r| format!("generated I1 derivation rejected: {r}"))?;
        i1.push((open, d.conclusion));
    }
    let bad = kripke.par_iter().find_map_any(|m| {
        i1.iter()
            .find(|(open, c)| !m.eval_iformulas(open).is_subset(&m.eval_iformula(c)))
            .map(|(_, c)| format!("I1 conclusion {c} fails on a {}-world model", m.size()))
    });
    if let Some(msg) = bad {
        return Err(msg);
    }

    let reflexive = ModelClass::custom("reflexive", |c| c.reflexive);
    let gamma = f("p1");
    let refl_models: Vec<Model> = (1..=3)
        .flat_map(|n| enumerate_kripke_models(n, &ls, &reflexive).expect("within bound"))
        .collect();
    let system = ISystem::I2(gamma.clone());
    let mut i2 = Vec::new();
    while i2.len() < 200 {
        let pool = formula_pool(&mut rng, 5);
        let d = random_ideriv(&mut rng, &pool, Some(&gamma));
        let open = check_ideriv(&d, &system)
            .map_err(|r| format!("generated I2 derivation rejected: {r}"))?;
        i2.push((open, d.conclusion));
    }
    let bad = refl_models.par_iter().find_map_any(|m| {
        let slack = m.frame().pre(&m.eval(&gamma)).expect("sizes match");
        i2.iter()
            .find(|(open, c)| {
                !m.eval_iformulas(open)
                    .is_subset(&m.eval_iformula(c).union(&slack))
            })
            .map(|(_, c)| {
                format!(
                    "I2 conclusion {c} fails on a reflexive {}-world model",
                    m.size()
                )
            })
    });
    if let Some(msg) = bad {
        return Err(msg);
    }

    let sampler = FormulaSampler::new(3, 2);
    let mut pairs_checked = 0;
    for seed in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(10_000 + seed);
        let gamma = sampler.sample(&mut rng);
        let gamma_set: Vec<Formula> = (0..rng.gen_range(1..=4))
            .map(|_| {
                if rng.gen_bool(0.75) {
                    let pairs: Vec<(Formula, Formula)> = (0..rng.gen_range(1..=2))
                        .map(|_| (sampler.sample(&mut rng), sampler.sample(&mut rng)))
                        .collect();
                    reconstruct_pattern(&pairs, &gamma)
                } else {
                    sampler.sample(&mut rng)
                }
            })
            .collect();
        let extracted = i_gamma(&gamma_set, &gamma);
        let ls = letters_of(gamma_set.iter().chain([&gamma]));
        for k in 0..20u64 {
            let n = 1 + (k % 3) as usize;
            let m = random_model(&ModelClass::AllBoxPre, n, &ls, seed * 100 + k)
                .map_err(|e| e.to_string())?;
            let inner = m
                .eval_iformulas(&extracted)
                .union(&m.frame().pre(&m.eval(&gamma)).expect("sizes"));
            let bound = m.frame().box_op(&inner).expect("sizes");
            ensure(
                m.eval_all(&gamma_set).is_subset(&bound),
                format!("i_gamma property fails for pair {seed}"),
            )?;
        }
        pairs_checked += 1;
    }
    Ok(format!(
        "500 I1 derivations on {} Kripke models; 200 I2 derivations on {} reflexive models; {pairs_checked} i_gamma pairs",
        kripke.len(),
        refl_models.len()
    ))
}

fn criterion9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let sampler = FormulaSampler::new(2, 1);
    let mut found = 0;
    let mut runs = 0;
    for _ in 0..300 {
        let pool: Vec<Formula> = (0..4).map(|_| sampler.sample(&mut rng)).collect();
        let side = |rng: &mut ChaCha8Rng| {
            (0..rng.gen_range(1..=2))
                .map(|_| pool.choose(rng).expect("pool").clone())
                .collect::<BTreeSet<_>>()
        };
        let premises: Vec<IFormula> = (0..rng.gen_range(1..=4))
            .map(|_| IFormula::new(side(&mut rng), side(&mut rng)).expect("nonempty"))
            .collect();
        let goal = IFormula::new(side(&mut rng), side(&mut rng)).expect("nonempty");
        let system = if rng.gen() {
            ISystem::I1
        } else {
            ISystem::I2(pool[0].clone())
        };
        let config = SaturateConfig {
            universe: None,
            max_steps: Some(2000),
        };
        runs += 1;
        let outcome = saturate(&premises, &goal, &system, &config).map_err(|e| e.to_string())?;
        if let SaturateOutcome::Found(d) = outcome {
            found += 1;
            let declared: BTreeSet<IFormula> = premises.iter().cloned().collect();
            check_ideriv_from(&d, &system, &declared)
                .map_err(|r| format!("saturate certificate rejected: {r}"))?;
            ensure(
                d.conclusion == goal,
                "saturate certificate concludes a different goal",
            )?;
        }
    }

    let examples = [
        ("first example", bundled::example1_gamma(), false),
        ("second example", bundled::example2_gamma(), true),
    ];
    for (name, (gamma_set, gamma), reflexive) in examples {
        let premises: Vec<IFormula> = i_gamma(&gamma_set, &gamma).into_iter().collect();
        let system = if reflexive {
            ISystem::I2(gamma.clone())
        } else {
            ISystem::I1
        };
        let config = SaturateConfig {
            universe: None,
            max_steps: Some(10_000),
        };
        match saturate(&premises, &IFormula::falsum(), &system, &config)
            .map_err(|e| e.to_string())?
        {
            SaturateOutcome::Found(d) => {
                let declared: BTreeSet<IFormula> = premises.iter().cloned().collect();
                check_ideriv_from(&d, &system, &declared).map_err(|r| format!("{name}: {r}"))?;
            }
            other => return Err(format!("{name}: {other:?}")),
        }
    }
    Ok(format!(
        "{found}/{runs} random goals found and re-checked; both examples found"
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("5-point necessity model", criterion1),
        ("D1/D2 modus ponens surrogate", criterion2),
        ("first example sweep over D1", criterion3),
        ("second example sweep over D2", criterion4),
        ("correspondence refutations", criterion5),
        ("rule-correctness sweeps", criterion6),
        ("calculus soundness end-to-end", criterion7),
        ("i-calculus soundness", criterion8),
        ("prover/checker agreement", criterion9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {} [{name}]: PASS ({detail}; {elapsed:.1?})",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {} [{name}]: FAIL ({detail}; {elapsed:.1?})",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
