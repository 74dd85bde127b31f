//! Command-line front end: braid calculator, presentation verifier,
//! Borsuk-Ulam decisions with certificates, the geometric tracer, and the
//! symmetric-group example suites. Output is JSON (one document on stdout)
//! unless `--human` asks for prose. Exit codes: 0 success / decision
//! produced, 1 verification or tracing failure, 2 input error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use bucert_core::braid::GarsideNormalForm;
use bucert_core::engine::{self, Certificate, Decision};
use bucert_core::error::Error as CoreError;
use bucert_core::pure::PureBraid;
use bucert_core::sigma;
use bucert_core::surface::{CyclicHom, SurfaceCase, SurfacePresentation};
use bucert_core::tracer;
use bucert_core::{BraidWord, Report};

#[derive(Parser)]
#[command(name = "bucert", version, about = "Borsuk-Ulam braid certificates")]
struct Cli {
    /// Print prose summaries instead of JSON
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Braid word calculator (words in the text form "n=3 1 2 -2")
    Braid {
        #[command(subcommand)]
        op: BraidOp,
    },
    /// Verify the braid presentation relations mechanically
    Present {
        #[command(subcommand)]
        op: PresentOp,
    },
    /// Decide the Borsuk-Ulam property for an instance file
    Bu {
        #[command(subcommand)]
        op: BuOp,
    },
    /// Trace the witness braid pair of the order-4k torus action
    Trace(TraceArgs),
    /// Symmetric-group example suites
    Examples {
        #[command(subcommand)]
        op: ExampleOp,
    },
}

#[derive(Subcommand)]
enum BraidOp {
    /// Decide equality of two braid words
    Eq { w1: String, w2: String },
    /// Left-greedy normal form
    Nf { w: String },
    /// Underlying permutation
    Perm { w: String },
    /// Evaluation homomorphism of a pure braid (half the exponent sum)
    Eps { w: String },
}

#[derive(Subcommand)]
enum PresentOp {
    /// Check every relation instance for the given strand count
    Verify {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum BuOp {
    /// Decide and attach a verified certificate
    Decide(FileArg),
    /// Produce the witness homomorphism (fails if the property holds)
    Witness(FileArg),
    /// Produce the parity obstruction (fails if the property does not hold)
    Obstruct(FileArg),
}

#[derive(Args)]
struct FileArg {
    /// Instance file (JSON)
    #[arg(short = 'f', long = "file")]
    file: String,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1024)]
    resolution: usize,
    #[arg(long, default_value_t = tracer::DEFAULT_ANGLE)]
    angle: f64,
}

#[derive(Args)]
struct SigmaArgs {
    #[arg(long)]
    n: usize,
    /// Which example: m1 | m2-parity | m2-cyclic
    #[arg(long = "case")]
    case: String,
    /// Allow the factorial-size subgroup computation beyond n = 6
    #[arg(long)]
    allow_large: bool,
}

#[derive(Subcommand)]
enum ExampleOp {
    /// The two symmetric-group actions
    Sigma(SigmaArgs),
}

/// Instance description: surface case, handle count, cyclic order, and the
/// generator images of the covering homomorphism.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    schema: u32,
    case: String,
    m: usize,
    n: usize,
    theta: BTreeMap<String, i64>,
}

fn load_instance(path: &str) -> Result<CyclicHom, CoreError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CoreError::Parse(format!("cannot read {path}: {e}")))?;
    let inst: InstanceFile = serde_json::from_str(&text)
        .map_err(|e| CoreError::Parse(format!("{path}: {e}")))?;
    if inst.schema != 1 {
        return Err(CoreError::Parse(format!(
            "{path}: unsupported schema {} (expected 1)",
            inst.schema
        )));
    }
    let case = SurfaceCase::parse(&inst.case)?;
    let pres = SurfacePresentation::new(case, inst.m);
    let names = pres.generator_names();
    for key in inst.theta.keys() {
        if !names.contains(key) {
            return Err(CoreError::Parse(format!(
                "{path}: field theta.{key} does not name a generator of {} with m={}",
                inst.case, inst.m
            )));
        }
    }
    let mut images = Vec::with_capacity(names.len());
    for name in &names {
        match inst.theta.get(name) {
            Some(&v) => images.push(v),
            None => {
                return Err(CoreError::Parse(format!(
                    "{path}: missing field theta.{name}"
                )))
            }
        }
    }
    CyclicHom::new(pres, inst.n, images)
}

fn report_json(report: &Report) -> Value {
    serde_json::to_value(&report.checks).unwrap_or(Value::Null)
}

fn certificate_json(cert: &Certificate) -> Value {
    match cert {
        Certificate::Witness(w) => {
            let images: BTreeMap<String, String> = w
                .named_images()
                .into_iter()
                .map(|(name, word)| (name, word.to_string()))
                .collect();
            json!({
                "kind": "witness",
                "n": w.n,
                "case": w.source.case.to_string(),
                "m": w.source.m,
                "images": images,
            })
        }
        Certificate::ParityObstruction(o) => json!({
            "kind": "parity_obstruction",
            "n": o.n,
            "k": o.k,
            "theta_delta": { "value": o.theta_delta.value(), "mod": o.theta_delta.n() },
            "full_twist_eps": o.full_twist_eps,
            "identity": o.identity_statement(),
        }),
        Certificate::Homology(h) => json!({
            "kind": "homology_evidence",
            "n": h.n,
            "index": h.index,
            "subgroup_generators": h.subgroup_generators,
            "subgroup_relators": h.subgroup_relators,
            "h1_rank": h.h1_rank,
            "h1_torsion": h.h1_torsion,
            "delta_image": { "value": h.delta_image.value(), "mod": h.delta_image.n() },
            "cover_nonorientable": h.cover_nonorientable,
            "checks": report_json(&h.report),
        }),
        Certificate::ResidueClass { n } => json!({
            "kind": "residue_class",
            "n": n,
            "reason": format!("{n} is not congruent to 2 mod 4"),
        }),
    }
}

fn decision_json(decision: &Decision, verification: Option<&Report>) -> Value {
    let mut body = json!({
        "schema": 1,
        "has_bu_property": decision.has_bu_property,
        "certificate": certificate_json(&decision.certificate),
    });
    if let Some(report) = verification {
        body["verification"] = report_json(report);
    }
    body
}

fn emit(human: bool, value: &Value, prose: String) {
    if human {
        println!("{prose}");
    } else {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
    }
}

fn run(cli: Cli) -> Result<u8, CoreError> {
    match cli.command {
        Command::Braid { op } => run_braid(cli.human, op),
        Command::Present { op } => run_present(cli.human, op),
        Command::Bu { op } => run_bu(cli.human, op),
        Command::Trace(args) => run_trace(cli.human, args),
        Command::Examples {
            op: ExampleOp::Sigma(args),
        } => run_sigma(cli.human, args),
    }
}

fn run_braid(human: bool, op: BraidOp) -> Result<u8, CoreError> {
    match op {
        BraidOp::Eq { w1, w2 } => {
            let w1 = BraidWord::parse(&w1)?;
            let w2 = BraidWord::parse(&w2)?;
            let equal = bucert_core::equal(&w1, &w2)?;
            emit(
                human,
                &json!({ "schema": 1, "equal": equal }),
                format!(
                    "the words are {} in the braid group",
                    if equal { "equal" } else { "not equal" }
                ),
            );
            Ok(0)
        }
        BraidOp::Nf { w } => {
            let w = BraidWord::parse(&w)?;
            let nf = GarsideNormalForm::of_word(&w);
            let factors: Vec<String> = nf.factors().iter().map(|f| f.to_string()).collect();
            emit(
                human,
                &json!({
                    "schema": 1,
                    "n": nf.n(),
                    "inf": nf.inf(),
                    "canonical_length": nf.canonical_length(),
                    "factors": factors,
                }),
                format!("{nf}"),
            );
            Ok(0)
        }
        BraidOp::Perm { w } => {
            let w = BraidWord::parse(&w)?;
            let p = w.permutation();
            let images: Vec<usize> = p.images().iter().map(|&x| x + 1).collect();
            emit(
                human,
                &json!({ "schema": 1, "cycles": p.to_string(), "images": images }),
                format!("permutation {p}"),
            );
            Ok(0)
        }
        BraidOp::Eps { w } => {
            let w = BraidWord::parse(&w)?;
            let p = PureBraid::new(w)?;
            emit(
                human,
                &json!({ "schema": 1, "epsilon": p.epsilon() }),
                format!("evaluation {}", p.epsilon()),
            );
            Ok(0)
        }
    }
}

fn run_present(human: bool, op: PresentOp) -> Result<u8, CoreError> {
    let PresentOp::Verify { n } = op;
    let report = bucert_core::cyclic::verify_full_presentation(n)?;
    let pass = report.passed();
    emit(
        human,
        &json!({
            "schema": 1,
            "n": n,
            "pass": pass,
            "instances": report.len(),
            "checks": report_json(&report),
        }),
        format!(
            "presentation relations for n={n}: {} ({} instances)",
            if pass { "all pass" } else { "FAILURES" },
            report.len()
        ),
    );
    Ok(if pass { 0 } else { 1 })
}

fn run_bu(human: bool, op: BuOp) -> Result<u8, CoreError> {
    match op {
        BuOp::Decide(arg) => {
            let theta = load_instance(&arg.file)?;
            let decision = engine::decide(&theta)?;
            let verification = match &decision.certificate {
                Certificate::Witness(w) => Some(engine::verify_witness(w, &theta)?),
                _ => None,
            };
            let prose = if decision.has_bu_property {
                format!(
                    "the quadruple HAS the Borsuk-Ulam property (parity obstruction, {})",
                    match &decision.certificate {
                        Certificate::ParityObstruction(o) => o.identity_statement(),
                        _ => String::new(),
                    }
                )
            } else {
                "the quadruple does NOT have the Borsuk-Ulam property (verified witness attached)"
                    .to_string()
            };
            emit(human, &decision_json(&decision, verification.as_ref()), prose);
            Ok(0)
        }
        BuOp::Witness(arg) => {
            let theta = load_instance(&arg.file)?;
            let decision = engine::decide(&theta)?;
            match decision.certificate {
                Certificate::Witness(w) => {
                    let report = engine::verify_witness(&w, &theta)?;
                    let decision = Decision {
                        has_bu_property: false,
                        certificate: Certificate::Witness(w),
                    };
                    emit(
                        human,
                        &decision_json(&decision, Some(&report)),
                        "witness homomorphism produced and verified".to_string(),
                    );
                    Ok(0)
                }
                _ => {
                    emit(
                        human,
                        &json!({
                            "schema": 1,
                            "error": "no witness exists: the Borsuk-Ulam property holds",
                        }),
                        "no witness exists: the Borsuk-Ulam property holds".to_string(),
                    );
                    Ok(1)
                }
            }
        }
        BuOp::Obstruct(arg) => {
            let theta = load_instance(&arg.file)?;
            let decision = engine::decide(&theta)?;
            match decision.certificate {
                Certificate::ParityObstruction(_) => {
                    emit(
                        human,
                        &decision_json(&decision, None),
                        "parity obstruction produced".to_string(),
                    );
                    Ok(0)
                }
                _ => {
                    emit(
                        human,
                        &json!({
                            "schema": 1,
                            "error": "no obstruction: the property fails and a witness exists",
                        }),
                        "no obstruction: the property fails and a witness exists".to_string(),
                    );
                    Ok(1)
                }
            }
        }
    }
}

fn run_trace(human: bool, args: TraceArgs) -> Result<u8, CoreError> {
    let (alpha, beta, report) = tracer::trace_with_provenance(args.k, args.resolution, args.angle)?;
    let pass = report.passed();
    emit(
        human,
        &json!({
            "schema": 1,
            "k": args.k,
            "resolution": args.resolution,
            "angle": args.angle,
            "basepoint": [tracer::BASEPOINT.0, tracer::BASEPOINT.1],
            "alpha": alpha.word().to_string(),
            "beta": beta.word().to_string(),
            "pi2_alpha": alpha.pi2().value(),
            "pi2_beta": beta.pi2().value(),
            "checks": report_json(&report),
        }),
        format!(
            "traced pair on {} strands: alpha = {}, beta = {}",
            4 * args.k,
            alpha.word(),
            beta.word()
        ),
    );
    Ok(if pass { 0 } else { 1 })
}

fn run_sigma(human: bool, args: SigmaArgs) -> Result<u8, CoreError> {
    match args.case.as_str() {
        "m1" => {
            let report = sigma::witness_m1(args.n)?;
            let pass = report.passed();
            emit(
                human,
                &json!({
                    "schema": 1,
                    "n": args.n,
                    "case": "m1",
                    "pass": pass,
                    "checks": report_json(&report),
                }),
                format!("genus-two example witness at n={}: pass={pass}", args.n),
            );
            Ok(if pass { 0 } else { 1 })
        }
        "m2-parity" => {
            let report = sigma::parity_obstruction_m2(args.n)?;
            let pass = report.passed();
            emit(
                human,
                &json!({
                    "schema": 1,
                    "n": args.n,
                    "case": "m2-parity",
                    "pass": pass,
                    "verdict": "obstruction to the sufficient criterion",
                    "note": "no diagram homomorphism exists; this alone does not decide the Borsuk-Ulam property for the symmetric-group action",
                    "checks": report_json(&report),
                }),
                format!(
                    "parity obstruction to a diagram homomorphism at n={}: pass={pass} (the Borsuk-Ulam status of the full action is not decided by this)",
                    args.n
                ),
            );
            Ok(if pass { 0 } else { 1 })
        }
        "m2-cyclic" => {
            let decision = sigma::decide_m2_cyclic(args.n, args.allow_large)?;
            emit(
                human,
                &json!({
                    "schema": 1,
                    "n": args.n,
                    "case": "m2-cyclic",
                    "decision": decision_json(&decision, None),
                }),
                format!(
                    "cyclic restriction at n={}: has_bu_property={}",
                    args.n, decision.has_bu_property
                ),
            );
            Ok(0)
        }
        other => Err(CoreError::Parse(format!(
            "unknown case {other:?}; expected m1 | m2-parity | m2-cyclic"
        ))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let human = cli.human;
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = match &e {
                CoreError::Tracing(_) => 1u8,
                _ => 2u8,
            };
            if human {
                eprintln!("error: {e}");
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "schema": 1, "error": e.to_string() }))
                        .unwrap()
                );
            }
            ExitCode::from(code)
        }
    }
}
