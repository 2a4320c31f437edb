//! Command-line interface: exact computations on simplicial-set JSON
//! documents, with deterministic JSON reports and integer-only output.
//!
//! Exit codes: 0 all checks pass, 1 a verification fails, 2 input error.

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use retracta::error::Error;
use retracta::linab::{homology_coefficients, linearise};
use retracta::retract::{collapse, homotopy_orbits, REnv, RObj};
use retracta::sgrp::pi1_presentation;
use retracta::ssj::{self, SsjDocument};
use retracta::suites::{run_suite, SUITE_NAMES};
use serde_json::{json, Map, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "retracta", version, about = "exact simplicial computations")]
struct Cli {
    /// Bound on the dimensions of all computations.
    #[arg(long, global = true, default_value_t = 3)]
    max_dim: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a document (space or retractive object).
    Validate { file: String },
    /// Homology of the underlying space from normalized chains.
    Homology {
        file: String,
        #[arg(long)]
        range: usize,
    },
    /// Loop-group presentation of π₁ with abelianised invariants.
    Pi1 { file: String },
    /// Linearise a retractive object; reports the value groups.
    Linearise { file: String },
    /// Collapse the base of a retractive object; emits the result.
    Collapse { file: String },
    /// Homotopy orbit space of the group action; emits the result.
    Orbits { file: String },
    /// Homology with coefficients in the linearisation of this object.
    Hcoeff {
        file: String,
        /// Retractive document for the test object K over the same base.
        #[arg(long = "K")]
        k: String,
    },
    /// Certify categorical finiteness by an explicit filtration.
    CwCheck { file: String },
    /// Run a named acceptance suite and print pass/fail per property.
    Verify { suite: String },
}

fn big(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(n) => json!(n),
        Err(_) => json!(v.to_string()),
    }
}

fn graded(invs: &[Vec<BigInt>]) -> Value {
    Value::Array(
        invs.iter()
            .map(|d| Value::Array(d.iter().map(big).collect()))
            .collect(),
    )
}

fn load(path: &str) -> Result<SsjDocument, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    ssj::from_json(&text)
}

/// Either a plain (possibly G-)space or a full retractive object.
fn load_robj(path: &str) -> Result<(REnv, RObj), Error> {
    ssj::doc_to_robj(&load(path)?)
}

fn report(cmd: &str, file: Option<&str>, body: Map<String, Value>) {
    let mut m = Map::new();
    m.insert("command".into(), json!(cmd));
    if let Some(f) = file {
        m.insert("input".into(), json!(f));
    }
    m.extend(body);
    println!("{}", serde_json::to_string_pretty(&Value::Object(m)).unwrap());
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let d = cli.max_dim;
    match &cli.command {
        Command::Validate { file } => {
            let doc = load(file)?;
            let kind = if doc.base.is_some() {
                ssj::doc_to_robj(&doc)?;
                "retractive-object"
            } else {
                ssj::doc_to_space(&doc)?;
                "space"
            };
            let mut m = Map::new();
            m.insert("name".into(), json!(doc.name));
            m.insert("kind".into(), json!(kind));
            m.insert("valid".into(), json!(true));
            report("validate", Some(file), m);
            Ok(true)
        }
        Command::Homology { file, range } => {
            if *range + 1 > d {
                return Err(Error::Dimension(format!(
                    "range {range} needs chains beyond --max-dim {d}"
                )));
            }
            let (x, _) = ssj::doc_to_space(&load(file)?)?;
            let h = x.normalized_chains(range + 1)?.homology(*range)?;
            let mut m = Map::new();
            m.insert("homology".into(), graded(&h));
            report("homology", Some(file), m);
            Ok(true)
        }
        Command::Pi1 { file } => {
            let (x, _) = ssj::doc_to_space(&load(file)?)?;
            let p = pi1_presentation(&x)?;
            let inv = p.abelianization().invariants();
            let mut m = Map::new();
            m.insert("generators".into(), json!(p.gen_labels));
            m.insert(
                "relators".into(),
                Value::Array(
                    p.relators
                        .iter()
                        .map(|r| {
                            Value::Array(
                                r.iter().map(|(g, e)| json!([g, e])).collect(),
                            )
                        })
                        .collect(),
                ),
            );
            m.insert(
                "abelianised".into(),
                Value::Array(inv.iter().map(big).collect()),
            );
            report("pi1", Some(file), m);
            Ok(true)
        }
        Command::Linearise { file } => {
            let (env, y) = load_robj(file)?;
            let z = linearise(&env, &y, d)?;
            let mut vals = Vec::new();
            for (t, (n, w)) in z.objects.iter().enumerate() {
                vals.push(json!({
                    "degree": n,
                    "base": env.w.simplex_label(w),
                    "invariants": Value::Array(
                        z.values[t].invariants().iter().map(big).collect()
                    ),
                }));
            }
            let mut m = Map::new();
            m.insert("values".into(), Value::Array(vals));
            report("linearise", Some(file), m);
            Ok(true)
        }
        Command::Collapse { file } => {
            let (env, y) = load_robj(file)?;
            let (env_pt, cy) = collapse(&env, &y)?;
            let doc = ssj::robj_to_doc("collapsed", &env_pt, &cy);
            print!("{}", ssj::to_canonical_json(&doc));
            Ok(true)
        }
        Command::Orbits { file } => {
            let (x, action) = ssj::doc_to_space(&load(file)?)?;
            let ho = homotopy_orbits(&x, &action, d)?;
            let doc = ssj::space_to_doc("orbits", &ho, None);
            print!("{}", ssj::to_canonical_json(&doc));
            Ok(true)
        }
        Command::Hcoeff { file, k } => {
            if d == 0 {
                return Err(Error::Dimension("--max-dim 0 leaves no range".into()));
            }
            let (env, y) = load_robj(file)?;
            let (kenv, kobj) = load_robj(k)?;
            let base_a = ssj::to_canonical_json(&ssj::space_to_doc("base", &env.w, Some(&env.action)));
            let base_b =
                ssj::to_canonical_json(&ssj::space_to_doc("base", &kenv.w, Some(&kenv.action)));
            if base_a != base_b {
                return Err(Error::Invalid(
                    "K must be retractive over the same base".into(),
                ));
            }
            let coeff = linearise(&env, &y, d)?;
            let h = homology_coefficients(&env, &kobj, &coeff, d - 1)?;
            let mut m = Map::new();
            m.insert("coefficients".into(), json!(file));
            m.insert("K".into(), json!(k));
            m.insert("homology".into(), graded(&h));
            report("hcoeff", Some(file), m);
            Ok(true)
        }
        Command::CwCheck { file } => {
            let (env, y) = load_robj(file)?;
            match retracta::cw::is_categorically_finite(&env, &y) {
                Ok(cert) => {
                    let replay = matches!(
                        retracta::cw::verify_filtration(&env, &cert)?,
                        retracta::cw::Verdict::Accepted
                    );
                    let cells: Vec<Value> = cert
                        .attachments
                        .iter()
                        .map(|a| json!(a.w.dim()))
                        .collect();
                    let mut m = Map::new();
                    m.insert("certified".into(), json!(replay));
                    m.insert("cells".into(), json!(cert.len()));
                    m.insert("cell-dimensions".into(), Value::Array(cells));
                    report("cw-check", Some(file), m);
                    Ok(replay)
                }
                Err(Error::Invalid(msg)) => {
                    let mut m = Map::new();
                    m.insert("certified".into(), json!(false));
                    m.insert("reason".into(), json!(msg));
                    report("cw-check", Some(file), m);
                    Ok(false)
                }
                Err(e) => Err(e),
            }
        }
        Command::Verify { suite } => {
            if !SUITE_NAMES.contains(&suite.as_str()) {
                return Err(Error::Invalid(format!(
                    "unknown suite `{suite}`; available: {}",
                    SUITE_NAMES.join(", ")
                )));
            }
            let lines = run_suite(suite)?;
            let ok = lines.iter().all(|(_, pass)| *pass);
            let props: Vec<Value> = lines
                .iter()
                .map(|(name, pass)| json!({ "property": name, "pass": pass }))
                .collect();
            let mut m = Map::new();
            m.insert("suite".into(), json!(suite));
            m.insert("properties".into(), Value::Array(props));
            m.insert("ok".into(), json!(ok));
            report("verify", None, m);
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
