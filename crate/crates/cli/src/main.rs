mod report;

use std::fs;
use std::process::ExitCode;

use ado_forge_core::engine::{self, sha256_hex, Certificate, EngineConfig, Method};
use ado_forge_core::json::{self, SparseObject};
use ado_forge_core::lie::{self, LieAlgebra};
use ado_forge_core::fixtures;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use report::{Failure, RunReport};

/// Faithful nilpotent representations of nilpotent Lie algebras over Q.
#[derive(Parser)]
#[command(name = "ado-forge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity and the declared grading.
    Validate { algebra: String },
    /// Print dimension, nilpotency class, center, generator count and grading.
    Info { algebra: String },
    /// Build a faithful nilpotent representation.
    Construct(ConstructArgs),
    /// Check that a representation is a faithful nilpotent homomorphism.
    Verify { algebra: String, rep: String },
    /// Re-run a recorded construction and check that it reproduces the same output.
    Replay {
        algebra: String,
        certificate: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Print a built-in example algebra.
    Examples {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct ConstructArgs {
    algebra: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    max_tensor_power: u32,
    /// Keep only the cyclic submodule generated by each witness vector (default).
    #[arg(long, overrides_with = "no_compress")]
    compress: bool,
    #[arg(long, overrides_with = "compress")]
    no_compress: bool,
    /// Representation output path; stdout when absent.
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    certificate: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Graded,
    Induction,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Graded => Method::Graded,
            MethodArg::Induction => Method::Induction,
        }
    }
}

fn read(path: &str, report: &mut RunReport, key: &str) -> Result<String, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    report.input_digests.insert(key.to_string(), sha256_hex(text.as_bytes()));
    Ok(text)
}

fn write(path: Option<&str>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses an algebra document and rejects Jacobi failures.
fn load_algebra(path: &str, report: &mut RunReport) -> Result<LieAlgebra, Failure> {
    let text = read(path, report, "algebra")?;
    let l = report.time("parse", || json::algebra_from_json(&text))?;
    if let Some(v) = l.validate().first() {
        return Err(Failure::new(
            1,
            "ValidationFailed",
            format!("Jacobi identity fails on basis triple {:?}", v.triple),
        ));
    }
    Ok(l)
}

/// `ADO_FORGE_BUDGET` is either `N` (representation budget) or `free=N,rep=M`.
fn apply_budget_env(cfg: &mut EngineConfig) -> Result<(), Failure> {
    let Ok(spec) = std::env::var("ADO_FORGE_BUDGET") else {
        return Ok(());
    };
    let bad = || Failure::new(2, "ParseError", format!("invalid ADO_FORGE_BUDGET `{spec}`"));
    let positive = |s: &str| s.trim().parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(bad);
    if !spec.contains('=') {
        cfg.rep_budget = positive(&spec)?;
        return Ok(());
    }
    for part in spec.split(',') {
        match part.split_once('=').map(|(k, v)| (k.trim(), v)) {
            Some(("free", v)) => cfg.free_budget = positive(v)?,
            Some(("rep", v)) => cfg.rep_budget = positive(v)?,
            _ => return Err(bad()),
        }
    }
    Ok(())
}

fn cmd_validate(path: &str, report: &mut RunReport) -> Result<(), Failure> {
    let text = read(path, report, "algebra")?;
    let parsed = report.time("parse", || json::parse_algebra(&text))?;
    let violations = report.time("jacobi", || parsed.algebra.validate());
    let grading = match &parsed.grading {
        None => "absent",
        Some(d) if parsed.algebra.verify_grading(&lie::Grading::new(d.clone())) => "valid",
        Some(_) => "invalid",
    };
    let listed: Vec<_> = violations
        .iter()
        .map(|v| json!({"triple": [v.triple.0, v.triple.1, v.triple.2], "residual": SparseObject(&v.residual)}))
        .collect();
    let summary = json!({
        "name": parsed.algebra.name(),
        "dim": parsed.algebra.dim(),
        "valid": violations.is_empty() && grading != "invalid",
        "violations": listed,
        "grading": grading,
    });
    println!("{}", serde_json::to_string_pretty(&summary).expect("json"));
    report.details = Some(summary);
    if let Some(v) = violations.first() {
        return Err(Failure::new(
            1,
            "ValidationFailed",
            format!("{} Jacobi violation(s), first on basis triple {:?}", violations.len(), v.triple),
        ));
    }
    if grading == "invalid" {
        return Err(Failure::new(1, "InvalidGrading", "declared grading is not additive on brackets"));
    }
    Ok(())
}

fn cmd_info(path: &str, report: &mut RunReport) -> Result<(), Failure> {
    let l = load_algebra(path, report)?;
    let summary = report.time("analyze", || {
        let class = lie::nilpotency_class(&l).ok();
        let series = lie::lower_central_series(&l);
        let derived_dim = series.get(1).map_or(0, |s| s.dim());
        json!({
            "name": l.name(),
            "dim": l.dim(),
            "nilpotent": class.is_some(),
            "nilpotency_class": class,
            "center_dim": lie::center(&l).dim(),
            "generators": l.dim() - derived_dim,
            "grading": l.grading().map(|g| g.degrees().to_vec()),
        })
    });
    println!("{}", serde_json::to_string_pretty(&summary).expect("json"));
    report.dims.insert("algebra", l.dim());
    report.details = Some(summary);
    Ok(())
}

fn cmd_construct(args: &ConstructArgs, report: &mut RunReport) -> Result<(), Failure> {
    let mut cfg = EngineConfig {
        max_tensor_power: args.max_tensor_power as usize,
        compress: args.compress || !args.no_compress,
        method: args.method.into(),
        ..EngineConfig::default()
    };
    apply_budget_env(&mut cfg)?;
    let l = load_algebra(&args.algebra, report)?;
    report.dims.insert("algebra", l.dim());
    let built = report.time("construct", || engine::construct_faithful_nilpotent(&l, &cfg))?;
    let verdict = report.time("verify", || engine::verify_output(&l, &built.rep));
    report.verification = Some(verdict);
    report.dims.insert("representation", built.rep.space_dim());
    if let Some(failure) = verdict.first_failure() {
        return Err(Failure::new(1, "VerificationFailed", failure));
    }
    write(args.out.as_deref(), &json::rep_to_json(&built.rep))?;
    if let Some(path) = &args.certificate {
        write(Some(path), &json::to_pretty(&built.certificate))?;
    }
    Ok(())
}

fn cmd_verify(algebra: &str, rep_path: &str, report: &mut RunReport) -> Result<(), Failure> {
    let l = load_algebra(algebra, report)?;
    let text = read(rep_path, report, "representation")?;
    let rho = report.time("parse_rep", || json::rep_from_json(&text, &l))?;
    report.dims.insert("algebra", l.dim());
    report.dims.insert("representation", rho.space_dim());
    let verdict = report.time("verify", || engine::verify_output(&l, &rho));
    report.verification = Some(verdict);
    println!("{}", serde_json::to_string_pretty(&verdict).expect("json"));
    match verdict.first_failure() {
        Some(failure) => Err(Failure::new(1, "VerificationFailed", failure)),
        None => Ok(()),
    }
}

fn cmd_replay(algebra: &str, cert_path: &str, out: Option<&str>, report: &mut RunReport) -> Result<(), Failure> {
    let l = load_algebra(algebra, report)?;
    let text = read(cert_path, report, "certificate")?;
    let cert: Certificate = serde_json::from_str(&text)
        .map_err(|e| Failure::new(2, "ParseError", format!("certificate document: {e}")))?;
    let rho = report.time("replay", || engine::replay(&l, &cert))?;
    report.dims.insert("representation", rho.space_dim());
    write(out, &json::rep_to_json(&rho))
}

fn cmd_examples(name: Option<&str>, list: bool, report: &mut RunReport) -> Result<(), Failure> {
    if list {
        for n in fixtures::EXAMPLE_NAMES {
            println!("{n}");
        }
        return Ok(());
    }
    let Some(name) = name else {
        return Err(Failure::new(2, "UsageError", "give an example name or --list"));
    };
    let l = fixtures::by_name(name)?;
    report.dims.insert("algebra", l.dim());
    print!("{}", json::algebra_to_json(&l));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut report, result) = match &cli.command {
        Command::Validate { algebra } => {
            let mut r = RunReport::new("validate");
            let out = cmd_validate(algebra, &mut r);
            (r, out)
        }
        Command::Info { algebra } => {
            let mut r = RunReport::new("info");
            let out = cmd_info(algebra, &mut r);
            (r, out)
        }
        Command::Construct(args) => {
            let mut r = RunReport::new("construct");
            let out = cmd_construct(args, &mut r);
            (r, out)
        }
        Command::Verify { algebra, rep } => {
            let mut r = RunReport::new("verify");
            let out = cmd_verify(algebra, rep, &mut r);
            (r, out)
        }
        Command::Replay { algebra, certificate, out } => {
            let mut r = RunReport::new("replay");
            let res = cmd_replay(algebra, certificate, out.as_deref(), &mut r);
            (r, res)
        }
        Command::Examples { name, list } => {
            let mut r = RunReport::new("examples");
            let out = cmd_examples(name.as_deref(), *list, &mut r);
            (r, out)
        }
    };
    let code = match result {
        Ok(()) => 0,
        Err(failure) => {
            report.fail(&failure);
            failure.code
        }
    };
    report.emit();
    ExitCode::from(code)
}
