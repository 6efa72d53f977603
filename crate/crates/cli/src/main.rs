use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use lfactor_core::dsl::parse_repr;
use lfactor_core::galois::{galois_ext, FormalParam};
use lfactor_core::lfun::{
    check_general_position, gamma_ext, l_ex_constituent, l_ext_via_derivatives, l_rep_ext,
    l_rep_rs, l_rep_rs_pair, l_rep_sym,
};
use lfactor_core::segment::derivative_constituents;
use lfactor_core::selftest::run_suite;
use lfactor_core::{Constituent, EulerFactor, Registry, Representation};

const OK: u8 = 0;
const DOMAIN_ERROR: u8 = 1;
const DISAGREE: u8 = 2;

/// Exact local L-factors of GL(m) representations given by Zelevinsky segments.
///
/// Representations are written as `[label:len@e~zk/N] * ...`, meaning the
/// segment of `len` twists of the cuspidal `label`, starting at `ρ·ν^e`
/// times the unramified character with value `exp(2πik/N)` at ϖ.
#[derive(Parser, Debug)]
#[command(name = "lfactor", version)]
struct Cli {
    /// Cuspidal registry (JSON). Required by every command except selftest.
    #[arg(long, global = true, value_name = "PATH")]
    registry: Option<PathBuf>,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// L(s, π, ∧²)
    Ext { repr: String },
    /// L(s, π, Sym²)
    Sym { repr: String },
    /// L(s, π × π′); with one argument, L(s, π × π)
    Rs { repr: String, other: Option<String> },
    /// γ(s, π, ∧²) up to units
    Gamma { repr: String },
    /// Exceptional factor of the representation taken as one constituent
    Lex { repr: String },
    /// Constituents of the k-th derivative
    Derive {
        #[arg(long, value_name = "K")]
        order: u32,
        repr: String,
    },
    /// Compare the derivative route with the closed form
    Oracle { repr: String },
    /// General-position conditions (1)-(5)
    #[command(name = "check-gp")]
    CheckGp { repr: String },
    /// Compare the Galois-side assembly with the analytic factor
    Langlands { repr: String },
    /// Run the bundled invariant suite on generated inputs
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            code: OK,
        }
    }
}

fn factor_json(f: &EulerFactor) -> Value {
    serde_json::to_value(f).expect("factors serialize")
}

fn factor_output(f: EulerFactor) -> Output {
    Output::ok(f.to_string(), factor_json(&f))
}

fn parse(src: &str) -> Result<Representation, String> {
    parse_repr(src).map_err(|e| e.to_string())
}

fn load_registry(path: Option<&PathBuf>) -> Result<Registry, String> {
    let path = path.ok_or("--registry PATH is required for this command")?;
    Registry::load(path).map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Result<Output, String> {
    // parse every representation before touching the registry
    let reprs: Vec<Representation> = match &cli.command {
        Command::Ext { repr }
        | Command::Sym { repr }
        | Command::Gamma { repr }
        | Command::Lex { repr }
        | Command::Derive { repr, .. }
        | Command::Oracle { repr }
        | Command::CheckGp { repr }
        | Command::Langlands { repr } => vec![parse(repr)?],
        Command::Rs { repr, other } => {
            let mut v = vec![parse(repr)?];
            if let Some(o) = other {
                v.push(parse(o)?);
            }
            v
        }
        Command::Selftest { .. } => Vec::new(),
    };

    if let Command::Selftest { seed, cases } = &cli.command {
        let reg = match &cli.registry {
            Some(_) => load_registry(cli.registry.as_ref())?,
            None => Registry::standard(),
        };
        return Ok(selftest(&reg, *seed, *cases));
    }

    let reg = load_registry(cli.registry.as_ref())?;
    let p = &reprs[0];
    let e = |err: lfactor_core::Error| err.to_string();
    let out = match &cli.command {
        Command::Ext { .. } => factor_output(l_rep_ext(&reg, p).map_err(e)?),
        Command::Sym { .. } => factor_output(l_rep_sym(&reg, p).map_err(e)?),
        Command::Rs { .. } => match reprs.get(1) {
            Some(p2) => factor_output(l_rep_rs_pair(&reg, p, p2).map_err(e)?),
            None => factor_output(l_rep_rs(&reg, p).map_err(e)?),
        },
        Command::Gamma { .. } => {
            let g = gamma_ext(&reg, p).map_err(e)?;
            let json = json!({"num": factor_json(g.num()), "den": factor_json(g.den())});
            Output::ok(g.to_string(), json)
        }
        Command::Lex { .. } => {
            factor_output(l_ex_constituent(&reg, &Constituent::whole(p)).map_err(e)?)
        }
        Command::Derive { order, .. } => {
            let cons = derivative_constituents(&reg, p, *order).map_err(e)?;
            let text = if cons.is_empty() {
                "0".to_string()
            } else {
                cons.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let json = json!({
                "order": order,
                "constituents": cons.iter().map(|c| json!({
                    "source": c.source,
                    "parts": c.parts.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            Output::ok(text, json)
        }
        Command::Oracle { .. } => {
            let via = l_ext_via_derivatives(&reg, p).map_err(e)?;
            let direct = l_rep_ext(&reg, p).map_err(e)?;
            verdict(&via, &direct, "derivatives", "closed form")
        }
        Command::CheckGp { .. } => {
            let report = check_general_position(&reg, p).map_err(e)?;
            let text = if report.ok {
                "ok".to_string()
            } else {
                report
                    .violations
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let json = json!({
                "ok": report.ok,
                "violations": report.violations.iter().map(|v| json!({
                    "condition": v.condition,
                    "description": v.description,
                })).collect::<Vec<_>>(),
            });
            Output::ok(text, json)
        }
        Command::Langlands { .. } => {
            let phi = FormalParam::from(p.clone());
            let galois = galois_ext(&reg, &phi).map_err(e)?;
            let analytic = l_rep_ext(&reg, p).map_err(e)?;
            verdict(&galois, &analytic, "galois", "analytic")
        }
        Command::Selftest { .. } => unreachable!("handled above"),
    };
    Ok(out)
}

fn verdict(a: &EulerFactor, b: &EulerFactor, a_name: &str, b_name: &str) -> Output {
    if a == b {
        Output::ok(
            format!("AGREE: {a}"),
            json!({"verdict": "AGREE", "factor": factor_json(a)}),
        )
    } else {
        Output {
            text: format!("DISAGREE: {a_name} {a} vs {b_name} {b}"),
            json: json!({"verdict": "DISAGREE", a_name: factor_json(a), b_name: factor_json(b)}),
            code: DISAGREE,
        }
    }
}

fn selftest(reg: &Registry, seed: u64, cases: usize) -> Output {
    let results = run_suite(reg, seed, cases);
    let mut lines = Vec::new();
    for r in &results {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        lines.push(format!("{status}  {} ({} cases)", r.name, r.cases));
        for f in r.failures.iter().take(3) {
            lines.push(format!("      {f}"));
        }
    }
    let all = results.iter().all(|r| r.passed());
    let json = json!({
        "passed": all,
        "checks": results.iter().map(|r| json!({
            "name": r.name,
            "cases": r.cases,
            "failures": r.failures,
        })).collect::<Vec<_>>(),
    });
    Output {
        text: lines.join("\n"),
        json,
        code: if all { OK } else { DISAGREE },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(DOMAIN_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(msg) => {
            if cli.json {
                println!("{}", json!({"error": msg}));
            }
            eprintln!("error: {msg}");
            ExitCode::from(DOMAIN_ERROR)
        }
    }
}
