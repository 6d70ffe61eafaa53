//! The `hlm` command: classification, Jacobi and representation checks,
//! Casimirs, field operators and exports, each producing a JSON report.
//!
//! Exit codes: 0 verified, 1 verification failure, 2 input error.

pub mod config;
mod flags;
mod verbs;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::time::Instant;

use clap::{Arg, ArgAction, Command};
use serde_json::{json, Map, Value};

pub use config::parse_config;
pub use flags::Flags;

pub const SCHEMA_VERSION: u32 = 1;

pub const VERBS: [&str; 7] = [
    "classify",
    "jacobi",
    "killing",
    "rep-verify",
    "casimir",
    "field-op",
    "export",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// What a verb hands back on success: its payload and whether every exact
/// check inside it came out clean.
pub(crate) struct VerbOutput {
    pub result: Value,
    pub pass: bool,
}

fn command() -> Command {
    let mut cmd = Command::new("hlm")
        .about("Exact checks for deformed Heisenberg-Lorentz algebras")
        .arg(
            Arg::new("verb")
                .required(true)
                .value_parser(VERBS)
                .help("what to compute"),
        );
    for key in config::KEYS {
        cmd = cmd.arg(
            Arg::new(key)
                .long(key)
                .num_args(1)
                .allow_hyphen_values(true)
                .action(ArgAction::Set),
        );
    }
    cmd
}

/// Runs with defaults from the file named by `HLM_CONFIG`, if set.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match std::env::var_os("HLM_CONFIG") {
        Some(path) => match std::fs::read_to_string(&path) {
            Ok(text) => run_with_config(args, Some(&text)),
            Err(e) => input_error(
                &Value::Null,
                &format!(
                    "cannot read HLM_CONFIG file {}: {e}",
                    path.to_string_lossy()
                ),
                Instant::now(),
                false,
            ),
        },
        None => run_with_config(args, None),
    }
}

pub fn run_with_config<I, T>(args: I, config_text: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let start = Instant::now();
    let matches = match command().try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: e.to_string(),
                };
            }
            return input_error(&Value::Null, e.to_string().trim(), start, false);
        }
    };
    let verb = matches.get_one::<String>("verb").unwrap().clone();
    let mut merged: BTreeMap<String, String> = match config_text.map(parse_config) {
        Some(Ok(c)) => c,
        Some(Err(e)) => return input_error(&json!({"verb": verb}), &e.to_string(), start, false),
        None => BTreeMap::new(),
    };
    for key in config::KEYS {
        if let Some(v) = matches.get_one::<String>(key) {
            merged.insert(key.to_string(), v.clone());
        }
    }
    let echo = json!({
        "verb": verb,
        "flags": merged.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect::<Map<_, _>>(),
    });
    let flags = Flags::new(merged);
    let text = match flags.str_or("format", "json") {
        "json" => false,
        "text" => true,
        other => return input_error(&echo, &format!("unknown format `{other}`"), start, false),
    };

    let out = match verbs::dispatch(&verb, &flags) {
        Ok(o) => o,
        Err(e) => {
            let code = exit_code(&e);
            if code == 2 {
                return input_error(&echo, &e.to_string(), start, text);
            }
            VerbOutput {
                result: json!({"error": e.to_string()}),
                pass: false,
            }
        }
    };
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": echo,
        "result": out.result,
        "verdict": if out.pass { "pass" } else { "fail" },
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    let code = if out.pass { 0 } else { 1 };
    let body = if text {
        render_text(&report)
    } else {
        hlm_core::io::to_pretty(&report)
    };
    // export writes its document to --out; every other verb writes the report
    match flags.get("out") {
        Some(path) if verb != "export" => match std::fs::write(path, &body) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
            },
            Err(e) => input_error(&echo, &format!("cannot write {path}: {e}"), start, text),
        },
        _ => Outcome { code, stdout: body },
    }
}

/// Verification failures exit 1; everything else is bad input.
fn exit_code(e: &hlm_core::Error) -> i32 {
    match e {
        hlm_core::Error::ClassificationMismatch { .. } => 1,
        _ => 2,
    }
}

fn input_error(echo: &Value, msg: &str, start: Instant, text: bool) -> Outcome {
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": echo,
        "error": msg,
        "verdict": "error",
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    Outcome {
        code: 2,
        stdout: if text {
            render_text(&report)
        } else {
            hlm_core::io::to_pretty(&report)
        },
    }
}

fn render_text(report: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(m) if !m.is_empty() => {
                for (k, x) in m {
                    let p = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&p, x, out);
                }
            }
            Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
            other => out.push_str(&format!("{prefix}: {other}\n")),
        }
    }
    let mut out = String::new();
    walk("", report, &mut out);
    out
}
