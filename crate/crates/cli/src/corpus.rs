//! Golden-test corpus: each case is an argument list and a JSON fragment the
//! report must contain.
//!
//! ```json
//! {"schema": "1", "cases": [
//!   {"name": "...", "args": ["splitting", "--degrees", "0,0,0,1", "--type", "2,2"],
//!    "expect": {"reducible": false}}
//! ]}
//! ```
//!
//! Objects in `expect` match by subset, arrays and scalars exactly. A case may
//! set `"exit"` to the status it should fail with instead.

use std::path::Path;

use clap::Parser;
use serde_json::{json, Value};

use crate::args::Cli;
use crate::{commands, Failure, Outcome};

pub fn contains(actual: &Value, expected: &Value) -> bool {
    match (actual, expected) {
        (Value::Object(a), Value::Object(e)) => e.iter().all(|(k, ev)| a.get(k).is_some_and(|av| contains(av, ev))),
        (Value::Array(a), Value::Array(e)) => a.len() == e.len() && a.iter().zip(e).all(|(x, y)| contains(x, y)),
        _ => actual == expected,
    }
}

fn run_case(case: &Value) -> Result<(), String> {
    let args: Vec<String> = case["args"]
        .as_array()
        .ok_or("case has no args array")?
        .iter()
        .map(|a| a.as_str().map(str::to_string).ok_or("args must be strings"))
        .collect::<Result<_, _>>()?;
    let expected_exit = case.get("exit").and_then(Value::as_u64).unwrap_or(0);
    let cli = match Cli::try_parse_from(std::iter::once("segre".to_string()).chain(args)) {
        Ok(cli) => cli,
        Err(e) => {
            return if expected_exit == 2 {
                Ok(())
            } else {
                Err(format!("usage error: {}", e.to_string().lines().next().unwrap_or("")))
            };
        }
    };
    if cli.corpus.is_some() {
        return Err("corpus cases cannot nest --corpus".into());
    }
    match commands::run(&cli) {
        Ok(out) if expected_exit == 0 => match case.get("expect") {
            Some(exp) if !contains(&out.report, exp) => Err(format!("report {} does not contain {exp}", out.report)),
            _ => Ok(()),
        },
        Ok(_) => Err(format!("expected exit {expected_exit}, got 0")),
        Err(f) if f.exit_code() as u64 == expected_exit => match case.get("expect") {
            Some(exp) if !contains(&f.to_json(), exp) => Err(format!("error {} does not contain {exp}", f.to_json())),
            _ => Ok(()),
        },
        Err(f) => Err(format!("exit {}: {}", f.exit_code(), f.to_json()["error"]["message"])),
    }
}

pub fn run_value(doc: &Value) -> Result<Outcome, Failure> {
    let cases = doc["cases"]
        .as_array()
        .ok_or_else(|| Failure::Usage("corpus must have a \"cases\" array".into()))?;
    let mut results = Vec::new();
    let mut failed = 0;
    for case in cases {
        let name = case["name"].as_str().unwrap_or("<unnamed>");
        let res = run_case(case);
        log::info!("{name}: {res:?}");
        if res.is_err() {
            failed += 1;
        }
        results.push(json!({
            "name": name,
            "passed": res.is_ok(),
            "detail": res.err(),
        }));
    }
    Ok(Outcome {
        report: json!({
            "schema": "1",
            "command": "corpus",
            "cases": results,
            "passed": cases.len() - failed,
            "failed": failed,
        }),
        status: u8::from(failed > 0),
    })
}

pub fn run_file(path: &Path) -> Result<Outcome, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read corpus {}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("corpus {} is not valid JSON: {e}", path.display())))?;
    run_value(&doc)
}
