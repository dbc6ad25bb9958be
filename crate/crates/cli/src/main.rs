//! `segre`: exact subsystem-structure computations from the command line.

mod args;
mod commands;
mod corpus;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Format};

/// Failure of one invocation, mapped onto the process exit status.
#[derive(Debug)]
pub enum Failure {
    /// A computation rejected its input (exit 1).
    Domain(segre_core::Error),
    /// Flags were parseable but inconsistent (exit 2).
    Usage(String),
}

impl From<segre_core::Error> for Failure {
    fn from(e: segre_core::Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        let (kind, message) = match self {
            Failure::Domain(e) => (e.kind().to_string(), e.to_string()),
            Failure::Usage(m) => ("usage".to_string(), m.clone()),
        };
        json!({"schema": "1", "error": {"kind": kind, "message": message}})
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SEGRE_LOG", "warn"))
        .format_timestamp(None)
        .init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    let result = match (&cli.corpus, &cli.command) {
        (Some(_), Some(_)) => Err(Failure::Usage("--corpus cannot be combined with a subcommand".into())),
        (Some(path), None) => corpus::run_file(path),
        (None, _) => commands::run(&cli),
    };
    match result {
        Ok(out) => {
            emit(&out.report, format);
            ExitCode::from(out.status)
        }
        Err(f) => {
            log::debug!("failure: {f:?}");
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&f.to_json()).expect("serializable"),
                Format::Table => match &f {
                    Failure::Domain(e) => format!("error ({}): {e}", e.kind()),
                    Failure::Usage(m) => format!("error (usage): {m}"),
                },
            };
            let _ = writeln!(std::io::stderr(), "{text}");
            ExitCode::from(f.exit_code())
        }
    }
}

/// A finished report and the exit status that goes with it.
pub struct Outcome {
    pub report: Value,
    pub status: u8,
}

impl Outcome {
    pub fn ok(report: Value) -> Self {
        Outcome { report, status: 0 }
    }
}

fn emit(report: &Value, format: Format) {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(report).expect("serializable"),
        Format::Table => render::table(report),
    };
    // a closed pipe downstream is not an error worth reporting
    let _ = writeln!(std::io::stdout(), "{text}");
}
