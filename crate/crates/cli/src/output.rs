//! Report assembly and rendering.
//!
//! JSON is the authoritative record: canonical key order and float
//! formatting make identical configurations produce byte-identical bytes.
//! Text output is a human summary and carries the elapsed time, which is
//! deliberately kept out of the JSON so re-runs stay comparable.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::config::{CommonOpts, Format};

#[derive(Debug)]
pub struct CliError {
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
        }
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError {
            message: e.to_string(),
        }
    }
}

/// What a subcommand hands back for rendering.
pub struct CommandOutcome<'a> {
    pub ok: bool,
    /// True when the verdict rests on finite sampling or finite horizons.
    pub probe: bool,
    pub config: Value,
    pub payload: Value,
    pub text_lines: Vec<String>,
    pub opts: &'a CommonOpts,
}

impl<'a> CommandOutcome<'a> {
    pub fn common(&self) -> &'a CommonOpts {
        self.opts
    }
}

#[derive(Serialize)]
pub struct RunReport {
    pub toolkit_version: String,
    pub command: String,
    pub verdict: String,
    pub probe_qualified: bool,
    pub config: Value,
    pub report: Value,
}

pub fn emit(
    report: &RunReport,
    text_lines: &[String],
    opts: &CommonOpts,
    started: Instant,
) -> Result<(), CliError> {
    let rendered = match opts.format {
        Format::Json => neutrometric::report::to_canonical_json(report),
        Format::Text => {
            let mut out = String::new();
            let qualifier = if report.probe_qualified { " (probe)" } else { "" };
            out.push_str(&format!(
                "{} v{}: {}{}\n",
                report.command, report.toolkit_version, report.verdict, qualifier
            ));
            for line in text_lines {
                out.push_str(line);
                out.push('\n');
            }
            out.push_str(&format!(
                "elapsed_ms: {}\n",
                started.elapsed().as_millis()
            ));
            out
        }
    };
    match &opts.out {
        Some(path) => std::fs::write(path, rendered.as_bytes())
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?,
        None => println!("{rendered}"),
    }
    Ok(())
}

/// Serialize a value into the config echo.
pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("config serialization")
}
