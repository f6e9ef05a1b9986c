//! Command-line front end.
//!
//! Four subcommands drive the toolkit: `check-axioms`, `topology`,
//! `sequence` and `norms`. Exit codes are strictly separated: 0 means the
//! requested property was verified (probe-level where applicable), 1 means a
//! mathematical finding (an axiom violation, a failed verification, a
//! counterexample), 2 means a usage or configuration error. JSON output is
//! canonical — stable key order, floats at twelve significant digits — so
//! identical configurations reproduce byte-identical reports.

mod commands;
mod config;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use crate::commands::{Cli, Command};
use crate::output::{emit, CliError, RunReport};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();

    let (command_name, result) = match &cli.command {
        Command::CheckAxioms(args) => ("check-axioms", commands::check_axioms::run(args)),
        Command::Topology(args) => ("topology", commands::topology::run(args)),
        Command::Sequence(args) => ("sequence", commands::sequence::run(args)),
        Command::Norms(args) => ("norms", commands::norms::run(args)),
    };

    match result {
        Ok(outcome) => {
            let opts = outcome.common();
            let ok = outcome.ok;
            let report = RunReport {
                toolkit_version: env!("CARGO_PKG_VERSION").to_owned(),
                command: command_name.to_owned(),
                verdict: if ok { "verified" } else { "finding" }.to_owned(),
                probe_qualified: outcome.probe,
                config: outcome.config,
                report: outcome.payload,
            };
            if let Err(err) = emit(&report, &outcome.text_lines, opts, started) {
                eprintln!("error: {}", err.message);
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError { message, .. }) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
