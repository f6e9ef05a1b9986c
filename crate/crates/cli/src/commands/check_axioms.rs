use clap::Args;
use serde_json::json;

use neutrometric::axioms::{
    check_axioms, find_counterexample, AxiomId, SearchStrategy,
};
use neutrometric::report::CheckStatus;

use crate::config::CommonOpts;
use crate::output::{to_value, CliError, CommandOutcome};

#[derive(Debug, Args)]
pub struct CheckAxiomsArgs {
    #[command(flatten)]
    pub common: CommonOpts,

    /// Run the counterexample finder instead of the full checker, against
    /// this comma-separated list of axiom labels (e.g. "v,x,xv").
    #[arg(long, value_delimiter = ',')]
    pub find_axioms: Vec<String>,

    /// Evaluation budget for the counterexample finder.
    #[arg(long, default_value_t = 1_000_000)]
    pub budget: u64,

    /// Search strategy: random, grid or adversarial-line.
    #[arg(long, default_value = "random")]
    pub strategy: String,
}

pub fn run(args: &CheckAxiomsArgs) -> Result<CommandOutcome<'_>, CliError> {
    let opts = &args.common;
    let (space, desc) = opts.load_space()?;
    let grid = opts.scale_grid()?;
    if opts.samples == 0 {
        return Err(CliError::usage("--samples must be at least 1"));
    }

    let config = json!({
        "space": to_value(&desc),
        "samples": opts.samples,
        "seed": opts.seed,
        "lambda_grid": opts.lambda_grid,
        "tol": opts.tol,
        "find_axioms": args.find_axioms,
        "budget": args.budget,
        "strategy": args.strategy,
    });

    if !args.find_axioms.is_empty() {
        let axioms = args
            .find_axioms
            .iter()
            .map(|s| AxiomId::parse(s).map_err(|e| CliError::usage(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let strategy = SearchStrategy::parse(&args.strategy).ok_or_else(|| {
            CliError::usage(format!(
                "unknown strategy '{}': use random, grid or adversarial-line",
                args.strategy
            ))
        })?;
        let outcome = find_counterexample(&space, &axioms, args.budget, opts.seed, strategy);
        let ok = outcome.witness.is_none();
        let mut text_lines = vec![format!(
            "counterexample search over {:?}: {} evaluations of budget {}",
            args.find_axioms, outcome.evaluations, outcome.budget
        )];
        match &outcome.witness {
            Some(w) => text_lines.push(format!(
                "witness for axiom {}: {}",
                w.axiom.label(),
                w.violation
            )),
            None => text_lines.push(outcome.note.clone()),
        }
        return Ok(CommandOutcome {
            ok,
            probe: true,
            config,
            payload: to_value(&outcome),
            text_lines,
            opts,
        });
    }

    let report = check_axioms(&space, opts.samples, opts.seed, grid, opts.tol);
    let ok = report.passed();
    let mut text_lines = vec![format!(
        "{:<8} {:<14} {:>10} {:>9}",
        "axiom", "status", "checked", "failures"
    )];
    for e in &report.axioms {
        let qualifier = match e.status {
            CheckStatus::ProbeLimited => " (probe)",
            _ => "",
        };
        text_lines.push(format!(
            "{:<8} {:<14} {:>10} {:>9}{}",
            e.axiom.label(),
            e.status.label(),
            e.checked,
            e.failures,
            qualifier
        ));
        for w in e.witnesses.iter().take(1) {
            text_lines.push(format!("         witness: {}", w.violation));
        }
    }
    for note in &report.notes {
        text_lines.push(format!("note: {note}"));
    }

    Ok(CommandOutcome {
        ok,
        probe: true,
        config,
        payload: to_value(&report),
        text_lines,
        opts,
    })
}
