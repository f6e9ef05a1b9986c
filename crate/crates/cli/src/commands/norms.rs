use clap::Args;
use serde_json::json;

use neutrometric::norms::{
    diagonal_witness, tconorm_residual, tnorm_residual, verify_norm_axioms, NormKernel, NormPair,
    NormVerifyOptions,
};
use neutrometric::UnitValue;

use crate::config::CommonOpts;
use crate::output::{to_value, CliError, CommandOutcome};

#[derive(Debug, Args)]
pub struct NormsArgs {
    #[command(flatten)]
    pub common: CommonOpts,

    /// Kernel to verify (min, product, lukasiewicz, max, probsum, mean).
    #[arg(long)]
    pub kernel: Option<String>,

    /// Slope bound for the continuity probe.
    #[arg(long, default_value_t = 10.0)]
    pub slope_bound: f64,

    /// Solve the norm residual: eps1,eps2 with eps1 > eps2.
    #[arg(long, value_name = "E1,E2")]
    pub residual_tnorm: Option<String>,

    /// Solve the conorm residual: eps1,eps2 with eps1 > eps2.
    #[arg(long, value_name = "E1,E2")]
    pub residual_tconorm: Option<String>,

    /// Solve the diagonal residuals of --pair at this value.
    #[arg(long, value_name = "E5")]
    pub diagonal: Option<f64>,

    /// Norm pair for --diagonal, e.g. "lukasiewicz,probsum".
    #[arg(long, value_name = "TN,TC", default_value = "min,max")]
    pub pair: String,
}

fn parse_eps_pair(raw: &str) -> Result<(UnitValue, UnitValue), CliError> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::usage(format!(
            "expected two comma-separated values, got '{raw}'"
        )));
    }
    let a: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("invalid number '{}'", parts[0])))?;
    let b: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("invalid number '{}'", parts[1])))?;
    Ok((
        UnitValue::new(a).map_err(|e| CliError::usage(e.to_string()))?,
        UnitValue::new(b).map_err(|e| CliError::usage(e.to_string()))?,
    ))
}

pub fn run(args: &NormsArgs) -> Result<CommandOutcome<'_>, CliError> {
    let opts = &args.common;
    let config = json!({
        "kernel": args.kernel,
        "samples": opts.samples,
        "seed": opts.seed,
        "tol": opts.tol,
        "slope_bound": args.slope_bound,
        "residual_tnorm": args.residual_tnorm,
        "residual_tconorm": args.residual_tconorm,
        "diagonal": args.diagonal,
        "pair": args.pair,
    });

    let mut payload = serde_json::Map::new();
    let mut text_lines = Vec::new();
    let mut ok = true;
    let mut probe = false;
    let mut did_anything = false;

    if let Some(name) = &args.kernel {
        did_anything = true;
        probe = true;
        let kernel =
            NormKernel::by_name(name).map_err(|e| CliError::usage(e.to_string()))?;
        let verify_opts = NormVerifyOptions {
            samples: opts.samples,
            seed: opts.seed,
            tol: opts.tol.min(1e-9),
            slope_bound: args.slope_bound,
        };
        let report = verify_norm_axioms(&kernel, &verify_opts);
        ok &= report.passed();
        text_lines.push(format!(
            "verify {} ({}): {}",
            report.kernel,
            report.kind.label(),
            if report.passed() { "pass (probe)" } else { "fail" }
        ));
        for c in &report.checks {
            text_lines.push(format!(
                "  {:<16} {:<14} failures {}",
                format!("{:?}", c.check).to_lowercase(),
                c.status.label(),
                c.failures
            ));
            if let Some(w) = c.witnesses.first() {
                text_lines.push(format!("    witness: {}", w.detail));
            }
        }
        payload.insert("verification".into(), to_value(&report));
    }

    if let Some(raw) = &args.residual_tnorm {
        did_anything = true;
        let (e1, e2) = parse_eps_pair(raw)?;
        let kernel_name = args.kernel.as_deref().unwrap_or("min");
        let kernel =
            NormKernel::by_name(kernel_name).map_err(|e| CliError::usage(e.to_string()))?;
        match tnorm_residual(&kernel, e1, e2) {
            Ok(e3) => {
                text_lines.push(format!(
                    "norm residual {kernel_name}: smallest e3 with {} ∘ e3 >= {} is {}",
                    e1.get(),
                    e2.get(),
                    e3.get()
                ));
                payload.insert("residual_tnorm".into(), json!({ "eps3": e3.get() }));
            }
            Err(e) => {
                ok = false;
                text_lines.push(format!("norm residual failed: {e}"));
                payload.insert("residual_tnorm".into(), json!({ "error": e.to_string() }));
            }
        }
    }

    if let Some(raw) = &args.residual_tconorm {
        did_anything = true;
        let (e1, e2) = parse_eps_pair(raw)?;
        let kernel_name = args.kernel.as_deref().unwrap_or("max");
        let kernel =
            NormKernel::by_name(kernel_name).map_err(|e| CliError::usage(e.to_string()))?;
        match tconorm_residual(&kernel, e1, e2) {
            Ok(e4) => {
                text_lines.push(format!(
                    "conorm residual {kernel_name}: largest e4 with e4 • {} <= {} is {}",
                    e2.get(),
                    e1.get(),
                    e4.get()
                ));
                payload.insert("residual_tconorm".into(), json!({ "eps4": e4.get() }));
            }
            Err(e) => {
                ok = false;
                text_lines.push(format!("conorm residual failed: {e}"));
                payload.insert(
                    "residual_tconorm".into(),
                    json!({ "error": e.to_string() }),
                );
            }
        }
    }

    if let Some(e5) = args.diagonal {
        did_anything = true;
        let names: Vec<&str> = args.pair.split(',').collect();
        if names.len() != 2 {
            return Err(CliError::usage(format!(
                "--pair expects 'tnorm,tconorm', got '{}'",
                args.pair
            )));
        }
        let pair = NormPair::by_names(names[0].trim(), names[1].trim())
            .map_err(|e| CliError::usage(e.to_string()))?;
        let e5 = UnitValue::new(e5).map_err(|e| CliError::usage(e.to_string()))?;
        match diagonal_witness(&pair, e5) {
            Ok((e6, e7)) => {
                text_lines.push(format!(
                    "diagonal residuals of ({}): e6 = {}, e7 = {}",
                    args.pair,
                    e6.get(),
                    e7.get()
                ));
                payload.insert(
                    "diagonal".into(),
                    json!({ "eps6": e6.get(), "eps7": e7.get() }),
                );
            }
            Err(e) => {
                ok = false;
                text_lines.push(format!("diagonal residual failed: {e}"));
                payload.insert("diagonal".into(), json!({ "error": e.to_string() }));
            }
        }
    }

    if !did_anything {
        return Err(CliError::usage(
            "nothing to do: pass --kernel, --residual-tnorm, --residual-tconorm or --diagonal",
        ));
    }

    Ok(CommandOutcome {
        ok,
        probe,
        config,
        payload: serde_json::Value::Object(payload),
        text_lines,
        opts,
    })
}
