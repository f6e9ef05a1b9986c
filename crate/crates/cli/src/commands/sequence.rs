use clap::Args;
use serde::Deserialize;
use serde_json::json;

use neutrometric::sequences::{
    completeness_probe, converges_to, has_ndz, is_cauchy, limit_continuity_probe,
    uniform_convergence_check, FunctionFamily, FunctionSequence, NestedFamily, PointSequence,
};
use neutrometric::space::Point;
use neutrometric::UnitValue;

use crate::config::{parse_point, read_file, CommonOpts};
use crate::output::{to_value, CliError, CommandOutcome};

#[derive(Debug, Args)]
pub struct SequenceArgs {
    #[command(flatten)]
    pub common: CommonOpts,

    /// Task: converge | cauchy | ndz | completeness | uniform.
    #[arg(long)]
    pub task: String,

    /// Sequence spec: `harmonic`, `alternating`, `constant:<point>`,
    /// `geometric:<ratio>` or `file:<path>` (a JSON term array).
    #[arg(long)]
    pub sequence: Option<String>,

    /// Candidate limit point for converge.
    #[arg(long)]
    pub limit: Option<String>,

    /// Ball radius for the tail bounds.
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,

    /// Index window bound standing in for "for all n >= N".
    #[arg(long, default_value_t = 10_000)]
    pub n_max: usize,

    /// Nested family file for ndz: {"sets": [[...points], ...]}.
    #[arg(long)]
    pub family_file: Option<String>,

    /// Trials for the completeness probe.
    #[arg(long, default_value_t = 1000)]
    pub trials: u32,

    /// Function family for uniform: `x-over-n`, `x-pow-n`,
    /// `x-plus-1-over-n` or `constant:<value>`.
    #[arg(long)]
    pub function: Option<String>,

    /// Domain sample for uniform, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub domain: Vec<f64>,

    /// Probe points for the limit-continuity check.
    #[arg(long, value_delimiter = ',')]
    pub probe_points: Vec<f64>,

    /// Shrinking deltas for the limit-continuity check.
    #[arg(long, value_delimiter = ',', default_value = "0.2,0.1,0.05,0.02")]
    pub delta_grid: Vec<f64>,
}

fn load_sequence(args: &SequenceArgs, space: &neutrometric::space::NmsSpace) -> Result<PointSequence, CliError> {
    let spec = args
        .sequence
        .as_deref()
        .ok_or_else(|| CliError::usage(format!("task '{}' requires --sequence", args.task)))?;
    if let Some(path) = spec.strip_prefix("file:") {
        let text = read_file(std::path::Path::new(path))?;
        let raw: Vec<serde_json::Value> = serde_json::from_str(&text)
            .map_err(|e| CliError::usage(format!("invalid sequence file: {e}")))?;
        let terms = raw
            .iter()
            .map(|v| parse_point(space.universe(), &v.to_string()))
            .collect::<Result<Vec<Point>, _>>()?;
        if terms.is_empty() {
            return Err(CliError::usage("sequence file holds no terms"));
        }
        return Ok(PointSequence::Explicit(terms));
    }
    PointSequence::parse(spec).map_err(|e| CliError::usage(e.to_string()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    sets: Vec<Vec<Point>>,
    #[serde(default)]
    allow_empty: bool,
}

pub fn run(args: &SequenceArgs) -> Result<CommandOutcome<'_>, CliError> {
    let opts = &args.common;
    let (space, desc) = opts.load_space()?;
    let lambda_grid = opts.scale_grid()?;
    let epsilon = UnitValue::new(args.epsilon)
        .map_err(|e| CliError::usage(format!("--epsilon: {e}")))?;

    let config = json!({
        "space": to_value(&desc),
        "task": args.task,
        "sequence": args.sequence,
        "limit": args.limit,
        "epsilon": args.epsilon,
        "lambda_grid": opts.lambda_grid,
        "epsilon_grid": opts.epsilon_grid,
        "n_max": args.n_max,
        "seed": opts.seed,
        "trials": args.trials,
        "family_file": args.family_file,
        "function": args.function,
        "domain": args.domain,
        "probe_points": args.probe_points,
        "delta_grid": args.delta_grid,
    });

    let mut text_lines = Vec::new();
    let (ok, payload) = match args.task.as_str() {
        "converge" => {
            let seq = load_sequence(args, &space)?;
            let limit_raw = args
                .limit
                .as_deref()
                .ok_or_else(|| CliError::usage("task 'converge' requires --limit"))?;
            let limit = parse_point(space.universe(), limit_raw)?;
            let report =
                converges_to(&space, &seq, &limit, epsilon, &lambda_grid, args.n_max)
                    .map_err(|e| CliError::usage(e.to_string()))?;
            text_lines.push(format!(
                "{}: converges (probe) = {}",
                report.sequence, report.converges
            ));
            for v in &report.per_scale {
                text_lines.push(match v.threshold {
                    Some(n) => format!("  scale {:>10}: tail from N = {n}", v.lambda),
                    None => format!("  scale {:>10}: no threshold in the window", v.lambda),
                });
            }
            (report.converges, to_value(&report))
        }
        "cauchy" => {
            let seq = load_sequence(args, &space)?;
            let report = is_cauchy(&space, &seq, epsilon, &lambda_grid, args.n_max)
                .map_err(|e| CliError::usage(e.to_string()))?;
            text_lines.push(format!(
                "{}: cauchy (probe) = {}{}",
                report.sequence,
                report.cauchy,
                if report.sampled_pairs {
                    ", pair-sampled"
                } else {
                    ""
                }
            ));
            (report.cauchy, to_value(&report))
        }
        "ndz" => {
            let path = args
                .family_file
                .as_deref()
                .ok_or_else(|| CliError::usage("task 'ndz' requires --family-file"))?;
            let text = read_file(std::path::Path::new(path))?;
            let file: FamilyFile = serde_json::from_str(&text)
                .map_err(|e| CliError::usage(format!("invalid family file: {e}")))?;
            let family = NestedFamily::new(file.sets, file.allow_empty)
                .map_err(|e| CliError::usage(e.to_string()))?;
            let epsilon_grid = opts.epsilon_grid_or(&[0.1, 0.25, 0.5])?;
            let report = has_ndz(&space, &family, &epsilon_grid, &lambda_grid)
                .map_err(|e| CliError::usage(e.to_string()))?;
            text_lines.push(format!("diameter-zero (probe): {}", report.ndz));
            (report.ndz, to_value(&report))
        }
        "completeness" => {
            let report = completeness_probe(
                &space,
                args.trials,
                opts.seed,
                epsilon,
                &lambda_grid,
                args.n_max,
            )
            .map_err(|e| CliError::usage(e.to_string()))?;
            text_lines.push(format!(
                "{} trials: {} cauchy, {} convergent, {} failures",
                report.trials,
                report.cauchy_count,
                report.convergent_count,
                report.failures.len()
            ));
            (report.failures.is_empty(), to_value(&report))
        }
        "uniform" => {
            let spec = args
                .function
                .as_deref()
                .ok_or_else(|| CliError::usage("task 'uniform' requires --function"))?;
            let family =
                FunctionFamily::parse(spec).map_err(|e| CliError::usage(e.to_string()))?;
            let domain = if args.domain.is_empty() {
                (0..=20).map(|i| i as f64 / 20.0).collect()
            } else {
                args.domain.clone()
            };
            let fseq = FunctionSequence::new(domain, family)
                .map_err(|e| CliError::usage(e.to_string()))?;
            let report =
                uniform_convergence_check(&space, &fseq, epsilon, &lambda_grid, args.n_max)
                    .map_err(|e| CliError::usage(e.to_string()))?;
            text_lines.push(format!(
                "{}: uniform (probe) = {}",
                report.family, report.uniform
            ));
            for v in &report.per_scale {
                if let Some(d) = &v.diagnosis {
                    text_lines.push(format!("  scale {}: {d}", v.lambda));
                }
            }
            let mut payload = serde_json::Map::new();
            payload.insert("uniform".into(), to_value(&report));
            let mut ok = report.uniform;
            if report.uniform && fseq.family.members_continuous() {
                let probe_points = if args.probe_points.is_empty() {
                    vec![0.5]
                } else {
                    args.probe_points.clone()
                };
                let continuity = limit_continuity_probe(
                    &space,
                    &fseq,
                    &report,
                    &probe_points,
                    &args.delta_grid,
                )
                .map_err(|e| CliError::usage(e.to_string()))?;
                let improving = continuity.tables.iter().all(|t| t.improving);
                text_lines.push(format!(
                    "limit continuity: modulus improving at every probe point = {improving}"
                ));
                ok &= improving;
                payload.insert("continuity".into(), to_value(&continuity));
            }
            (ok, serde_json::Value::Object(payload))
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown task '{other}': use converge, cauchy, ndz, completeness or uniform"
            )))
        }
    };

    Ok(CommandOutcome {
        ok,
        probe: true,
        config,
        payload,
        text_lines,
        opts,
    })
}
