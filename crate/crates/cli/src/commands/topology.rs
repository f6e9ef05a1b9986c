use clap::Args;
use serde_json::json;

use neutrometric::topology::{
    baire_probe, ball_contains, closure_containment_check, countable_base_prefix,
    generate_finite_topology, hausdorff_witness, interior_ball_witness, is_neutro_bounded,
    is_nowhere_dense, nb_certificate_via_cover, OpenBall, TopologyError, TopologySummary,
};
use neutrometric::UnitValue;

use crate::config::{parse_point, parse_points, CommonOpts};
use crate::output::{to_value, CliError, CommandOutcome};

#[derive(Debug, Args)]
pub struct TopologyArgs {
    #[command(flatten)]
    pub common: CommonOpts,

    /// Task: ball | hausdorff | nb | closure-lemma | finite-topology | baire | base.
    #[arg(long)]
    pub task: String,

    /// Ball center / closure-lemma center point.
    #[arg(long)]
    pub center: Option<String>,

    /// Ball radius in (0,1).
    #[arg(long)]
    pub epsilon: Option<f64>,

    /// Scale for single-scale tasks.
    #[arg(long)]
    pub lambda: Option<f64>,

    /// Query point for the ball task.
    #[arg(long)]
    pub point: Option<String>,

    /// First point for the hausdorff task.
    #[arg(long)]
    pub point_a: Option<String>,

    /// Second point for the hausdorff task.
    #[arg(long)]
    pub point_b: Option<String>,

    /// Subset of points (JSON array) for nb.
    #[arg(long)]
    pub subset: Option<String>,

    /// Cover centers (JSON array) for the nb certificate.
    #[arg(long)]
    pub centers: Option<String>,

    /// Outer radius for closure-lemma.
    #[arg(long)]
    pub eps1: Option<f64>,

    /// Inner radius for closure-lemma.
    #[arg(long)]
    pub eps2: Option<f64>,

    /// Dense points (JSON array, or "all") for the base task.
    #[arg(long)]
    pub dense_points: Option<String>,

    /// Depth of the countable base family.
    #[arg(long, default_value_t = 4)]
    pub depth: u32,

    /// Subset (JSON array) to test for nowhere-density within finite-topology.
    #[arg(long)]
    pub nowhere_dense_subset: Option<String>,

    /// Verification sample size for witness checks.
    #[arg(long, default_value_t = 1000)]
    pub check_samples: usize,
}

fn require<T: Clone>(opt: &Option<T>, flag: &str, task: &str) -> Result<T, CliError> {
    opt.clone()
        .ok_or_else(|| CliError::usage(format!("task '{task}' requires --{flag}")))
}

fn unit_arg(x: f64, flag: &str) -> Result<UnitValue, CliError> {
    UnitValue::new(x).map_err(|e| CliError::usage(format!("--{flag}: {e}")))
}

/// Errors that reflect a wrong invocation (task/universe mismatch, parameter
/// preconditions) exit with 2; errors that are mathematical findings about a
/// valid configuration map to a failed verdict (exit 1).
fn finding_or_usage(e: TopologyError) -> Result<(bool, String), CliError> {
    match e {
        TopologyError::NotApplicable(_)
        | TopologyError::CertificateFailed(_)
        | TopologyError::SearchFailed { .. }
        | TopologyError::NotContained => Ok((false, e.to_string())),
        other => Err(CliError::usage(other.to_string())),
    }
}

pub fn run(args: &TopologyArgs) -> Result<CommandOutcome<'_>, CliError> {
    let opts = &args.common;
    let (space, desc) = opts.load_space()?;
    let universe = space.universe();

    let config = json!({
        "space": to_value(&desc),
        "task": args.task,
        "samples": opts.samples,
        "seed": opts.seed,
        "lambda_grid": opts.lambda_grid,
        "epsilon_grid": opts.epsilon_grid,
        "tol": opts.tol,
        "center": args.center,
        "epsilon": args.epsilon,
        "lambda": args.lambda,
        "point": args.point,
        "point_a": args.point_a,
        "point_b": args.point_b,
        "subset": args.subset,
        "centers": args.centers,
        "eps1": args.eps1,
        "eps2": args.eps2,
        "dense_points": args.dense_points,
        "depth": args.depth,
        "check_samples": args.check_samples,
    });

    let mut text_lines = Vec::new();
    let (ok, probe, payload) = match args.task.as_str() {
        "ball" => {
            let center = parse_point(universe, &require(&args.center, "center", "ball")?)?;
            let epsilon = require(&args.epsilon, "epsilon", "ball")?;
            let lambda = require(&args.lambda, "lambda", "ball")?;
            let point = parse_point(universe, &require(&args.point, "point", "ball")?)?;
            let ball = OpenBall::new(center, epsilon, lambda)
                .map_err(|e| CliError::usage(e.to_string()))?;
            let contains = ball_contains(&space, &ball, &point)
                .map_err(|e| CliError::usage(e.to_string()))?;
            text_lines.push(format!("ball contains point: {contains}"));
            if contains {
                match interior_ball_witness(&space, &ball, &point, args.check_samples) {
                    Ok(w) => {
                        text_lines.push(format!(
                            "interior ball: radius {:.6}, scale {:.6}, verified on {} points{}",
                            w.inner.epsilon,
                            w.inner.lambda,
                            w.verified_points,
                            if w.exhaustive { " (exhaustive)" } else { "" }
                        ));
                        (
                            true,
                            !w.exhaustive,
                            json!({ "contains": true, "interior_witness": to_value(&w) }),
                        )
                    }
                    Err(e) => {
                        let (ok, msg) = finding_or_usage(e)?;
                        text_lines.push(msg.clone());
                        (ok, true, json!({ "contains": true, "error": msg }))
                    }
                }
            } else {
                (false, false, json!({ "contains": false }))
            }
        }
        "hausdorff" => {
            let a = parse_point(universe, &require(&args.point_a, "point-a", "hausdorff")?)?;
            let b = parse_point(universe, &require(&args.point_b, "point-b", "hausdorff")?)?;
            let lambda = require(&args.lambda, "lambda", "hausdorff")?;
            match hausdorff_witness(&space, &a, &b, lambda, args.check_samples) {
                Ok(w) => {
                    text_lines.push(format!(
                        "disjoint balls of radius {:.6} at scale {:.6}, verified on {} grid points",
                        w.ball_a.epsilon, w.ball_a.lambda, w.checked
                    ));
                    (true, !w.exhaustive, to_value(&w))
                }
                Err(TopologyError::DistinctPointsRequired) => {
                    return Err(CliError::usage("the two points must be distinct"))
                }
                Err(e) => {
                    let (ok, msg) = finding_or_usage(e)?;
                    text_lines.push(msg.clone());
                    (ok, false, json!({ "error": msg }))
                }
            }
        }
        "nb" => {
            let subset = parse_points(universe, &require(&args.subset, "subset", "nb")?)?;
            if subset.is_empty() {
                return Err(CliError::usage("--subset must be non-empty"));
            }
            let lambda_grid = opts.scale_grid()?;
            let epsilon_grid = opts.epsilon_grid_or(&[0.2, 0.4, 0.6, 0.8])?;
            let bound = is_neutro_bounded(&space, &subset, &lambda_grid, &epsilon_grid)
                .map_err(|e| CliError::usage(e.to_string()))?;
            let mut payload = serde_json::Map::new();
            let mut ok = match &bound {
                Some(b) => {
                    text_lines.push(format!(
                        "neutrosophically bounded at (lambda = {}, epsilon = {})",
                        b.lambda, b.epsilon
                    ));
                    payload.insert("bound".into(), to_value(b));
                    true
                }
                None => {
                    text_lines.push("no grid pair bounds the subset".into());
                    payload.insert("bound".into(), serde_json::Value::Null);
                    false
                }
            };
            if let Some(raw) = &args.centers {
                let centers = parse_points(universe, raw)?;
                let epsilon = unit_arg(require(&args.epsilon, "epsilon", "nb")?, "epsilon")?;
                let lambda = require(&args.lambda, "lambda", "nb")?;
                match nb_certificate_via_cover(&space, &subset, &centers, epsilon, lambda) {
                    Ok(cert) => {
                        text_lines.push(format!(
                            "cover certificate: (lambda0 = {}, zeta = {:.9}), {} pairs verified",
                            cert.lambda0, cert.zeta, cert.verified_pairs
                        ));
                        payload.insert("certificate".into(), to_value(&cert));
                    }
                    Err(e) => {
                        let (cert_ok, msg) = finding_or_usage(e)?;
                        ok &= cert_ok;
                        text_lines.push(msg.clone());
                        payload.insert("certificate".into(), json!({ "error": msg }));
                    }
                }
            }
            (ok, false, serde_json::Value::Object(payload))
        }
        "closure-lemma" => {
            let center =
                parse_point(universe, &require(&args.center, "center", "closure-lemma")?)?;
            let eps1 = unit_arg(require(&args.eps1, "eps1", "closure-lemma")?, "eps1")?;
            let eps2 = unit_arg(require(&args.eps2, "eps2", "closure-lemma")?, "eps2")?;
            let lambda = require(&args.lambda, "lambda", "closure-lemma")?;
            let check = closure_containment_check(
                &space,
                &center,
                eps1,
                eps2,
                lambda,
                args.check_samples,
            )
            .map_err(|e| CliError::usage(e.to_string()))?;
            text_lines.push(format!(
                "closure containment: {} ({} points, {:?})",
                check.holds, check.checked, check.regime
            ));
            let probe = check.regime == neutrometric::topology::ClosureRegime::SampledReal;
            (check.holds, probe, to_value(&check))
        }
        "finite-topology" | "baire" => {
            let lambda_grid = opts.scale_grid()?;
            let epsilon_grid = opts.epsilon_grid_or(&[0.25, 0.5, 0.75])?;
            let top = generate_finite_topology(&space, &epsilon_grid, &lambda_grid)
                .map_err(|e| CliError::usage(e.to_string()))?;
            let summary = TopologySummary::of(&top);
            text_lines.push(format!(
                "{} open sets over {} points (discrete: {}, base property: {})",
                summary.open_set_count,
                summary.point_count,
                summary.is_discrete,
                summary.base_property
            ));
            if args.task == "baire" {
                let report = baire_probe(&top);
                text_lines.push(format!(
                    "dense open sets: {}; intersection dense: {}",
                    report.dense_open_count, report.holds
                ));
                (
                    report.holds,
                    false,
                    json!({ "topology": to_value(&summary), "baire": to_value(&report) }),
                )
            } else {
                let mut ok = summary.closure_fixpoint;
                let mut payload = serde_json::Map::new();
                payload.insert("topology".into(), to_value(&summary));
                if let Some(raw) = &args.nowhere_dense_subset {
                    let subset = parse_points(universe, raw)?;
                    let report = is_nowhere_dense(&top, &subset)
                        .map_err(|e| CliError::usage(e.to_string()))?;
                    text_lines.push(format!(
                        "nowhere dense: {} (ball criterion {}, agreement {})",
                        report.nowhere_dense, report.ball_criterion, report.agree
                    ));
                    ok &= report.agree;
                    payload.insert("nowhere_dense".into(), to_value(&report));
                }
                (ok, false, serde_json::Value::Object(payload))
            }
        }
        "base" => {
            let raw = require(&args.dense_points, "dense-points", "base")?;
            let dense = if raw == "all" {
                space.universe().enumerate_points().ok_or_else(|| {
                    CliError::usage("--dense-points all needs a finite universe")
                })?
            } else {
                parse_points(universe, &raw)?
            };
            let report = countable_base_prefix(&space, &dense, args.depth)
                .map_err(|e| CliError::usage(e.to_string()))?;
            let base_property = match report.base_property {
                Some(b) => b.to_string(),
                None => "unchecked (non-finite universe)".to_owned(),
            };
            text_lines.push(format!(
                "{} base balls (radius clamped: {}); base property: {}",
                report.balls.len(),
                report.radius_clamped,
                base_property
            ));
            let ok = report.base_property.unwrap_or(true);
            (ok, report.base_property.is_none(), to_value(&report))
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown task '{other}': use ball, hausdorff, nb, closure-lemma, \
                 finite-topology, baire or base"
            )))
        }
    };

    Ok(CommandOutcome {
        ok,
        probe,
        config,
        payload,
        text_lines,
        opts,
    })
}
