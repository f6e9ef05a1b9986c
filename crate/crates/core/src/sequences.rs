//! Convergence, Cauchy, diameter-zero, completeness and uniform-convergence
//! probes.
//!
//! All limit statements are checked on a finite index window `[1, n_max]`:
//! "for all n ≥ N" becomes "for all n in [N, n_max]", and every verdict is a
//! probe, labeled as such, never a proof. A sequence converges to `a` at
//! radius `ε` and scale `λ` when its tail satisfies the open-ball bounds
//! `G > 1−ε`, `B < ε`, `Y < ε` against `a`; it is Cauchy when tail pairs
//! satisfy them against each other.

use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::axioms::ScaleGrid;
use crate::sampling::stream_rng;
use crate::space::{DegreesTriple, NmsSpace, Point, PointKey, SpaceError};
use crate::unit::UnitValue;

/// Cap on pairwise checks per window; beyond it pair sampling turns random.
pub const PAIR_SAMPLE_CAP: usize = 10_000;

#[derive(Debug, Error)]
pub enum SequenceError {
    #[error("sequence index window is empty (n_max = {0})")]
    EmptyWindow(usize),
    #[error("explicit sequence has no terms")]
    EmptySequence,
    #[error("nested family is invalid: {0}")]
    InvalidFamily(String),
    #[error("function domain sample is empty")]
    EmptyDomain,
    #[error("the target universe must be the real line (dimension 1), got {0}")]
    TargetNotRealLine(String),
    #[error("limit-continuity probe requires a uniform convergence verdict")]
    NotUniform,
    #[error("limit-continuity probe requires a family of continuous functions")]
    NotContinuousFamily,
    #[error("completeness probe needs a finite universe")]
    NonFiniteUniverse,
    #[error("unknown sequence spec '{0}'")]
    UnknownSequence(String),
    #[error("unknown function family '{0}'")]
    UnknownFamily(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

// ---------------------------------------------------------------------------
// Point sequences
// ---------------------------------------------------------------------------

/// A point sequence: an explicit term list or a named generator.
#[derive(Clone, Debug)]
pub enum PointSequence {
    Explicit(Vec<Point>),
    /// `a_n = 1/n` on the real line.
    Harmonic,
    /// `a_n = (−1)^n` on the real line.
    Alternating,
    Constant(Point),
    /// `a_n = ratio^n` on the real line.
    Geometric { ratio: f64 },
}

impl PointSequence {
    /// Term with 1-based index `n`.
    pub fn term(&self, n: usize) -> Point {
        match self {
            PointSequence::Explicit(terms) => terms[(n - 1).min(terms.len() - 1)].clone(),
            PointSequence::Harmonic => Point::vector1(1.0 / n as f64),
            PointSequence::Alternating => Point::vector1(if n.is_multiple_of(2) { 1.0 } else { -1.0 }),
            PointSequence::Constant(p) => p.clone(),
            PointSequence::Geometric { ratio } => Point::vector1(ratio.powi(n as i32)),
        }
    }

    /// Hard length bound for explicit sequences.
    pub fn len_bound(&self) -> Option<usize> {
        match self {
            PointSequence::Explicit(terms) => Some(terms.len()),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            PointSequence::Explicit(t) => format!("explicit[{}]", t.len()),
            PointSequence::Harmonic => "harmonic".into(),
            PointSequence::Alternating => "alternating".into(),
            PointSequence::Constant(_) => "constant".into(),
            PointSequence::Geometric { ratio } => format!("geometric({ratio})"),
        }
    }

    /// Parse a config spec: `harmonic`, `alternating`, `constant:<point>`
    /// or `geometric:<ratio>` (points as JSON).
    pub fn parse(spec: &str) -> Result<Self, SequenceError> {
        if spec == "harmonic" {
            return Ok(PointSequence::Harmonic);
        }
        if spec == "alternating" {
            return Ok(PointSequence::Alternating);
        }
        if let Some(arg) = spec.strip_prefix("constant:") {
            let point: Point = serde_json::from_str(arg)
                .map_err(|_| SequenceError::UnknownSequence(spec.to_owned()))?;
            return Ok(PointSequence::Constant(point));
        }
        if let Some(arg) = spec.strip_prefix("geometric:") {
            let ratio: f64 = arg
                .parse()
                .map_err(|_| SequenceError::UnknownSequence(spec.to_owned()))?;
            return Ok(PointSequence::Geometric { ratio });
        }
        Err(SequenceError::UnknownSequence(spec.to_owned()))
    }

    fn effective_window(&self, n_max: usize) -> Result<usize, SequenceError> {
        let n = match self.len_bound() {
            Some(0) => return Err(SequenceError::EmptySequence),
            Some(len) => n_max.min(len),
            None => n_max,
        };
        if n == 0 {
            return Err(SequenceError::EmptyWindow(n_max));
        }
        Ok(n)
    }
}

fn in_ball(t: &DegreesTriple, eps: f64) -> bool {
    t.g > 1.0 - eps && t.b < eps && t.y < eps
}

/// Per-scale verdict: the least tail start that keeps the window inside the
/// bounds, or a concrete failure.
#[derive(Debug, Clone, Serialize)]
pub struct ScaleVerdict {
    pub lambda: f64,
    /// Least `N` such that all sampled indices (or pairs) in `[N, n_max]`
    /// satisfy the bounds; `None` when even the tail window fails.
    pub threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<SeqFailure>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeqFailure {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub other_index: Option<usize>,
    pub degrees: DegreesTriple,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub sequence: String,
    pub epsilon: f64,
    pub n_max: usize,
    pub per_scale: Vec<ScaleVerdict>,
    /// Probe verdict: every scale admitted a threshold.
    pub converges: bool,
}

/// Check convergence of `seq` to `limit`: per scale, find the least `N` with
/// `G(a_n, limit, λ) > 1−ε`, `B < ε`, `Y < ε` for all `n ∈ [N, n_max]`.
pub fn converges_to(
    space: &NmsSpace,
    seq: &PointSequence,
    limit: &Point,
    epsilon: UnitValue,
    lambda_grid: &ScaleGrid,
    n_max: usize,
) -> Result<ConvergenceReport, SequenceError> {
    let eps = epsilon.get();
    let window = seq.effective_window(n_max)?;
    let mut per_scale = Vec::new();
    for &lambda in lambda_grid.values() {
        // Scan from the tail down to the last failing index.
        let mut last_fail: Option<(usize, DegreesTriple)> = None;
        for n in (1..=window).rev() {
            let t = space.evaluate(&seq.term(n), limit, lambda)?;
            if !in_ball(&t, eps) {
                last_fail = Some((n, t));
                break;
            }
        }
        // Indices below the scan stop are irrelevant: the scan already
        // starts at the tail, so the first failure met is the last overall.
        let verdict = match last_fail {
            None => ScaleVerdict {
                lambda,
                threshold: Some(1),
                failure: None,
            },
            Some((n, t)) if n == window => ScaleVerdict {
                lambda,
                threshold: None,
                failure: Some(SeqFailure {
                    index: n,
                    other_index: None,
                    degrees: t,
                    detail: format!(
                        "term {n} still escapes the bounds at the end of the window"
                    ),
                }),
            },
            Some((n, _)) => ScaleVerdict {
                lambda,
                threshold: Some(n + 1),
                failure: None,
            },
        };
        per_scale.push(verdict);
    }
    Ok(ConvergenceReport {
        sequence: seq.name(),
        epsilon: eps,
        n_max: window,
        converges: per_scale.iter().all(|v| v.threshold.is_some()),
        per_scale,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CauchyReport {
    pub sequence: String,
    pub epsilon: f64,
    pub n_max: usize,
    pub per_scale: Vec<ScaleVerdict>,
    pub cauchy: bool,
    /// True when some window was checked by random pair sampling instead of
    /// exhaustively.
    pub sampled_pairs: bool,
}

/// Check the Cauchy condition: per scale, the least `N` such that all pairs
/// `n, m ∈ [N, n_max]` satisfy the bounds. Windows with at most
/// [`PAIR_SAMPLE_CAP`] distinct point pairs are checked exhaustively (the
/// degrees depend only on the points, so duplicate terms collapse); larger
/// windows fall back to seeded random pair sampling.
pub fn is_cauchy(
    space: &NmsSpace,
    seq: &PointSequence,
    epsilon: UnitValue,
    lambda_grid: &ScaleGrid,
    n_max: usize,
) -> Result<CauchyReport, SequenceError> {
    let eps = epsilon.get();
    let window = seq.effective_window(n_max)?;
    if window < 2 {
        return Err(SequenceError::EmptyWindow(window));
    }
    let mut sampled_pairs = false;
    let mut per_scale = Vec::new();

    for (scale_idx, &lambda) in lambda_grid.values().iter().enumerate() {
        // The all-pairs window property is monotone in N; binary search for
        // the least good N.
        let mut check_window = |from: usize| -> Result<Option<SeqFailure>, SequenceError> {
            // Collapse the window terms to distinct points.
            let mut distinct: Vec<(usize, Point)> = Vec::new();
            let mut seen: HashMap<PointKey, ()> = HashMap::new();
            for n in from..=window {
                let p = seq.term(n);
                if seen.insert(p.key(), ()).is_none() {
                    distinct.push((n, p));
                }
            }
            let pair_count = distinct.len() * (distinct.len() + 1) / 2;
            if pair_count <= PAIR_SAMPLE_CAP {
                for (i, (n, p)) in distinct.iter().enumerate() {
                    for (m, q) in &distinct[i..] {
                        let t = space.evaluate(p, q, lambda)?;
                        if !in_ball(&t, eps) {
                            return Ok(Some(SeqFailure {
                                index: *n,
                                other_index: Some(*m),
                                degrees: t,
                                detail: format!(
                                    "pair ({n}, {m}) escapes the bounds at scale {lambda}"
                                ),
                            }));
                        }
                    }
                }
            } else {
                sampled_pairs = true;
                let mut rng = stream_rng(
                    0x5EED ^ (from as u64).wrapping_mul(0x9E37_79B9),
                    scale_idx as u64,
                );
                for _ in 0..PAIR_SAMPLE_CAP {
                    let n = rng.random_range(from..=window);
                    let m = rng.random_range(from..=window);
                    let t = space.evaluate(&seq.term(n), &seq.term(m), lambda)?;
                    if !in_ball(&t, eps) {
                        return Ok(Some(SeqFailure {
                            index: n,
                            other_index: Some(m),
                            degrees: t,
                            detail: format!(
                                "pair ({n}, {m}) escapes the bounds at scale {lambda}"
                            ),
                        }));
                    }
                }
            }
            Ok(None)
        };

        // The smallest meaningful tail still holds one genuine pair; a
        // single-element window would make every sequence vacuously Cauchy.
        let tail_start = window - 1;
        let verdict = if let Some(f) = check_window(tail_start)? {
            ScaleVerdict {
                lambda,
                threshold: None,
                failure: Some(f),
            }
        } else if check_window(1)?.is_none() {
            ScaleVerdict {
                lambda,
                threshold: Some(1),
                failure: None,
            }
        } else {
            // Invariant: window starting at lo fails, at hi passes.
            let (mut lo, mut hi) = (1usize, tail_start);
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if check_window(mid)?.is_none() {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let failure = check_window(lo)?;
            ScaleVerdict {
                lambda,
                threshold: Some(hi),
                failure,
            }
        };
        per_scale.push(verdict);
    }

    Ok(CauchyReport {
        sequence: seq.name(),
        epsilon: eps,
        n_max: window,
        cauchy: per_scale.iter().all(|v| v.threshold.is_some()),
        per_scale,
        sampled_pairs,
    })
}

// ---------------------------------------------------------------------------
// Nested families and neutrosophic diameter zero
// ---------------------------------------------------------------------------

/// An inclusion-decreasing family of finite point sets.
#[derive(Debug, Clone)]
pub struct NestedFamily {
    sets: Vec<Vec<Point>>,
}

impl NestedFamily {
    /// Validates the decreasing inclusion `D_1 ⊇ D_2 ⊇ …` (point identity is
    /// exact: labels by name, vectors bitwise). Empty members are rejected
    /// unless `allow_empty`.
    pub fn new(sets: Vec<Vec<Point>>, allow_empty: bool) -> Result<Self, SequenceError> {
        if sets.is_empty() {
            return Err(SequenceError::InvalidFamily("family has no sets".into()));
        }
        for (i, set) in sets.iter().enumerate() {
            if set.is_empty() && !allow_empty {
                return Err(SequenceError::InvalidFamily(format!(
                    "set {} is empty",
                    i + 1
                )));
            }
            if i > 0 {
                let prev: Vec<PointKey> = sets[i - 1].iter().map(Point::key).collect();
                for p in set {
                    if !prev.contains(&p.key()) {
                        return Err(SequenceError::InvalidFamily(format!(
                            "set {} is not included in set {}: {p:?}",
                            i + 1,
                            i
                        )));
                    }
                }
            }
        }
        Ok(NestedFamily { sets })
    }

    pub fn sets(&self) -> &[Vec<Point>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Exact intersection of all members.
    pub fn intersection(&self) -> Vec<Point> {
        let mut result = self.sets[0].clone();
        for set in &self.sets[1..] {
            let keys: Vec<PointKey> = set.iter().map(Point::key).collect();
            result.retain(|p| keys.contains(&p.key()));
        }
        result
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NdzEntry {
    pub epsilon: f64,
    pub lambda: f64,
    /// Least family index whose member keeps all pairs within the bounds.
    pub level: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NdzReport {
    pub entries: Vec<NdzEntry>,
    pub ndz: bool,
}

/// Diameter-zero probe: for every `(ε, λ)` on the grids, find the least
/// family level whose member has all pairs within the ball bounds.
pub fn has_ndz(
    space: &NmsSpace,
    family: &NestedFamily,
    epsilon_grid: &[f64],
    lambda_grid: &ScaleGrid,
) -> Result<NdzReport, SequenceError> {
    let mut entries = Vec::new();
    for &eps in epsilon_grid {
        for &lambda in lambda_grid.values() {
            let mut level = None;
            'levels: for (idx, set) in family.sets().iter().enumerate() {
                for (i, a) in set.iter().enumerate() {
                    for b in &set[i..] {
                        let t = space.evaluate(a, b, lambda)?;
                        if !in_ball(&t, eps) {
                            continue 'levels;
                        }
                    }
                }
                level = Some(idx + 1);
                break;
            }
            entries.push(NdzEntry {
                epsilon: eps,
                lambda,
                level,
            });
        }
    }
    Ok(NdzReport {
        ndz: entries.iter().all(|e| e.level.is_some()),
        entries,
    })
}

// ---------------------------------------------------------------------------
// Completeness probe on finite spaces
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct CompletenessFailure {
    pub trial: u32,
    pub kind: String,
    pub terms_preview: Vec<Point>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompletenessReport {
    pub trials: u32,
    pub cauchy_count: u32,
    pub convergent_count: u32,
    /// Sequences judged Cauchy with no limit point in the universe. In a
    /// finite space every Cauchy sequence is eventually constant, so this is
    /// expected to stay empty.
    pub failures: Vec<CompletenessFailure>,
}

/// Generate random sequences over a finite universe (i.i.d., eventually
/// constant, and two-point oscillating) and assert that every sequence the
/// Cauchy probe accepts also converges to some universe point.
pub fn completeness_probe(
    space: &NmsSpace,
    trials: u32,
    seed: u64,
    epsilon: UnitValue,
    lambda_grid: &ScaleGrid,
    n_max: usize,
) -> Result<CompletenessReport, SequenceError> {
    let Some(points) = space.universe().enumerate_points() else {
        return Err(SequenceError::NonFiniteUniverse);
    };
    let mut cauchy_count = 0;
    let mut convergent_count = 0;
    let mut failures = Vec::new();

    for trial in 0..trials {
        let mut rng = stream_rng(seed, trial as u64);
        let kind = trial % 3;
        let mut terms = Vec::with_capacity(n_max);
        match kind {
            0 => {
                for _ in 0..n_max {
                    terms.push(points[rng.random_range(0..points.len())].clone());
                }
            }
            1 => {
                let prefix = rng.random_range(0..=n_max / 2);
                let tail = points[rng.random_range(0..points.len())].clone();
                for _ in 0..prefix {
                    terms.push(points[rng.random_range(0..points.len())].clone());
                }
                while terms.len() < n_max {
                    terms.push(tail.clone());
                }
            }
            _ => {
                let x = points[rng.random_range(0..points.len())].clone();
                let y = points[rng.random_range(0..points.len())].clone();
                for n in 0..n_max {
                    terms.push(if n % 2 == 0 { x.clone() } else { y.clone() });
                }
            }
        }
        let seq = PointSequence::Explicit(terms);
        let cauchy = is_cauchy(space, &seq, epsilon, lambda_grid, n_max)?;
        if !cauchy.cauchy {
            continue;
        }
        cauchy_count += 1;
        let mut limit_found = false;
        for p in &points {
            let report = converges_to(space, &seq, p, epsilon, lambda_grid, n_max)?;
            if report.converges {
                limit_found = true;
                break;
            }
        }
        if limit_found {
            convergent_count += 1;
        } else {
            let kind_name = ["iid", "eventually-constant", "oscillating"][kind as usize];
            failures.push(CompletenessFailure {
                trial,
                kind: kind_name.to_owned(),
                terms_preview: (1..=6.min(n_max)).map(|n| seq.term(n)).collect(),
            });
        }
    }

    Ok(CompletenessReport {
        trials,
        cauchy_count,
        convergent_count,
        failures,
    })
}

// ---------------------------------------------------------------------------
// Function sequences
// ---------------------------------------------------------------------------

/// Indexed function family with its candidate limit, real-valued on the real
/// line.
#[derive(Clone)]
pub enum FunctionFamily {
    /// `f_n(x) = x / n`, limit `0`.
    ScaledIdentity,
    /// `f_n(x) = x^n`, limit `0` for `|x| < 1` and `1` at `x = 1` — the
    /// classical pointwise-but-not-uniform family (its limit is
    /// discontinuous).
    PowerCurve,
    /// `f_n(x) = x + 1/n`, limit `x`.
    ShiftedIdentity,
    /// `f_n(x) = f(x) = value` for all `n`.
    ConstantMap { value: f64 },
    Custom {
        name: String,
        f: Arc<dyn Fn(usize, f64) -> f64 + Send + Sync>,
        limit: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
        continuous: bool,
    },
}

impl std::fmt::Debug for FunctionFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

impl FunctionFamily {
    pub fn value(&self, n: usize, x: f64) -> f64 {
        match self {
            FunctionFamily::ScaledIdentity => x / n as f64,
            FunctionFamily::PowerCurve => x.powi(n as i32),
            FunctionFamily::ShiftedIdentity => x + 1.0 / n as f64,
            FunctionFamily::ConstantMap { value } => *value,
            FunctionFamily::Custom { f, .. } => f(n, x),
        }
    }

    pub fn limit(&self, x: f64) -> f64 {
        match self {
            FunctionFamily::ScaledIdentity => 0.0,
            FunctionFamily::PowerCurve => {
                if x.abs() < 1.0 {
                    0.0
                } else if x == 1.0 {
                    1.0
                } else {
                    f64::NAN
                }
            }
            FunctionFamily::ShiftedIdentity => x,
            FunctionFamily::ConstantMap { value } => *value,
            FunctionFamily::Custom { limit, .. } => limit(x),
        }
    }

    /// Whether every member function is continuous (the probe precondition).
    pub fn members_continuous(&self) -> bool {
        match self {
            FunctionFamily::Custom { continuous, .. } => *continuous,
            _ => true,
        }
    }

    pub fn name(&self) -> String {
        match self {
            FunctionFamily::ScaledIdentity => "x-over-n".into(),
            FunctionFamily::PowerCurve => "x-pow-n".into(),
            FunctionFamily::ShiftedIdentity => "x-plus-1-over-n".into(),
            FunctionFamily::ConstantMap { value } => format!("constant({value})"),
            FunctionFamily::Custom { name, .. } => name.clone(),
        }
    }

    pub fn parse(spec: &str) -> Result<Self, SequenceError> {
        match spec {
            "x-over-n" => Ok(FunctionFamily::ScaledIdentity),
            "x-pow-n" => Ok(FunctionFamily::PowerCurve),
            "x-plus-1-over-n" => Ok(FunctionFamily::ShiftedIdentity),
            other => {
                if let Some(arg) = other.strip_prefix("constant:") {
                    let value: f64 = arg
                        .parse()
                        .map_err(|_| SequenceError::UnknownFamily(spec.to_owned()))?;
                    return Ok(FunctionFamily::ConstantMap { value });
                }
                Err(SequenceError::UnknownFamily(spec.to_owned()))
            }
        }
    }
}

/// A function sequence restricted to a sampled domain.
#[derive(Debug, Clone)]
pub struct FunctionSequence {
    pub domain: Vec<f64>,
    pub family: FunctionFamily,
}

impl FunctionSequence {
    pub fn new(domain: Vec<f64>, family: FunctionFamily) -> Result<Self, SequenceError> {
        if domain.is_empty() {
            return Err(SequenceError::EmptyDomain);
        }
        Ok(FunctionSequence { domain, family })
    }
}

fn require_real_line(space: &NmsSpace) -> Result<(), SequenceError> {
    match space.universe() {
        crate::space::Universe::RealVector { dim: 1, .. } => Ok(()),
        u => Err(SequenceError::TargetNotRealLine(format!("{u:?}"))),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PointwiseEntry {
    pub x: f64,
    pub threshold: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UniformScaleVerdict {
    pub lambda: f64,
    /// Single threshold valid for every domain point, when one exists within
    /// the window.
    pub uniform_threshold: Option<usize>,
    pub pointwise: Vec<PointwiseEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnosis: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UniformReport {
    pub family: String,
    pub epsilon: f64,
    pub n_max: usize,
    pub per_scale: Vec<UniformScaleVerdict>,
    pub uniform: bool,
}

/// Uniform-convergence probe: per scale, seek one `N` valid for every domain
/// point and all `n ∈ [N, n_max]`, and contrast it with the per-point
/// thresholds to diagnose non-uniformity.
pub fn uniform_convergence_check(
    space: &NmsSpace,
    fseq: &FunctionSequence,
    epsilon: UnitValue,
    lambda_grid: &ScaleGrid,
    n_max: usize,
) -> Result<UniformReport, SequenceError> {
    require_real_line(space)?;
    if n_max == 0 {
        return Err(SequenceError::EmptyWindow(0));
    }
    let eps = epsilon.get();
    let mut per_scale = Vec::new();
    for &lambda in lambda_grid.values() {
        let mut pointwise = Vec::with_capacity(fseq.domain.len());
        for &x in &fseq.domain {
            let fx = fseq.family.limit(x);
            let mut last_fail = None;
            for n in (1..=n_max).rev() {
                let t = space.evaluate(
                    &Point::vector1(fseq.family.value(n, x)),
                    &Point::vector1(fx),
                    lambda,
                )?;
                if !in_ball(&t, eps) {
                    last_fail = Some(n);
                    break;
                }
            }
            let threshold = match last_fail {
                None => Some(1),
                Some(n) if n == n_max => None,
                Some(n) => Some(n + 1),
            };
            pointwise.push(PointwiseEntry { x, threshold });
        }
        let uniform_threshold = pointwise
            .iter()
            .map(|e| e.threshold)
            .try_fold(1usize, |acc, t| t.map(|t| acc.max(t)));
        let diagnosis = if uniform_threshold.is_none() {
            let mut worst: Vec<&PointwiseEntry> = pointwise.iter().collect();
            worst.sort_by(|a, b| match (a.threshold, b.threshold) {
                (None, None) => a.x.total_cmp(&b.x),
                (None, Some(_)) => std::cmp::Ordering::Less,
                (Some(_), None) => std::cmp::Ordering::Greater,
                (Some(x), Some(y)) => y.cmp(&x),
            });
            let rows: Vec<String> = worst
                .iter()
                .take(4)
                .map(|e| match e.threshold {
                    Some(t) => format!("x = {} needs N = {t}", e.x),
                    None => format!("x = {} admits no N within the window", e.x),
                })
                .collect();
            Some(format!(
                "no single threshold works: the pointwise threshold diverges ({})",
                rows.join("; ")
            ))
        } else {
            None
        };
        per_scale.push(UniformScaleVerdict {
            lambda,
            uniform_threshold,
            pointwise,
            diagnosis,
        });
    }
    Ok(UniformReport {
        family: fseq.family.name(),
        epsilon: eps,
        n_max,
        uniform: per_scale.iter().all(|v| v.uniform_threshold.is_some()),
        per_scale,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ModulusRow {
    pub delta: f64,
    pub worst: DegreesTriple,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModulusTable {
    pub point: f64,
    pub rows: Vec<ModulusRow>,
    /// Whether the worst-case degrees improve monotonically as δ shrinks.
    pub improving: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ContinuityReport {
    pub family: String,
    pub lambda: f64,
    pub tables: Vec<ModulusTable>,
}

/// Spot-check continuity of the limit function after a uniform verdict: at
/// each probe point, tabulate the worst degree triple between `f(x)` and
/// `f(x₀)` over `|x − x₀| < δ` for shrinking `δ`. Degrees are evaluated at
/// scale 1.
pub fn limit_continuity_probe(
    space: &NmsSpace,
    fseq: &FunctionSequence,
    uniform: &UniformReport,
    probe_points: &[f64],
    delta_grid: &[f64],
) -> Result<ContinuityReport, SequenceError> {
    require_real_line(space)?;
    if !uniform.uniform {
        return Err(SequenceError::NotUniform);
    }
    if !fseq.family.members_continuous() {
        return Err(SequenceError::NotContinuousFamily);
    }
    let lambda = 1.0;
    let mut tables = Vec::new();
    for &x0 in probe_points {
        let fx0 = Point::vector1(fseq.family.limit(x0));
        let mut deltas: Vec<f64> = delta_grid.to_vec();
        deltas.sort_by(|a, b| b.total_cmp(a));
        let mut rows = Vec::new();
        for &delta in &deltas {
            let mut worst = DegreesTriple::IDENTITY;
            for k in 1..=32 {
                for sign in [-1.0, 1.0] {
                    let x = x0 + sign * delta * k as f64 / 33.0;
                    let t = space.evaluate(&Point::vector1(fseq.family.limit(x)), &fx0, lambda)?;
                    worst = DegreesTriple {
                        g: worst.g.min(t.g),
                        b: worst.b.max(t.b),
                        y: worst.y.max(t.y),
                    };
                }
            }
            rows.push(ModulusRow { delta, worst });
        }
        let improving = rows.windows(2).all(|w| {
            w[1].worst.g >= w[0].worst.g - 1e-12
                && w[1].worst.b <= w[0].worst.b + 1e-12
                && w[1].worst.y <= w[0].worst.y + 1e-12
        });
        tables.push(ModulusTable {
            point: x0,
            rows,
            improving,
        });
    }
    Ok(ContinuityReport {
        family: fseq.family.name(),
        lambda,
        tables,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::NormPair;
    use crate::space::{BaseMetric, DistanceMatrix, Universe};

    fn wide_line() -> NmsSpace {
        let u = Universe::real_vector(1, BaseMetric::Euclidean, -2.0, 2.0).unwrap();
        NmsSpace::standard_from_metric(u, NormPair::min_max()).unwrap()
    }

    fn grid(values: &[f64]) -> ScaleGrid {
        ScaleGrid::new(values.to_vec()).unwrap()
    }

    fn unit(x: f64) -> UnitValue {
        UnitValue::new(x).unwrap()
    }

    fn small_finite_space() -> NmsSpace {
        let coords = vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 1.0],
        ];
        let labels = (0..4).map(|i| format!("p{i}")).collect();
        let distances = DistanceMatrix::from_points(&coords, BaseMetric::Euclidean).unwrap();
        let u = Universe::finite_labeled(labels, distances).unwrap();
        NmsSpace::standard_from_metric(u, NormPair::min_max()).unwrap()
    }

    #[test]
    fn harmonic_converges_with_the_derived_threshold() {
        let space = wide_line();
        let report = converges_to(
            &space,
            &PointSequence::Harmonic,
            &Point::vector1(0.0),
            unit(0.1),
            &grid(&[1.0]),
            10_000,
        )
        .unwrap();
        assert!(report.converges);

        // Independent oracle: solve the strict bounds directly. At lambda 1,
        // Y = 1/n < 0.1 binds last; with f64's 1/10 == 0.1 the strict
        // comparison first holds at n = 11.
        let mut oracle = None;
        for n in (1..=10_000usize).rev() {
            let d = 1.0 / n as f64;
            let g = 1.0 / (1.0 + d);
            let y = d;
            let b = 1.0 - g;
            if !(g > 0.9 && b < 0.1 && y < 0.1) {
                oracle = Some(n + 1);
                break;
            }
        }
        assert_eq!(report.per_scale[0].threshold, oracle);
        assert_eq!(report.per_scale[0].threshold, Some(11));
    }

    #[test]
    fn constant_sequence_has_threshold_one() {
        let space = wide_line();
        let seq = PointSequence::Constant(Point::vector1(0.25));
        let report = converges_to(
            &space,
            &seq,
            &Point::vector1(0.25),
            unit(0.05),
            &grid(&[0.1, 1.0, 10.0]),
            100,
        )
        .unwrap();
        assert!(report.converges);
        assert!(report.per_scale.iter().all(|v| v.threshold == Some(1)));
    }

    #[test]
    fn alternating_sequence_diverges() {
        let space = wide_line();
        let report = converges_to(
            &space,
            &PointSequence::Alternating,
            &Point::vector1(0.0),
            unit(0.1),
            &grid(&[1.0]),
            1_000,
        )
        .unwrap();
        assert!(!report.converges);
        let failure = report.per_scale[0].failure.as_ref().unwrap();
        // G((+-1), 0, 1) = 0.5 for every term.
        assert_eq!(failure.degrees.g, 0.5);
    }

    #[test]
    fn harmonic_is_cauchy_alternating_is_not() {
        let space = wide_line();
        let harmonic = is_cauchy(
            &space,
            &PointSequence::Harmonic,
            unit(0.1),
            &grid(&[0.5, 1.0]),
            5_000,
        )
        .unwrap();
        assert!(harmonic.cauchy);
        for v in &harmonic.per_scale {
            let n = v.threshold.unwrap();
            // d(a_n, a_m) <= 1/N on the tail, so Y = d/lambda < 0.1 needs
            // roughly N > 1/(0.1 * lambda); sampled pairs can only
            // under-estimate, never overshoot the exact threshold much.
            assert!(n >= 2, "threshold {n} at scale {}", v.lambda);
        }

        let alternating = is_cauchy(
            &space,
            &PointSequence::Alternating,
            unit(0.1),
            &grid(&[1.0]),
            1_000,
        )
        .unwrap();
        assert!(!alternating.cauchy);
        // Y(-1, 1, 1) = 2 on adjacent terms.
        let f = alternating.per_scale[0].failure.as_ref().unwrap();
        assert_eq!(f.degrees.y, 2.0);
    }

    #[test]
    fn constant_sequence_is_cauchy_from_the_start() {
        let space = wide_line();
        let seq = PointSequence::Constant(Point::vector1(0.4));
        let report = is_cauchy(&space, &seq, unit(0.05), &grid(&[0.1, 1.0]), 500).unwrap();
        assert!(report.cauchy);
        assert!(report.per_scale.iter().all(|v| v.threshold == Some(1)));
    }

    #[test]
    fn eventually_constant_sequence_is_cauchy_and_convergent() {
        let space = wide_line();
        let mut terms: Vec<Point> = vec![
            Point::vector1(0.9),
            Point::vector1(0.1),
            Point::vector1(0.7),
        ];
        terms.extend(std::iter::repeat_n(Point::vector1(0.25), 60));
        let seq = PointSequence::Explicit(terms);
        let cauchy = is_cauchy(&space, &seq, unit(0.1), &grid(&[0.5, 1.0]), 63).unwrap();
        assert!(cauchy.cauchy);
        let conv = converges_to(
            &space,
            &seq,
            &Point::vector1(0.25),
            unit(0.1),
            &grid(&[0.5, 1.0]),
            63,
        )
        .unwrap();
        assert!(conv.converges);
        assert!(conv.per_scale.iter().all(|v| v.threshold == Some(4)));
    }

    #[test]
    fn convergent_implies_cauchy_at_doubled_radius_halved_scale() {
        let space = wide_line();
        for seq in [
            PointSequence::Harmonic,
            PointSequence::Geometric { ratio: 0.5 },
        ] {
            for lambda in [0.5f64, 1.0, 4.0] {
                let conv = converges_to(
                    &space,
                    &seq,
                    &Point::vector1(0.0),
                    unit(0.1),
                    &grid(&[lambda / 2.0]),
                    2_000,
                )
                .unwrap();
                assert!(conv.converges, "{} at {lambda}", seq.name());
                let cauchy =
                    is_cauchy(&space, &seq, unit(0.2), &grid(&[lambda]), 2_000).unwrap();
                assert!(cauchy.cauchy, "{} at {lambda}", seq.name());
            }
        }
    }

    #[test]
    fn nested_family_validation_and_intersection() {
        let p = |x: f64| Point::vector1(x);
        let family = NestedFamily::new(
            vec![
                vec![p(0.0), p(0.5), p(1.0)],
                vec![p(0.0), p(0.5)],
                vec![p(0.0)],
            ],
            false,
        )
        .unwrap();
        assert_eq!(family.intersection(), vec![p(0.0)]);

        assert!(NestedFamily::new(
            vec![vec![p(0.0)], vec![p(1.0)]],
            false
        )
        .is_err());
        assert!(NestedFamily::new(vec![vec![p(0.0)], vec![]], false).is_err());
        assert!(NestedFamily::new(vec![vec![p(0.0)], vec![]], true).is_ok());
    }

    #[test]
    fn shrinking_intervals_have_ndz() {
        let space = wide_line();
        // D_n = sampled [0, 1/n], realized by filtering one master sample.
        let master: Vec<f64> = (0..=20).map(|i| i as f64 / 20.0).collect();
        let sets: Vec<Vec<Point>> = (1..=64)
            .map(|n| {
                master
                    .iter()
                    .filter(|&&x| x <= 1.0 / n as f64)
                    .map(|&x| Point::vector1(x))
                    .collect()
            })
            .collect();
        let family = NestedFamily::new(sets, false).unwrap();
        let report = has_ndz(&space, &family, &[0.2, 0.5], &grid(&[0.5, 1.0])).unwrap();
        assert!(report.ndz);
        // Oracle for (eps, lambda) = (0.2, 0.5): need Y = d / 0.5 < 0.2,
        // i.e. diameter 1/n < 0.1, first reached at n = 11 given the 1/20
        // sampling granularity.
        let entry = report
            .entries
            .iter()
            .find(|e| e.epsilon == 0.2 && e.lambda == 0.5)
            .unwrap();
        let oracle_level = (1..=64usize)
            .find(|&n| {
                let diam = master
                    .iter()
                    .filter(|&&x| x <= 1.0 / n as f64)
                    .fold(0.0f64, |m, &x| m.max(x));
                diam / 0.5 < 0.2 && (0.5 / (0.5 + diam)) > 0.8
            })
            .unwrap();
        assert_eq!(entry.level, Some(oracle_level));

        // Singleton members qualify at level 1.
        let singletons = NestedFamily::new(
            vec![vec![Point::vector1(0.3)], vec![Point::vector1(0.3)]],
            false,
        )
        .unwrap();
        let report = has_ndz(&space, &singletons, &[0.1], &grid(&[0.5])).unwrap();
        assert!(report.ndz);
        assert!(report.entries.iter().all(|e| e.level == Some(1)));

        // A constant two-point family fails for radii below its diameter.
        let pair = NestedFamily::new(
            vec![
                vec![Point::vector1(0.0), Point::vector1(1.0)],
                vec![Point::vector1(0.0), Point::vector1(1.0)],
            ],
            false,
        )
        .unwrap();
        let report = has_ndz(&space, &pair, &[0.5], &grid(&[1.0])).unwrap();
        assert!(!report.ndz);
    }

    #[test]
    fn ndz_is_monotone_in_the_grids() {
        let space = wide_line();
        let master: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
        let sets: Vec<Vec<Point>> = (1..=32)
            .map(|n| {
                master
                    .iter()
                    .filter(|&&x| x <= 1.0 / n as f64)
                    .map(|&x| Point::vector1(x))
                    .collect()
            })
            .collect();
        let family = NestedFamily::new(sets, false).unwrap();
        // If NDZ holds for a grid, it holds after enlarging eps or lambda.
        let tight = has_ndz(&space, &family, &[0.2], &grid(&[0.5])).unwrap();
        let wider_eps = has_ndz(&space, &family, &[0.4], &grid(&[0.5])).unwrap();
        let wider_lambda = has_ndz(&space, &family, &[0.2], &grid(&[2.0])).unwrap();
        assert!(tight.ndz);
        assert!(wider_eps.ndz);
        assert!(wider_lambda.ndz);
        for (a, b) in tight.entries.iter().zip(&wider_eps.entries) {
            assert!(b.level.unwrap() <= a.level.unwrap());
        }
        for (a, b) in tight.entries.iter().zip(&wider_lambda.entries) {
            assert!(b.level.unwrap() <= a.level.unwrap());
        }
    }

    #[test]
    fn nested_ndz_families_intersect_on_finite_spaces() {
        // Finite-model reading of the nested-sets theorem: non-empty closed
        // sets with NDZ have non-empty intersection (all subsets of a finite
        // discrete model are closed).
        let space = small_finite_space();
        let pts = space.universe().enumerate_points().unwrap();
        let family = NestedFamily::new(
            vec![
                pts.clone(),
                pts[0..2].to_vec(),
                vec![pts[0].clone()],
                vec![pts[0].clone()],
            ],
            false,
        )
        .unwrap();
        let report = has_ndz(&space, &family, &[0.5, 0.9], &grid(&[5.0, 50.0])).unwrap();
        assert!(report.ndz);
        assert_eq!(family.intersection(), vec![pts[0].clone()]);
    }

    #[test]
    fn completeness_probe_reports_no_failures() {
        let space = small_finite_space();
        let report = completeness_probe(
            &space,
            60,
            7,
            unit(0.1),
            &grid(&[0.5, 2.0]),
            96,
        )
        .unwrap();
        assert!(report.failures.is_empty());
        assert!(report.cauchy_count > 0);
        assert_eq!(report.cauchy_count, report.convergent_count);

        // Non-finite universes are rejected.
        assert!(matches!(
            completeness_probe(&wide_line(), 5, 0, unit(0.1), &grid(&[1.0]), 16),
            Err(SequenceError::NonFiniteUniverse)
        ));
    }

    #[test]
    fn oscillating_two_point_sequence_is_not_cauchy() {
        let space = small_finite_space();
        let pts = space.universe().enumerate_points().unwrap();
        let terms: Vec<Point> = (0..50)
            .map(|n| pts[if n % 2 == 0 { 0 } else { 3 }].clone())
            .collect();
        let seq = PointSequence::Explicit(terms);
        let report = is_cauchy(&space, &seq, unit(0.1), &grid(&[1.0]), 50).unwrap();
        assert!(!report.cauchy);
    }

    #[test]
    fn scaled_identity_family_is_uniform() {
        let space = wide_line();
        let domain: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
        let fseq = FunctionSequence::new(domain, FunctionFamily::ScaledIdentity).unwrap();
        let report =
            uniform_convergence_check(&space, &fseq, unit(0.1), &grid(&[1.0]), 10_000).unwrap();
        assert!(report.uniform);
        // Worst point is x = 1 with d = 1/n; oracle threshold matches the
        // harmonic case.
        let scale = &report.per_scale[0];
        assert_eq!(scale.uniform_threshold, Some(11));
        let worst = scale.pointwise.iter().find(|e| e.x == 1.0).unwrap();
        assert_eq!(worst.threshold, Some(11));
        let at_zero = scale.pointwise.iter().find(|e| e.x == 0.0).unwrap();
        assert_eq!(at_zero.threshold, Some(1));
    }

    #[test]
    fn constant_family_has_threshold_one() {
        let space = wide_line();
        let fseq = FunctionSequence::new(
            vec![0.0, 0.5, 1.0],
            FunctionFamily::ConstantMap { value: 0.25 },
        )
        .unwrap();
        let report =
            uniform_convergence_check(&space, &fseq, unit(0.05), &grid(&[1.0]), 100).unwrap();
        assert!(report.uniform);
        assert_eq!(report.per_scale[0].uniform_threshold, Some(1));
    }

    #[test]
    fn power_family_fails_uniformity_near_one() {
        let space = wide_line();
        let domain = vec![0.0, 0.5, 0.9, 0.99, 0.999, 0.9999, 0.99999, 1.0];
        let fseq = FunctionSequence::new(domain, FunctionFamily::PowerCurve).unwrap();
        let report =
            uniform_convergence_check(&space, &fseq, unit(0.1), &grid(&[1.0]), 10_000).unwrap();
        assert!(!report.uniform);
        let scale = &report.per_scale[0];
        assert!(scale.uniform_threshold.is_none());
        // The pointwise threshold grows without bound as x approaches 1 and
        // eventually leaves the window entirely.
        let t05 = scale.pointwise.iter().find(|e| e.x == 0.5).unwrap();
        let t099 = scale.pointwise.iter().find(|e| e.x == 0.99).unwrap();
        assert!(t05.threshold.unwrap() < t099.threshold.unwrap());
        let t99999 = scale.pointwise.iter().find(|e| e.x == 0.99999).unwrap();
        assert!(t99999.threshold.is_none());
        // At x = 1 the terms equal the limit; threshold 1.
        let t1 = scale.pointwise.iter().find(|e| e.x == 1.0).unwrap();
        assert_eq!(t1.threshold, Some(1));
        let diag = scale.diagnosis.as_ref().unwrap();
        assert!(diag.contains("0.99999"));

        // The failed verdict blocks the continuity probe.
        assert!(matches!(
            limit_continuity_probe(&space, &fseq, &report, &[0.9], &[0.1, 0.01]),
            Err(SequenceError::NotUniform)
        ));
    }

    #[test]
    fn continuity_probe_after_uniform_verdicts() {
        let space = wide_line();
        // Constant limit: the modulus table is flat at the identity triple.
        let fseq = FunctionSequence::new(
            (0..=10).map(|i| i as f64 / 10.0).collect(),
            FunctionFamily::ScaledIdentity,
        )
        .unwrap();
        let uniform =
            uniform_convergence_check(&space, &fseq, unit(0.1), &grid(&[1.0]), 10_000).unwrap();
        let report =
            limit_continuity_probe(&space, &fseq, &uniform, &[0.5], &[0.2, 0.1, 0.05]).unwrap();
        let table = &report.tables[0];
        assert!(table.improving);
        for row in &table.rows {
            assert_eq!(row.worst, DegreesTriple::IDENTITY);
        }

        // Identity limit: the modulus improves strictly as delta shrinks.
        let fseq = FunctionSequence::new(
            (0..=10).map(|i| i as f64 / 10.0).collect(),
            FunctionFamily::ShiftedIdentity,
        )
        .unwrap();
        let uniform =
            uniform_convergence_check(&space, &fseq, unit(0.2), &grid(&[1.0]), 1_000).unwrap();
        assert!(uniform.uniform);
        let report =
            limit_continuity_probe(&space, &fseq, &uniform, &[0.3, 0.7], &[0.4, 0.2, 0.1])
                .unwrap();
        for table in &report.tables {
            assert!(table.improving);
            assert!(table.rows[0].worst.y > table.rows[2].worst.y);
        }
    }

    #[test]
    fn sequence_and_family_parsing() {
        assert!(matches!(
            PointSequence::parse("harmonic").unwrap(),
            PointSequence::Harmonic
        ));
        assert!(matches!(
            PointSequence::parse("geometric:0.5").unwrap(),
            PointSequence::Geometric { .. }
        ));
        let c = PointSequence::parse("constant:[0.25]").unwrap();
        assert_eq!(c.term(3), Point::vector1(0.25));
        assert!(PointSequence::parse("fibonacci").is_err());

        assert!(matches!(
            FunctionFamily::parse("x-pow-n").unwrap(),
            FunctionFamily::PowerCurve
        ));
        assert!(FunctionFamily::parse("sin-n").is_err());
    }
}
