//! The eighteen-condition axiom checker and counterexample finder.
//!
//! A candidate space is a neutrosophic metric space when, for all points
//! `a, b, c` and scales `λ, μ > 0`:
//!
//! | id          | condition                                                  |
//! |-------------|------------------------------------------------------------|
//! | i           | `0 ≤ G, B, Y ≤ 1`                                          |
//! | ii          | `G + B + Y ≤ 3`                                            |
//! | iii/viii/xiii | `G = 1` (resp. `B = 0`, `Y = 0`) iff the points coincide |
//! | iv/ix/xiv   | symmetry in the two points                                  |
//! | v           | `G(a,b,λ) ∘ G(b,c,μ) ≤ G(a,c,λ+μ)`                         |
//! | x/xv        | `B(a,b,λ) • B(b,c,μ) ≥ B(a,c,λ+μ)` and likewise for `Y`    |
//! | vi/xi/xvi   | continuity in the scale                                     |
//! | vii/xii/xvii| `G → 1`, `B → 0`, `Y → 0` as the scale grows               |
//! | xviii       | scales `λ ≤ 0` clamp to `(0, 1, 1)`                        |
//!
//! Universally quantified conditions are sampled from a seeded generator;
//! the symmetry conditions hold structurally because evaluation
//! canonicalizes the argument order and are reported as such. Continuity is
//! probed by finite differences and the limits by a scale ladder, so their
//! passes carry `probe-limited` status. Every failure records a witness
//! whose replay reproduces the violation.

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::report::CheckStatus;
use crate::sampling::{log_uniform, stream_rng};
use crate::space::{DegreesTriple, NmsSpace, Point, SpaceError};

/// Slack used when comparing float inequalities that hold exactly in real
/// arithmetic.
pub const CMP_EPS: f64 = 1e-12;

/// Tolerance for the identity-of-indiscernibles comparisons.
pub const EXACT_EPS: f64 = 1e-9;

/// Top of the scale ladder used by the limit probes.
pub const LAMBDA_MAX: f64 = 1e6;

#[derive(Debug, Error)]
pub enum AxiomError {
    #[error("lambda grid is invalid: {0}")]
    InvalidGrid(String),
    #[error("unknown axiom label '{0}'")]
    UnknownAxiom(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// One of the eighteen defining conditions, identified by its roman label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, Hash)]
#[serde(rename_all = "lowercase")]
pub enum AxiomId {
    I,
    Ii,
    Iii,
    Iv,
    V,
    Vi,
    Vii,
    Viii,
    Ix,
    X,
    Xi,
    Xii,
    Xiii,
    Xiv,
    Xv,
    Xvi,
    Xvii,
    Xviii,
}

impl AxiomId {
    pub const ALL: [AxiomId; 18] = [
        AxiomId::I,
        AxiomId::Ii,
        AxiomId::Iii,
        AxiomId::Iv,
        AxiomId::V,
        AxiomId::Vi,
        AxiomId::Vii,
        AxiomId::Viii,
        AxiomId::Ix,
        AxiomId::X,
        AxiomId::Xi,
        AxiomId::Xii,
        AxiomId::Xiii,
        AxiomId::Xiv,
        AxiomId::Xv,
        AxiomId::Xvi,
        AxiomId::Xvii,
        AxiomId::Xviii,
    ];

    pub fn label(self) -> &'static str {
        match self {
            AxiomId::I => "i",
            AxiomId::Ii => "ii",
            AxiomId::Iii => "iii",
            AxiomId::Iv => "iv",
            AxiomId::V => "v",
            AxiomId::Vi => "vi",
            AxiomId::Vii => "vii",
            AxiomId::Viii => "viii",
            AxiomId::Ix => "ix",
            AxiomId::X => "x",
            AxiomId::Xi => "xi",
            AxiomId::Xii => "xii",
            AxiomId::Xiii => "xiii",
            AxiomId::Xiv => "xiv",
            AxiomId::Xv => "xv",
            AxiomId::Xvi => "xvi",
            AxiomId::Xvii => "xvii",
            AxiomId::Xviii => "xviii",
        }
    }

    pub fn parse(label: &str) -> Result<Self, AxiomError> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.label() == label)
            .ok_or_else(|| AxiomError::UnknownAxiom(label.to_owned()))
    }
}

/// Which of the three degree functions a componentwise axiom talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Degree {
    G,
    B,
    Y,
}

impl Degree {
    fn of(self, t: &DegreesTriple) -> f64 {
        match self {
            Degree::G => t.g,
            Degree::B => t.b,
            Degree::Y => t.y,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Degree::G => "G",
            Degree::B => "B",
            Degree::Y => "Y",
        }
    }
}

/// Sorted positive scale grid.
#[derive(Debug, Clone, Serialize)]
pub struct ScaleGrid(Vec<f64>);

impl ScaleGrid {
    pub fn new(values: Vec<f64>) -> Result<Self, AxiomError> {
        if values.is_empty() {
            return Err(AxiomError::InvalidGrid("grid is empty".into()));
        }
        if values.iter().any(|&v| v <= 0.0 || !v.is_finite()) {
            return Err(AxiomError::InvalidGrid(
                "grid values must be finite and positive".into(),
            ));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AxiomError::InvalidGrid(
                "grid values must be strictly increasing".into(),
            ));
        }
        Ok(ScaleGrid(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn min(&self) -> f64 {
        self.0[0]
    }

    pub fn max(&self) -> f64 {
        *self.0.last().unwrap()
    }
}

/// Tolerances and sampling controls for a checker run.
#[derive(Debug, Clone, Serialize)]
pub struct CheckParams {
    pub samples: u32,
    pub seed: u64,
    pub lambda_grid: ScaleGrid,
    /// Tolerance for the limit probes (vii, xii, xvii).
    pub tol: f64,
    pub exact_eps: f64,
    pub cmp_eps: f64,
    pub continuity_step: f64,
    pub slope_bound: f64,
    pub lambda_max: f64,
}

impl CheckParams {
    pub fn new(samples: u32, seed: u64, lambda_grid: ScaleGrid, tol: f64) -> Self {
        assert!(samples >= 1, "at least one sample is required");
        CheckParams {
            samples,
            seed,
            lambda_grid,
            tol,
            exact_eps: EXACT_EPS,
            cmp_eps: CMP_EPS,
            continuity_step: crate::norms::CONTINUITY_STEP,
            slope_bound: crate::norms::DEFAULT_SLOPE_BOUND,
            lambda_max: LAMBDA_MAX,
        }
    }

    fn sample_lambda<R: rand::Rng>(&self, rng: &mut R) -> f64 {
        log_uniform(rng, self.lambda_grid.min(), self.lambda_grid.max())
    }

    /// Scale ladder for the limit probes: decades from the top of the grid
    /// up to `lambda_max`. A grid already reaching beyond `lambda_max`
    /// collapses the ladder to its own top, keeping the probe ascending.
    fn ladder(&self) -> Vec<f64> {
        let start = self.lambda_grid.max();
        if start >= self.lambda_max {
            return vec![start];
        }
        let mut out = vec![start];
        loop {
            let next = out.last().unwrap() * 10.0;
            if next >= self.lambda_max {
                out.push(self.lambda_max);
                break;
            }
            out.push(next);
        }
        out
    }
}

/// A concrete tuple reproducing a violation: the points and scales involved,
/// the degrees they evaluate to and the violated relation rendered
/// numerically.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    pub axiom: AxiomId,
    pub points: Vec<Point>,
    pub scales: Vec<f64>,
    pub degrees: Vec<DegreesTriple>,
    pub violation: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomEntry {
    pub axiom: AxiomId,
    pub status: CheckStatus,
    pub checked: u64,
    pub failures: u64,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Verdicts for all eighteen conditions plus the sampling metadata needed to
/// reproduce them.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub construction: String,
    pub tnorm: String,
    pub tconorm: String,
    pub notes: Vec<String>,
    pub params: CheckParams,
    pub axioms: Vec<AxiomEntry>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|e| e.status.passed())
    }

    pub fn entry(&self, axiom: AxiomId) -> &AxiomEntry {
        &self.axioms[AxiomId::ALL.iter().position(|a| *a == axiom).unwrap()]
    }

    pub fn failed_axioms(&self) -> Vec<AxiomId> {
        self.axioms
            .iter()
            .filter(|e| e.status == CheckStatus::Fail)
            .map(|e| e.axiom)
            .collect()
    }
}

const MAX_WITNESSES: usize = 8;

// ---------------------------------------------------------------------------
// Per-axiom violation predicates (shared by checker, finder and replay)
// ---------------------------------------------------------------------------

fn eval(space: &NmsSpace, a: &Point, b: &Point, lambda: f64) -> Result<DegreesTriple, SpaceError> {
    space.evaluate(a, b, lambda)
}

fn violates_range(
    space: &NmsSpace,
    a: &Point,
    b: &Point,
    lambda: f64,
    p: &CheckParams,
) -> Result<Option<Witness>, SpaceError> {
    let t = eval(space, a, b, lambda)?;
    let bad = |x: f64| !(-p.cmp_eps..=1.0 + p.cmp_eps).contains(&x);
    if bad(t.g) || bad(t.b) || bad(t.y) {
        let (name, value) = if bad(t.g) {
            ("G", t.g)
        } else if bad(t.b) {
            ("B", t.b)
        } else {
            ("Y", t.y)
        };
        return Ok(Some(Witness {
            axiom: AxiomId::I,
            points: vec![a.clone(), b.clone()],
            scales: vec![lambda],
            degrees: vec![t],
            violation: format!("{name}(a,b,{lambda}) = {value} escapes [0,1]"),
        }));
    }
    Ok(None)
}

fn violates_sum(
    space: &NmsSpace,
    a: &Point,
    b: &Point,
    lambda: f64,
    p: &CheckParams,
) -> Result<Option<Witness>, SpaceError> {
    let t = eval(space, a, b, lambda)?;
    if t.sum() > 3.0 + p.cmp_eps {
        return Ok(Some(Witness {
            axiom: AxiomId::Ii,
            points: vec![a.clone(), b.clone()],
            scales: vec![lambda],
            degrees: vec![t],
            violation: format!("G + B + Y = {} exceeds 3", t.sum()),
        }));
    }
    Ok(None)
}

fn identity_axiom(degree: Degree) -> AxiomId {
    match degree {
        Degree::G => AxiomId::Iii,
        Degree::B => AxiomId::Viii,
        Degree::Y => AxiomId::Xiii,
    }
}

/// Identity of indiscernibles, both directions. With `a == b` the degree must
/// sit at its identity value; with `a != b` it must not.
fn violates_identity(
    space: &NmsSpace,
    degree: Degree,
    a: &Point,
    b: &Point,
    lambda: f64,
    p: &CheckParams,
) -> Result<Option<Witness>, SpaceError> {
    let t = eval(space, a, b, lambda)?;
    let value = degree.of(&t);
    let target = if degree == Degree::G { 1.0 } else { 0.0 };
    let at_identity = (value - target).abs() <= p.exact_eps;
    let coincide = a == b;
    let violation = if coincide && !at_identity {
        Some(format!(
            "{}(a,a,{lambda}) = {value}, expected {target}",
            degree.name()
        ))
    } else if !coincide && at_identity {
        Some(format!(
            "{}(a,b,{lambda}) = {value} hits the identity value {target} for distinct points",
            degree.name()
        ))
    } else {
        None
    };
    Ok(violation.map(|v| Witness {
        axiom: identity_axiom(degree),
        points: vec![a.clone(), b.clone()],
        scales: vec![lambda],
        degrees: vec![t],
        violation: v,
    }))
}

fn triangle_axiom(degree: Degree) -> AxiomId {
    match degree {
        Degree::G => AxiomId::V,
        Degree::B => AxiomId::X,
        Degree::Y => AxiomId::Xv,
    }
}

/// Triangle-type conditions: the norm folds the `a→b` and `b→c` degrees and
/// bounds the `a→c` degree at the combined scale.
#[allow(clippy::too_many_arguments)]
fn violates_triangle(
    space: &NmsSpace,
    degree: Degree,
    a: &Point,
    b: &Point,
    c: &Point,
    lambda: f64,
    mu: f64,
    p: &CheckParams,
) -> Result<Option<Witness>, SpaceError> {
    let t_ab = eval(space, a, b, lambda)?;
    let t_bc = eval(space, b, c, mu)?;
    let t_ac = eval(space, a, c, lambda + mu)?;
    let (folded, bound, ok, op) = match degree {
        Degree::G => {
            let folded = space.norms().tnorm().eval_raw(t_ab.g, t_bc.g);
            (folded, t_ac.g, folded <= t_ac.g + p.cmp_eps, "∘")
        }
        Degree::B => {
            let folded = space.norms().tconorm().eval_raw(t_ab.b, t_bc.b);
            (folded, t_ac.b, folded >= t_ac.b - p.cmp_eps, "•")
        }
        Degree::Y => {
            let folded = space.norms().tconorm().eval_raw(t_ab.y, t_bc.y);
            (folded, t_ac.y, folded >= t_ac.y - p.cmp_eps, "•")
        }
    };
    if ok {
        return Ok(None);
    }
    let rel = if degree == Degree::G { ">" } else { "<" };
    let name = degree.name();
    Ok(Some(Witness {
        axiom: triangle_axiom(degree),
        points: vec![a.clone(), b.clone(), c.clone()],
        scales: vec![lambda, mu],
        degrees: vec![t_ab, t_bc, t_ac],
        violation: format!(
            "{name}(a,b,{lambda}) {op} {name}(b,c,{mu}) = {folded} {rel} {name}(a,c,{}) = {bound}",
            lambda + mu
        ),
    }))
}

fn continuity_axiom(degree: Degree) -> AxiomId {
    match degree {
        Degree::G => AxiomId::Vi,
        Degree::B => AxiomId::Xi,
        Degree::Y => AxiomId::Xvi,
    }
}

/// Finite-difference continuity probe in the scale argument.
fn violates_continuity(
    space: &NmsSpace,
    degree: Degree,
    a: &Point,
    b: &Point,
    lambda: f64,
    p: &CheckParams,
) -> Result<Option<Witness>, SpaceError> {
    let h = p.continuity_step;
    let t0 = eval(space, a, b, lambda)?;
    let t1 = eval(space, a, b, lambda + h)?;
    let jump = (degree.of(&t1) - degree.of(&t0)).abs();
    let bound = p.slope_bound * h + p.cmp_eps;
    if jump > bound {
        return Ok(Some(Witness {
            axiom: continuity_axiom(degree),
            points: vec![a.clone(), b.clone()],
            scales: vec![lambda],
            degrees: vec![t0, t1],
            violation: format!(
                "|{0}(a,b,{1}) - {0}(a,b,{2})| = {jump} exceeds the slope bound {3}*{h}",
                degree.name(),
                lambda + h,
                lambda,
                p.slope_bound
            ),
        }));
    }
    Ok(None)
}

fn limit_axiom(degree: Degree) -> AxiomId {
    match degree {
        Degree::G => AxiomId::Vii,
        Degree::B => AxiomId::Xii,
        Degree::Y => AxiomId::Xvii,
    }
}

/// Scale-escalation probe for the limit conditions: the degree must trend
/// monotonically the right way across the ladder and land within `tol` of
/// its limit at the top.
fn violates_limit(
    space: &NmsSpace,
    degree: Degree,
    a: &Point,
    b: &Point,
    ladder: &[f64],
    p: &CheckParams,
) -> Result<Option<Witness>, SpaceError> {
    let mut triples = Vec::with_capacity(ladder.len());
    for &l in ladder {
        triples.push(eval(space, a, b, l)?);
    }
    let values: Vec<f64> = triples.iter().map(|t| degree.of(t)).collect();
    let rising = degree == Degree::G;
    for (idx, w) in values.windows(2).enumerate() {
        let monotone = if rising {
            w[1] >= w[0] - p.cmp_eps
        } else {
            w[1] <= w[0] + p.cmp_eps
        };
        if !monotone {
            return Ok(Some(Witness {
                axiom: limit_axiom(degree),
                points: vec![a.clone(), b.clone()],
                scales: ladder.to_vec(),
                degrees: triples.clone(),
                violation: format!(
                    "{}(a,b,.) moves the wrong way between scales {} and {}: {} -> {}",
                    degree.name(),
                    ladder[idx],
                    ladder[idx + 1],
                    w[0],
                    w[1]
                ),
            }));
        }
    }
    let last = *values.last().unwrap();
    let gap = if rising { (last - 1.0).abs() } else { last.abs() };
    if gap > p.tol {
        let target = if rising { 1.0 } else { 0.0 };
        return Ok(Some(Witness {
            axiom: limit_axiom(degree),
            points: vec![a.clone(), b.clone()],
            scales: ladder.to_vec(),
            degrees: triples,
            violation: format!(
                "{}(a,b,{}) = {last} stays {gap} away from the limit {target} (tol {})",
                degree.name(),
                ladder.last().unwrap(),
                p.tol
            ),
        }));
    }
    Ok(None)
}

/// Non-positive scales must clamp to exactly `(0, 1, 1)`.
fn violates_clamp(
    space: &NmsSpace,
    a: &Point,
    b: &Point,
    lambda: f64,
) -> Result<Option<Witness>, SpaceError> {
    let t = eval(space, a, b, lambda)?;
    if t != DegreesTriple::CLAMPED {
        return Ok(Some(Witness {
            axiom: AxiomId::Xviii,
            points: vec![a.clone(), b.clone()],
            scales: vec![lambda],
            degrees: vec![t],
            violation: format!(
                "scale {lambda} <= 0 produced ({}, {}, {}), expected (0, 1, 1)",
                t.g, t.b, t.y
            ),
        }));
    }
    Ok(None)
}

/// Approximate number of degree evaluations one test of `axiom` costs.
fn probe_cost(axiom: AxiomId, ladder_len: u64) -> u64 {
    match axiom {
        AxiomId::I | AxiomId::Ii | AxiomId::Iii | AxiomId::Viii | AxiomId::Xiii => 1,
        AxiomId::Iv | AxiomId::Ix | AxiomId::Xiv => 0,
        AxiomId::V | AxiomId::X | AxiomId::Xv => 3,
        AxiomId::Vi | AxiomId::Xi | AxiomId::Xvi => 2,
        AxiomId::Vii | AxiomId::Xii | AxiomId::Xvii => ladder_len,
        AxiomId::Xviii => 1,
    }
}

// ---------------------------------------------------------------------------
// The checker
// ---------------------------------------------------------------------------

struct EntryBuilder {
    axiom: AxiomId,
    probe_limited: bool,
    checked: u64,
    failures: u64,
    witnesses: Vec<Witness>,
    note: Option<String>,
}

impl EntryBuilder {
    fn new(axiom: AxiomId, probe_limited: bool) -> Self {
        EntryBuilder {
            axiom,
            probe_limited,
            checked: 0,
            failures: 0,
            witnesses: Vec::new(),
            note: None,
        }
    }

    fn record(&mut self, outcome: Option<Witness>) {
        self.checked += 1;
        if let Some(w) = outcome {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }

    fn structural(axiom: AxiomId, note: &str) -> AxiomEntry {
        AxiomEntry {
            axiom,
            status: CheckStatus::Structural,
            checked: 0,
            failures: 0,
            witnesses: vec![],
            note: Some(note.to_owned()),
        }
    }

    fn finish(self) -> AxiomEntry {
        let status = if self.failures > 0 {
            CheckStatus::Fail
        } else if self.probe_limited {
            CheckStatus::ProbeLimited
        } else {
            CheckStatus::Pass
        };
        AxiomEntry {
            axiom: self.axiom,
            status,
            checked: self.checked,
            failures: self.failures,
            witnesses: self.witnesses,
            note: self.note,
        }
    }
}

/// Check all eighteen conditions on `samples` seeded draws per condition.
/// Findings are report content; the function itself does not fail.
pub fn check_axioms(
    space: &NmsSpace,
    samples: u32,
    seed: u64,
    lambda_grid: ScaleGrid,
    tol: f64,
) -> AxiomReport {
    check_axioms_with(space, &CheckParams::new(samples, seed, lambda_grid, tol))
}

/// [`check_axioms`] with full control over tolerances and probe settings.
pub fn check_axioms_with(space: &NmsSpace, params: &CheckParams) -> AxiomReport {
    let p = params;
    let universe = space.universe();
    let expect = "sampled points belong to the universe";
    let ladder = p.ladder();
    let small = p.samples.min(256);

    let mut entries: Vec<AxiomEntry> = Vec::with_capacity(18);

    for (stream, axiom) in AxiomId::ALL.into_iter().enumerate() {
        let mut rng = stream_rng(p.seed, stream as u64);
        let entry = match axiom {
            AxiomId::I | AxiomId::Ii => {
                let mut b = EntryBuilder::new(axiom, false);
                for _ in 0..p.samples {
                    let x = universe.sample_point(&mut rng);
                    let y = universe.sample_point(&mut rng);
                    let l = p.sample_lambda(&mut rng);
                    let outcome = if axiom == AxiomId::I {
                        violates_range(space, &x, &y, l, p)
                    } else {
                        violates_sum(space, &x, &y, l, p)
                    };
                    b.record(outcome.expect(expect));
                }
                b.finish()
            }
            AxiomId::Iii | AxiomId::Viii | AxiomId::Xiii => {
                let degree = match axiom {
                    AxiomId::Iii => Degree::G,
                    AxiomId::Viii => Degree::B,
                    _ => Degree::Y,
                };
                let mut b = EntryBuilder::new(axiom, false);
                for k in 0..p.samples {
                    let x = universe.sample_point(&mut rng);
                    // Alternate the forward direction (coincident points)
                    // with the converse (an independently sampled pair).
                    let y = if k % 2 == 0 {
                        x.clone()
                    } else {
                        universe.sample_point(&mut rng)
                    };
                    let l = p.sample_lambda(&mut rng);
                    b.record(violates_identity(space, degree, &x, &y, l, p).expect(expect));
                }
                b.finish()
            }
            AxiomId::Iv | AxiomId::Ix | AxiomId::Xiv => EntryBuilder::structural(
                axiom,
                "holds by construction: evaluation canonicalizes the point order",
            ),
            AxiomId::V | AxiomId::X | AxiomId::Xv => {
                let degree = match axiom {
                    AxiomId::V => Degree::G,
                    AxiomId::X => Degree::B,
                    _ => Degree::Y,
                };
                let mut b = EntryBuilder::new(axiom, false);
                for _ in 0..p.samples {
                    let x = universe.sample_point(&mut rng);
                    let y = universe.sample_point(&mut rng);
                    let z = universe.sample_point(&mut rng);
                    let l = p.sample_lambda(&mut rng);
                    let m = p.sample_lambda(&mut rng);
                    b.record(violates_triangle(space, degree, &x, &y, &z, l, m, p).expect(expect));
                }
                b.finish()
            }
            AxiomId::Vi | AxiomId::Xi | AxiomId::Xvi => {
                let degree = match axiom {
                    AxiomId::Vi => Degree::G,
                    AxiomId::Xi => Degree::B,
                    _ => Degree::Y,
                };
                let mut b = EntryBuilder::new(axiom, true);
                b.note = Some(format!(
                    "finite-difference probe with step {} and slope bound {}",
                    p.continuity_step, p.slope_bound
                ));
                for _ in 0..p.samples {
                    let x = universe.sample_point(&mut rng);
                    let y = universe.sample_point(&mut rng);
                    let l = p.sample_lambda(&mut rng);
                    b.record(violates_continuity(space, degree, &x, &y, l, p).expect(expect));
                }
                b.finish()
            }
            AxiomId::Vii | AxiomId::Xii | AxiomId::Xvii => {
                let degree = match axiom {
                    AxiomId::Vii => Degree::G,
                    AxiomId::Xii => Degree::B,
                    _ => Degree::Y,
                };
                let mut b = EntryBuilder::new(axiom, true);
                b.note = Some(format!(
                    "scale-escalation probe up to {} with tolerance {}",
                    p.lambda_max, p.tol
                ));
                for _ in 0..small {
                    let x = universe.sample_point(&mut rng);
                    let y = universe.sample_point(&mut rng);
                    b.record(violates_limit(space, degree, &x, &y, &ladder, p).expect(expect));
                }
                b.finish()
            }
            AxiomId::Xviii => {
                let mut b = EntryBuilder::new(axiom, false);
                for _ in 0..small {
                    let x = universe.sample_point(&mut rng);
                    let y = universe.sample_point(&mut rng);
                    for l in [0.0, -1.0, -p.lambda_grid.min()] {
                        b.record(violates_clamp(space, &x, &y, l).expect(expect));
                    }
                }
                b.finish()
            }
        };
        entries.push(entry);
    }

    AxiomReport {
        construction: space.construction().name().to_owned(),
        tnorm: space.norms().tnorm().name().to_owned(),
        tconorm: space.norms().tconorm().name().to_owned(),
        notes: space.notes().to_vec(),
        params: p.clone(),
        axioms: entries,
    }
}

/// Re-evaluate a witness against a space: `true` iff the recorded violation
/// still reproduces under the given tolerances.
pub fn replay_witness(
    space: &NmsSpace,
    witness: &Witness,
    params: &CheckParams,
) -> Result<bool, AxiomError> {
    let p = params;
    let Some(first_point) = witness.points.first() else {
        return Ok(false);
    };
    let pt = |i: usize| witness.points.get(i).cloned().unwrap_or(first_point.clone());
    let sc = |i: usize| witness.scales.get(i).copied().unwrap_or(1.0);
    let outcome = match witness.axiom {
        AxiomId::I => violates_range(space, &pt(0), &pt(1), sc(0), p)?,
        AxiomId::Ii => violates_sum(space, &pt(0), &pt(1), sc(0), p)?,
        AxiomId::Iii => violates_identity(space, Degree::G, &pt(0), &pt(1), sc(0), p)?,
        AxiomId::Viii => violates_identity(space, Degree::B, &pt(0), &pt(1), sc(0), p)?,
        AxiomId::Xiii => violates_identity(space, Degree::Y, &pt(0), &pt(1), sc(0), p)?,
        AxiomId::V => violates_triangle(space, Degree::G, &pt(0), &pt(1), &pt(2), sc(0), sc(1), p)?,
        AxiomId::X => violates_triangle(space, Degree::B, &pt(0), &pt(1), &pt(2), sc(0), sc(1), p)?,
        AxiomId::Xv => violates_triangle(space, Degree::Y, &pt(0), &pt(1), &pt(2), sc(0), sc(1), p)?,
        AxiomId::Vi => violates_continuity(space, Degree::G, &pt(0), &pt(1), sc(0), p)?,
        AxiomId::Xi => violates_continuity(space, Degree::B, &pt(0), &pt(1), sc(0), p)?,
        AxiomId::Xvi => violates_continuity(space, Degree::Y, &pt(0), &pt(1), sc(0), p)?,
        AxiomId::Vii => violates_limit(space, Degree::G, &pt(0), &pt(1), &witness.scales, p)?,
        AxiomId::Xii => violates_limit(space, Degree::B, &pt(0), &pt(1), &witness.scales, p)?,
        AxiomId::Xvii => violates_limit(space, Degree::Y, &pt(0), &pt(1), &witness.scales, p)?,
        AxiomId::Xviii => violates_clamp(space, &pt(0), &pt(1), sc(0))?,
        AxiomId::Iv | AxiomId::Ix | AxiomId::Xiv => None,
    };
    Ok(outcome.is_some())
}

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStrategy {
    Random,
    Grid,
    AdversarialLine,
}

impl SearchStrategy {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "random" => Some(SearchStrategy::Random),
            "grid" => Some(SearchStrategy::Grid),
            "adversarial-line" => Some(SearchStrategy::AdversarialLine),
            _ => None,
        }
    }
}

/// Result of a counterexample search. An empty `witness` after budget
/// exhaustion means nothing was found within the budget; it is not a proof
/// that no violation exists.
#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub strategy: SearchStrategy,
    pub axioms: Vec<AxiomId>,
    pub budget: u64,
    pub evaluations: u64,
    pub exhausted: bool,
    pub witness: Option<Witness>,
    pub note: String,
}

#[derive(Debug, Clone)]
enum Candidate {
    Pair(Point, Point, f64),
    Triple(Point, Point, Point, f64, f64),
}

/// Scales tried by the deterministic strategies.
const SEARCH_SCALES: [f64; 5] = [0.01, 0.1, 1.0, 10.0, 100.0];
const EXTREME_SCALES: [f64; 3] = [1e-3, 1.0, 1e3];

fn random_candidates(space: &NmsSpace, seed: u64, out: &mut Vec<Candidate>, chunk: usize) {
    let mut rng = stream_rng(seed, 0xC0DE);
    let universe = space.universe();
    for k in 0..chunk {
        let l = log_uniform(&mut rng, 1e-2, 1e2);
        if k % 2 == 0 {
            out.push(Candidate::Pair(
                universe.sample_point(&mut rng),
                universe.sample_point(&mut rng),
                l,
            ));
        } else {
            let m = log_uniform(&mut rng, 1e-2, 1e2);
            out.push(Candidate::Triple(
                universe.sample_point(&mut rng),
                universe.sample_point(&mut rng),
                universe.sample_point(&mut rng),
                l,
                m,
            ));
        }
    }
}

fn grid_candidates(space: &NmsSpace, out: &mut Vec<Candidate>) {
    let points: Vec<Point> = match space.universe().enumerate_points() {
        Some(pts) if pts.len() <= 64 => pts,
        Some(pts) => {
            // Thin large finite universes to a deterministic stride.
            let stride = pts.len().div_ceil(64);
            pts.into_iter().step_by(stride).collect()
        }
        None => {
            let crate::space::Universe::RealVector { dim, low, high, .. } = space.universe()
            else {
                unreachable!()
            };
            let steps = 5usize;
            let mut pts = vec![vec![]];
            for _ in 0..*dim {
                let mut next = Vec::new();
                for partial in &pts {
                    for s in 0..steps {
                        let mut v = partial.clone();
                        v.push(low + (high - low) * s as f64 / (steps - 1) as f64);
                        next.push(v);
                    }
                }
                pts = next;
                if pts.len() > 64 {
                    pts.truncate(64);
                }
            }
            pts.into_iter().map(Point::Vector).collect()
        }
    };
    for a in &points {
        for b in &points {
            for l in SEARCH_SCALES {
                out.push(Candidate::Pair(a.clone(), b.clone(), l));
            }
        }
    }
    for a in &points {
        for b in &points {
            for c in &points {
                for l in SEARCH_SCALES {
                    out.push(Candidate::Triple(a.clone(), b.clone(), c.clone(), l, l));
                }
            }
        }
    }
}

fn adversarial_candidates(space: &NmsSpace, seed: u64, out: &mut Vec<Candidate>) {
    match space.universe() {
        crate::space::Universe::Naturals { bound } => {
            // Geometric chains (n, nk, nk^2): the interesting regime for
            // ratio-based degrees.
            for k in 2..=10u64 {
                let mut n = 1u64;
                while n.saturating_mul(k * k) <= *bound {
                    let (a, b, c) = (n, n * k, n * k * k);
                    for l in EXTREME_SCALES {
                        for m in EXTREME_SCALES {
                            out.push(Candidate::Triple(
                                Point::Natural(a),
                                Point::Natural(b),
                                Point::Natural(c),
                                l,
                                m,
                            ));
                        }
                    }
                    n += 1;
                }
            }
            for l in EXTREME_SCALES {
                out.push(Candidate::Pair(Point::Natural(1), Point::Natural(*bound), l));
            }
        }
        crate::space::Universe::FiniteLabeled { labels, .. } => {
            let pts: Vec<Point> = labels.iter().cloned().map(Point::Label).collect();
            for a in &pts {
                for b in &pts {
                    for c in &pts {
                        for l in EXTREME_SCALES {
                            out.push(Candidate::Triple(a.clone(), b.clone(), c.clone(), l, l));
                        }
                    }
                }
            }
        }
        crate::space::Universe::RealVector { dim, low, high, .. } => {
            let mut rng = stream_rng(seed, 0xAD7);
            let ratios = [0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75];
            for _ in 0..512 {
                let a: Vec<f64> = (0..*dim).map(|_| rng.random_range(*low..=*high)).collect();
                let c: Vec<f64> = (0..*dim).map(|_| rng.random_range(*low..=*high)).collect();
                for t in ratios {
                    let b: Vec<f64> = a
                        .iter()
                        .zip(&c)
                        .map(|(x, y)| x + t * (y - x))
                        .collect();
                    for l in EXTREME_SCALES {
                        for m in EXTREME_SCALES {
                            out.push(Candidate::Triple(
                                Point::Vector(a.clone()),
                                Point::Vector(b.clone()),
                                Point::Vector(c.clone()),
                                l,
                                m,
                            ));
                        }
                    }
                }
                for l in EXTREME_SCALES {
                    out.push(Candidate::Pair(
                        Point::Vector(a.clone()),
                        Point::Vector(c.clone()),
                        l,
                    ));
                }
            }
        }
    }
}

enum SearchStep {
    Found(Witness),
    BudgetExhausted,
    Clean,
}

#[allow(clippy::too_many_arguments)]
fn test_candidates(
    space: &NmsSpace,
    candidates: &[Candidate],
    requested: &[AxiomId],
    ladder: &[f64],
    params: &CheckParams,
    budget: u64,
    evaluations: &mut u64,
) -> SearchStep {
    let expect = "search candidates belong to the universe";
    let ladder_len = ladder.len() as u64;
    for cand in candidates {
        for &axiom in requested {
            let cost = probe_cost(axiom, ladder_len);
            if *evaluations + cost > budget {
                return SearchStep::BudgetExhausted;
            }
            let found = match (axiom, cand) {
                (AxiomId::I, Candidate::Pair(a, b, l)) => {
                    violates_range(space, a, b, *l, params).expect(expect)
                }
                (AxiomId::Ii, Candidate::Pair(a, b, l)) => {
                    violates_sum(space, a, b, *l, params).expect(expect)
                }
                (AxiomId::Iii, Candidate::Pair(a, b, l)) => {
                    violates_identity(space, Degree::G, a, b, *l, params).expect(expect)
                }
                (AxiomId::Viii, Candidate::Pair(a, b, l)) => {
                    violates_identity(space, Degree::B, a, b, *l, params).expect(expect)
                }
                (AxiomId::Xiii, Candidate::Pair(a, b, l)) => {
                    violates_identity(space, Degree::Y, a, b, *l, params).expect(expect)
                }
                (AxiomId::V, Candidate::Triple(a, b, c, l, m)) => {
                    violates_triangle(space, Degree::G, a, b, c, *l, *m, params).expect(expect)
                }
                (AxiomId::X, Candidate::Triple(a, b, c, l, m)) => {
                    violates_triangle(space, Degree::B, a, b, c, *l, *m, params).expect(expect)
                }
                (AxiomId::Xv, Candidate::Triple(a, b, c, l, m)) => {
                    violates_triangle(space, Degree::Y, a, b, c, *l, *m, params).expect(expect)
                }
                (AxiomId::Vi, Candidate::Pair(a, b, l)) => {
                    violates_continuity(space, Degree::G, a, b, *l, params).expect(expect)
                }
                (AxiomId::Xi, Candidate::Pair(a, b, l)) => {
                    violates_continuity(space, Degree::B, a, b, *l, params).expect(expect)
                }
                (AxiomId::Xvi, Candidate::Pair(a, b, l)) => {
                    violates_continuity(space, Degree::Y, a, b, *l, params).expect(expect)
                }
                (AxiomId::Vii, Candidate::Pair(a, b, _)) => {
                    violates_limit(space, Degree::G, a, b, ladder, params).expect(expect)
                }
                (AxiomId::Xii, Candidate::Pair(a, b, _)) => {
                    violates_limit(space, Degree::B, a, b, ladder, params).expect(expect)
                }
                (AxiomId::Xvii, Candidate::Pair(a, b, _)) => {
                    violates_limit(space, Degree::Y, a, b, ladder, params).expect(expect)
                }
                (AxiomId::Xviii, Candidate::Pair(a, b, _)) => {
                    violates_clamp(space, a, b, 0.0).expect(expect)
                }
                _ => None,
            };
            *evaluations += cost;
            if let Some(w) = found {
                return SearchStep::Found(w);
            }
        }
    }
    SearchStep::Clean
}

/// Search for a tuple violating any of the requested conditions, spending at
/// most `budget` degree evaluations. Returns the first witness found.
pub fn find_counterexample(
    space: &NmsSpace,
    axioms: &[AxiomId],
    budget: u64,
    seed: u64,
    strategy: SearchStrategy,
) -> SearchOutcome {
    let params = CheckParams::new(
        1,
        seed,
        ScaleGrid::new(vec![0.01, 1.0, 100.0]).unwrap(),
        1e-3,
    );
    let ladder = params.ladder();
    let mut evaluations: u64 = 0;

    let mut requested: Vec<AxiomId> = axioms.to_vec();
    requested.sort();
    requested.dedup();
    // The symmetry conditions hold structurally and admit no witness; they
    // would also never consume budget, so they are dropped up front.
    requested.retain(|a| !matches!(a, AxiomId::Iv | AxiomId::Ix | AxiomId::Xiv));
    if requested.is_empty() {
        return SearchOutcome {
            strategy,
            axioms: requested,
            budget,
            evaluations: 0,
            exhausted: true,
            witness: None,
            note: "only structural conditions were requested; they hold by construction"
                .to_owned(),
        };
    }

    let deterministic = !matches!(strategy, SearchStrategy::Random);
    let mut round = 0u64;
    let witness = loop {
        let mut candidates = Vec::new();
        match strategy {
            SearchStrategy::Random => {
                random_candidates(space, seed.wrapping_add(round), &mut candidates, 4096)
            }
            SearchStrategy::Grid => grid_candidates(space, &mut candidates),
            SearchStrategy::AdversarialLine => adversarial_candidates(space, seed, &mut candidates),
        }
        match test_candidates(
            space,
            &candidates,
            &requested,
            &ladder,
            &params,
            budget,
            &mut evaluations,
        ) {
            SearchStep::Found(w) => break Some(w),
            SearchStep::BudgetExhausted => break None,
            SearchStep::Clean => {
                if deterministic {
                    // A deterministic candidate list has been fully explored;
                    // re-running it cannot find anything new.
                    break None;
                }
                round += 1;
            }
        }
    };

    let exhausted = witness.is_none();
    SearchOutcome {
        strategy,
        axioms: requested,
        budget,
        evaluations,
        exhausted,
        note: if exhausted {
            "no violation found within the evaluation budget; absence is not a proof".to_owned()
        } else {
            "violation found; replay the witness to reproduce it".to_owned()
        },
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::NormPair;
    use crate::report::to_canonical_json;
    use crate::space::{BaseMetric, Universe};

    fn standard_line() -> NmsSpace {
        let u = Universe::real_vector(1, BaseMetric::Euclidean, 0.0, 1.0).unwrap();
        NmsSpace::standard_from_metric(u, NormPair::min_max()).unwrap()
    }

    fn grid(values: &[f64]) -> ScaleGrid {
        ScaleGrid::new(values.to_vec()).unwrap()
    }

    #[test]
    fn scale_grid_validation() {
        assert!(ScaleGrid::new(vec![]).is_err());
        assert!(ScaleGrid::new(vec![0.0, 1.0]).is_err());
        assert!(ScaleGrid::new(vec![2.0, 1.0]).is_err());
        assert!(ScaleGrid::new(vec![1.0, 1.0]).is_err());
        assert!(ScaleGrid::new(vec![0.1, 1.0, 10.0]).is_ok());
    }

    #[test]
    fn axiom_labels_round_trip() {
        for axiom in AxiomId::ALL {
            assert_eq!(AxiomId::parse(axiom.label()).unwrap(), axiom);
        }
        assert!(AxiomId::parse("xix").is_err());
    }

    #[test]
    fn oversized_grids_keep_the_limit_ladder_ascending() {
        // A grid already beyond the ladder top must not walk downward and
        // fabricate monotonicity violations.
        let space = standard_line();
        let report = check_axioms(&space, 500, 1, grid(&[2.0, 5e6]), 1e-3);
        for axiom in [AxiomId::Vii, AxiomId::Xii, AxiomId::Xvii] {
            assert_eq!(report.entry(axiom).status, CheckStatus::ProbeLimited);
        }
    }

    #[test]
    fn standard_space_with_large_scales_passes_everything() {
        let space = standard_line();
        // Universe diameter is 1; the grid minimum exceeds it.
        let report = check_axioms(&space, 2_000, 11, grid(&[2.0, 10.0, 100.0]), 1e-3);
        assert!(report.passed(), "failed: {:?}", report.failed_axioms());
        for e in &report.axioms {
            match e.axiom {
                AxiomId::Iv | AxiomId::Ix | AxiomId::Xiv => {
                    assert_eq!(e.status, CheckStatus::Structural)
                }
                AxiomId::Vi
                | AxiomId::Xi
                | AxiomId::Xvi
                | AxiomId::Vii
                | AxiomId::Xii
                | AxiomId::Xvii => assert_eq!(e.status, CheckStatus::ProbeLimited),
                _ => assert_eq!(e.status, CheckStatus::Pass),
            }
        }
    }

    #[test]
    fn small_scales_flag_the_range_axiom() {
        let space = standard_line();
        // Scales below typical distances make Y = d / lambda exceed 1.
        let report = check_axioms(&space, 2_000, 11, grid(&[0.05, 1.0]), 1e-3);
        let entry = report.entry(AxiomId::I);
        assert_eq!(entry.status, CheckStatus::Fail);
        let w = &entry.witnesses[0];
        assert!(w.degrees[0].y > 1.0);
        assert!(replay_witness(&space, w, &report.params).unwrap());
    }

    #[test]
    fn naturals_report_matches_expectations() {
        let space = NmsSpace::naturals_example(100, NormPair::lukasiewicz_probsum()).unwrap();
        let report = check_axioms(&space, 4_000, 5, grid(&[0.1, 1.0, 10.0]), 1e-3);
        let failed = report.failed_axioms();
        // Y = |a - b| breaks the range and sum bounds, stays away from its
        // limit, keeps B away from its limit, and breaks the conorm triangle
        // on collinear chains.
        for a in [
            AxiomId::I,
            AxiomId::Ii,
            AxiomId::Vii,
            AxiomId::Xii,
            AxiomId::Xv,
            AxiomId::Xvii,
        ] {
            assert!(failed.contains(&a), "expected {a:?} among {failed:?}");
        }
        // The ratio degrees keep both identity directions and the norm-side
        // triangle under lukasiewicz.
        for a in [AxiomId::Iii, AxiomId::V, AxiomId::Viii, AxiomId::X, AxiomId::Xiii] {
            assert!(!failed.contains(&a), "unexpected failure of {a:?}");
        }
        // The construction note about the B reading travels with the report.
        assert!(report.notes.iter().any(|n| n.contains("(max-min)/max")));

        // Every recorded witness replays.
        for e in &report.axioms {
            for w in &e.witnesses {
                assert!(
                    replay_witness(&space, w, &report.params).unwrap(),
                    "witness for {:?} did not replay",
                    e.axiom
                );
            }
        }
    }

    #[test]
    fn checker_is_deterministic() {
        let space = NmsSpace::naturals_example(50, NormPair::min_max()).unwrap();
        let a = check_axioms(&space, 500, 123, grid(&[0.1, 1.0, 10.0]), 1e-3);
        let b = check_axioms(&space, 500, 123, grid(&[0.1, 1.0, 10.0]), 1e-3);
        assert_eq!(to_canonical_json(&a), to_canonical_json(&b));
    }

    #[test]
    fn finder_reproduces_the_min_norm_violation_on_naturals() {
        let space = NmsSpace::naturals_example(100, NormPair::min_max()).unwrap();
        let outcome = find_counterexample(
            &space,
            &[AxiomId::V],
            1_000_000,
            3,
            SearchStrategy::AdversarialLine,
        );
        let w = outcome.witness.expect("violation exists");
        assert_eq!(w.axiom, AxiomId::V);
        let params = CheckParams::new(1, 0, grid(&[0.1, 1.0, 10.0]), 1e-3);
        assert!(replay_witness(&space, &w, &params).unwrap());

        // The canonical chain (1, 10, 100): min(0.1, 0.1) = 0.1 > 0.01.
        let canonical = Witness {
            axiom: AxiomId::V,
            points: vec![Point::Natural(1), Point::Natural(10), Point::Natural(100)],
            scales: vec![1.0, 1.0],
            degrees: vec![],
            violation: String::new(),
        };
        assert!(replay_witness(&space, &canonical, &params).unwrap());
    }

    #[test]
    fn finder_random_strategy_also_succeeds() {
        let space = NmsSpace::naturals_example(100, NormPair::min_max()).unwrap();
        let outcome =
            find_counterexample(&space, &[AxiomId::V], 1_000_000, 9, SearchStrategy::Random);
        assert!(outcome.witness.is_some());
        assert!(outcome.evaluations <= 1_000_000);
    }

    #[test]
    fn finder_reports_absence_without_claiming_proof() {
        let space = standard_line();
        // With scales at or above the diameter the range axioms hold, so the
        // deterministic grid search must exhaust without a witness.
        let outcome =
            find_counterexample(&space, &[AxiomId::Xviii], 50_000, 1, SearchStrategy::Grid);
        assert!(outcome.witness.is_none());
        assert!(outcome.exhausted);
        assert!(outcome.note.contains("not a proof"));
    }

    #[test]
    fn metric_construction_under_weaker_norms_splits_by_degree() {
        // lukasiewicz <= min and probsum >= max pointwise on the unit square,
        // so the G and B triangles are inherited from the (min, max) case and
        // the finder comes up empty for v and x.
        let u = Universe::real_vector(1, BaseMetric::Euclidean, 0.0, 1.0).unwrap();
        let space = NmsSpace::standard_from_metric(u, NormPair::lukasiewicz_probsum()).unwrap();
        let outcome = find_counterexample(
            &space,
            &[AxiomId::V, AxiomId::X],
            200_000,
            17,
            SearchStrategy::AdversarialLine,
        );
        assert!(outcome.witness.is_none(), "unexpected witness: {outcome:?}");

        // Y = d / lambda escapes [0,1] at scales below the distance, where
        // probsum stops being monotone, and the Y triangle genuinely breaks.
        let outcome = find_counterexample(
            &space,
            &[AxiomId::Xv],
            200_000,
            17,
            SearchStrategy::AdversarialLine,
        );
        let w = outcome.witness.expect("Y-triangle violation at small scales");
        let params = CheckParams::new(1, 0, grid(&[0.1, 1.0, 10.0]), 1e-3);
        assert!(replay_witness(&space, &w, &params).unwrap());
    }

    #[test]
    fn triangle_witnesses_transfer_to_pointwise_larger_norms() {
        // If a tuple violates the norm-side triangle under k1 and k1 <= k2
        // pointwise, the same tuple violates it under k2.
        let (luka, prod, min) = (
            crate::norms::NormKernel::lukasiewicz(),
            crate::norms::NormKernel::product(),
            crate::norms::NormKernel::min(),
        );
        let mut rng = stream_rng(21, 0);
        use rand::Rng;
        let mut transferred = 0;
        for _ in 0..20_000 {
            let g1: f64 = rng.random_range(0.0..=1.0);
            let g2: f64 = rng.random_range(0.0..=1.0);
            let g13: f64 = rng.random_range(0.0..=1.0);
            if luka.eval_raw(g1, g2) > g13 {
                assert!(prod.eval_raw(g1, g2) > g13);
                assert!(min.eval_raw(g1, g2) > g13);
                transferred += 1;
            }
        }
        assert!(transferred > 100, "sampling produced too few violations");
    }

    #[test]
    fn found_triangle_witnesses_transfer_across_norm_substitution() {
        // Build a tabulated space whose nearness degrees violate the norm
        // triangle even under lukasiewicz (0.9 ∘ 0.9 = 0.8 > 0.5), find the
        // witness there, then replay the same tuple on the identical table
        // under the pointwise-larger product and min kernels.
        use crate::space::{DegreeTable, DegreesTriple, DistanceMatrix};
        use std::collections::BTreeMap;

        let build = |pair: NormPair| {
            let labels = vec!["x".to_string(), "y".to_string(), "z".to_string()];
            let distances = DistanceMatrix::new(vec![
                vec![0.0, 1.0, 1.0],
                vec![1.0, 0.0, 1.0],
                vec![1.0, 1.0, 0.0],
            ])
            .unwrap();
            let flat = |g: f64| DegreesTriple { g, b: 1.0 - g, y: 1.0 - g };
            let mut entries = BTreeMap::new();
            entries.insert((0usize, 1usize), vec![flat(0.9)]);
            entries.insert((1usize, 2usize), vec![flat(0.9)]);
            entries.insert((0usize, 2usize), vec![flat(0.5)]);
            let table = DegreeTable::new(vec![1.0], entries).unwrap();
            NmsSpace::tabulated(
                Universe::finite_labeled(labels, distances).unwrap(),
                table,
                pair,
            )
            .unwrap()
        };

        let weak = build(NormPair::lukasiewicz_probsum());
        let outcome =
            find_counterexample(&weak, &[AxiomId::V], 100_000, 4, SearchStrategy::Grid);
        let witness = outcome.witness.expect("lukasiewicz-level violation");
        let params = CheckParams::new(1, 0, grid(&[1.0]), 1e-3);
        assert!(replay_witness(&weak, &witness, &params).unwrap());

        // lukasiewicz <= product <= min pointwise: the tuple transfers.
        let product_pair = NormPair::new(
            crate::norms::NormKernel::product(),
            crate::norms::NormKernel::probsum(),
        )
        .unwrap();
        for stronger in [build(product_pair), build(NormPair::min_max())] {
            assert!(
                replay_witness(&stronger, &witness, &params).unwrap(),
                "witness did not transfer to {}",
                stronger.norms().tnorm().name()
            );
        }
    }

    #[test]
    fn finder_drops_structural_conditions_instead_of_spinning() {
        let space = NmsSpace::naturals_example(10, NormPair::min_max()).unwrap();
        let outcome = find_counterexample(
            &space,
            &[AxiomId::Iv, AxiomId::Ix, AxiomId::Xiv],
            1_000_000,
            0,
            SearchStrategy::Random,
        );
        assert!(outcome.witness.is_none());
        assert!(outcome.exhausted);
        assert!(outcome.axioms.is_empty());
        assert!(outcome.note.contains("structural"));

        // Mixed requests keep the non-structural part.
        let outcome = find_counterexample(
            &space,
            &[AxiomId::Iv, AxiomId::V],
            1_000_000,
            0,
            SearchStrategy::AdversarialLine,
        );
        assert_eq!(outcome.axioms, vec![AxiomId::V]);
        assert!(outcome.witness.is_some());
    }

    #[test]
    fn replay_rejects_malformed_witnesses() {
        let space = NmsSpace::naturals_example(10, NormPair::min_max()).unwrap();
        let params = CheckParams::new(1, 0, grid(&[1.0]), 1e-3);
        let empty = Witness {
            axiom: AxiomId::V,
            points: vec![],
            scales: vec![],
            degrees: vec![],
            violation: String::new(),
        };
        assert!(!replay_witness(&space, &empty, &params).unwrap());
    }

    #[test]
    fn finder_is_deterministic_per_seed() {
        let space = NmsSpace::naturals_example(100, NormPair::min_max()).unwrap();
        let one = find_counterexample(&space, &[AxiomId::V], 50_000, 5, SearchStrategy::Random);
        let two = find_counterexample(&space, &[AxiomId::V], 50_000, 5, SearchStrategy::Random);
        assert_eq!(to_canonical_json(&one), to_canonical_json(&two));
    }

    #[test]
    fn degenerate_metric_breaks_identity_converse() {
        // Two distinct labels at distance zero: G(a,b) = 1 with a != b.
        let distances = crate::space::DistanceMatrix::new(vec![
            vec![0.0, 0.0, 1.0],
            vec![0.0, 0.0, 1.0],
            vec![1.0, 1.0, 0.0],
        ])
        .unwrap();
        let u = Universe::finite_labeled(
            vec!["p".into(), "q".into(), "r".into()],
            distances,
        )
        .unwrap();
        let space = NmsSpace::standard_from_metric(u, NormPair::min_max()).unwrap();
        let report = check_axioms(&space, 2_000, 2, grid(&[1.0, 10.0]), 1e-3);
        for axiom in [AxiomId::Iii, AxiomId::Viii, AxiomId::Xiii] {
            assert_eq!(report.entry(axiom).status, CheckStatus::Fail);
        }
    }
}
