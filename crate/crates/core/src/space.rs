//! Neutrosophic metric spaces: universes, points and degree evaluation.
//!
//! A space couples a universe of points with three degree functions
//! `(G, B, Y)` over `(point, point, scale)` and a norm pair `(∘, •)`. Three
//! constructions are provided:
//!
//! * `standard`: induced by a metric `d` via `G = λ/(λ+d)`, `B = d/(λ+d)`,
//!   `Y = d/λ`;
//! * `naturals`: on `{1..bound}`, `G = min/max`, `B = (max−min)/max`,
//!   `Y = |a−b|`, all scale-independent;
//! * `tabulated`: explicit degree tables over a λ-grid with linear
//!   interpolation, for finite universes.
//!
//! Evaluation canonicalizes the argument order, so the symmetry axioms hold
//! exactly by construction, and clamps every scale `λ ≤ 0` to the triple
//! `(0, 1, 1)`. Degrees are deliberately *not* clamped to `[0,1]`: the
//! `naturals` construction and the `Y = d/λ` formula genuinely escape the
//! unit interval on valid inputs, and the axiom checker exists to find
//! exactly that.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::norms::{NormError, NormPair};

/// Comparison slack for exact metric identities (symmetry, zero diagonal,
/// triangle inequality) verified at load time.
pub const METRIC_EPS: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum SpaceError {
    #[error("unknown label '{0}'")]
    UnknownLabel(String),
    #[error("point has dimension {got}, universe expects {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("natural {value} is outside 1..={bound}")]
    NaturalOutOfRange { value: u64, bound: u64 },
    #[error("point {0:?} does not belong to this universe")]
    WrongPointKind(Point),
    #[error("scale must be finite, got {0}")]
    NonFiniteScale(f64),
    #[error("distance matrix is invalid: {0}")]
    InvalidMetric(String),
    #[error("universe does not fit this construction: {0}")]
    UniverseMismatch(String),
    #[error("naturals bound must be at least 2, got {0}")]
    BoundTooSmall(u64),
    #[error("degree table is invalid: {0}")]
    InvalidTable(String),
    #[error("norm error: {0}")]
    Norm(#[from] NormError),
    #[error("vector bounds must satisfy low < high, got [{0}, {1}]")]
    InvalidBounds(f64, f64),
}

/// A point of a universe. Serializes as a bare string (label), a
/// non-negative integer (natural) or an array of numbers (vector).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Point {
    Label(String),
    Natural(u64),
    Vector(Vec<f64>),
}

impl Point {
    pub fn vector1(x: f64) -> Point {
        Point::Vector(vec![x])
    }

    /// Total-order key usable for hashing and canonical sorting.
    pub fn key(&self) -> PointKey {
        match self {
            Point::Label(s) => PointKey::Label(s.clone()),
            Point::Natural(n) => PointKey::Natural(*n),
            Point::Vector(v) => PointKey::Vector(v.iter().map(|x| x.to_bits()).collect()),
        }
    }
}

/// Hashable identity of a point (vector components compared bitwise).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointKey {
    Label(String),
    Natural(u64),
    Vector(Vec<u64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseMetric {
    Euclidean,
    Manhattan,
    Discrete,
}

impl BaseMetric {
    fn distance(self, a: &[f64], b: &[f64]) -> f64 {
        match self {
            BaseMetric::Euclidean => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt(),
            BaseMetric::Manhattan => a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum(),
            BaseMetric::Discrete => {
                if a == b {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }
}

/// Symmetric distance matrix over labeled points, checked at load time for
/// non-negativity, zero diagonal, symmetry and the triangle inequality.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    entries: Vec<Vec<f64>>,
}

impl DistanceMatrix {
    pub fn new(entries: Vec<Vec<f64>>) -> Result<Self, SpaceError> {
        let n = entries.len();
        if n == 0 {
            return Err(SpaceError::InvalidMetric("matrix is empty".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(SpaceError::InvalidMetric(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &d) in row.iter().enumerate() {
                if !d.is_finite() || d < 0.0 {
                    return Err(SpaceError::InvalidMetric(format!(
                        "d[{i}][{j}] = {d} must be finite and non-negative"
                    )));
                }
                if i == j && d.abs() > METRIC_EPS {
                    return Err(SpaceError::InvalidMetric(format!(
                        "diagonal d[{i}][{i}] = {d} is not zero"
                    )));
                }
                if (d - entries[j][i]).abs() > METRIC_EPS {
                    return Err(SpaceError::InvalidMetric(format!(
                        "asymmetric: d[{i}][{j}] = {d} vs d[{j}][{i}] = {}",
                        entries[j][i]
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if entries[i][k] > entries[i][j] + entries[j][k] + METRIC_EPS {
                        return Err(SpaceError::InvalidMetric(format!(
                            "triangle inequality fails on ({i}, {j}, {k}): {} > {} + {}",
                            entries[i][k], entries[i][j], entries[j][k]
                        )));
                    }
                }
            }
        }
        Ok(DistanceMatrix { entries })
    }

    /// Matrix of pairwise distances of explicit coordinates.
    pub fn from_points(coords: &[Vec<f64>], metric: BaseMetric) -> Result<Self, SpaceError> {
        let entries = coords
            .iter()
            .map(|a| coords.iter().map(|b| metric.distance(a, b)).collect())
            .collect();
        DistanceMatrix::new(entries)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        // Read through the canonical upper triangle so symmetry is bit-exact
        // even if the input carried 1e-12-level asymmetry.
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        self.entries[lo][hi]
    }

    pub fn max_distance(&self) -> f64 {
        let mut best: f64 = 0.0;
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                best = best.max(self.distance(i, j));
            }
        }
        best
    }
}

/// The point set a space lives on.
#[derive(Debug, Clone)]
pub enum Universe {
    /// Finitely many labeled points with an explicit metric.
    FiniteLabeled {
        labels: Vec<String>,
        distances: DistanceMatrix,
    },
    /// `R^dim` under a base metric; `low`/`high` bound the sampling box.
    RealVector {
        dim: usize,
        metric: BaseMetric,
        low: f64,
        high: f64,
    },
    /// `{1, .., bound}`.
    Naturals { bound: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Resolved<'a> {
    Index(usize),
    Nat(u64),
    Coords(&'a [f64]),
}

impl Universe {
    pub fn finite_labeled(
        labels: Vec<String>,
        distances: DistanceMatrix,
    ) -> Result<Self, SpaceError> {
        if labels.len() != distances.len() {
            return Err(SpaceError::InvalidMetric(format!(
                "{} labels but {}x{} matrix",
                labels.len(),
                distances.len(),
                distances.len()
            )));
        }
        Ok(Universe::FiniteLabeled { labels, distances })
    }

    pub fn real_vector(dim: usize, metric: BaseMetric, low: f64, high: f64) -> Result<Self, SpaceError> {
        if dim == 0 {
            return Err(SpaceError::UniverseMismatch("dimension must be positive".into()));
        }
        if !(low.is_finite() && high.is_finite() && low < high) {
            return Err(SpaceError::InvalidBounds(low, high));
        }
        Ok(Universe::RealVector {
            dim,
            metric,
            low,
            high,
        })
    }

    /// Unit segment of the real line with the euclidean metric; the ambient
    /// space for most sequence and ball examples.
    pub fn real_line() -> Self {
        Universe::RealVector {
            dim: 1,
            metric: BaseMetric::Euclidean,
            low: 0.0,
            high: 1.0,
        }
    }

    pub fn naturals(bound: u64) -> Result<Self, SpaceError> {
        if bound < 2 {
            return Err(SpaceError::BoundTooSmall(bound));
        }
        Ok(Universe::Naturals { bound })
    }

    pub(crate) fn resolve<'a>(&self, point: &'a Point) -> Result<Resolved<'a>, SpaceError> {
        match (self, point) {
            (Universe::FiniteLabeled { labels, .. }, Point::Label(name)) => labels
                .iter()
                .position(|l| l == name)
                .map(Resolved::Index)
                .ok_or_else(|| SpaceError::UnknownLabel(name.clone())),
            (Universe::RealVector { dim, .. }, Point::Vector(coords)) => {
                if coords.len() != *dim {
                    return Err(SpaceError::DimensionMismatch {
                        expected: *dim,
                        got: coords.len(),
                    });
                }
                if coords.iter().any(|x| !x.is_finite()) {
                    return Err(SpaceError::WrongPointKind(point.clone()));
                }
                Ok(Resolved::Coords(coords))
            }
            (Universe::Naturals { bound }, Point::Natural(value)) => {
                if *value == 0 || value > bound {
                    return Err(SpaceError::NaturalOutOfRange {
                        value: *value,
                        bound: *bound,
                    });
                }
                Ok(Resolved::Nat(*value))
            }
            _ => Err(SpaceError::WrongPointKind(point.clone())),
        }
    }

    pub fn contains(&self, point: &Point) -> bool {
        self.resolve(point).is_ok()
    }

    /// Every point of a finite universe, in canonical order; `None` for real
    /// vector universes.
    pub fn enumerate_points(&self) -> Option<Vec<Point>> {
        match self {
            Universe::FiniteLabeled { labels, .. } => {
                Some(labels.iter().cloned().map(Point::Label).collect())
            }
            Universe::Naturals { bound } => Some((1..=*bound).map(Point::Natural).collect()),
            Universe::RealVector { .. } => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, Universe::RealVector { .. })
    }

    /// Metric distance between resolved points, when the universe carries one.
    pub(crate) fn distance(&self, a: Resolved<'_>, b: Resolved<'_>) -> Option<f64> {
        match (self, a, b) {
            (Universe::FiniteLabeled { distances, .. }, Resolved::Index(i), Resolved::Index(j)) => {
                Some(distances.distance(i, j))
            }
            (Universe::RealVector { metric, .. }, Resolved::Coords(x), Resolved::Coords(y)) => {
                Some(metric.distance(x, y))
            }
            _ => None,
        }
    }

    /// Draw a point uniformly (labels and naturals uniform over the carrier,
    /// vectors uniform over the sampling box).
    pub fn sample_point<R: rand::Rng>(&self, rng: &mut R) -> Point {
        match self {
            Universe::FiniteLabeled { labels, .. } => {
                let idx = rng.random_range(0..labels.len());
                Point::Label(labels[idx].clone())
            }
            Universe::RealVector { dim, low, high, .. } => Point::Vector(
                (0..*dim)
                    .map(|_| rng.random_range(*low..=*high))
                    .collect(),
            ),
            Universe::Naturals { bound } => Point::Natural(rng.random_range(1..=*bound)),
        }
    }
}

/// One evaluation result: nearness `g`, neutralness `b`, non-nearness `y`.
/// Components are finite and non-negative but not confined to `[0,1]`;
/// membership in the unit interval is an axiom the checker tests, not a type
/// invariant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegreesTriple {
    pub g: f64,
    pub b: f64,
    pub y: f64,
}

impl DegreesTriple {
    pub const IDENTITY: DegreesTriple = DegreesTriple {
        g: 1.0,
        b: 0.0,
        y: 0.0,
    };

    /// The clamp value for non-positive scales.
    pub const CLAMPED: DegreesTriple = DegreesTriple {
        g: 0.0,
        b: 1.0,
        y: 1.0,
    };

    pub fn sum(&self) -> f64 {
        self.g + self.b + self.y
    }
}

/// Degrees of the metric-induced construction. The larger of `G`, `B` is
/// computed by division and the other as its complement, which keeps
/// `G + B = 1` bit-exact.
pub(crate) fn metric_degrees(d: f64, lambda: f64) -> DegreesTriple {
    let s = lambda + d;
    let (g, b) = if lambda >= d {
        let g = lambda / s;
        (g, 1.0 - g)
    } else {
        let b = d / s;
        (1.0 - b, b)
    };
    DegreesTriple { g, b, y: d / lambda }
}

fn naturals_degrees(a: u64, b: u64) -> DegreesTriple {
    // Canonicalized so a <= b.
    let (lo, hi) = (a.min(b) as f64, a.max(b) as f64);
    DegreesTriple {
        g: lo / hi,
        b: (hi - lo) / hi,
        y: hi - lo,
    }
}

/// Explicit degree table for a finite universe: per unordered point pair, a
/// degree triple at each λ-knot, interpolated linearly in between and
/// extended as constants beyond the end knots. Missing diagonal entries
/// default to `(1, 0, 0)`.
#[derive(Debug, Clone)]
pub struct DegreeTable {
    lambda_knots: Vec<f64>,
    entries: BTreeMap<(usize, usize), Vec<DegreesTriple>>,
}

impl DegreeTable {
    pub fn new(
        lambda_knots: Vec<f64>,
        entries: BTreeMap<(usize, usize), Vec<DegreesTriple>>,
    ) -> Result<Self, SpaceError> {
        if lambda_knots.is_empty() {
            return Err(SpaceError::InvalidTable("no lambda knots".into()));
        }
        if lambda_knots.iter().any(|&l| l <= 0.0 || !l.is_finite()) {
            return Err(SpaceError::InvalidTable(
                "lambda knots must be finite and positive".into(),
            ));
        }
        if lambda_knots.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SpaceError::InvalidTable(
                "lambda knots must be strictly increasing".into(),
            ));
        }
        for (&(i, j), triples) in &entries {
            if i > j {
                return Err(SpaceError::InvalidTable(format!(
                    "entry ({i}, {j}) is not in canonical order i <= j"
                )));
            }
            if triples.len() != lambda_knots.len() {
                return Err(SpaceError::InvalidTable(format!(
                    "entry ({i}, {j}) has {} triples, expected {}",
                    triples.len(),
                    lambda_knots.len()
                )));
            }
            for t in triples {
                if !(t.g.is_finite() && t.b.is_finite() && t.y.is_finite())
                    || t.g < 0.0
                    || t.b < 0.0
                    || t.y < 0.0
                {
                    return Err(SpaceError::InvalidTable(format!(
                        "entry ({i}, {j}) holds a non-finite or negative degree"
                    )));
                }
            }
        }
        Ok(DegreeTable {
            lambda_knots,
            entries,
        })
    }

    pub fn lambda_knots(&self) -> &[f64] {
        &self.lambda_knots
    }

    fn complete_for(&self, n: usize) -> Result<(), SpaceError> {
        for i in 0..n {
            for j in (i + 1)..n {
                if !self.entries.contains_key(&(i, j)) {
                    return Err(SpaceError::InvalidTable(format!(
                        "missing entry for pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    fn lookup(&self, i: usize, j: usize, lambda: f64) -> DegreesTriple {
        let key = if i <= j { (i, j) } else { (j, i) };
        let Some(triples) = self.entries.get(&key) else {
            return DegreesTriple::IDENTITY; // omitted diagonal
        };
        let knots = &self.lambda_knots;
        if lambda <= knots[0] {
            return triples[0];
        }
        if lambda >= *knots.last().unwrap() {
            return *triples.last().unwrap();
        }
        let hi = knots.partition_point(|&k| k < lambda);
        let lo = hi - 1;
        if knots[hi] == lambda {
            return triples[hi];
        }
        let t = (lambda - knots[lo]) / (knots[hi] - knots[lo]);
        let lerp = |a: f64, b: f64| a + t * (b - a);
        DegreesTriple {
            g: lerp(triples[lo].g, triples[hi].g),
            b: lerp(triples[lo].b, triples[hi].b),
            y: lerp(triples[lo].y, triples[hi].y),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Construction {
    StandardFromMetric,
    NaturalsExample,
    Tabulated(DegreeTable),
}

impl Construction {
    pub fn name(&self) -> &'static str {
        match self {
            Construction::StandardFromMetric => "standard",
            Construction::NaturalsExample => "naturals",
            Construction::Tabulated(_) => "tabulated",
        }
    }
}

/// An immutable neutrosophic metric space candidate: universe, construction
/// and norm pair. Evaluation is pure and deterministic.
#[derive(Debug, Clone)]
pub struct NmsSpace {
    universe: Universe,
    construction: Construction,
    norms: NormPair,
    notes: Vec<String>,
}

impl NmsSpace {
    /// Space induced by the universe's metric:
    /// `G = λ/(λ+d)`, `B = d/(λ+d)`, `Y = d/λ`.
    pub fn standard_from_metric(universe: Universe, norms: NormPair) -> Result<Self, SpaceError> {
        require_trusted(&norms)?;
        if matches!(universe, Universe::Naturals { .. }) {
            return Err(SpaceError::UniverseMismatch(
                "the naturals universe carries no metric; use the naturals construction".into(),
            ));
        }
        Ok(NmsSpace {
            universe,
            construction: Construction::StandardFromMetric,
            norms,
            notes: vec![],
        })
    }

    /// Ratio-based space on `{1..bound}`: `G = min/max`,
    /// `B = (max−min)/max`, `Y = |a−b|`, independent of the scale.
    ///
    /// `B` is read as the complement of `G` (the neutralness of `a` against a
    /// larger `b` is `(b−a)/b`), matching the metric-induced construction
    /// where `B = 1 − G` as well; the note records that reading in every
    /// report over this space.
    pub fn naturals_example(bound: u64, norms: NormPair) -> Result<Self, SpaceError> {
        require_trusted(&norms)?;
        let universe = Universe::naturals(bound)?;
        Ok(NmsSpace {
            universe,
            construction: Construction::NaturalsExample,
            norms,
            notes: vec![
                "naturals construction: B(a,b) is read as (max-min)/max, the complement of G; \
                 G, B and Y do not depend on the scale"
                    .into(),
            ],
        })
    }

    /// Space defined by an explicit degree table; finite universes only.
    pub fn tabulated(
        universe: Universe,
        table: DegreeTable,
        norms: NormPair,
    ) -> Result<Self, SpaceError> {
        require_trusted(&norms)?;
        let Some(points) = universe.enumerate_points() else {
            return Err(SpaceError::UniverseMismatch(
                "tabulated spaces need a finite universe".into(),
            ));
        };
        table.complete_for(points.len())?;
        Ok(NmsSpace {
            universe,
            construction: Construction::Tabulated(table),
            norms,
            notes: vec![
                "tabulated construction: degrees interpolate linearly between lambda knots and \
                 extend as constants beyond them; limit probes are knot-limited"
                    .into(),
            ],
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn norms(&self) -> &NormPair {
        &self.norms
    }

    /// Construction caveats echoed into report headers.
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// Evaluate the degree triple at `(a, b, λ)`.
    ///
    /// For `λ ≤ 0` this is exactly `(0, 1, 1)`. The two points are
    /// canonicalized before evaluation, so `evaluate(a, b, λ)` and
    /// `evaluate(b, a, λ)` agree bit-for-bit.
    pub fn evaluate(&self, a: &Point, b: &Point, lambda: f64) -> Result<DegreesTriple, SpaceError> {
        if !lambda.is_finite() {
            return Err(SpaceError::NonFiniteScale(lambda));
        }
        let ra = self.universe.resolve(a)?;
        let rb = self.universe.resolve(b)?;
        if lambda <= 0.0 {
            return Ok(DegreesTriple::CLAMPED);
        }
        let (ra, rb) = canonical_order(ra, rb);
        Ok(match &self.construction {
            Construction::StandardFromMetric => {
                let d = self
                    .universe
                    .distance(ra, rb)
                    .expect("metric universes resolve to metric points");
                metric_degrees(d, lambda)
            }
            Construction::NaturalsExample => match (ra, rb) {
                (Resolved::Nat(x), Resolved::Nat(y)) => naturals_degrees(x, y),
                _ => unreachable!("naturals construction implies naturals universe"),
            },
            Construction::Tabulated(table) => match (ra, rb) {
                (Resolved::Index(i), Resolved::Index(j)) => table.lookup(i, j, lambda),
                (Resolved::Nat(x), Resolved::Nat(y)) => {
                    table.lookup((x - 1) as usize, (y - 1) as usize, lambda)
                }
                _ => unreachable!("tabulated construction implies finite universe"),
            },
        })
    }
}

fn require_trusted(norms: &NormPair) -> Result<(), SpaceError> {
    for kernel in [norms.tnorm(), norms.tconorm()] {
        if !kernel.is_trusted() {
            return Err(SpaceError::Norm(NormError::Unverified(
                kernel.name().to_owned(),
            )));
        }
    }
    Ok(())
}

fn canonical_order<'a>(a: Resolved<'a>, b: Resolved<'a>) -> (Resolved<'a>, Resolved<'a>) {
    let swap = match (&a, &b) {
        (Resolved::Index(i), Resolved::Index(j)) => i > j,
        (Resolved::Nat(x), Resolved::Nat(y)) => x > y,
        (Resolved::Coords(x), Resolved::Coords(y)) => {
            matches!(lex_cmp(x, y), std::cmp::Ordering::Greater)
        }
        _ => false,
    };
    if swap {
        (b, a)
    } else {
        (a, b)
    }
}

fn lex_cmp(x: &[f64], y: &[f64]) -> std::cmp::Ordering {
    for (a, b) in x.iter().zip(y) {
        match a.total_cmp(b) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    x.len().cmp(&y.len())
}

// ---------------------------------------------------------------------------
// JSON space descriptions
// ---------------------------------------------------------------------------

/// Universe description as found in space files.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum UniverseDescription {
    FiniteLabeled {
        labels: Vec<String>,
        distances: Vec<Vec<f64>>,
    },
    RealVector {
        dim: usize,
        metric: BaseMetric,
        #[serde(default = "default_low")]
        low: f64,
        #[serde(default = "default_high")]
        high: f64,
    },
    Naturals {
        bound: u64,
    },
}

fn default_low() -> f64 {
    0.0
}

fn default_high() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    Standard,
    Naturals,
    Tabulated,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntryDescription {
    pub a: usize,
    pub b: usize,
    pub degrees: Vec<[f64; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDescription {
    pub lambda_knots: Vec<f64>,
    pub entries: Vec<TableEntryDescription>,
}

/// A space file: universe, construction and kernel names. Unknown keys are
/// rejected. `force_norms` admits unverified kernels (such as `mean`).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDescription {
    pub universe: UniverseDescription,
    pub construction: ConstructionKind,
    pub tnorm: String,
    pub tconorm: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableDescription>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub force_norms: bool,
}

impl SpaceDescription {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn build(&self) -> Result<NmsSpace, SpaceError> {
        let mut tnorm = crate::norms::NormKernel::by_name(&self.tnorm)?;
        let mut tconorm = crate::norms::NormKernel::by_name(&self.tconorm)?;
        if self.force_norms {
            tnorm = tnorm.assume_valid();
            tconorm = tconorm.assume_valid();
        }
        let norms = NormPair::new(tnorm, tconorm)?;

        let universe = match &self.universe {
            UniverseDescription::FiniteLabeled { labels, distances } => {
                Universe::finite_labeled(labels.clone(), DistanceMatrix::new(distances.clone())?)?
            }
            UniverseDescription::RealVector {
                dim,
                metric,
                low,
                high,
            } => Universe::real_vector(*dim, *metric, *low, *high)?,
            UniverseDescription::Naturals { bound } => Universe::naturals(*bound)?,
        };

        match self.construction {
            ConstructionKind::Standard => NmsSpace::standard_from_metric(universe, norms),
            ConstructionKind::Naturals => match universe {
                Universe::Naturals { bound } => NmsSpace::naturals_example(bound, norms),
                _ => Err(SpaceError::UniverseMismatch(
                    "the naturals construction needs a naturals universe".into(),
                )),
            },
            ConstructionKind::Tabulated => {
                let desc = self.table.as_ref().ok_or_else(|| {
                    SpaceError::InvalidTable("tabulated construction needs a table".into())
                })?;
                let mut entries = BTreeMap::new();
                for e in &desc.entries {
                    let key = (e.a.min(e.b), e.a.max(e.b));
                    let triples = e
                        .degrees
                        .iter()
                        .map(|d| DegreesTriple {
                            g: d[0],
                            b: d[1],
                            y: d[2],
                        })
                        .collect();
                    if entries.insert(key, triples).is_some() {
                        return Err(SpaceError::InvalidTable(format!(
                            "duplicate entry for pair {key:?}"
                        )));
                    }
                }
                let table = DegreeTable::new(desc.lambda_knots.clone(), entries)?;
                NmsSpace::tabulated(universe, table, norms)
            }
        }
    }
}
