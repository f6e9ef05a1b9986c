//! Open-ball geometry and finite-model topology.
//!
//! The open ball `O(a, ε, λ)` collects the points whose degrees against `a`
//! at scale `λ` satisfy `G > 1−ε`, `B < ε`, `Y < ε` (all strict). On top of
//! the balls this module builds constructive witnesses for the classical
//! structure theorems — every ball is open, every space is Hausdorff, compact
//! sets are neutrosophically bounded, closures of shrunken balls nest — and,
//! on finite universes, the exhaustively enumerated topology with
//! nowhere-dense and Baire probes.
//!
//! Construction and verification are separated on purpose: each witness
//! builder follows the residual recipe its theorem suggests, and then the
//! claimed property (containment, disjointness, certificate bounds) is
//! re-checked point by point — exhaustively on finite universes, on a dense
//! sample grid otherwise.

use serde::Serialize;
use thiserror::Error;

use crate::axioms::{ScaleGrid, AxiomError};
use crate::norms::{tconorm_residual, tnorm_residual, NormError};
use crate::space::{DegreesTriple, NmsSpace, Point, SpaceError, Universe};
use crate::unit::{UnitError, UnitValue};

/// Largest finite universe the bitmask topology machinery accepts.
pub const MAX_TOPOLOGY_POINTS: usize = 128;

/// Probe scales used to detect indistinguishable points when computing exact
/// closures on finite universes.
const BLOCK_PROBE_SCALES: [f64; 3] = [0.5, 1.0, 2.0];

#[derive(Debug, Error)]
pub enum TopologyError {
    #[error("ball radius must lie in (0,1), got {0}")]
    InvalidRadius(f64),
    #[error("base family depth must be at least 1")]
    InvalidDepth,
    #[error("ball scale must be positive and finite, got {0}")]
    InvalidScale(f64),
    #[error("point is not inside the given ball")]
    NotContained,
    #[error("construction search failed after {tried} scale splits")]
    SearchFailed { tried: usize },
    #[error("not applicable at this scale: {0}")]
    NotApplicable(String),
    #[error("the two points must be distinct")]
    DistinctPointsRequired,
    #[error("cover precondition violated: point {0:?} lies in no center ball")]
    CoverViolation(Point),
    #[error("lemma hypotheses not satisfied: {0}")]
    HypothesesNotSatisfied(String),
    #[error("this operation needs a finite universe")]
    NonFiniteUniverse,
    #[error("finite universe has {got} points, the topology engine supports at most {max}")]
    TooManyPoints { got: usize, max: usize },
    #[error("certificate verification failed: {0}")]
    CertificateFailed(String),
    #[error("unit value error: {0}")]
    Unit(#[from] UnitError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Norm(#[from] NormError),
    #[error(transparent)]
    Axiom(#[from] AxiomError),
}

/// `O(center, ε, λ)` with `ε ∈ (0,1)` and `λ > 0`.
#[derive(Debug, Clone, Serialize)]
pub struct OpenBall {
    pub center: Point,
    pub epsilon: f64,
    pub lambda: f64,
}

impl OpenBall {
    pub fn new(center: Point, epsilon: f64, lambda: f64) -> Result<Self, TopologyError> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(TopologyError::InvalidRadius(epsilon));
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(TopologyError::InvalidScale(lambda));
        }
        Ok(OpenBall {
            center,
            epsilon,
            lambda,
        })
    }
}

fn degrees_in_ball(t: &DegreesTriple, epsilon: f64) -> bool {
    t.g > 1.0 - epsilon && t.b < epsilon && t.y < epsilon
}

fn degrees_in_closed_ball(t: &DegreesTriple, epsilon: f64) -> bool {
    t.g >= 1.0 - epsilon && t.b <= epsilon && t.y <= epsilon
}

/// Strict membership test: `G > 1−ε`, `B < ε`, `Y < ε`.
pub fn ball_contains(
    space: &NmsSpace,
    ball: &OpenBall,
    point: &Point,
) -> Result<bool, TopologyError> {
    let t = space.evaluate(&ball.center, point, ball.lambda)?;
    Ok(degrees_in_ball(&t, ball.epsilon))
}

// ---------------------------------------------------------------------------
// Sampling helpers for real universes
// ---------------------------------------------------------------------------

/// Deterministic lattice of about `count` points in the box
/// `[center − reach, center + reach]^dim`.
fn lattice_around(center: &[f64], reach: f64, count: usize) -> Vec<Point> {
    let dim = center.len();
    let per_axis = ((count as f64).powf(1.0 / dim as f64).ceil() as usize).max(2);
    let mut points = vec![Vec::new()];
    for &c in center.iter().take(dim) {
        let mut next = Vec::with_capacity(points.len() * per_axis);
        for partial in &points {
            for s in 0..per_axis {
                let mut v = partial.clone();
                let t = s as f64 / (per_axis - 1) as f64;
                v.push(c - reach + 2.0 * reach * t);
                next.push(v);
            }
        }
        points = next;
    }
    points.into_iter().map(Point::Vector).collect()
}

fn ball_sample_points(
    space: &NmsSpace,
    ball: &OpenBall,
    count: usize,
) -> Result<Vec<Point>, TopologyError> {
    match space.universe() {
        u if u.is_finite() => Ok(u.enumerate_points().unwrap()),
        Universe::RealVector { .. } => {
            let Point::Vector(center) = &ball.center else {
                return Err(TopologyError::Space(SpaceError::WrongPointKind(
                    ball.center.clone(),
                )));
            };
            // Membership requires Y = d/λ < ε, so the ball sits inside the
            // box of half-width λ·ε around the center; λ covers it for any
            // construction with Y >= d/λ.
            Ok(lattice_around(center, ball.lambda, count))
        }
        _ => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// Open-set witness
// ---------------------------------------------------------------------------

/// A ball around an interior point, verified to sit inside the outer ball.
#[derive(Debug, Clone, Serialize)]
pub struct InteriorWitness {
    pub inner: OpenBall,
    /// The scale split `λ₀ ∈ (0, λ)` the construction used.
    pub scale_split: f64,
    /// How many sampled (or enumerated) inner points were verified.
    pub verified_points: usize,
    pub exhaustive: bool,
}

/// Build a ball around `b` contained in `ball`, following the residual
/// recipe of the open-set theorem: pick `λ₀ ∈ (0, λ)` keeping the degree
/// bounds, set `ε₀ = G(center, b, λ₀)`, choose `ζ` strictly between the
/// degree gaps and `ε`, solve the norm/conorm residuals, and take the
/// smallest of the resulting radii. The containment claim is then verified
/// on `check_samples` points (exhaustively on finite universes); a candidate
/// that fails verification is discarded and the next scale split is tried.
pub fn interior_ball_witness(
    space: &NmsSpace,
    ball: &OpenBall,
    b: &Point,
    check_samples: usize,
) -> Result<InteriorWitness, TopologyError> {
    if !ball_contains(space, ball, b)? {
        return Err(TopologyError::NotContained);
    }
    let (eps, lambda) = (ball.epsilon, ball.lambda);
    let tn = space.norms().tnorm();
    let tc = space.norms().tconorm();

    const SPLIT_BUDGET: usize = 32;
    for k in 1..=SPLIT_BUDGET {
        // lambda * (1 - 2^-k): starts at the halfway split and approaches
        // lambda, where the strict bounds are known to hold.
        let lambda0 = lambda * (1.0 - 0.5f64.powi(k as i32));
        if !(lambda0 > 0.0 && lambda0 < lambda) {
            continue;
        }
        let t0 = space.evaluate(&ball.center, b, lambda0)?;
        if !degrees_in_ball(&t0, eps) {
            continue;
        }
        let eps0 = t0.g;
        // ζ must exceed every degree gap at λ₀ and stay below ε.
        let floor = (1.0 - eps0).max(t0.b).max(t0.y);
        if floor >= eps {
            continue;
        }
        let zeta = 0.5 * (floor + eps);

        // G side: smallest ε_g with ε₀ ∘ ε_g ≥ 1 − ζ. The residual solver
        // wants interior arguments, so ε₀ = 1 (coincident points) is nudged
        // inside; by monotonicity the solution still works for the larger ε₀.
        let res = crate::norms::RESIDUAL_RESOLUTION;
        let eps0_arg = eps0.clamp(res, 1.0 - res);
        if eps0_arg <= 1.0 - zeta {
            continue;
        }
        let Ok(eps_g) = tnorm_residual(
            space.norms().tnorm(),
            UnitValue::new(eps0_arg)?,
            UnitValue::new(1.0 - zeta)?,
        ) else {
            continue;
        };
        // B and Y sides: largest bound folding below ζ.
        let zeta_u = UnitValue::new(zeta)?;
        let bound_for = |degree: f64| -> Option<f64> {
            if degree <= 0.0 {
                // Folding anything with the conorm identity keeps it; the
                // whole radius range works.
                return Some(1.0 - crate::norms::RESIDUAL_RESOLUTION);
            }
            let d = UnitValue::new(degree.clamp(0.0, 1.0)).ok()?;
            tconorm_residual(space.norms().tconorm(), zeta_u, d)
                .ok()
                .map(UnitValue::get)
        };
        let (Some(eps_b), Some(eps_y)) = (bound_for(t0.b), bound_for(t0.y)) else {
            continue;
        };

        let radius = (1.0 - eps_g.get()).min(eps_b).min(eps_y);
        if !(radius > 0.0 && radius < 1.0) {
            continue;
        }
        let inner = OpenBall::new(b.clone(), radius, lambda - lambda0)?;

        // Verify: every sampled point of the inner ball lies in the outer.
        let candidates = ball_sample_points(space, &inner, check_samples)?;
        let exhaustive = space.universe().is_finite();
        let mut verified = 0usize;
        let mut good = true;
        for c in &candidates {
            if ball_contains(space, &inner, c)? {
                if !ball_contains(space, ball, c)? {
                    good = false;
                    break;
                }
                verified += 1;
            }
        }
        if good {
            // The folds the residuals promise; the sample verification above
            // is the gate.
            debug_assert!(tn.eval_raw(eps0, eps_g.get()) >= 1.0 - zeta - 1e-9);
            debug_assert!(t0.b <= 0.0 || tc.eval_raw(eps_b, t0.b) <= zeta + 1e-9);
            return Ok(InteriorWitness {
                inner,
                scale_split: lambda0,
                verified_points: verified,
                exhaustive,
            });
        }
    }
    Err(TopologyError::SearchFailed {
        tried: SPLIT_BUDGET,
    })
}

// ---------------------------------------------------------------------------
// Hausdorff witness
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct HausdorffWitness {
    pub ball_a: OpenBall,
    pub ball_b: OpenBall,
    /// Points of the verification grid, none of which sat in both balls.
    pub checked: usize,
    pub exhaustive: bool,
}

/// Separate two distinct points by disjoint balls at scale `λ/2`, following
/// the diagonal-residual recipe: with degrees `(G, B, Y)` at `(a, b, λ)` all
/// strictly interior, put `ε = max(G, 1−B, 1−Y)`, pick `ε₀` as the midpoint
/// of `(ε, 1)`, solve the diagonal residuals at `ε₀` and `1−ε₀`, and use the
/// complement of the largest solution as the shared radius. Disjointness is
/// verified exhaustively on finite universes and on a lattice grid of about
/// `grid_samples` points otherwise.
pub fn hausdorff_witness(
    space: &NmsSpace,
    a: &Point,
    b: &Point,
    lambda: f64,
    grid_samples: usize,
) -> Result<HausdorffWitness, TopologyError> {
    if a == b {
        return Err(TopologyError::DistinctPointsRequired);
    }
    let t = space.evaluate(a, b, lambda)?;
    let interior = |x: f64| x > 0.0 && x < 1.0;
    if !(interior(t.g) && interior(t.b) && interior(t.y)) {
        return Err(TopologyError::NotApplicable(format!(
            "the separation recipe needs 0 < G, B, Y < 1 at this scale; got ({}, {}, {})",
            t.g, t.b, t.y
        )));
    }

    let eps = t.g.max(1.0 - t.b).max(1.0 - t.y);
    let eps0 = 0.5 * (eps + 1.0);

    // ε₄ ∘ ε₄ ≥ ε₀ on the norm diagonal.
    let tn = space.norms().tnorm();
    let tc = space.norms().tconorm();
    let lo = crate::norms::RESIDUAL_RESOLUTION;
    let hi = 1.0 - lo;
    let eps4 = {
        let pred = |x: f64| tn.eval_raw(x, x) >= eps0;
        if !pred(hi) {
            return Err(TopologyError::Norm(NormError::NoSolution {
                name: tn.name().to_owned(),
                detail: "no interior diagonal solution".into(),
            }));
        }
        smallest_on(lo, hi, pred)
    };
    // (1−ε₅) • (1−ε₅) ≤ 1−ε₀ on the conorm diagonal; ε₅ = ε₆ by symmetry of
    // the inequality, so one solve covers both.
    let eps5 = {
        let pred = |y: f64| tc.eval_raw(y, y) <= 1.0 - eps0;
        if !pred(lo) {
            return Err(TopologyError::Norm(NormError::NoSolution {
                name: tc.name().to_owned(),
                detail: "no interior diagonal solution".into(),
            }));
        }
        1.0 - largest_on(lo, hi, pred)
    };
    let eps7 = eps4.max(eps5);
    let radius = 1.0 - eps7;
    if !(radius > 0.0 && radius < 1.0) {
        return Err(TopologyError::InvalidRadius(radius));
    }

    let ball_a = OpenBall::new(a.clone(), radius, lambda / 2.0)?;
    let ball_b = OpenBall::new(b.clone(), radius, lambda / 2.0)?;

    // Verification grid spanning both balls.
    let (candidates, exhaustive) = match space.universe() {
        u if u.is_finite() => (u.enumerate_points().unwrap(), true),
        Universe::RealVector { .. } => {
            let (Point::Vector(pa), Point::Vector(pb)) = (a, b) else {
                return Err(TopologyError::Space(SpaceError::WrongPointKind(a.clone())));
            };
            let mid: Vec<f64> = pa.iter().zip(pb).map(|(x, y)| 0.5 * (x + y)).collect();
            let spread = pa
                .iter()
                .zip(pb)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0f64, f64::max);
            (
                lattice_around(&mid, 0.5 * spread + lambda / 2.0, grid_samples),
                false,
            )
        }
        _ => unreachable!(),
    };
    let mut checked = 0usize;
    for c in &candidates {
        if ball_contains(space, &ball_a, c)? && ball_contains(space, &ball_b, c)? {
            return Err(TopologyError::CertificateFailed(format!(
                "point {c:?} lies in both separation balls"
            )));
        }
        checked += 1;
    }

    Ok(HausdorffWitness {
        ball_a,
        ball_b,
        checked,
        exhaustive,
    })
}

fn smallest_on(lo: f64, hi: f64, pred: impl Fn(f64) -> bool) -> f64 {
    if pred(lo) {
        return lo;
    }
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > crate::norms::RESIDUAL_RESOLUTION {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

fn largest_on(lo: f64, hi: f64, pred: impl Fn(f64) -> bool) -> f64 {
    if pred(hi) {
        return hi;
    }
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > crate::norms::RESIDUAL_RESOLUTION {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

// ---------------------------------------------------------------------------
// Neutrosophic boundedness
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, Serialize)]
pub struct NbBound {
    pub lambda: f64,
    pub epsilon: f64,
}

/// Smallest grid pair `(λ, ε)` — scanning scales outward, then radii — such
/// that every pair of subset points satisfies `G > 1−ε`, `B < ε`, `Y < ε`.
/// `None` means no grid pair works.
pub fn is_neutro_bounded(
    space: &NmsSpace,
    subset: &[Point],
    lambda_grid: &ScaleGrid,
    epsilon_grid: &[f64],
) -> Result<Option<NbBound>, TopologyError> {
    for &lambda in lambda_grid.values() {
        for &epsilon in epsilon_grid {
            let mut ok = true;
            'pairs: for (i, a) in subset.iter().enumerate() {
                for b in &subset[i..] {
                    let t = space.evaluate(a, b, lambda)?;
                    if !degrees_in_ball(&t, epsilon) {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
            if ok {
                return Ok(Some(NbBound { lambda, epsilon }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Serialize)]
pub struct NbCertificate {
    pub lambda0: f64,
    pub zeta: f64,
    /// Worst pairwise degrees among the cover centers at scale λ.
    pub rho: f64,
    pub sigma: f64,
    pub phi: f64,
    pub verified_pairs: usize,
}

/// Boundedness certificate extracted from a finite ball cover: with every
/// subset point inside some `O(center, ε, λ)`, fold the worst center-pair
/// degrees `ρ = min G`, `σ = max B`, `φ = max Y` through the norms, take the
/// smallest `ζ` beating all three folds, and verify that `(3λ, ζ)` bounds
/// every subset pair.
pub fn nb_certificate_via_cover(
    space: &NmsSpace,
    subset: &[Point],
    centers: &[Point],
    epsilon: UnitValue,
    lambda: f64,
) -> Result<NbCertificate, TopologyError> {
    if centers.is_empty() {
        return Err(TopologyError::CoverViolation(
            subset.first().cloned().unwrap_or(Point::Natural(0)),
        ));
    }
    let eps = epsilon.get();
    if !(eps > 0.0 && eps < 1.0) {
        return Err(TopologyError::InvalidRadius(eps));
    }
    // Cover precondition.
    for p in subset {
        let mut covered = false;
        for c in centers {
            let t = space.evaluate(c, p, lambda)?;
            if degrees_in_ball(&t, eps) {
                covered = true;
                break;
            }
        }
        if !covered {
            return Err(TopologyError::CoverViolation(p.clone()));
        }
    }

    let (mut rho, mut sigma, mut phi) = (f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for a in centers {
        for b in centers {
            let t = space.evaluate(a, b, lambda)?;
            rho = rho.min(t.g);
            sigma = sigma.max(t.b);
            phi = phi.max(t.y);
        }
    }

    let tn = space.norms().tnorm();
    let tc = space.norms().tconorm();
    let fold_g = tn.eval_raw(tn.eval_raw(1.0 - eps, 1.0 - eps), rho);
    let fold_b = tc.eval_raw(tc.eval_raw(eps, eps), sigma);
    let fold_y = tc.eval_raw(tc.eval_raw(eps, eps), phi);

    // Smallest grid ζ strictly beating all three folds.
    let needed = (1.0 - fold_g).max(fold_b).max(fold_y);
    let step = crate::norms::RESIDUAL_RESOLUTION;
    let mut zeta = ((needed / step).floor() + 1.0) * step;
    while zeta <= needed && zeta < 1.0 {
        zeta += step;
    }
    if !(zeta > needed && zeta < 1.0) {
        return Err(TopologyError::CertificateFailed(format!(
            "no grid ζ in (0,1) beats the folds (needed > {needed})"
        )));
    }

    let lambda0 = 3.0 * lambda;
    let mut verified_pairs = 0usize;
    for (i, a) in subset.iter().enumerate() {
        for b in &subset[i..] {
            let t = space.evaluate(a, b, lambda0)?;
            if !degrees_in_ball(&t, zeta) {
                return Err(TopologyError::CertificateFailed(format!(
                    "pair ({a:?}, {b:?}) escapes the certificate at ({lambda0}, {zeta}): \
                     degrees ({}, {}, {})",
                    t.g, t.b, t.y
                )));
            }
            verified_pairs += 1;
        }
    }

    Ok(NbCertificate {
        lambda0,
        zeta,
        rho,
        sigma,
        phi,
        verified_pairs,
    })
}

// ---------------------------------------------------------------------------
// Closure containment (shrunken-ball lemma)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureRegime {
    ExactFinite,
    SampledReal,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosureCheck {
    pub holds: bool,
    pub regime: ClosureRegime,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Point>,
}

/// Check that the closure of `O(a, ε₂, λ/2)` sits inside `O(a, ε₁, λ)`.
///
/// Hypotheses (verified first, error otherwise): `(1−ε₂) ∘ (1−ε₂) ≥ 1−ε₁`
/// and `ε₂ • ε₂ ≤ ε₁`. On finite universes the closure is computed exactly —
/// the closure of a set adds the points indistinguishable from its members
/// (degree triple `(1,0,0)` at every probe scale), which is what the limit
/// points of the ball topology are on a finite carrier. On real universes
/// the closed-inequality variant of the ball stands in for the closure and
/// the verdict is sample-based.
pub fn closure_containment_check(
    space: &NmsSpace,
    a: &Point,
    eps1: UnitValue,
    eps2: UnitValue,
    lambda: f64,
    samples: usize,
) -> Result<ClosureCheck, TopologyError> {
    let (e1, e2) = (eps1.get(), eps2.get());
    if !(e1 > 0.0 && e1 < 1.0 && e2 > 0.0 && e2 < 1.0) {
        return Err(TopologyError::InvalidRadius(e1.min(e2)));
    }
    let tn = space.norms().tnorm();
    let tc = space.norms().tconorm();
    if tn.eval_raw(1.0 - e2, 1.0 - e2) < 1.0 - e1 {
        return Err(TopologyError::HypothesesNotSatisfied(format!(
            "(1-{e2}) ∘ (1-{e2}) = {} < 1-{e1}",
            tn.eval_raw(1.0 - e2, 1.0 - e2)
        )));
    }
    if tc.eval_raw(e2, e2) > e1 {
        return Err(TopologyError::HypothesesNotSatisfied(format!(
            "{e2} • {e2} = {} > {e1}",
            tc.eval_raw(e2, e2)
        )));
    }

    let inner = OpenBall::new(a.clone(), e2, lambda / 2.0)?;
    let outer = OpenBall::new(a.clone(), e1, lambda)?;

    if space.universe().is_finite() {
        let points = space.universe().enumerate_points().unwrap();
        let mut members = Vec::new();
        for p in &points {
            if ball_contains(space, &inner, p)? {
                members.push(p.clone());
            }
        }
        // Closure: add every point indistinguishable from a member.
        let mut closure = Vec::new();
        for p in &points {
            let mut in_closure = false;
            'members: for m in &members {
                for &probe in &BLOCK_PROBE_SCALES {
                    let t = space.evaluate(p, m, probe)?;
                    if t != DegreesTriple::IDENTITY {
                        continue 'members;
                    }
                }
                in_closure = true;
                break;
            }
            if in_closure {
                closure.push(p.clone());
            }
        }
        let mut witness = None;
        for p in &closure {
            if !ball_contains(space, &outer, p)? {
                witness = Some(p.clone());
                break;
            }
        }
        Ok(ClosureCheck {
            holds: witness.is_none(),
            regime: ClosureRegime::ExactFinite,
            checked: closure.len(),
            witness,
        })
    } else {
        let candidates = ball_sample_points(space, &inner, samples)?;
        let mut checked = 0usize;
        let mut witness = None;
        for p in &candidates {
            let t = space.evaluate(a, p, inner.lambda)?;
            if degrees_in_closed_ball(&t, e2) {
                checked += 1;
                if !ball_contains(space, &outer, p)? {
                    witness = Some(p.clone());
                    break;
                }
            }
        }
        Ok(ClosureCheck {
            holds: witness.is_none(),
            regime: ClosureRegime::SampledReal,
            checked,
            witness,
        })
    }
}

// ---------------------------------------------------------------------------
// Finite topologies
// ---------------------------------------------------------------------------

/// An explicitly enumerated topology on a finite universe, generated by open
/// balls. Point sets are bitmasks over the canonical point order.
#[derive(Debug, Clone)]
pub struct FiniteTopology {
    points: Vec<Point>,
    opens: Vec<u128>,
    base: Vec<(OpenBall, u128)>,
    /// Whether every open set is a union of base balls.
    base_property: bool,
}

impl FiniteTopology {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn opens(&self) -> &[u128] {
        &self.opens
    }

    pub fn base(&self) -> &[(OpenBall, u128)] {
        &self.base
    }

    pub fn base_property(&self) -> bool {
        self.base_property
    }

    pub fn full_mask(&self) -> u128 {
        if self.points.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.points.len()) - 1
        }
    }

    pub fn mask_of(&self, subset: &[Point]) -> Result<u128, TopologyError> {
        let mut mask = 0u128;
        for p in subset {
            let idx = self
                .points
                .iter()
                .position(|q| q == p)
                .ok_or_else(|| TopologyError::Space(SpaceError::WrongPointKind(p.clone())))?;
            mask |= 1u128 << idx;
        }
        Ok(mask)
    }

    pub fn set_of(&self, mask: u128) -> Vec<Point> {
        (0..self.points.len())
            .filter(|i| mask & (1u128 << i) != 0)
            .map(|i| self.points[i].clone())
            .collect()
    }

    pub fn is_open(&self, mask: u128) -> bool {
        self.opens.binary_search(&mask).is_ok()
    }

    /// Largest open set inside `mask`.
    pub fn interior(&self, mask: u128) -> u128 {
        self.opens
            .iter()
            .filter(|&&u| u & !mask == 0)
            .fold(0u128, |acc, &u| acc | u)
    }

    /// Smallest closed set containing `mask`: the complement of the union of
    /// the open sets disjoint from it.
    pub fn closure(&self, mask: u128) -> u128 {
        let full = self.full_mask();
        let avoiding = self
            .opens
            .iter()
            .filter(|&&u| u & mask == 0)
            .fold(0u128, |acc, &u| acc | u);
        full & !avoiding
    }

    pub fn is_dense(&self, mask: u128) -> bool {
        self.closure(mask) == self.full_mask()
    }

    /// Re-closing the open-set family under unions and intersections must be
    /// a fixpoint.
    pub fn is_closure_fixpoint(&self) -> bool {
        let mut family: Vec<u128> = self.opens.clone();
        close_family(&mut family);
        family == self.opens
    }
}

fn close_family(family: &mut Vec<u128>) {
    family.sort_unstable();
    family.dedup();
    loop {
        let mut added = Vec::new();
        for i in 0..family.len() {
            for j in (i + 1)..family.len() {
                for candidate in [family[i] | family[j], family[i] & family[j]] {
                    if family.binary_search(&candidate).is_err()
                        && !added.contains(&candidate)
                    {
                        added.push(candidate);
                    }
                }
            }
        }
        if added.is_empty() {
            break;
        }
        family.extend(added);
        family.sort_unstable();
        family.dedup();
    }
}

/// Enumerate the topology generated by the balls `O(a, ε, λ)` over all
/// centers and grid values: the family of base balls plus the empty and full
/// sets, closed under unions and finite intersections.
pub fn generate_finite_topology(
    space: &NmsSpace,
    epsilon_grid: &[f64],
    lambda_grid: &ScaleGrid,
) -> Result<FiniteTopology, TopologyError> {
    let Some(points) = space.universe().enumerate_points() else {
        return Err(TopologyError::NonFiniteUniverse);
    };
    if points.len() > MAX_TOPOLOGY_POINTS {
        return Err(TopologyError::TooManyPoints {
            got: points.len(),
            max: MAX_TOPOLOGY_POINTS,
        });
    }

    let mut base = Vec::new();
    for center in &points {
        for &eps in epsilon_grid {
            for &lambda in lambda_grid.values() {
                let ball = OpenBall::new(center.clone(), eps, lambda)?;
                let mut mask = 0u128;
                for (i, p) in points.iter().enumerate() {
                    if ball_contains(space, &ball, p)? {
                        mask |= 1u128 << i;
                    }
                }
                base.push((ball, mask));
            }
        }
    }

    let full = if points.len() == 128 {
        u128::MAX
    } else {
        (1u128 << points.len()) - 1
    };
    let mut opens: Vec<u128> = base.iter().map(|(_, m)| *m).collect();
    opens.push(0);
    opens.push(full);
    close_family(&mut opens);

    // Base property: every open is a union of the base balls it contains.
    let base_property = opens.iter().all(|&u| {
        let covered = base
            .iter()
            .filter(|(_, m)| m & !u == 0)
            .fold(0u128, |acc, (_, m)| acc | m);
        covered == u || u == 0 || u == full
    });

    Ok(FiniteTopology {
        points,
        opens,
        base,
        base_property,
    })
}

/// Serializable snapshot of a finite topology: open sets as sorted label
/// arrays.
#[derive(Debug, Clone, Serialize)]
pub struct TopologySummary {
    pub point_count: usize,
    pub open_set_count: usize,
    pub base_ball_count: usize,
    pub is_discrete: bool,
    pub base_property: bool,
    pub closure_fixpoint: bool,
    pub opens: Vec<Vec<Point>>,
}

impl TopologySummary {
    pub fn of(top: &FiniteTopology) -> Self {
        let discrete = top.opens.len() == 1usize << top.points.len().min(127);
        TopologySummary {
            point_count: top.points.len(),
            open_set_count: top.opens.len(),
            base_ball_count: top.base.len(),
            is_discrete: discrete,
            base_property: top.base_property,
            closure_fixpoint: top.is_closure_fixpoint(),
            opens: top.opens.iter().map(|&m| top.set_of(m)).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Nowhere density and the Baire probe
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct NowhereDenseReport {
    /// Lattice verdict: the interior of the closure is empty.
    pub nowhere_dense: bool,
    /// Ball criterion: every nonempty open set contains a base ball whose
    /// closure is disjoint from the subset.
    pub ball_criterion: bool,
    pub agree: bool,
}

/// Decide nowhere-density twice — by the interior-of-closure lattice
/// computation and by the ball criterion — and report whether the two
/// computations agree. Agreement across finite models is the desk-scale
/// check of the equivalence; a discrepancy is a finding, not an error.
pub fn is_nowhere_dense(
    top: &FiniteTopology,
    subset: &[Point],
) -> Result<NowhereDenseReport, TopologyError> {
    let mask = top.mask_of(subset)?;
    let nowhere_dense = top.interior(top.closure(mask)) == 0;

    // Ball closures are reused across the open-set scan.
    let ball_closures: Vec<(u128, u128)> = top
        .base()
        .iter()
        .map(|(_, m)| (*m, top.closure(*m)))
        .collect();
    let mut ball_criterion = true;
    'opens: for &u in top.opens() {
        if u == 0 {
            continue;
        }
        for (ball_mask, cl) in &ball_closures {
            if *ball_mask != 0 && ball_mask & !u == 0 && cl & mask == 0 {
                continue 'opens;
            }
        }
        ball_criterion = false;
        break;
    }

    Ok(NowhereDenseReport {
        nowhere_dense,
        ball_criterion,
        agree: nowhere_dense == ball_criterion,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct BaireReport {
    pub holds: bool,
    pub dense_open_count: usize,
    pub intersection: Vec<Point>,
}

/// Enumerate all dense open sets, intersect them, and check the intersection
/// is dense.
pub fn baire_probe(top: &FiniteTopology) -> BaireReport {
    let mut intersection = top.full_mask();
    let mut dense_open_count = 0usize;
    for &u in top.opens() {
        if top.is_dense(u) {
            dense_open_count += 1;
            intersection &= u;
        }
    }
    BaireReport {
        holds: top.is_dense(intersection),
        dense_open_count,
        intersection: top.set_of(intersection),
    }
}

// ---------------------------------------------------------------------------
// Countable base prefix
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct CountableBaseReport {
    pub balls: Vec<OpenBall>,
    pub radius_clamped: bool,
    /// On finite universes: whether every open of the exact ball topology is
    /// a union of family members. `None` when the universe is not finite.
    pub base_property: Option<bool>,
}

/// The base family `O(a_k, 1/m, 1/m)` over the given dense points and depth.
/// The radius at `m = 1` falls on the boundary of `(0,1)` and is clamped to
/// `1 − 1e−9` (flagged in the report). On finite universes the base property
/// is verified against the exact topology of the space, whose opens are the
/// unions of indistinguishability blocks.
pub fn countable_base_prefix(
    space: &NmsSpace,
    dense_points: &[Point],
    depth: u32,
) -> Result<CountableBaseReport, TopologyError> {
    if depth < 1 {
        return Err(TopologyError::InvalidDepth);
    }
    let mut balls = Vec::new();
    let mut radius_clamped = false;
    for a in dense_points {
        for m in 1..=depth {
            let scale = 1.0 / m as f64;
            let radius = if m == 1 {
                radius_clamped = true;
                1.0 - 1e-9
            } else {
                1.0 / m as f64
            };
            balls.push(OpenBall::new(a.clone(), radius, scale)?);
        }
    }

    let base_property = if let Some(points) = space.universe().enumerate_points() {
        if points.len() > MAX_TOPOLOGY_POINTS {
            None
        } else {
            // Exact topology on a finite carrier: opens are the unions of
            // indistinguishability blocks, since arbitrarily small balls
            // shrink to blocks while every union of blocks is reachable.
            let blocks = indistinguishability_blocks(space, &points)?;
            let mut family_masks = Vec::with_capacity(balls.len());
            for ball in &balls {
                let mut mask = 0u128;
                for (i, p) in points.iter().enumerate() {
                    if ball_contains(space, ball, p)? {
                        mask |= 1u128 << i;
                    }
                }
                family_masks.push(mask);
            }
            // Every block union must be covered by family balls inside it.
            let ok = enumerate_block_unions(&blocks).into_iter().all(|open| {
                let covered = family_masks
                    .iter()
                    .filter(|&&m| m != 0 && m & !open == 0)
                    .fold(0u128, |acc, &m| acc | m);
                covered == open || open == 0
            });
            Some(ok)
        }
    } else {
        None
    };

    Ok(CountableBaseReport {
        balls,
        radius_clamped,
        base_property,
    })
}

/// Partition a finite universe into classes of points whose pairwise degrees
/// are exactly `(1, 0, 0)` at every probe scale.
pub(crate) fn indistinguishability_blocks(
    space: &NmsSpace,
    points: &[Point],
) -> Result<Vec<u128>, TopologyError> {
    let mut assigned = vec![false; points.len()];
    let mut blocks = Vec::new();
    for i in 0..points.len() {
        if assigned[i] {
            continue;
        }
        let mut mask = 1u128 << i;
        assigned[i] = true;
        for j in (i + 1)..points.len() {
            if assigned[j] {
                continue;
            }
            let mut glued = true;
            for &probe in &BLOCK_PROBE_SCALES {
                if space.evaluate(&points[i], &points[j], probe)? != DegreesTriple::IDENTITY {
                    glued = false;
                    break;
                }
            }
            if glued {
                mask |= 1u128 << j;
                assigned[j] = true;
            }
        }
        blocks.push(mask);
    }
    Ok(blocks)
}

fn enumerate_block_unions(blocks: &[u128]) -> Vec<u128> {
    let n = blocks.len().min(20);
    let mut out = Vec::with_capacity(1 << n);
    for bits in 0u32..(1u32 << n) {
        let mut mask = 0u128;
        for (i, b) in blocks.iter().take(n).enumerate() {
            if bits & (1 << i) != 0 {
                mask |= b;
            }
        }
        out.push(mask);
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::NormPair;
    use crate::space::{BaseMetric, DistanceMatrix};
    use approx::assert_abs_diff_eq;

    fn standard_line() -> NmsSpace {
        let u = Universe::real_vector(1, BaseMetric::Euclidean, 0.0, 1.0).unwrap();
        NmsSpace::standard_from_metric(u, NormPair::min_max()).unwrap()
    }

    fn wide_line() -> NmsSpace {
        let u = Universe::real_vector(1, BaseMetric::Euclidean, -2.0, 2.0).unwrap();
        NmsSpace::standard_from_metric(u, NormPair::min_max()).unwrap()
    }

    fn labeled_space(coords: &[(f64, f64)]) -> NmsSpace {
        let labels: Vec<String> = (0..coords.len()).map(|i| format!("p{i}")).collect();
        let vecs: Vec<Vec<f64>> = coords.iter().map(|&(x, y)| vec![x, y]).collect();
        let distances = DistanceMatrix::from_points(&vecs, BaseMetric::Euclidean).unwrap();
        let u = Universe::finite_labeled(labels, distances).unwrap();
        NmsSpace::standard_from_metric(u, NormPair::min_max()).unwrap()
    }

    fn grid(values: &[f64]) -> ScaleGrid {
        ScaleGrid::new(values.to_vec()).unwrap()
    }

    fn unit(x: f64) -> UnitValue {
        UnitValue::new(x).unwrap()
    }

    #[test]
    fn ball_membership_is_strict() {
        let space = wide_line();
        let ball = OpenBall::new(Point::vector1(0.0), 0.3, 1.0).unwrap();
        // O(0, 0.3, 1) on the line is the interval (-0.3, 0.3).
        assert!(ball_contains(&space, &ball, &Point::vector1(0.2)).unwrap());
        assert!(ball_contains(&space, &ball, &Point::vector1(0.0)).unwrap());
        // Y(0, 0.3, 1) = 0.3 is not < 0.3: the boundary is excluded.
        assert!(!ball_contains(&space, &ball, &Point::vector1(0.3)).unwrap());
        assert!(!ball_contains(&space, &ball, &Point::vector1(-0.31)).unwrap());

        assert!(OpenBall::new(Point::vector1(0.0), 1.0, 1.0).is_err());
        assert!(OpenBall::new(Point::vector1(0.0), 0.5, 0.0).is_err());
    }

    #[test]
    fn interior_ball_witness_on_the_line() {
        let space = wide_line();
        let ball = OpenBall::new(Point::vector1(0.0), 0.5, 2.0).unwrap();
        let b = Point::vector1(0.5);
        let w = interior_ball_witness(&space, &ball, &b, 512).unwrap();
        assert!(w.scale_split > 0.0 && w.scale_split < 2.0);
        assert!(w.verified_points > 0);
        // Spot-check containment on fresh points.
        for x in [-0.1f64, 0.3, 0.45, 0.5, 0.55, 0.7] {
            let p = Point::vector1(x);
            if ball_contains(&space, &w.inner, &p).unwrap() {
                assert!(ball_contains(&space, &ball, &p).unwrap(), "x = {x}");
            }
        }

        // Center case: radius and scale shrink but stay valid.
        let w = interior_ball_witness(&space, &ball, &Point::vector1(0.0), 512).unwrap();
        assert!(w.inner.epsilon <= ball.epsilon);
        assert!(w.inner.lambda <= ball.lambda);

        // Points outside are rejected.
        assert!(matches!(
            interior_ball_witness(&space, &ball, &Point::vector1(1.5), 64),
            Err(TopologyError::NotContained)
        ));
    }

    #[test]
    fn interior_ball_witness_exhaustive_on_finite() {
        let space = labeled_space(&[(0.0, 0.0), (0.3, 0.0), (0.0, 0.4), (2.0, 2.0)]);
        let ball = OpenBall::new(Point::Label("p0".into()), 0.6, 2.0).unwrap();
        let b = Point::Label("p1".into());
        assert!(ball_contains(&space, &ball, &b).unwrap());
        let w = interior_ball_witness(&space, &ball, &b, 0).unwrap();
        assert!(w.exhaustive);
        for p in space.universe().enumerate_points().unwrap() {
            if ball_contains(&space, &w.inner, &p).unwrap() {
                assert!(ball_contains(&space, &ball, &p).unwrap());
            }
        }
    }

    #[test]
    fn hausdorff_witness_hand_trace() {
        // Degrees at (0, 1, 2): (2/3, 1/3, 1/2); eps = 2/3; eps0 = 5/6;
        // min-diagonal gives 5/6, max-diagonal gives 1/6, radius 1/6.
        let space = wide_line();
        let w = hausdorff_witness(&space, &Point::vector1(0.0), &Point::vector1(1.0), 2.0, 1000)
            .unwrap();
        assert_abs_diff_eq!(w.ball_a.epsilon, 1.0 / 6.0, epsilon = 1e-7);
        assert_abs_diff_eq!(w.ball_b.epsilon, 1.0 / 6.0, epsilon = 1e-7);
        assert_eq!(w.ball_a.lambda, 1.0);
        assert!(w.checked >= 1000);

        // The balls are the expected intervals.
        assert!(ball_contains(&space, &w.ball_a, &Point::vector1(0.1)).unwrap());
        assert!(!ball_contains(&space, &w.ball_a, &Point::vector1(0.17)).unwrap());
        assert!(ball_contains(&space, &w.ball_b, &Point::vector1(0.9)).unwrap());
    }

    #[test]
    fn hausdorff_witness_preconditions() {
        let space = wide_line();
        let p = Point::vector1(0.0);
        assert!(matches!(
            hausdorff_witness(&space, &p, &p, 2.0, 100),
            Err(TopologyError::DistinctPointsRequired)
        ));
        // At lambda = d the non-nearness hits 1 and the recipe does not apply.
        assert!(matches!(
            hausdorff_witness(&space, &p, &Point::vector1(1.0), 1.0, 100),
            Err(TopologyError::NotApplicable(_))
        ));
    }

    #[test]
    fn neutro_bounded_grid_scan() {
        let space = standard_line();
        let subset: Vec<Point> = [0.0, 0.25, 0.5, 0.75, 1.0]
            .iter()
            .map(|&x| Point::vector1(x))
            .collect();
        // Worst pair distance 1: lambda 1 gives Y = 1 (no epsilon < 1 works);
        // lambda 2 gives (2/3, 1/3, 1/2), first admissible epsilon is 0.6.
        let bound = is_neutro_bounded(
            &space,
            &subset,
            &grid(&[1.0, 2.0]),
            &[0.2, 0.4, 0.6],
        )
        .unwrap()
        .expect("bounded");
        assert_eq!(bound.lambda, 2.0);
        assert_eq!(bound.epsilon, 0.6);

        // Independent oracle: brute scan over the same grids.
        let mut oracle = None;
        'outer: for &l in &[1.0, 2.0] {
            for &e in &[0.2, 0.4, 0.6] {
                let ok = subset.iter().enumerate().all(|(i, a)| {
                    subset[i..].iter().all(|b| {
                        let t = space.evaluate(a, b, l).unwrap();
                        t.g > 1.0 - e && t.b < e && t.y < e
                    })
                });
                if ok {
                    oracle = Some((l, e));
                    break 'outer;
                }
            }
        }
        assert_eq!(oracle, Some((bound.lambda, bound.epsilon)));

        // Singletons qualify at the smallest grid pair.
        let single = is_neutro_bounded(
            &space,
            &[Point::vector1(0.5)],
            &grid(&[1.0, 2.0]),
            &[0.2, 0.4],
        )
        .unwrap()
        .unwrap();
        assert_eq!((single.lambda, single.epsilon), (1.0, 0.2));

        // Naturals: Y = 9 on the worst pair, no epsilon below 1 ever works.
        let nat = NmsSpace::naturals_example(10, NormPair::min_max()).unwrap();
        let subset: Vec<Point> = (1..=10).map(Point::Natural).collect();
        assert!(is_neutro_bounded(
            &nat,
            &subset,
            &grid(&[0.5, 1.0, 10.0, 100.0]),
            &[0.3, 0.6, 0.9, 0.99],
        )
        .unwrap()
        .is_none());
    }

    #[test]
    fn nb_certificate_from_cover() {
        let space = standard_line();
        let subset: Vec<Point> = (0..=10).map(|i| Point::vector1(i as f64 / 10.0)).collect();
        let centers: Vec<Point> = [0.0, 0.5, 1.0].iter().map(|&x| Point::vector1(x)).collect();
        // At scale 2 the worst center pair gives (2/3, 1/3, 1/2); the folds
        // demand zeta just above 0.5 and the certificate verifies at 3*2.
        let cert =
            nb_certificate_via_cover(&space, &subset, &centers, unit(0.4), 2.0).unwrap();
        assert_eq!(cert.lambda0, 6.0);
        assert_abs_diff_eq!(cert.rho, 2.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(cert.phi, 0.5, epsilon = 1e-12);
        assert!(cert.zeta > 0.5 && cert.zeta < 0.5 + 1e-6);
        assert_eq!(cert.verified_pairs, 11 * 12 / 2);

        // At scale 1 the extreme centers sit at Y = 1, the conorm fold is 1,
        // and no zeta below 1 beats it: the fold recipe is vacuous once Y
        // escapes the unit interval.
        assert!(matches!(
            nb_certificate_via_cover(&space, &subset, &centers, unit(0.4), 1.0),
            Err(TopologyError::CertificateFailed(_))
        ));

        // Degenerate cover: a single center containing everything.
        let near: Vec<Point> = [0.0, 0.1, 0.2, 0.3]
            .iter()
            .map(|&x| Point::vector1(x))
            .collect();
        let cert = nb_certificate_via_cover(
            &space,
            &near,
            &[Point::vector1(0.0)],
            unit(0.4),
            1.0,
        )
        .unwrap();
        assert_eq!(cert.rho, 1.0);
        assert_eq!(cert.sigma, 0.0);
        assert_eq!(cert.phi, 0.0);

        // Centers that fail to cover are a precondition error.
        assert!(matches!(
            nb_certificate_via_cover(
                &space,
                &subset,
                &[Point::vector1(0.0)],
                unit(0.1),
                1.0
            ),
            Err(TopologyError::CoverViolation(_))
        ));
    }

    #[test]
    fn closure_containment_on_the_line() {
        let space = wide_line();
        // (min, max): hypotheses reduce to eps2 <= eps1.
        let check = closure_containment_check(
            &space,
            &Point::vector1(0.0),
            unit(0.3),
            unit(0.2),
            2.0,
            2000,
        )
        .unwrap();
        assert!(check.holds);
        assert_eq!(check.regime, ClosureRegime::SampledReal);
        assert!(check.checked > 0);

        assert!(matches!(
            closure_containment_check(
                &space,
                &Point::vector1(0.0),
                unit(0.2),
                unit(0.3),
                2.0,
                100,
            ),
            Err(TopologyError::HypothesesNotSatisfied(_))
        ));
    }

    #[test]
    fn closure_containment_exact_on_finite() {
        let space = labeled_space(&[(0.0, 0.0), (0.1, 0.0), (0.2, 0.1), (0.9, 0.9), (0.5, 0.4)]);
        let check = closure_containment_check(
            &space,
            &Point::Label("p0".into()),
            unit(0.3),
            unit(0.2),
            2.0,
            0,
        )
        .unwrap();
        assert!(check.holds);
        assert_eq!(check.regime, ClosureRegime::ExactFinite);
    }

    #[test]
    fn finite_topology_well_separated_is_discrete() {
        let space = labeled_space(&[(0.0, 0.0), (10.0, 0.0), (0.0, 10.0)]);
        // Radius * scale below the minimal distance resolves singletons.
        let top = generate_finite_topology(&space, &[0.05, 0.5], &grid(&[1.0, 5.0]))
            .unwrap();
        assert_eq!(top.opens().len(), 8);
        assert!(top.base_property());
        assert!(top.is_closure_fixpoint());
        let summary = TopologySummary::of(&top);
        assert!(summary.is_discrete);
    }

    #[test]
    fn finite_topology_huge_scale_is_indiscrete() {
        let space = labeled_space(&[(0.0, 0.0), (0.3, 0.0), (0.0, 0.4)]);
        let top = generate_finite_topology(&space, &[0.5], &grid(&[1e6])).unwrap();
        assert_eq!(top.opens().len(), 2);
        assert!(top.is_closure_fixpoint());
    }

    #[test]
    fn finite_topology_single_point() {
        let space = labeled_space(&[(0.0, 0.0)]);
        let top = generate_finite_topology(&space, &[0.5], &grid(&[1.0])).unwrap();
        assert_eq!(top.opens(), &[0u128, 1u128]);
    }

    #[test]
    fn finite_topology_needs_a_finite_universe() {
        let space = standard_line();
        assert!(matches!(
            generate_finite_topology(&space, &[0.5], &grid(&[1.0])),
            Err(TopologyError::NonFiniteUniverse)
        ));
    }

    #[test]
    fn nowhere_dense_in_discrete_and_indiscrete_topologies() {
        let space = labeled_space(&[(0.0, 0.0), (10.0, 0.0), (0.0, 10.0)]);
        let discrete =
            generate_finite_topology(&space, &[0.05, 0.5], &grid(&[1.0, 5.0])).unwrap();
        // Discrete: only the empty set is nowhere dense.
        let empty: Vec<Point> = vec![];
        let r = is_nowhere_dense(&discrete, &empty).unwrap();
        assert!(r.nowhere_dense && r.ball_criterion && r.agree);
        let r = is_nowhere_dense(&discrete, &[Point::Label("p0".into())]).unwrap();
        assert!(!r.nowhere_dense && !r.ball_criterion && r.agree);

        // Indiscrete {∅, F}: proper subsets have closure F with interior F.
        let indiscrete = generate_finite_topology(&space, &[0.5], &grid(&[1e6])).unwrap();
        let r = is_nowhere_dense(&indiscrete, &[Point::Label("p0".into())]).unwrap();
        assert!(!r.nowhere_dense && r.agree);
        let r = is_nowhere_dense(&indiscrete, &empty).unwrap();
        assert!(r.nowhere_dense && r.agree);
    }

    #[test]
    fn baire_probe_small_models() {
        let space = labeled_space(&[(0.0, 0.0), (10.0, 0.0), (0.0, 10.0)]);
        let discrete =
            generate_finite_topology(&space, &[0.05, 0.5], &grid(&[1.0, 5.0])).unwrap();
        let report = baire_probe(&discrete);
        // Only the full set is dense open in a discrete topology.
        assert!(report.holds);
        assert_eq!(report.dense_open_count, 1);

        let indiscrete = generate_finite_topology(&space, &[0.5], &grid(&[1e6])).unwrap();
        let report = baire_probe(&indiscrete);
        assert!(report.holds);
        assert_eq!(report.dense_open_count, 1);
    }

    #[test]
    fn countable_base_prefix_family() {
        let space = labeled_space(&[(0.0, 0.0), (0.05, 0.0), (0.0, 0.07)]);
        let dense: Vec<Point> = space.universe().enumerate_points().unwrap();
        let report = countable_base_prefix(&space, &dense, 2).unwrap();
        // 3 centers x 2 depths.
        assert_eq!(report.balls.len(), 6);
        assert!(report.radius_clamped);
        assert!(report.balls.iter().all(|b| b.epsilon < 1.0));

        // With enough depth the family resolves singletons and is a base for
        // the exact topology.
        let report = countable_base_prefix(&space, &dense, 8).unwrap();
        assert_eq!(report.base_property, Some(true));

        // Depth 1 alone cannot separate close points.
        let report = countable_base_prefix(&space, &[dense[0].clone()], 1).unwrap();
        assert_eq!(report.balls.len(), 1);
        assert_eq!(report.base_property, Some(false));
    }
}
