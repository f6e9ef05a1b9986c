//! Continuous triangular norms and conorms.
//!
//! A triangular norm `∘` is a commutative, associative, monotone binary
//! operation on `[0,1]` with identity 1; a conorm `•` is the dual with
//! identity 0. The built-in kernels are `min`, `product` and `lukasiewicz`
//! (norms) plus `max` and `probsum` (conorms). `mean` is a deliberately
//! broken candidate (arithmetic mean fails associativity) kept around as a
//! verification demo.
//!
//! Because continuity and the universally quantified axioms cannot be decided
//! exactly, [`verify_norm_axioms`] samples tuples from a seeded generator and
//! records concrete witnesses for every failed check. The residual solvers
//! ([`tnorm_residual`], [`tconorm_residual`], [`diagonal_witness`]) answer the
//! existence questions a valid norm pair always satisfies: given
//! `ε₁ > ε₂` there is `ε₃` with `ε₁ ∘ ε₃ ≥ ε₂` and `ε₄` with `ε₄ • ε₂ ≤ ε₁`,
//! and for any `ε₅ ∈ (0,1)` there are diagonal solutions `ε₆ ∘ ε₆ ≥ ε₅`,
//! `ε₇ • ε₇ ≤ ε₅`. They bisect on the relevant argument, which works for any
//! monotone kernel, registered or built in.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sampling::stream_rng;
use crate::unit::UnitValue;

/// Grid resolution for the residual bisection searches.
pub const RESIDUAL_RESOLUTION: f64 = 1e-9;

/// Finite-difference step used by the continuity probe.
pub const CONTINUITY_STEP: f64 = 1e-4;

/// Default Lipschitz slope bound for the continuity probe. All built-in
/// kernels are 1-Lipschitz in each argument.
pub const DEFAULT_SLOPE_BOUND: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    Tnorm,
    Tconorm,
}

impl NormKind {
    pub fn label(self) -> &'static str {
        match self {
            NormKind::Tnorm => "tnorm",
            NormKind::Tconorm => "tconorm",
        }
    }

    /// Identity element: 1 for norms, 0 for conorms.
    pub fn identity(self) -> f64 {
        match self {
            NormKind::Tnorm => 1.0,
            NormKind::Tconorm => 0.0,
        }
    }
}

#[derive(Debug, Error, Clone)]
pub enum NormError {
    #[error("kernel '{name}' has kind {got}, expected {expected}")]
    KindMismatch {
        name: String,
        expected: &'static str,
        got: &'static str,
    },
    #[error("kernel '{name}' returned {value} outside [0,1] at ({s}, {t})")]
    RangeViolation {
        name: String,
        s: f64,
        t: f64,
        value: f64,
    },
    #[error("no residual solution for kernel '{name}': {detail}")]
    NoSolution { name: String, detail: String },
    #[error("invalid residual arguments: {0}")]
    InvalidArguments(String),
    #[error("unknown kernel name '{0}'")]
    UnknownKernel(String),
    #[error("kernel '{0}' has not passed verification; call verified() or assume_valid() first")]
    Unverified(String),
}

#[derive(Clone)]
enum KernelRule {
    Min,
    Product,
    Lukasiewicz,
    Max,
    ProbSum,
    Mean,
    Custom(Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>),
}

/// A named binary operation on the unit interval.
///
/// Kernels are immutable values, cheap to clone, and safe to share across
/// threads. The `trusted` flag records whether the kernel may back a space:
/// built-ins are trusted, registered candidates are not until they either
/// pass [`verify_norm_axioms`] via [`NormKernel::verified`] or are forced
/// through with [`NormKernel::assume_valid`].
#[derive(Clone)]
pub struct NormKernel {
    name: String,
    kind: NormKind,
    rule: KernelRule,
    trusted: bool,
}

impl fmt::Debug for NormKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NormKernel")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("trusted", &self.trusted)
            .finish()
    }
}

impl NormKernel {
    pub fn min() -> Self {
        Self::builtin("min", NormKind::Tnorm, KernelRule::Min)
    }

    pub fn product() -> Self {
        Self::builtin("product", NormKind::Tnorm, KernelRule::Product)
    }

    pub fn lukasiewicz() -> Self {
        Self::builtin("lukasiewicz", NormKind::Tnorm, KernelRule::Lukasiewicz)
    }

    pub fn max() -> Self {
        Self::builtin("max", NormKind::Tconorm, KernelRule::Max)
    }

    pub fn probsum() -> Self {
        Self::builtin("probsum", NormKind::Tconorm, KernelRule::ProbSum)
    }

    /// Arithmetic mean registered as a norm candidate. It is not associative
    /// and has no identity, so verification is expected to fail; useful for
    /// exercising the checker and the untrusted-kernel path.
    pub fn mean_candidate() -> Self {
        NormKernel {
            name: "mean".to_owned(),
            kind: NormKind::Tnorm,
            rule: KernelRule::Mean,
            trusted: false,
        }
    }

    fn builtin(name: &str, kind: NormKind, rule: KernelRule) -> Self {
        NormKernel {
            name: name.to_owned(),
            kind,
            rule,
            trusted: true,
        }
    }

    /// Look up a kernel by its configuration name.
    pub fn by_name(name: &str) -> Result<Self, NormError> {
        match name {
            "min" => Ok(Self::min()),
            "product" => Ok(Self::product()),
            "lukasiewicz" => Ok(Self::lukasiewicz()),
            "max" => Ok(Self::max()),
            "probsum" => Ok(Self::probsum()),
            "mean" => Ok(Self::mean_candidate()),
            other => Err(NormError::UnknownKernel(other.to_owned())),
        }
    }

    /// Names accepted by [`NormKernel::by_name`].
    pub fn known_names() -> &'static [&'static str] {
        &["min", "product", "lukasiewicz", "max", "probsum", "mean"]
    }

    /// Register a custom kernel. It starts untrusted.
    pub fn custom(
        name: impl Into<String>,
        kind: NormKind,
        eval: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        NormKernel {
            name: name.into(),
            kind,
            rule: KernelRule::Custom(Arc::new(eval)),
            trusted: false,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> NormKind {
        self.kind
    }

    pub fn is_trusted(&self) -> bool {
        self.trusted
    }

    /// Force flag: mark the kernel usable without verification.
    pub fn assume_valid(mut self) -> Self {
        self.trusted = true;
        self
    }

    /// Run the sampled axiom suite and promote the kernel to trusted on a
    /// clean report; the failing report is returned otherwise.
    pub fn verified(self, opts: &NormVerifyOptions) -> Result<Self, Box<NormAxiomReport>> {
        let report = verify_norm_axioms(&self, opts);
        if report.passed() {
            Ok(self.assume_valid())
        } else {
            Err(Box::new(report))
        }
    }

    /// Raw evaluation, total on all finite inputs. Callers that need the
    /// `[0,1] × [0,1] → [0,1]` contract enforced should use [`apply_tnorm`]
    /// or [`apply_tconorm`].
    pub fn eval_raw(&self, s: f64, t: f64) -> f64 {
        match &self.rule {
            KernelRule::Min => s.min(t),
            KernelRule::Product => s * t,
            // s - (1 - t) == s + t - 1 with the boundary identity at t = 1
            // bit-exact.
            KernelRule::Lukasiewicz => (s - (1.0 - t)).max(0.0),
            KernelRule::Max => s.max(t),
            KernelRule::ProbSum => {
                let r = s + t - s * t;
                if (0.0..=1.0).contains(&s) && (0.0..=1.0).contains(&t) {
                    // r >= max(s, t) algebraically on the unit square; the
                    // correction strips rounding noise and pins the
                    // identities at 0 and 1 exactly.
                    r.max(s).max(t).min(1.0)
                } else {
                    r
                }
            }
            KernelRule::Mean => 0.5 * (s + t),
            KernelRule::Custom(f) => f(s, t),
        }
    }

    fn apply_checked(&self, s: UnitValue, t: UnitValue) -> Result<UnitValue, NormError> {
        let out = self.eval_raw(s.get(), t.get());
        UnitValue::new(out).map_err(|_| NormError::RangeViolation {
            name: self.name.clone(),
            s: s.get(),
            t: t.get(),
            value: out,
        })
    }
}

/// Apply a triangular norm; errors if the kernel is not a norm or a custom
/// kernel escapes `[0,1]`.
pub fn apply_tnorm(kernel: &NormKernel, s: UnitValue, t: UnitValue) -> Result<UnitValue, NormError> {
    if kernel.kind != NormKind::Tnorm {
        return Err(NormError::KindMismatch {
            name: kernel.name.clone(),
            expected: "tnorm",
            got: kernel.kind.label(),
        });
    }
    kernel.apply_checked(s, t)
}

/// Apply a triangular conorm; errors if the kernel is not a conorm or a
/// custom kernel escapes `[0,1]`.
pub fn apply_tconorm(
    kernel: &NormKernel,
    s: UnitValue,
    t: UnitValue,
) -> Result<UnitValue, NormError> {
    if kernel.kind != NormKind::Tconorm {
        return Err(NormError::KindMismatch {
            name: kernel.name.clone(),
            expected: "tconorm",
            got: kernel.kind.label(),
        });
    }
    kernel.apply_checked(s, t)
}

/// The `(∘, •)` pair carried by a space.
#[derive(Debug, Clone)]
pub struct NormPair {
    tnorm: NormKernel,
    tconorm: NormKernel,
}

impl NormPair {
    pub fn new(tnorm: NormKernel, tconorm: NormKernel) -> Result<Self, NormError> {
        if tnorm.kind() != NormKind::Tnorm {
            return Err(NormError::KindMismatch {
                name: tnorm.name.clone(),
                expected: "tnorm",
                got: tnorm.kind.label(),
            });
        }
        if tconorm.kind() != NormKind::Tconorm {
            return Err(NormError::KindMismatch {
                name: tconorm.name.clone(),
                expected: "tconorm",
                got: tconorm.kind.label(),
            });
        }
        Ok(NormPair { tnorm, tconorm })
    }

    /// `(min, max)`, the pair used by the metric-induced construction.
    pub fn min_max() -> Self {
        NormPair::new(NormKernel::min(), NormKernel::max()).expect("builtin pair")
    }

    /// `(lukasiewicz, probsum)`.
    pub fn lukasiewicz_probsum() -> Self {
        NormPair::new(NormKernel::lukasiewicz(), NormKernel::probsum()).expect("builtin pair")
    }

    pub fn by_names(tnorm: &str, tconorm: &str) -> Result<Self, NormError> {
        NormPair::new(NormKernel::by_name(tnorm)?, NormKernel::by_name(tconorm)?)
    }

    pub fn tnorm(&self) -> &NormKernel {
        &self.tnorm
    }

    pub fn tconorm(&self) -> &NormKernel {
        &self.tconorm
    }

    pub fn is_trusted(&self) -> bool {
        self.tnorm.trusted && self.tconorm.trusted
    }
}

// ---------------------------------------------------------------------------
// Sampled axiom verification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct NormVerifyOptions {
    pub samples: u32,
    pub seed: u64,
    /// Comparison tolerance for the exact axioms (boundary, commutativity,
    /// associativity, monotonicity slack).
    pub tol: f64,
    /// Slope bound for the finite-difference continuity probe.
    pub slope_bound: f64,
}

impl Default for NormVerifyOptions {
    fn default() -> Self {
        NormVerifyOptions {
            samples: 10_000,
            seed: 0,
            tol: 1e-9,
            slope_bound: DEFAULT_SLOPE_BOUND,
        }
    }
}

impl NormVerifyOptions {
    pub fn new(samples: u32, seed: u64, tol: f64) -> Self {
        NormVerifyOptions {
            samples,
            seed,
            tol,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormCheckKind {
    Range,
    Boundary,
    Monotonicity,
    Commutativity,
    Associativity,
    Continuity,
}

impl NormCheckKind {
    pub const ALL: [NormCheckKind; 6] = [
        NormCheckKind::Range,
        NormCheckKind::Boundary,
        NormCheckKind::Monotonicity,
        NormCheckKind::Commutativity,
        NormCheckKind::Associativity,
        NormCheckKind::Continuity,
    ];
}

/// A concrete tuple on which a check failed, with the values both sides of
/// the violated relation evaluated to.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormWitness {
    pub check: NormCheckKind,
    pub inputs: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormCheckEntry {
    pub check: NormCheckKind,
    pub status: crate::report::CheckStatus,
    pub checked: u64,
    pub failures: u64,
    pub witnesses: Vec<NormWitness>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormAxiomReport {
    pub kernel: String,
    pub kind: NormKind,
    pub samples: u32,
    pub seed: u64,
    pub tol: f64,
    pub slope_bound: f64,
    pub continuity_step: f64,
    pub checks: Vec<NormCheckEntry>,
}

impl NormAxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status.passed())
    }

    pub fn entry(&self, check: NormCheckKind) -> &NormCheckEntry {
        self.checks
            .iter()
            .find(|c| c.check == check)
            .expect("all checks present")
    }
}

const MAX_WITNESSES: usize = 8;

struct CheckAccumulator {
    check: NormCheckKind,
    probe_limited: bool,
    checked: u64,
    failures: u64,
    witnesses: Vec<NormWitness>,
}

impl CheckAccumulator {
    fn new(check: NormCheckKind, probe_limited: bool) -> Self {
        CheckAccumulator {
            check,
            probe_limited,
            checked: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    fn record(&mut self, failure: Option<NormWitness>) {
        self.checked += 1;
        if let Some(w) = failure {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }

    fn finish(self) -> NormCheckEntry {
        use crate::report::CheckStatus;
        let status = if self.failures > 0 {
            CheckStatus::Fail
        } else if self.probe_limited {
            CheckStatus::ProbeLimited
        } else {
            CheckStatus::Pass
        };
        NormCheckEntry {
            check: self.check,
            status,
            checked: self.checked,
            failures: self.failures,
            witnesses: self.witnesses,
        }
    }
}

/// Check the norm/conorm axioms on `samples` pseudo-random tuples drawn
/// deterministically from `seed`: range closure, the boundary identity
/// (`s ∘ 1 = s` or `s • 0 = s`), monotonicity in both arguments,
/// commutativity, associativity, and a finite-difference continuity probe.
/// Failures are report content, never errors.
pub fn verify_norm_axioms(kernel: &NormKernel, opts: &NormVerifyOptions) -> NormAxiomReport {
    let samples = opts.samples.max(1);
    let tol = opts.tol.max(0.0);
    let mut rng = stream_rng(opts.seed, 0xA01);

    let mut range = CheckAccumulator::new(NormCheckKind::Range, false);
    let mut boundary = CheckAccumulator::new(NormCheckKind::Boundary, false);
    let mut monotonicity = CheckAccumulator::new(NormCheckKind::Monotonicity, false);
    let mut commutativity = CheckAccumulator::new(NormCheckKind::Commutativity, false);
    let mut associativity = CheckAccumulator::new(NormCheckKind::Associativity, false);
    let mut continuity = CheckAccumulator::new(NormCheckKind::Continuity, true);

    let identity = kernel.kind.identity();
    let boundary_desc = match kernel.kind {
        NormKind::Tnorm => "s ∘ 1 = s",
        NormKind::Tconorm => "s • 0 = s",
    };

    for _ in 0..samples {
        let s: f64 = rng.random_range(0.0..=1.0);
        let t: f64 = rng.random_range(0.0..=1.0);
        let u: f64 = rng.random_range(0.0..=1.0);
        let v: f64 = rng.random_range(0.0..=1.0);

        let st = kernel.eval_raw(s, t);

        range.record(if !(-tol..=1.0 + tol).contains(&st) || !st.is_finite() {
            Some(NormWitness {
                check: NormCheckKind::Range,
                inputs: vec![s, t],
                lhs: st,
                rhs: 1.0,
                detail: format!("eval({s}, {t}) = {st} escapes [0,1]"),
            })
        } else {
            None
        });

        let sb = kernel.eval_raw(s, identity);
        boundary.record(if (sb - s).abs() > tol {
            Some(NormWitness {
                check: NormCheckKind::Boundary,
                inputs: vec![s],
                lhs: sb,
                rhs: s,
                detail: format!("{boundary_desc} violated: eval({s}, {identity}) = {sb}"),
            })
        } else {
            None
        });

        // Monotonicity against the componentwise max of the two sampled pairs.
        let (su, tv) = (s.max(u), t.max(v));
        let big = kernel.eval_raw(su, tv);
        let small = kernel.eval_raw(s.min(u), t.min(v));
        monotonicity.record(if small > big + tol {
            Some(NormWitness {
                check: NormCheckKind::Monotonicity,
                inputs: vec![s.min(u), t.min(v), su, tv],
                lhs: small,
                rhs: big,
                detail: format!(
                    "monotonicity violated: eval({}, {}) = {small} > eval({su}, {tv}) = {big}",
                    s.min(u),
                    t.min(v)
                ),
            })
        } else {
            None
        });

        let ts = kernel.eval_raw(t, s);
        commutativity.record(if (st - ts).abs() > tol {
            Some(NormWitness {
                check: NormCheckKind::Commutativity,
                inputs: vec![s, t],
                lhs: st,
                rhs: ts,
                detail: format!("eval({s}, {t}) = {st} != eval({t}, {s}) = {ts}"),
            })
        } else {
            None
        });

        let left = kernel.eval_raw(st, u);
        let right = kernel.eval_raw(s, kernel.eval_raw(t, u));
        associativity.record(if (left - right).abs() > tol {
            Some(NormWitness {
                check: NormCheckKind::Associativity,
                inputs: vec![s, t, u],
                lhs: left,
                rhs: right,
                detail: format!(
                    "eval(eval({s}, {t}), {u}) = {left} != eval({s}, eval({t}, {u})) = {right}"
                ),
            })
        } else {
            None
        });

        // Finite-difference slope probe in each argument.
        let h = CONTINUITY_STEP;
        let s2 = if s + h <= 1.0 { s + h } else { s - h };
        let t2 = if t + h <= 1.0 { t + h } else { t - h };
        let d_first = (kernel.eval_raw(s2, t) - st).abs();
        let d_second = (kernel.eval_raw(s, t2) - st).abs();
        let bound = opts.slope_bound * h + tol;
        continuity.record(if d_first > bound || d_second > bound {
            Some(NormWitness {
                check: NormCheckKind::Continuity,
                inputs: vec![s, t],
                lhs: d_first.max(d_second),
                rhs: bound,
                detail: format!(
                    "finite-difference jump {} exceeds slope bound {} * {h} near ({s}, {t})",
                    d_first.max(d_second),
                    opts.slope_bound
                ),
            })
        } else {
            None
        });
    }

    NormAxiomReport {
        kernel: kernel.name.clone(),
        kind: kernel.kind,
        samples,
        seed: opts.seed,
        tol,
        slope_bound: opts.slope_bound,
        continuity_step: CONTINUITY_STEP,
        checks: vec![
            range.finish(),
            boundary.finish(),
            monotonicity.finish(),
            commutativity.finish(),
            associativity.finish(),
            continuity.finish(),
        ],
    }
}

// ---------------------------------------------------------------------------
// Residual solvers
// ---------------------------------------------------------------------------

/// Smallest `x` in `[lo, hi]` with `pred(x)` true, assuming `pred` is
/// monotone (false below, true above). `pred(hi)` must hold.
fn bisect_smallest(mut lo: f64, mut hi: f64, pred: impl Fn(f64) -> bool) -> f64 {
    if pred(lo) {
        return lo;
    }
    while hi - lo > RESIDUAL_RESOLUTION {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Largest `x` in `[lo, hi]` with `pred(x)` true, assuming `pred` is
/// monotone (true below, false above). `pred(lo)` must hold.
fn bisect_largest(mut lo: f64, mut hi: f64, pred: impl Fn(f64) -> bool) -> f64 {
    if pred(hi) {
        return hi;
    }
    while hi - lo > RESIDUAL_RESOLUTION {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn require_interior(name: &str, value: UnitValue, label: &str) -> Result<f64, NormError> {
    if !value.is_interior() {
        return Err(NormError::InvalidArguments(format!(
            "{label} must lie strictly inside (0,1) for kernel '{name}', got {}",
            value.get()
        )));
    }
    Ok(value.get())
}

/// Smallest `ε₃` (within the bisection grid) with `ε₁ ∘ ε₃ ≥ ε₂`.
///
/// Requires `0 < ε₂ < ε₁ < 1`. A valid norm always admits a solution since
/// `ε₁ ∘ 1 = ε₁ > ε₂`; failure of even `ε₃ = 1` therefore signals an invalid
/// kernel and is reported as [`NormError::NoSolution`].
pub fn tnorm_residual(
    kernel: &NormKernel,
    eps1: UnitValue,
    eps2: UnitValue,
) -> Result<UnitValue, NormError> {
    if kernel.kind != NormKind::Tnorm {
        return Err(NormError::KindMismatch {
            name: kernel.name.clone(),
            expected: "tnorm",
            got: kernel.kind.label(),
        });
    }
    let e1 = require_interior(&kernel.name, eps1, "eps1")?;
    let e2 = require_interior(&kernel.name, eps2, "eps2")?;
    if e1 <= e2 {
        return Err(NormError::InvalidArguments(format!(
            "need eps1 > eps2, got eps1 = {e1}, eps2 = {e2}"
        )));
    }
    let pred = |x: f64| kernel.eval_raw(e1, x) >= e2;
    if !pred(1.0) {
        return Err(NormError::NoSolution {
            name: kernel.name.clone(),
            detail: format!("eval({e1}, 1) = {} < {e2}; not a valid norm", kernel.eval_raw(e1, 1.0)),
        });
    }
    let x = bisect_smallest(0.0, 1.0, pred);
    UnitValue::new(x).map_err(|_| NormError::NoSolution {
        name: kernel.name.clone(),
        detail: format!("bisection left the unit interval at {x}"),
    })
}

/// Largest `ε₄` (within the bisection grid) with `ε₄ • ε₂ ≤ ε₁`.
///
/// Requires `0 < ε₂ < ε₁ < 1`. A valid conorm always admits a solution since
/// `0 • ε₂ = ε₂ < ε₁`; failure at `ε₄ = 0` signals an invalid kernel.
pub fn tconorm_residual(
    kernel: &NormKernel,
    eps1: UnitValue,
    eps2: UnitValue,
) -> Result<UnitValue, NormError> {
    if kernel.kind != NormKind::Tconorm {
        return Err(NormError::KindMismatch {
            name: kernel.name.clone(),
            expected: "tconorm",
            got: kernel.kind.label(),
        });
    }
    let e1 = require_interior(&kernel.name, eps1, "eps1")?;
    let e2 = require_interior(&kernel.name, eps2, "eps2")?;
    if e1 <= e2 {
        return Err(NormError::InvalidArguments(format!(
            "need eps1 > eps2, got eps1 = {e1}, eps2 = {e2}"
        )));
    }
    let pred = |x: f64| kernel.eval_raw(x, e2) <= e1;
    if !pred(0.0) {
        return Err(NormError::NoSolution {
            name: kernel.name.clone(),
            detail: format!("eval(0, {e2}) = {} > {e1}; not a valid conorm", kernel.eval_raw(0.0, e2)),
        });
    }
    let x = bisect_largest(0.0, 1.0, pred);
    UnitValue::new(x).map_err(|_| NormError::NoSolution {
        name: kernel.name.clone(),
        detail: format!("bisection left the unit interval at {x}"),
    })
}

/// Diagonal residuals for a norm pair: `(ε₆, ε₇)` with `ε₆ ∘ ε₆ ≥ ε₅` and
/// `ε₇ • ε₇ ≤ ε₅`, both searched on the open grid
/// `[resolution, 1 − resolution]` so the returned values are interior. Fails
/// loudly when no interior solution exists, which cannot happen for valid
/// kernels.
pub fn diagonal_witness(
    pair: &NormPair,
    eps5: UnitValue,
) -> Result<(UnitValue, UnitValue), NormError> {
    let e5 = require_interior(pair.tnorm.name(), eps5, "eps5")?;
    let lo = RESIDUAL_RESOLUTION;
    let hi = 1.0 - RESIDUAL_RESOLUTION;

    let tn = &pair.tnorm;
    let diag_tn = |x: f64| tn.eval_raw(x, x) >= e5;
    if !diag_tn(hi) {
        return Err(NormError::NoSolution {
            name: tn.name.clone(),
            detail: format!(
                "no interior diagonal solution: eval({hi}, {hi}) = {} < {e5}",
                tn.eval_raw(hi, hi)
            ),
        });
    }
    let eps6 = bisect_smallest(lo, hi, diag_tn);

    let tc = &pair.tconorm;
    let diag_tc = |x: f64| tc.eval_raw(x, x) <= e5;
    if !diag_tc(lo) {
        return Err(NormError::NoSolution {
            name: tc.name.clone(),
            detail: format!(
                "no interior diagonal solution: eval({lo}, {lo}) = {} > {e5}",
                tc.eval_raw(lo, lo)
            ),
        });
    }
    let eps7 = bisect_largest(lo, hi, diag_tc);

    Ok((
        UnitValue::new(eps6).expect("grid keeps values in [0,1]"),
        UnitValue::new(eps7).expect("grid keeps values in [0,1]"),
    ))
}
