//! Python bindings: the main types and operations of the toolkit.
//!
//! Reports cross the boundary as canonical JSON strings (the same bytes the
//! CLI emits), simple results as native tuples. Points are accepted in the
//! shape the space's universe expects: labels as `str`, naturals as `int`,
//! vectors as sequences of floats (a bare float works in dimension one).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;

use neutrometric::axioms::{
    check_axioms, find_counterexample, AxiomId, ScaleGrid, SearchStrategy,
};
use neutrometric::norms::{self, NormKernel, NormPair, NormVerifyOptions};
use neutrometric::report::to_canonical_json;
use neutrometric::sequences::{
    converges_to, is_cauchy, PointSequence,
};
use neutrometric::snn::{self, Snn};
use neutrometric::space::{NmsSpace, Point, SpaceDescription, Universe};
use neutrometric::topology::{self, OpenBall};
use neutrometric::UnitValue;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn runtime_err(e: impl std::fmt::Display) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

fn unit(x: f64) -> PyResult<UnitValue> {
    UnitValue::new(x).map_err(value_err)
}

fn scale_grid(values: Vec<f64>) -> PyResult<ScaleGrid> {
    ScaleGrid::new(values).map_err(value_err)
}

fn snn_from(v: [f64; 3]) -> PyResult<Snn> {
    Snn::new(v[0], v[1], v[2]).map_err(value_err)
}

/// List the kernel names `kernel` arguments accept.
#[pyfunction]
fn kernel_names() -> Vec<String> {
    NormKernel::known_names()
        .iter()
        .map(|s| s.to_string())
        .collect()
}

#[pyfunction]
fn apply_tnorm(kernel: &str, s: f64, t: f64) -> PyResult<f64> {
    let k = NormKernel::by_name(kernel).map_err(value_err)?;
    norms::apply_tnorm(&k, unit(s)?, unit(t)?)
        .map(UnitValue::get)
        .map_err(value_err)
}

#[pyfunction]
fn apply_tconorm(kernel: &str, s: f64, t: f64) -> PyResult<f64> {
    let k = NormKernel::by_name(kernel).map_err(value_err)?;
    norms::apply_tconorm(&k, unit(s)?, unit(t)?)
        .map(UnitValue::get)
        .map_err(value_err)
}

/// Run the sampled kernel axiom suite; returns `(passed, report_json)`.
#[pyfunction]
#[pyo3(signature = (kernel, samples=10_000, seed=0, tol=1e-9))]
fn verify_norm_kernel(kernel: &str, samples: u32, seed: u64, tol: f64) -> PyResult<(bool, String)> {
    let k = NormKernel::by_name(kernel).map_err(value_err)?;
    let report = norms::verify_norm_axioms(&k, &NormVerifyOptions::new(samples, seed, tol));
    Ok((report.passed(), to_canonical_json(&report)))
}

/// Smallest `e3` with `e1 ∘ e3 >= e2`.
#[pyfunction]
fn tnorm_residual(kernel: &str, eps1: f64, eps2: f64) -> PyResult<f64> {
    let k = NormKernel::by_name(kernel).map_err(value_err)?;
    norms::tnorm_residual(&k, unit(eps1)?, unit(eps2)?)
        .map(UnitValue::get)
        .map_err(value_err)
}

/// Largest `e4` with `e4 • e2 <= e1`.
#[pyfunction]
fn tconorm_residual(kernel: &str, eps1: f64, eps2: f64) -> PyResult<f64> {
    let k = NormKernel::by_name(kernel).map_err(value_err)?;
    norms::tconorm_residual(&k, unit(eps1)?, unit(eps2)?)
        .map(UnitValue::get)
        .map_err(value_err)
}

/// Diagonal residuals `(e6, e7)` with `e6 ∘ e6 >= e5` and `e7 • e7 <= e5`.
#[pyfunction]
fn diagonal_witness(tnorm: &str, tconorm: &str, eps5: f64) -> PyResult<(f64, f64)> {
    let pair = NormPair::by_names(tnorm, tconorm).map_err(value_err)?;
    norms::diagonal_witness(&pair, unit(eps5)?)
        .map(|(a, b)| (a.get(), b.get()))
        .map_err(value_err)
}

#[pyfunction]
fn snn_add(u: [f64; 3], v: [f64; 3]) -> PyResult<(f64, f64, f64)> {
    let w = snn::snn_add(snn_from(u)?, snn_from(v)?);
    Ok((w.g(), w.b(), w.y()))
}

#[pyfunction]
fn snn_multiply(u: [f64; 3], v: [f64; 3]) -> PyResult<(f64, f64, f64)> {
    let w = snn::snn_multiply(snn_from(u)?, snn_from(v)?);
    Ok((w.g(), w.b(), w.y()))
}

#[pyfunction]
fn snn_scale(alpha: f64, u: [f64; 3]) -> PyResult<(f64, f64, f64)> {
    let w = snn::snn_scale(alpha, snn_from(u)?).map_err(value_err)?;
    Ok((w.g(), w.b(), w.y()))
}

#[pyfunction]
fn snn_power(alpha: f64, u: [f64; 3]) -> PyResult<(f64, f64, f64)> {
    let w = snn::snn_power(alpha, snn_from(u)?).map_err(value_err)?;
    Ok((w.g(), w.b(), w.y()))
}

#[pyfunction]
fn snn_included(u: [f64; 3], v: [f64; 3]) -> PyResult<bool> {
    Ok(snn::snn_included(snn_from(u)?, snn_from(v)?))
}

/// A neutrosophic metric space candidate.
#[pyclass]
struct Space {
    inner: NmsSpace,
}

impl Space {
    fn point_from(&self, value: &Bound<'_, PyAny>) -> PyResult<Point> {
        match self.inner.universe() {
            Universe::FiniteLabeled { .. } => value.extract::<String>().map(Point::Label),
            Universe::Naturals { .. } => value.extract::<u64>().map(Point::Natural),
            Universe::RealVector { dim, .. } => {
                if let Ok(coords) = value.extract::<Vec<f64>>() {
                    return Ok(Point::Vector(coords));
                }
                if *dim == 1 {
                    if let Ok(x) = value.extract::<f64>() {
                        return Ok(Point::vector1(x));
                    }
                }
                Err(PyValueError::new_err(format!(
                    "expected a sequence of {dim} coordinates"
                )))
            }
        }
    }

    fn points_from(&self, values: &Bound<'_, PyAny>) -> PyResult<Vec<Point>> {
        let mut out = Vec::new();
        for item in values.try_iter()? {
            out.push(self.point_from(&item?)?);
        }
        Ok(out)
    }
}

#[pymethods]
impl Space {
    /// Build a space from a JSON description (same schema as the CLI's
    /// `--space` files).
    #[staticmethod]
    fn from_json(description: &str) -> PyResult<Self> {
        let desc = SpaceDescription::from_json(description).map_err(value_err)?;
        Ok(Space {
            inner: desc.build().map_err(value_err)?,
        })
    }

    /// Metric-induced space on the real line segment `[low, high]`.
    #[staticmethod]
    #[pyo3(signature = (tnorm="min", tconorm="max", low=-2.0, high=2.0))]
    fn standard_line(tnorm: &str, tconorm: &str, low: f64, high: f64) -> PyResult<Self> {
        let universe = Universe::real_vector(
            1,
            neutrometric::space::BaseMetric::Euclidean,
            low,
            high,
        )
        .map_err(value_err)?;
        let norms = NormPair::by_names(tnorm, tconorm).map_err(value_err)?;
        Ok(Space {
            inner: NmsSpace::standard_from_metric(universe, norms).map_err(value_err)?,
        })
    }

    /// Ratio-based space on `{1..bound}`.
    #[staticmethod]
    #[pyo3(signature = (bound, tnorm="lukasiewicz", tconorm="probsum"))]
    fn naturals(bound: u64, tnorm: &str, tconorm: &str) -> PyResult<Self> {
        let norms = NormPair::by_names(tnorm, tconorm).map_err(value_err)?;
        Ok(Space {
            inner: NmsSpace::naturals_example(bound, norms).map_err(value_err)?,
        })
    }

    /// Degree triple `(g, b, y)` at `(a, b, lam)`.
    fn evaluate(
        &self,
        a: &Bound<'_, PyAny>,
        b: &Bound<'_, PyAny>,
        lam: f64,
    ) -> PyResult<(f64, f64, f64)> {
        let pa = self.point_from(a)?;
        let pb = self.point_from(b)?;
        let t = self.inner.evaluate(&pa, &pb, lam).map_err(value_err)?;
        Ok((t.g, t.b, t.y))
    }

    /// Run the eighteen-condition checker; returns `(passed, report_json)`.
    #[pyo3(signature = (samples=2_000, seed=0, lambda_grid=vec![0.1, 1.0, 10.0], tol=1e-3))]
    fn check_axioms(
        &self,
        samples: u32,
        seed: u64,
        lambda_grid: Vec<f64>,
        tol: f64,
    ) -> PyResult<(bool, String)> {
        let grid = scale_grid(lambda_grid)?;
        let report = check_axioms(&self.inner, samples.max(1), seed, grid, tol);
        Ok((report.passed(), to_canonical_json(&report)))
    }

    /// Search for a violation of the requested axiom labels; returns the
    /// witness as JSON, or None when the budget runs out empty-handed.
    #[pyo3(signature = (axioms, budget=1_000_000, seed=0, strategy="random"))]
    fn find_counterexample(
        &self,
        axioms: Vec<String>,
        budget: u64,
        seed: u64,
        strategy: &str,
    ) -> PyResult<Option<String>> {
        let axioms = axioms
            .iter()
            .map(|s| AxiomId::parse(s).map_err(value_err))
            .collect::<PyResult<Vec<_>>>()?;
        let strategy = SearchStrategy::parse(strategy)
            .ok_or_else(|| value_err(format!("unknown strategy '{strategy}'")))?;
        let outcome = find_counterexample(&self.inner, &axioms, budget, seed, strategy);
        Ok(outcome.witness.map(|w| to_canonical_json(&w)))
    }

    /// Strict open-ball membership.
    fn ball_contains(
        &self,
        center: &Bound<'_, PyAny>,
        epsilon: f64,
        lam: f64,
        point: &Bound<'_, PyAny>,
    ) -> PyResult<bool> {
        let ball = OpenBall::new(self.point_from(center)?, epsilon, lam).map_err(value_err)?;
        topology::ball_contains(&self.inner, &ball, &self.point_from(point)?)
            .map_err(runtime_err)
    }

    /// Disjoint separation balls around two distinct points; returns the
    /// verified witness as JSON.
    #[pyo3(signature = (a, b, lam, grid_samples=1000))]
    fn hausdorff_witness(
        &self,
        a: &Bound<'_, PyAny>,
        b: &Bound<'_, PyAny>,
        lam: f64,
        grid_samples: usize,
    ) -> PyResult<String> {
        let w = topology::hausdorff_witness(
            &self.inner,
            &self.point_from(a)?,
            &self.point_from(b)?,
            lam,
            grid_samples,
        )
        .map_err(runtime_err)?;
        Ok(to_canonical_json(&w))
    }

    /// Smallest `(lambda, epsilon)` grid pair bounding all subset pairs.
    fn is_neutro_bounded(
        &self,
        subset: &Bound<'_, PyAny>,
        lambda_grid: Vec<f64>,
        epsilon_grid: Vec<f64>,
    ) -> PyResult<Option<(f64, f64)>> {
        let points = self.points_from(subset)?;
        let grid = scale_grid(lambda_grid)?;
        let bound = topology::is_neutro_bounded(&self.inner, &points, &grid, &epsilon_grid)
            .map_err(runtime_err)?;
        Ok(bound.map(|b| (b.lambda, b.epsilon)))
    }

    /// Convergence probe for a named sequence spec; returns
    /// `(converges, report_json)`.
    #[pyo3(signature = (sequence, limit, epsilon=0.1, lambda_grid=vec![0.1, 1.0, 10.0], n_max=10_000))]
    fn converges_to(
        &self,
        sequence: &str,
        limit: &Bound<'_, PyAny>,
        epsilon: f64,
        lambda_grid: Vec<f64>,
        n_max: usize,
    ) -> PyResult<(bool, String)> {
        let seq = PointSequence::parse(sequence).map_err(value_err)?;
        let grid = scale_grid(lambda_grid)?;
        let report = converges_to(
            &self.inner,
            &seq,
            &self.point_from(limit)?,
            unit(epsilon)?,
            &grid,
            n_max,
        )
        .map_err(runtime_err)?;
        Ok((report.converges, to_canonical_json(&report)))
    }

    /// Cauchy probe for a named sequence spec; returns `(cauchy, report_json)`.
    #[pyo3(signature = (sequence, epsilon=0.1, lambda_grid=vec![0.1, 1.0, 10.0], n_max=10_000))]
    fn is_cauchy(
        &self,
        sequence: &str,
        epsilon: f64,
        lambda_grid: Vec<f64>,
        n_max: usize,
    ) -> PyResult<(bool, String)> {
        let seq = PointSequence::parse(sequence).map_err(value_err)?;
        let grid = scale_grid(lambda_grid)?;
        let report = is_cauchy(&self.inner, &seq, unit(epsilon)?, &grid, n_max)
            .map_err(runtime_err)?;
        Ok((report.cauchy, to_canonical_json(&report)))
    }

    fn __repr__(&self) -> String {
        format!(
            "Space(construction={}, tnorm={}, tconorm={})",
            self.inner.construction().name(),
            self.inner.norms().tnorm().name(),
            self.inner.norms().tconorm().name()
        )
    }
}

#[pymodule]
fn neutrometric_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Space>()?;
    m.add_function(wrap_pyfunction!(kernel_names, m)?)?;
    m.add_function(wrap_pyfunction!(apply_tnorm, m)?)?;
    m.add_function(wrap_pyfunction!(apply_tconorm, m)?)?;
    m.add_function(wrap_pyfunction!(verify_norm_kernel, m)?)?;
    m.add_function(wrap_pyfunction!(tnorm_residual, m)?)?;
    m.add_function(wrap_pyfunction!(tconorm_residual, m)?)?;
    m.add_function(wrap_pyfunction!(diagonal_witness, m)?)?;
    m.add_function(wrap_pyfunction!(snn_add, m)?)?;
    m.add_function(wrap_pyfunction!(snn_multiply, m)?)?;
    m.add_function(wrap_pyfunction!(snn_scale, m)?)?;
    m.add_function(wrap_pyfunction!(snn_power, m)?)?;
    m.add_function(wrap_pyfunction!(snn_included, m)?)?;
    Ok(())
}
