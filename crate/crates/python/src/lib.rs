//! Python bindings: kernels, closed forms, the quadrature oracle and the
//! verification records.

use std::path::PathBuf;

use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use extcauchy_core::closed_forms::{self, ExampleId};
use extcauchy_core::special::{self, LerchArgs, LerchOrder};
use extcauchy_core::verify::{self, Outcome};
use extcauchy_core::{Error, Example, IntegralSpec, LogOrder, SweepConfig, VerificationRecord};

create_exception!(
    extcauchy,
    ExtCauchyError,
    PyValueError,
    "Raised for every library error; the message starts with its tag."
);

fn py_err(e: Error) -> PyErr {
    ExtCauchyError::new_err(format!("{}: {e}", e.tag()))
}

/// A log order given as an int, "dlog" or "kneg1".
#[derive(FromPyObject)]
enum Order {
    Int(u32),
    Text(String),
}

impl Order {
    fn into_core(self) -> Result<LogOrder, Error> {
        match self {
            Order::Int(k) => Ok(LogOrder::Power(k)),
            Order::Text(t) => t.parse(),
        }
    }
}

/// Lerch order: a nonpositive int, 1, or any complex s with Re(s) > 0.
fn lerch_order(s: Complex64) -> LerchOrder {
    if s.im == 0.0 && s.re == 1.0 {
        LerchOrder::PosOne
    } else if s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 {
        LerchOrder::NegInt((-s.re) as u32)
    } else {
        LerchOrder::General(s)
    }
}

#[pyclass(name = "IntegralSpec", frozen, from_py_object)]
#[derive(Clone)]
struct PySpec {
    inner: IntegralSpec,
}

#[pymethods]
impl PySpec {
    #[new]
    #[pyo3(signature = (a, m, k, alpha, beta))]
    fn new(a: f64, m: Complex64, k: Order, alpha: u32, beta: u32) -> PyResult<Self> {
        let inner = IntegralSpec::new(a, m, k.into_core().map_err(py_err)?, alpha, beta);
        inner.validate().map_err(py_err)?;
        Ok(PySpec { inner })
    }

    #[getter]
    fn a(&self) -> f64 {
        self.inner.a
    }

    #[getter]
    fn m(&self) -> Complex64 {
        self.inner.m
    }

    #[getter]
    fn k(&self) -> String {
        self.inner.k.to_string()
    }

    #[getter]
    fn alpha(&self) -> u32 {
        self.inner.alpha
    }

    #[getter]
    fn beta(&self) -> u32 {
        self.inner.beta
    }

    /// Closed-form value.
    fn closed_form(&self) -> PyResult<Complex64> {
        verify::closed_form(&self.inner)
            .map(|r| r.value)
            .map_err(py_err)
    }

    /// Quadrature of the integral: (value, error estimate, nodes).
    #[pyo3(signature = (rel_tol = 1e-10))]
    fn integrate(&self, rel_tol: f64) -> PyResult<(Complex64, f64, usize)> {
        let f = extcauchy_core::build_lhs(&self.inner).map_err(py_err)?;
        let r = extcauchy_core::integrate_halfline(&f, rel_tol).map_err(py_err)?;
        Ok((r.value, r.abs_error_estimate, r.nodes))
    }

    fn __repr__(&self) -> String {
        let s = &self.inner;
        format!(
            "IntegralSpec(a={}, m={}, k={}, alpha={}, beta={})",
            s.a, s.m, s.k, s.alpha, s.beta
        )
    }
}

#[pyclass(name = "VerificationRecord", frozen)]
struct PyRecord {
    inner: VerificationRecord,
}

#[pymethods]
impl PyRecord {
    #[getter]
    fn passed(&self) -> bool {
        self.inner.pass
    }

    /// "pass", "fail" or "error".
    #[getter]
    fn outcome(&self) -> &'static str {
        match self.inner.outcome() {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Errored => "error",
        }
    }

    #[getter]
    fn closed_form(&self) -> Option<Complex64> {
        self.inner.closed_form
    }

    #[getter]
    fn oracle(&self) -> Option<Complex64> {
        self.inner.oracle
    }

    #[getter]
    fn abs_diff(&self) -> Option<f64> {
        self.inner.abs_diff
    }

    #[getter]
    fn rel_diff(&self) -> Option<f64> {
        self.inner.rel_diff
    }

    #[getter]
    fn tolerance(&self) -> f64 {
        self.inner.tolerance
    }

    #[getter]
    fn oracle_error_estimate(&self) -> Option<f64> {
        self.inner.oracle_error_estimate
    }

    #[getter]
    fn wall_time_ms(&self) -> f64 {
        self.inner.wall_time_ms
    }

    #[getter]
    fn error(&self) -> Option<String> {
        self.inner.error.clone()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("record serializes")
    }

    fn __repr__(&self) -> String {
        format!("VerificationRecord({})", self.to_json())
    }
}

#[pyfunction]
fn log_gamma(z: Complex64) -> PyResult<Complex64> {
    special::log_gamma(z).map_err(py_err)
}

#[pyfunction]
fn digamma(z: Complex64) -> PyResult<Complex64> {
    special::digamma(z).map_err(py_err)
}

/// ζ(−k, a)
#[pyfunction]
fn hurwitz_zeta_neg_int(k: usize, a: Complex64) -> PyResult<Complex64> {
    special::hurwitz_zeta_neg_int(k, a).map_err(py_err)
}

/// Φ(z, s, a) for s a nonpositive integer, 1, or Re(s) > 0.
#[pyfunction]
fn lerch_phi(z: Complex64, s: Complex64, a: Complex64) -> PyResult<Complex64> {
    special::lerch_phi(&LerchArgs::new(z, lerch_order(s), a)).map_err(py_err)
}

#[pyfunction]
fn check_degenerate(alpha: u32, beta: u32) -> f64 {
    closed_forms::check_degenerate(alpha, beta)
}

#[pyfunction]
#[pyo3(signature = (a, m, k, alpha, beta))]
fn theorem_rhs(a: f64, m: Complex64, k: u32, alpha: u32, beta: u32) -> PyResult<Complex64> {
    let spec = IntegralSpec::new(a, m, LogOrder::Power(k), alpha, beta);
    extcauchy_core::theorem_rhs(&spec)
        .map(|r| r.value)
        .map_err(py_err)
}

#[pyfunction]
fn eq1_rhs(p: Complex64, a: u32, b: u32) -> PyResult<Complex64> {
    extcauchy_core::eq1_rhs(p, a, b).map_err(py_err)
}

/// Builds an example from its id, overriding defaults with keyword arguments.
fn build_example(id: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<Example> {
    let id: ExampleId = id.parse().map_err(py_err)?;
    let mut value = serde_json::to_value(Example::with_defaults(id)).expect("example serializes");
    if let Some(params) = params {
        let fields = value
            .as_object_mut()
            .expect("examples serialize as objects");
        for (key, item) in params.iter() {
            let key: String = key.extract()?;
            if !fields.contains_key(&key) {
                return Err(ExtCauchyError::new_err(format!(
                    "DomainError: {id} has no parameter '{key}'"
                )));
            }
            let json = if let Ok(n) = item.extract::<i64>() {
                serde_json::json!(n)
            } else if let Ok(x) = item.extract::<f64>() {
                serde_json::json!(x)
            } else {
                let z: Complex64 = item.extract()?;
                serde_json::json!([z.re, z.im])
            };
            // complex fields also accept a plain number
            let json = match (&fields[&key], json) {
                (serde_json::Value::Array(_), serde_json::Value::Number(n)) => {
                    serde_json::json!([n.as_f64(), 0.0])
                }
                (_, other) => other,
            };
            fields.insert(key, json);
        }
    }
    serde_json::from_value(value)
        .map_err(|e| ExtCauchyError::new_err(format!("DomainError: bad parameters for {id}: {e}")))
}

/// Closed form of a worked example.
#[pyfunction]
#[pyo3(signature = (id, **params))]
fn example_rhs(id: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<Complex64> {
    let example = build_example(id, params)?;
    extcauchy_core::example_rhs(&example)
        .map(|r| r.value)
        .map_err(py_err)
}

/// Quadrature of a worked example's integral: (value, error estimate, nodes).
#[pyfunction]
#[pyo3(signature = (id, rel_tol = 1e-10, **params))]
fn example_integral(
    id: &str,
    rel_tol: f64,
    params: Option<&Bound<'_, PyDict>>,
) -> PyResult<(Complex64, f64, usize)> {
    let example = build_example(id, params)?;
    let f = extcauchy_core::example_lhs(&example).map_err(py_err)?;
    let r = extcauchy_core::integrate_halfline(&f, rel_tol).map_err(py_err)?;
    Ok((r.value, r.abs_error_estimate, r.nodes))
}

#[pyfunction]
#[pyo3(signature = (spec, tol = 1e-8))]
fn verify_one(py: Python<'_>, spec: PySpec, tol: f64) -> PyRecord {
    let inner = py.detach(|| extcauchy_core::verify_one(&spec.inner, tol));
    PyRecord { inner }
}

#[pyfunction]
#[pyo3(signature = (id, tol = 1e-8, **params))]
fn verify_example(
    py: Python<'_>,
    id: &str,
    tol: f64,
    params: Option<&Bound<'_, PyDict>>,
) -> PyResult<PyRecord> {
    let example = build_example(id, params)?;
    let inner = py.detach(|| extcauchy_core::verify_example(&example, tol));
    Ok(PyRecord { inner })
}

/// Runs a sweep config file; returns (records, {total, passed, failed, errored}).
#[pyfunction]
#[pyo3(signature = (config, out = None))]
fn run_sweep(
    py: Python<'_>,
    config: PathBuf,
    out: Option<PathBuf>,
) -> PyResult<(Vec<PyRecord>, Py<PyDict>)> {
    let mut cfg = SweepConfig::from_path(&config).map_err(py_err)?;
    if let Some(out) = out {
        cfg.output_path = out;
    }
    let outcome = py
        .detach(|| extcauchy_core::run_sweep(&cfg))
        .map_err(py_err)?;
    let s = outcome.summary;
    let summary = PyDict::new(py);
    summary.set_item("total", s.total)?;
    summary.set_item("passed", s.passed)?;
    summary.set_item("failed", s.failed)?;
    summary.set_item("errored", s.errored)?;
    let records = outcome
        .records
        .into_iter()
        .map(|inner| PyRecord { inner })
        .collect();
    Ok((records, summary.unbind()))
}

#[pymodule]
fn extcauchy(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ExtCauchyError", m.py().get_type::<ExtCauchyError>())?;
    m.add_class::<PySpec>()?;
    m.add_class::<PyRecord>()?;
    m.add_function(wrap_pyfunction!(log_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(digamma, m)?)?;
    m.add_function(wrap_pyfunction!(hurwitz_zeta_neg_int, m)?)?;
    m.add_function(wrap_pyfunction!(lerch_phi, m)?)?;
    m.add_function(wrap_pyfunction!(check_degenerate, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(eq1_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(example_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(example_integral, m)?)?;
    m.add_function(wrap_pyfunction!(verify_one, m)?)?;
    m.add_function(wrap_pyfunction!(verify_example, m)?)?;
    m.add_function(wrap_pyfunction!(run_sweep, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lerch_orders_from_numbers() {
        let c = |re: f64, im: f64| Complex64::new(re, im);
        assert_eq!(lerch_order(c(1.0, 0.0)), LerchOrder::PosOne);
        assert_eq!(lerch_order(c(0.0, 0.0)), LerchOrder::NegInt(0));
        assert_eq!(lerch_order(c(-3.0, 0.0)), LerchOrder::NegInt(3));
        assert_eq!(lerch_order(c(-2.5, 0.0)), LerchOrder::General(c(-2.5, 0.0)));
        assert_eq!(lerch_order(c(2.0, 1.0)), LerchOrder::General(c(2.0, 1.0)));
    }

    #[test]
    fn orders_from_text() {
        assert_eq!(
            Order::Text("dlog".into()).into_core().unwrap(),
            LogOrder::LogLog
        );
        assert_eq!(Order::Int(3).into_core().unwrap(), LogOrder::Power(3));
        assert!(Order::Text("x".into()).into_core().is_err());
    }
}
