//! Python bindings: `import pyramsey`.

use num_complex::Complex64;
use pauli_ramsey::ramsey::{self, SearchMode};
use pauli_ramsey::{
    f2, stabilizer, DenseMatrix, Oracle, PauliChannel, PauliOperator, StabilizerGroup,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde_json::Value;

fn err(e: pauli_ramsey::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rows(m: &DenseMatrix) -> Vec<Vec<Complex64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect()
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_bound_py_any(py)?,
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_bound_py_any(py)?,
            None => n.as_f64().unwrap_or(f64::NAN).into_bound_py_any(py)?,
        },
        Value::String(s) => s.into_bound_py_any(py)?,
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

/// A phased Pauli operator `i^k X(a) Z(b)`.
#[pyclass(
    name = "Pauli",
    module = "pyramsey",
    frozen,
    skip_from_py_object,
    eq,
    hash
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPauli(PauliOperator);

#[pymethods]
impl PyPauli {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyPauli).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn phase(&self) -> u8 {
        self.0.phase()
    }

    /// `(x_bits, z_bits)` with qubit j at bit j.
    fn check_vector(&self) -> (u64, u64) {
        (self.0.x_bits(), self.0.z_bits())
    }

    fn adjoint(&self) -> Self {
        PyPauli(self.0.adjoint())
    }

    fn commutes(&self, other: &PyPauli) -> PyResult<bool> {
        self.0.commutes(&other.0).map_err(err)
    }

    fn is_hermitian(&self) -> bool {
        self.0.is_hermitian()
    }

    fn tensor(&self, other: &PyPauli) -> PyResult<Self> {
        self.0.tensor(&other.0).map(PyPauli).map_err(err)
    }

    fn to_dense(&self) -> PyResult<Vec<Vec<Complex64>>> {
        Ok(rows(&self.0.to_dense().map_err(err)?))
    }

    fn __mul__(&self, other: &PyPauli) -> PyResult<Self> {
        self.0.multiply(&other.0).map(PyPauli).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Pauli('{}')", self.0)
    }
}

#[pyclass(
    name = "StabilizerGroup",
    module = "pyramsey",
    frozen,
    skip_from_py_object,
    eq,
    hash
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyStabilizer(StabilizerGroup);

#[pymethods]
impl PyStabilizer {
    /// `generators` is a comma-separated string such as `"ZZI,IZZ"`.
    #[new]
    fn new(n: usize, generators: &str) -> PyResult<Self> {
        StabilizerGroup::parse(n, generators)
            .map(PyStabilizer)
            .map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    fn generators(&self) -> Vec<PyPauli> {
        self.0.generators().iter().copied().map(PyPauli).collect()
    }

    fn projector(&self) -> PyResult<Vec<Vec<Complex64>>> {
        Ok(rows(&self.0.projector().map_err(err)?))
    }

    fn extend_to_maximal(&self) -> Vec<PyPauli> {
        stabilizer::extend_to_maximal(&self.0)
            .into_iter()
            .map(PyPauli)
            .collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        let gens: Vec<String> = self.0.generators().iter().map(|g| g.to_string()).collect();
        format!("StabilizerGroup({}, '{}')", self.0.n(), gens.join(","))
    }
}

#[pyclass(
    name = "PauliChannel",
    module = "pyramsey",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyChannel(PauliChannel);

#[pymethods]
impl PyChannel {
    /// Uniform weights when `weights` is omitted.
    #[new]
    #[pyo3(signature = (n, operators, weights = None))]
    fn new(n: usize, operators: Vec<String>, weights: Option<Vec<f64>>) -> PyResult<Self> {
        let ops = operators
            .iter()
            .map(|s| s.parse::<PauliOperator>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let channel = match weights {
            None => PauliChannel::uniform(n, &ops),
            Some(w) if w.len() == ops.len() => {
                PauliChannel::new(n, ops.into_iter().zip(w).collect())
            }
            Some(w) => {
                return Err(PyValueError::new_err(format!(
                    "{} operators but {} weights",
                    ops.len(),
                    w.len()
                )))
            }
        };
        channel.map(PyChannel).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        PauliChannel::from_json(text).map(PyChannel).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn noise(&self) -> Vec<(PyPauli, f64)> {
        self.0
            .noise()
            .iter()
            .map(|&(g, w)| (PyPauli(g), w))
            .collect()
    }

    /// Check vectors `r(E_i) + r(E_j)` in `(x|z)` notation.
    fn difference_set(&self) -> Vec<String> {
        self.0
            .difference_set()
            .iter()
            .map(|v| v.to_string())
            .collect()
    }

    fn graph_dimension(&self) -> usize {
        self.0.graph_dimension()
    }

    fn __repr__(&self) -> String {
        format!("PauliChannel.from_json('{}')", self.0.to_json())
    }
}

#[pyfunction]
fn compressed_dimension(phi: &PyChannel, r: &PyStabilizer) -> PyResult<usize> {
    ramsey::compressed_dimension(&phi.0, &r.0).map_err(err)
}

#[pyfunction]
fn is_clique(phi: &PyChannel, r: &PyStabilizer) -> PyResult<bool> {
    ramsey::is_clique(&phi.0, &r.0).map_err(err)
}

#[pyfunction]
fn is_anticlique(phi: &PyChannel, r: &PyStabilizer) -> PyResult<bool> {
    ramsey::is_anticlique(&phi.0, &r.0).map_err(err)
}

#[pyfunction]
fn gottesman_correctable(phi: &PyChannel, r: &PyStabilizer) -> PyResult<bool> {
    ramsey::gottesman_correctable(&phi.0, &r.0).map_err(err)
}

#[pyfunction]
fn classify<'py>(py: Python<'py>, phi: &PyChannel) -> PyResult<Bound<'py, PyAny>> {
    let result = ramsey::classify(&phi.0).map_err(err)?;
    to_py(py, &result.to_json())
}

#[pyfunction]
#[pyo3(signature = (phi, mode = "both", ks = None))]
fn search<'py>(
    py: Python<'py>,
    phi: &PyChannel,
    mode: &str,
    ks: Option<Vec<usize>>,
) -> PyResult<Bound<'py, PyAny>> {
    let mode: SearchMode = mode.parse().map_err(err)?;
    let ks = ks.unwrap_or_else(|| (1..=phi.0.n()).collect());
    let report = ramsey::search(&phi.0, mode, &ks).map_err(err)?;
    to_py(py, &report.to_json())
}

#[pyfunction]
#[pyo3(signature = (s, weights = None))]
fn maximal_stabilizer_channel(s: &PyStabilizer, weights: Option<Vec<f64>>) -> PyResult<PyChannel> {
    pauli_ramsey::maximal_stabilizer_channel(&s.0, weights.as_deref())
        .map(PyChannel)
        .map_err(err)
}

/// Canonical bases of all `d`-dimensional isotropic subspaces, each as a
/// list of `(x|z)` strings.
#[pyfunction]
fn enumerate_isotropic(n: usize, d: usize) -> PyResult<Vec<Vec<String>>> {
    Ok(f2::enumerate_isotropic(n, d)
        .map_err(err)?
        .iter()
        .map(|b| b.vectors().iter().map(|v| v.to_string()).collect())
        .collect())
}

#[pyfunction]
fn dense_compressed_dimension(phi: &PyChannel, r: &PyStabilizer) -> PyResult<(usize, Vec<f64>)> {
    let res = Oracle::default()
        .compressed_dimension(&phi.0, &r.0)
        .map_err(err)?;
    Ok((res.rank, res.singular_values))
}

#[pyfunction]
fn kl_check(phi: &PyChannel, r: &PyStabilizer) -> PyResult<bool> {
    Oracle::default().kl_check(&phi.0, &r.0).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (phi, r, samples = 100, seed = 0))]
fn private_witness_check(
    phi: &PyChannel,
    r: &PyStabilizer,
    samples: usize,
    seed: u64,
) -> PyResult<bool> {
    Oracle::default()
        .private_witness_check(&phi.0, &r.0, samples, seed)
        .map_err(err)
}

#[pymodule]
fn pyramsey(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPauli>()?;
    m.add_class::<PyStabilizer>()?;
    m.add_class::<PyChannel>()?;
    m.add_function(wrap_pyfunction!(compressed_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(is_clique, m)?)?;
    m.add_function(wrap_pyfunction!(is_anticlique, m)?)?;
    m.add_function(wrap_pyfunction!(gottesman_correctable, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_stabilizer_channel, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_isotropic, m)?)?;
    m.add_function(wrap_pyfunction!(dense_compressed_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(kl_check, m)?)?;
    m.add_function(wrap_pyfunction!(private_witness_check, m)?)?;
    Ok(())
}
