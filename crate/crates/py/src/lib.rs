//! Python bindings: graphs as a `Graph` class, everything else as functions
//! returning plain dicts and lists.

use ab::forbidden::{family_check as core_family_check, Family};
use ab::graph::{self, Named, VertexSet};
use ab::harness::{self, EnumerationMode, Theorem};
use ab::perfectness;
use ab::solvers::{self, ColoringMode, Invariant};
use abperfect_core as ab;
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde::Serialize;
use serde_json::Value;

fn py_err(e: ab::Error) -> PyErr {
    match e {
        ab::Error::Io(io) => PyOSError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    match v {
        Value::Null => Ok(py.None()),
        Value::Bool(b) => b.into_py_any(py),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_py_any(py),
            None => n.as_f64().unwrap_or(f64::NAN).into_py_any(py),
        },
        Value::String(s) => s.into_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_py_any(py)
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_py_any(py)
        }
    }
}

fn serialize(py: Python<'_>, value: &impl Serialize) -> PyResult<Py<PyAny>> {
    let v = serde_json::to_value(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    to_py(py, &v)
}

fn parse<T: std::str::FromStr<Err = ab::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(py_err)
}

fn vertex_set(vertices: Vec<usize>) -> PyResult<VertexSet> {
    if let Some(&v) = vertices.iter().find(|&&v| v >= graph::MAX_VERTICES) {
        return Err(PyValueError::new_err(format!("vertex {v} out of range")));
    }
    Ok(vertices.into_iter().collect())
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "abperfect", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyGraph(ab::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        ab::Graph::from_edges(n, &edges)
            .map(PyGraph)
            .map_err(py_err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        graph::parse_graph6(text).map(PyGraph).map_err(py_err)
    }

    /// `kN`, `pN`, `cN`, `eN`, `kA,B`, `p3+k2`, `3k2` or `fig2`.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        parse::<Named>(name)?.build().map(PyGraph).map_err(py_err)
    }

    fn to_graph6(&self) -> String {
        graph::to_graph6(&self.0)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.0.order() && v < self.0.order() && self.0.has_edge(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.order() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn join(&self, other: &PyGraph) -> PyResult<Self> {
        self.0.join(&other.0).map(PyGraph).map_err(py_err)
    }

    fn disjoint_union(&self, other: &PyGraph) -> PyResult<Self> {
        self.0.disjoint_union(&other.0).map(PyGraph).map_err(py_err)
    }

    fn induced_subgraph(&self, vertices: Vec<usize>) -> PyResult<Self> {
        self.0
            .induced_subgraph(vertex_set(vertices)?)
            .map(PyGraph)
            .map_err(py_err)
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn connected_components(&self) -> Vec<Vec<usize>> {
        self.0
            .connected_components()
            .into_iter()
            .map(VertexSet::to_vec)
            .collect()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        graph::is_isomorphic(&self.0, &other.0)
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", graph::to_graph6(&self.0))
    }
}

/// One of `omega`, `chi`, `gamma`, `alpha`, `psi`.
#[pyfunction]
fn invariant(g: &PyGraph, name: &str) -> PyResult<usize> {
    parse::<Invariant>(name)?.compute(&g.0).map_err(py_err)
}

#[pyfunction]
fn clique_number(g: &PyGraph) -> usize {
    solvers::clique_number(&g.0)
}

#[pyfunction]
fn chromatic_number(g: &PyGraph) -> PyResult<usize> {
    solvers::chromatic_number(&g.0).map_err(py_err)
}

#[pyfunction]
fn grundy_number(g: &PyGraph) -> PyResult<usize> {
    solvers::grundy_number(&g.0).map_err(py_err)
}

#[pyfunction]
fn achromatic_number(g: &PyGraph) -> PyResult<usize> {
    solvers::achromatic_number(&g.0).map_err(py_err)
}

#[pyfunction]
fn pseudoachromatic_number(g: &PyGraph) -> PyResult<usize> {
    solvers::pseudoachromatic_number(&g.0).map_err(py_err)
}

/// `{"omega": .., "chi": .., "gamma": .., "alpha": .., "psi": ..}`
#[pyfunction]
fn profile(py: Python<'_>, g: &PyGraph) -> PyResult<Py<PyAny>> {
    serialize(py, &solvers::profile(&g.0).map_err(py_err)?)
}

/// A coloring with exactly `k` colors as a list of colors `1..=k`, or `None`.
/// `mode` is `complete`, `proper_complete` or `grundy`.
#[pyfunction]
fn find_coloring(g: &PyGraph, k: usize, mode: &str) -> PyResult<Option<Vec<usize>>> {
    let mode = parse::<ColoringMode>(mode)?;
    Ok(solvers::find_coloring(&g.0, k, mode)
        .map_err(py_err)?
        .map(|c| c.colors().to_vec()))
}

#[pyfunction]
fn is_ab_perfect(py: Python<'_>, g: &PyGraph, a: &str, b: &str) -> PyResult<Py<PyAny>> {
    let verdict = perfectness::is_ab_perfect(&g.0, parse(a)?, parse(b)?).map_err(py_err)?;
    serialize(py, &verdict)
}

#[pyfunction]
fn verify_equivalence(py: Python<'_>, g: &PyGraph) -> PyResult<Py<PyAny>> {
    serialize(py, &perfectness::verify_equivalence(&g.0).map_err(py_err)?)
}

#[pyfunction]
fn recognize_structure(py: Python<'_>, g: &PyGraph) -> PyResult<Py<PyAny>> {
    serialize(py, &perfectness::recognize_structure(&g.0))
}

/// `family` is `omega_psi_quartet`, `p4_only`, `achro_triple` or
/// `odd_holes_and_antiholes`.
#[pyfunction]
fn family_check(py: Python<'_>, g: &PyGraph, family: &str) -> PyResult<Py<PyAny>> {
    serialize(py, &core_family_check(&g.0, parse::<Family>(family)?))
}

#[pyfunction]
fn canonical_form(g: &PyGraph) -> PyResult<Vec<u8>> {
    graph::canonical_form(&g.0)
        .map(|f| f.as_bytes().to_vec())
        .map_err(py_err)
}

/// `mode` is `labeled` or `canonical`.
#[pyfunction]
#[pyo3(signature = (n, mode = "canonical"))]
fn enumerate_graphs(n: usize, mode: &str) -> PyResult<Vec<PyGraph>> {
    Ok(
        harness::enumerate_graphs(n, parse::<EnumerationMode>(mode)?)
            .map_err(py_err)?
            .map(PyGraph)
            .collect(),
    )
}

#[pyfunction]
#[pyo3(signature = (theorem, n_max, jobs = 1))]
fn sweep(py: Python<'_>, theorem: &str, n_max: usize, jobs: usize) -> PyResult<Py<PyAny>> {
    let theorem = parse::<Theorem>(theorem)?;
    let report = py
        .detach(|| harness::sweep_with_jobs(theorem, n_max, jobs.max(1)))
        .map_err(py_err)?;
    serialize(py, &report)
}

#[pyfunction]
fn cycle_alpha_psi(py: Python<'_>, n_max: usize) -> PyResult<Py<PyAny>> {
    serialize(py, &harness::cycle_alpha_psi(n_max).map_err(py_err)?)
}

#[pymodule]
fn abperfect(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(invariant, m)?)?;
    m.add_function(wrap_pyfunction!(clique_number, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(grundy_number, m)?)?;
    m.add_function(wrap_pyfunction!(achromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(pseudoachromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(find_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(is_ab_perfect, m)?)?;
    m.add_function(wrap_pyfunction!(verify_equivalence, m)?)?;
    m.add_function(wrap_pyfunction!(recognize_structure, m)?)?;
    m.add_function(wrap_pyfunction!(family_check, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_alpha_psi, m)?)?;
    Ok(())
}
