//! Python bindings for the `localdim` crate.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use localdim::verify::{self, parse_checks};
use localdim::{FamilySpec, VertexSet};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "pylocaldim", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: localdim::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        localdim::Graph::new(n, edges).map(|inner| PyGraph { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        localdim::Graph::from_graph6(text).map(|inner| PyGraph { inner }).map_err(value_error)
    }

    /// Build a named graph such as `"c5"`, `"knm(9,4,3)"` or `"apex(3)"`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(value_error)?;
        spec.build().map(|inner| PyGraph { inner }).map_err(value_error)
    }

    fn to_graph6(&self) -> String {
        self.inner.to_graph6()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.inner.to_graph6())
    }
}

fn dimension(g: &PyGraph, full: bool) -> PyResult<(usize, Vec<usize>)> {
    let r = if full { localdim::metric_dimension(&g.inner) } else { localdim::local_metric_dimension(&g.inner) }
        .map_err(value_error)?;
    Ok((r.value, r.witness.to_vec()))
}

/// `(dim_l, witness)`, the witness being the lexicographically smallest optimum.
#[pyfunction]
fn local_metric_dimension(g: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    dimension(g, false)
}

/// `(dim, witness)` for the ordinary metric dimension.
#[pyfunction]
fn metric_dimension(g: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    dimension(g, true)
}

#[pyfunction]
fn is_local_resolving(g: &PyGraph, w: Vec<usize>) -> PyResult<bool> {
    let set = vertex_set(g, &w)?;
    localdim::is_local_resolving(&g.inner, set).map_err(value_error)
}

fn vertex_set(g: &PyGraph, w: &[usize]) -> PyResult<VertexSet> {
    match w.iter().find(|&&v| v >= g.inner.order()) {
        Some(v) => Err(value_error(format!("vertex {v} out of range for n={}", g.inner.order()))),
        None => Ok(w.iter().copied().collect()),
    }
}

/// `(size, vertices)` of the lexicographically smallest maximum clique.
#[pyfunction]
fn clique_number(g: &PyGraph) -> (usize, Vec<usize>) {
    let c = localdim::clique_number(&g.inner);
    (c.size, c.vertices.to_vec())
}

#[pyfunction]
fn twin_partition(g: &PyGraph) -> Vec<Vec<usize>> {
    localdim::twin_partition(&g.inner).classes.iter().map(|c| c.to_vec()).collect()
}

#[pyfunction]
fn is_gamma_free(g: &PyGraph) -> bool {
    localdim::is_gamma_free(&g.inner)
}

/// Host vertex for each pattern vertex, or `None`.
#[pyfunction]
fn find_induced(host: &PyGraph, pattern: &PyGraph) -> Option<Vec<usize>> {
    localdim::find_induced(&host.inner, &pattern.inner).map(|m| m.mapping)
}

#[pyfunction]
fn canonical_graph6(g: &PyGraph) -> PyResult<String> {
    localdim::canonical_key(&g.inner).map(|k| k.to_string()).map_err(value_error)
}

/// Canonical representatives of the connected graphs on `n` vertices.
#[pyfunction]
fn connected_graphs(n: usize) -> PyResult<Vec<PyGraph>> {
    let graphs = localdim::connected_graphs(n).map_err(value_error)?;
    Ok(graphs.into_iter().map(|inner| PyGraph { inner }).collect())
}

/// Map from check id to `(applicable, holds, details)`.
#[pyfunction]
#[pyo3(signature = (g, checks = ""))]
fn check_graph<'py>(py: Python<'py>, g: &PyGraph, checks: &str) -> PyResult<Bound<'py, PyDict>> {
    let ids = parse_checks(checks).map_err(value_error)?;
    let report = verify::check_graph_with(&g.inner, verify::graph_id(&g.inner), &ids).map_err(value_error)?;
    let out = PyDict::new(py);
    for (id, o) in &report.outcomes {
        out.set_item(id.to_string(), (o.applicable, o.holds, o.details.as_str()))?;
    }
    Ok(out)
}

/// Rows `(l, n, omega, dim_l, bound, violated)` and the first violating `l`.
#[pyfunction]
#[pyo3(signature = (lmax = 4))]
#[allow(clippy::type_complexity)]
fn refute_problem1(lmax: usize) -> PyResult<(Vec<(usize, usize, usize, usize, usize, bool)>, Option<usize>)> {
    let r = verify::check_problem1_refutation(lmax).map_err(value_error)?;
    let rows = r.rows.iter().map(|x| (x.l, x.n, x.omega, x.dim_l, x.bound, x.violated)).collect();
    Ok((rows, r.first_violation))
}

#[pymodule]
fn pylocaldim(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(local_metric_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(metric_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(is_local_resolving, m)?)?;
    m.add_function(wrap_pyfunction!(clique_number, m)?)?;
    m.add_function(wrap_pyfunction!(twin_partition, m)?)?;
    m.add_function(wrap_pyfunction!(is_gamma_free, m)?)?;
    m.add_function(wrap_pyfunction!(find_induced, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_graph6, m)?)?;
    m.add_function(wrap_pyfunction!(connected_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(check_graph, m)?)?;
    m.add_function(wrap_pyfunction!(refute_problem1, m)?)?;
    Ok(())
}
