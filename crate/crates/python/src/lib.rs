//! Python bindings for `metricsub`.

use metricsub::canon;
use metricsub::certify::{self, CheckStatus};
use metricsub::codec;
use metricsub::construct::{self, GalleryId};
use metricsub::metric;
use metricsub::search::{self, SearchResult};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: metricsub::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Graph", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph(metricsub::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        metricsub::Graph::from_edges(n, &edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        codec::decode_graph6(s).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        metricsub::Graph::path(n).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        metricsub::Graph::cycle(n).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        metricsub::Graph::complete(n).map(PyGraph).map_err(err)
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.0.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.0.check_vertex(v).map_err(err)?;
        Ok(self.0.degree(v))
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn vertex_connectivity(&self) -> usize {
        self.0.vertex_connectivity()
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn to_graph6(&self) -> PyResult<String> {
        codec::encode_graph6(&self.0).map_err(err)
    }

    /// DOT text; connected graphs are colored by metric block.
    fn to_dot(&self) -> String {
        let part = metric::metric_partition(&self.0).ok();
        codec::to_dot(&self.0, part.as_ref())
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, size={})", self.0.order(), self.0.size())
    }
}

#[pyfunction]
fn eccentricities(g: &PyGraph) -> PyResult<Vec<u32>> {
    metric::eccentricity_profile(&g.0).map(|p| p.ecc).map_err(err)
}

/// `(center, annulus, periphery)` vertex lists.
#[pyfunction]
fn metric_partition(g: &PyGraph) -> PyResult<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let p = metric::metric_partition(&g.0).map_err(err)?;
    Ok((p.center.to_vec(), p.annulus.to_vec(), p.periphery.to_vec()))
}

#[pyfunction]
fn metric_subgraphs(g: &PyGraph) -> PyResult<(PyGraph, PyGraph, PyGraph)> {
    let (c, a, p) = metric::metric_subgraphs(&g.0).map_err(err)?;
    Ok((PyGraph(c), PyGraph(a), PyGraph(p)))
}

#[pyfunction]
fn canonical_form(g: &PyGraph) -> String {
    canon::canonical_form(&g.0).to_hex()
}

#[pyfunction]
fn are_isomorphic(g: &PyGraph, h: &PyGraph) -> bool {
    canon::are_isomorphic(&g.0, &h.0)
}

#[pyfunction]
fn automorphism_count(g: &PyGraph) -> u64 {
    canon::automorphism_count(&g.0)
}

/// Full analysis report as a JSON string.
#[pyfunction]
fn analyze(g: &PyGraph) -> PyResult<String> {
    certify::analyze(&g.0).map(|r| r.to_json()).map_err(err)
}

/// `(name, status)` pairs with status `pass`, `fail` or `not_applicable`.
#[pyfunction]
fn verify_bounds(g: &PyGraph) -> PyResult<Vec<(String, String)>> {
    let checks = certify::verify_bounds(&g.0).map_err(err)?;
    Ok(checks
        .into_iter()
        .map(|c| {
            let s = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "fail",
                CheckStatus::NotApplicable => "not_applicable",
            };
            (c.name.to_string(), s.to_string())
        })
        .collect())
}

#[pyfunction]
fn theorem6(n: usize) -> PyResult<PyGraph> {
    construct::build_theorem6(n).map(|(g, _)| PyGraph(g)).map_err(err)
}

#[pyfunction]
fn theorem9(k: usize, n: usize) -> PyResult<PyGraph> {
    construct::build_theorem9(k, n).map(|(g, _)| PyGraph(g)).map_err(err)
}

#[pyfunction]
fn theorem11(h: &PyGraph) -> PyResult<PyGraph> {
    construct::build_theorem11(&h.0).map(|(g, _)| PyGraph(g)).map_err(err)
}

#[pyfunction]
fn circulant(n: usize, k: usize) -> PyResult<PyGraph> {
    construct::circulant_regular(n, k).map(PyGraph).map_err(err)
}

#[pyfunction]
fn gallery(id: &str) -> PyResult<PyGraph> {
    let id: GalleryId = id.parse().map_err(err)?;
    construct::gallery_graph(id).map(PyGraph).map_err(err)
}

fn result_dict<'py>(py: Python<'py>, r: &SearchResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("class_count", r.class_count)?;
    d.set_item("labeled_count", r.labeled_count)?;
    d.set_item("min_size_found", r.min_size_found)?;
    d.set_item("candidates_checked", r.candidates_checked)?;
    d.set_item("elapsed_s", r.elapsed.as_secs_f64())?;
    let g6: Vec<&str> = r.witnesses.iter().map(|w| w.graph6.as_str()).collect();
    d.set_item("graph6", g6)?;
    Ok(d)
}

/// Runs a preset search (`remark1`, `theorem10` or `remark2`) and returns a summary dict.
#[pyfunction]
#[pyo3(signature = (preset, threads = 1, budget = None))]
fn search_preset<'py>(
    py: Python<'py>,
    preset: &str,
    threads: usize,
    budget: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let r = py
        .detach(|| match preset {
            "remark1" => search::skeleton_search(&search::remark1_skeleton(budget.unwrap_or(22)), threads),
            "theorem10" => search::reproduce_theorem10(threads),
            "remark2" => search::remark2_search(threads),
            other => Err(metricsub::Error::Search(format!("unknown preset {other}"))),
        })
        .map_err(err)?;
    result_dict(py, &r)
}

#[pymodule]
fn pymetricsub(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(eccentricities, m)?)?;
    m.add_function(wrap_pyfunction!(metric_partition, m)?)?;
    m.add_function(wrap_pyfunction!(metric_subgraphs, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(automorphism_count, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(theorem6, m)?)?;
    m.add_function(wrap_pyfunction!(theorem9, m)?)?;
    m.add_function(wrap_pyfunction!(theorem11, m)?)?;
    m.add_function(wrap_pyfunction!(circulant, m)?)?;
    m.add_function(wrap_pyfunction!(gallery, m)?)?;
    m.add_function(wrap_pyfunction!(search_preset, m)?)?;
    Ok(())
}
