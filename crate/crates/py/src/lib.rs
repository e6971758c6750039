use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use swapset_core::exact::{
    dd_m_exact as exact, has_swap_set as has_swap, DdmStatus, SwapSetAnswer, DEFAULT_NODE_BUDGET,
};
use swapset_core::{grid, params, product, small_alpha, tree, Error};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Construction(_) | Error::BudgetExceeded(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "swapset", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(swapset_core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        swapset_core::Graph::from_edges(n, edges).map(Self).map_err(py_err)
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        Self(swapset_core::Graph::path(n))
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        if n < 3 {
            return Err(PyValueError::new_err(format!(
                "cycles need at least three vertices, got {n}"
            )));
        }
        Ok(Self(swapset_core::Graph::cycle(n)))
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        Self(swapset_core::Graph::complete(n))
    }

    /// `K_{1,k}` with center 0.
    #[staticmethod]
    fn star(k: usize) -> Self {
        Self(swapset_core::Graph::star(k))
    }

    /// `P_cols □ P_rows`.
    #[staticmethod]
    fn grid(cols: usize, rows: usize) -> Self {
        Self(swapset_core::Graph::grid(cols, rows))
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        swapset_core::Graph::from_graph6(text).map(Self).map_err(py_err)
    }

    /// Parses edge-list text: `n m` then `m` lines of `u v`.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        swapset_core::parse_graph(text).map(Self).map_err(py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_tree(&self) -> bool {
        self.0.is_tree()
    }

    fn to_graph6(&self) -> PyResult<String> {
        if self.0.n() > 62 {
            return Err(PyValueError::new_err("graph6 output supports at most 62 vertices"));
        }
        Ok(self.0.to_graph6())
    }

    fn to_edge_list(&self) -> String {
        self.0.to_edge_list()
    }

    fn cartesian_product(&self, other: &PyGraph) -> Self {
        Self(swapset_core::cartesian_product(&self.0, &other.0).graph)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.n(), self.0.edge_count())
    }
}

/// Disjoint dominating sets `d` and `d_prime` with a perfect matching.
#[pyclass(name = "SwapCertificate", module = "swapset", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCertificate(swapset_core::SwapCertificate);

#[pymethods]
impl PyCertificate {
    #[new]
    fn new(n: usize, pairs: Vec<(usize, usize)>) -> Self {
        Self(swapset_core::SwapCertificate::from_pairs(n, pairs))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        swapset_core::SwapCertificate::from_json(text)
            .map(Self)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn d(&self) -> Vec<usize> {
        self.0.d.to_vec()
    }

    #[getter]
    fn d_prime(&self) -> Vec<usize> {
        self.0.d_prime.to_vec()
    }

    #[getter]
    fn matching(&self) -> Vec<(usize, usize)> {
        self.0.matching.pairs.clone()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn verify(&self, g: &PyGraph) -> bool {
        swapset_core::verify_certificate(&g.0, &self.0)
    }

    /// The first violated invariant, or `None` for a valid certificate.
    fn violation(&self, g: &PyGraph) -> Option<String> {
        swapset_core::check_certificate(&g.0, &self.0)
            .err()
            .map(|v| v.to_string())
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "SwapCertificate(d={:?}, d_prime={:?})",
            self.0.d.to_vec(),
            self.0.d_prime.to_vec()
        )
    }
}

/// Outcome of an exact solve: `status` is `"finite"`, `"infinite"` or
/// `"budget_exceeded"`.
#[pyclass(name = "DdmResult", module = "swapset", frozen)]
struct PyDdmResult(swapset_core::DdmResult);

#[pymethods]
impl PyDdmResult {
    #[getter]
    fn status(&self) -> &'static str {
        match self.0.status {
            DdmStatus::Finite => "finite",
            DdmStatus::Infinite => "infinite",
            DdmStatus::BudgetExceeded => "budget_exceeded",
        }
    }

    /// The swap number, or `None` when infinite or undecided.
    #[getter]
    fn value(&self) -> Option<usize> {
        self.0.value()
    }

    #[getter]
    fn certificate(&self) -> Option<PyCertificate> {
        self.0.certificate.clone().map(PyCertificate)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("result serializes")
    }

    fn __repr__(&self) -> String {
        format!("DdmResult({})", self.0.display_value())
    }
}

#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_NODE_BUDGET))]
fn dd_m_exact(g: &PyGraph, budget: u64) -> PyResult<PyDdmResult> {
    exact(&g.0, budget).map(PyDdmResult).map_err(py_err)
}

/// A certificate if one exists, `None` if not. Raises when the budget
/// runs out.
#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_NODE_BUDGET))]
fn has_swap_set(g: &PyGraph, budget: u64) -> PyResult<Option<PyCertificate>> {
    match has_swap(&g.0, budget).map_err(py_err)? {
        SwapSetAnswer::Yes(c) => Ok(Some(PyCertificate(c))),
        SwapSetAnswer::No => Ok(None),
        SwapSetAnswer::BudgetExceeded => Err(py_err(Error::BudgetExceeded(budget))),
    }
}

#[pyfunction]
fn domination_number(g: &PyGraph) -> PyResult<usize> {
    params::domination_number(&g.0).map_err(py_err)
}

#[pyfunction]
fn independence_number(g: &PyGraph) -> PyResult<usize> {
    params::independence_number(&g.0).map_err(py_err)
}

#[pyfunction]
fn is_strong_graph(g: &PyGraph) -> bool {
    params::is_strong_graph(&g.0)
}

#[pyfunction]
fn is_weak_tree(t: &PyGraph) -> PyResult<bool> {
    tree::is_weak_tree(&t.0).map_err(py_err)
}

type Part = (usize, Vec<usize>);

/// Minimum simple star partition of a tree as `(weight, parts)`, each part
/// a `(center, leaves)` pair.
#[pyfunction]
fn s_weight(t: &PyGraph) -> PyResult<(usize, Vec<Part>)> {
    let (w, p) = tree::s_weight(&t.0).map_err(py_err)?;
    Ok((w, p.parts.into_iter().map(|part| (part.center, part.leaves)).collect()))
}

#[pyfunction]
fn dd_m_tree(t: &PyGraph) -> PyResult<PyDdmResult> {
    tree::dd_m_tree(&t.0).map(PyDdmResult).map_err(py_err)
}

fn pair((g, c): (swapset_core::Graph, swapset_core::SwapCertificate)) -> (PyGraph, PyCertificate) {
    (PyGraph(g), PyCertificate(c))
}

#[pyfunction]
fn star_product_swap(p: usize, q: usize) -> PyResult<(PyGraph, PyCertificate)> {
    let (g, c, _) = product::star_product_swap(p, q).map_err(py_err)?;
    Ok(pair((g, c)))
}

#[pyfunction]
fn product_swap_general(g: &PyGraph, h: &PyGraph) -> PyResult<(PyGraph, PyCertificate)> {
    product::product_swap_general(&g.0, &h.0).map(pair).map_err(py_err)
}

#[pyfunction]
fn grid_swap_construct(m: usize, n: usize) -> PyResult<(PyGraph, PyCertificate)> {
    let built = grid::grid_swap_construct(m, n).map_err(py_err)?;
    Ok(pair((built.graph, built.certificate)))
}

#[pyfunction]
fn p3_strip_swap(k: usize) -> PyResult<(PyGraph, PyCertificate)> {
    grid::p3_strip_swap(k).map(pair).map_err(py_err)
}

#[pyfunction]
fn gamma_grid_dp(rows: usize, cols: usize) -> PyResult<usize> {
    grid::gamma_grid_dp(rows, cols).map_err(py_err)
}

#[pyfunction]
fn alpha2_swap(g: &PyGraph) -> PyResult<PyCertificate> {
    small_alpha::alpha2_swap(&g.0).map(PyCertificate).map_err(py_err)
}

#[pyfunction]
fn alpha3_swap(g: &PyGraph) -> PyResult<PyCertificate> {
    small_alpha::alpha3_swap_exists(&g.0)
        .map(|r| PyCertificate(r.certificate))
        .map_err(py_err)
}

/// Connected graphs on `n` vertices, one per isomorphism class.
#[pyfunction]
fn connected_graphs(n: usize) -> PyResult<Vec<PyGraph>> {
    small_alpha::enumerate_connected_graphs(n)
        .map(|gs| gs.into_iter().map(PyGraph).collect())
        .map_err(py_err)
}

#[pymodule]
fn swapset(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyCertificate>()?;
    m.add_class::<PyDdmResult>()?;
    m.add_function(wrap_pyfunction!(dd_m_exact, m)?)?;
    m.add_function(wrap_pyfunction!(has_swap_set, m)?)?;
    m.add_function(wrap_pyfunction!(domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(independence_number, m)?)?;
    m.add_function(wrap_pyfunction!(is_strong_graph, m)?)?;
    m.add_function(wrap_pyfunction!(is_weak_tree, m)?)?;
    m.add_function(wrap_pyfunction!(s_weight, m)?)?;
    m.add_function(wrap_pyfunction!(dd_m_tree, m)?)?;
    m.add_function(wrap_pyfunction!(star_product_swap, m)?)?;
    m.add_function(wrap_pyfunction!(product_swap_general, m)?)?;
    m.add_function(wrap_pyfunction!(grid_swap_construct, m)?)?;
    m.add_function(wrap_pyfunction!(p3_strip_swap, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_grid_dp, m)?)?;
    m.add_function(wrap_pyfunction!(alpha2_swap, m)?)?;
    m.add_function(wrap_pyfunction!(alpha3_swap, m)?)?;
    m.add_function(wrap_pyfunction!(connected_graphs, m)?)?;
    Ok(())
}
