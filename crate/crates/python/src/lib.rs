//! Python bindings: a `Semigroup` wrapping a Cayley table and a `Graph`
//! wrapping the simple graphs built from it.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use epg::audit::{reconstruct_example_315, run_audit, select_checks};
use epg::enumerate::{
    canonical_form, count_semigroups, enumerate_semigroups, DedupMode, EnumerationConfig,
};
use epg::epgraph::{component_of, GraphKind};
use epg::format::{parse_text, to_text};
use epg::green::{green_relations, is_completely_regular, GreenRelation};
use epg::props::{
    chromatic_number, classify, clique_number, independence_number, is_planar, KuratowskiKind,
};
use epg::semigroup::{self, Generator};
use epg::{CayleyTable, Element, SimpleGraph};

fn py_err(e: epg::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn dedup_mode(name: &str) -> PyResult<DedupMode> {
    name.parse().map_err(PyValueError::new_err)
}

#[pyclass(name = "Semigroup", module = "pyepg", frozen, skip_from_py_object)]
struct PySemigroup {
    inner: CayleyTable,
}

impl PySemigroup {
    fn element(&self, a: Element) -> PyResult<Element> {
        if a < self.inner.order() {
            Ok(a)
        } else {
            Err(PyIndexError::new_err(format!(
                "element {a} outside a semigroup of order {}",
                self.inner.order()
            )))
        }
    }

    fn wrap(inner: epg::Result<CayleyTable>) -> PyResult<Self> {
        inner.map(|inner| PySemigroup { inner }).map_err(py_err)
    }

    fn graph(&self, kind: GraphKind) -> PyGraph {
        PyGraph {
            inner: kind.build(&self.inner),
        }
    }
}

#[pymethods]
impl PySemigroup {
    #[new]
    #[pyo3(signature = (table, labels = None))]
    fn new(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> PyResult<Self> {
        let t = semigroup::validate(&table).map_err(py_err)?;
        Self::wrap(match labels {
            Some(l) => t.with_labels(l),
            None => Ok(t),
        })
    }

    /// Builds from a constructor string such as `monogenic:2,3`.
    #[staticmethod]
    fn generate(spec: &str) -> PyResult<Self> {
        let g: Generator = spec.parse().map_err(py_err)?;
        Self::wrap(g.build())
    }

    #[staticmethod]
    fn monogenic(index: usize, period: usize) -> PyResult<Self> {
        Self::wrap(semigroup::monogenic(index, period))
    }

    #[staticmethod]
    fn cyclic_group(n: usize) -> PyResult<Self> {
        Self::wrap(semigroup::cyclic_group(n))
    }

    #[staticmethod]
    fn elementary_abelian_2(k: usize) -> PyResult<Self> {
        Self::wrap(semigroup::elementary_abelian_2(k))
    }

    #[staticmethod]
    fn left_zero(n: usize) -> PyResult<Self> {
        Self::wrap(semigroup::left_zero(n))
    }

    #[staticmethod]
    fn right_zero(n: usize) -> PyResult<Self> {
        Self::wrap(semigroup::right_zero(n))
    }

    #[staticmethod]
    fn zero_semigroup(n: usize) -> PyResult<Self> {
        Self::wrap(semigroup::zero_semigroup(n))
    }

    #[staticmethod]
    fn shared_kernel_example() -> PyResult<Self> {
        Self::wrap(reconstruct_example_315())
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Self::wrap(parse_text(text))
    }

    fn to_text(&self) -> String {
        to_text(&self.inner)
    }

    fn direct_product(&self, other: &PySemigroup) -> Self {
        PySemigroup {
            inner: semigroup::direct_product(&self.inner, &other.inner),
        }
    }

    fn adjoin_identity(&self) -> Self {
        PySemigroup {
            inner: semigroup::adjoin_identity(&self.inner),
        }
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.rows()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.elements().map(|a| self.inner.label(a)).collect()
    }

    fn mul(&self, a: Element, b: Element) -> PyResult<Element> {
        Ok(self.inner.mul(self.element(a)?, self.element(b)?))
    }

    /// `index`, `period`, `order`, `powers`, `kernel` and `idempotent` of `<a>`.
    fn monogenic_data<'py>(&self, py: Python<'py>, a: Element) -> PyResult<Bound<'py, PyDict>> {
        let d = semigroup::monogenic_data(&self.inner, self.element(a)?).map_err(py_err)?;
        let out = PyDict::new(py);
        out.set_item("index", d.index)?;
        out.set_item("period", d.period)?;
        out.set_item("order", d.order())?;
        out.set_item("powers", d.powers.clone())?;
        out.set_item("kernel", d.kernel.clone())?;
        out.set_item("idempotent", d.idempotent())?;
        Ok(out)
    }

    fn idempotents(&self) -> Vec<Element> {
        semigroup::idempotents(&self.inner)
    }

    fn exponent(&self) -> PyResult<u64> {
        semigroup::exponent(&self.inner).map_err(py_err)
    }

    fn pi_set(&self) -> Vec<usize> {
        semigroup::pi_set(&self.inner).into_iter().collect()
    }

    fn s_f(&self, f: Element) -> PyResult<Vec<Element>> {
        semigroup::s_f(&self.inner, self.element(f)?).map_err(py_err)
    }

    /// `(elements, generators)` per maximal monogenic subsemigroup.
    fn maximal_monogenic(&self) -> Vec<(Vec<Element>, Vec<Element>)> {
        semigroup::maximal_monogenic(&self.inner)
            .into_iter()
            .map(|m| (m.elements, m.generators))
            .collect()
    }

    fn is_monogenic(&self) -> Option<Element> {
        semigroup::is_monogenic(&self.inner)
    }

    fn is_band(&self) -> bool {
        semigroup::is_band(&self.inner)
    }

    fn is_completely_regular(&self) -> bool {
        is_completely_regular(&self.inner)
    }

    /// Classes of one of `L`, `R`, `J`, `H`, `D`.
    fn green_classes(&self, relation: &str) -> PyResult<Vec<Vec<Element>>> {
        let rel = GreenRelation::ALL
            .into_iter()
            .find(|r| format!("{r:?}").eq_ignore_ascii_case(relation))
            .ok_or_else(|| PyValueError::new_err(format!("unknown relation {relation:?}")))?;
        Ok(green_relations(&self.inner).classes(rel))
    }

    fn component_of(&self, x: Element) -> PyResult<Vec<Element>> {
        Ok(component_of(&self.inner, self.element(x)?))
    }

    #[pyo3(signature = (mode = "iso-anti"))]
    fn canonical_form(&self, mode: &str) -> PyResult<Self> {
        Self::wrap(canonical_form(&self.inner, dedup_mode(mode)?))
    }

    fn enhanced_power_graph(&self) -> PyGraph {
        self.graph(GraphKind::EnhancedPower)
    }

    fn power_graph(&self) -> PyGraph {
        self.graph(GraphKind::Power)
    }

    fn cyclic_graph(&self) -> PyGraph {
        self.graph(GraphKind::Cyclic)
    }

    fn commuting_graph(&self) -> PyGraph {
        self.graph(GraphKind::Commuting)
    }

    fn __eq__(&self, other: &PySemigroup) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Semigroup({:?})", self.inner.rows())
    }
}

#[pyclass(name = "Graph", module = "pyepg", frozen, skip_from_py_object)]
struct PyGraph {
    inner: SimpleGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        PyGraph {
            inner: SimpleGraph::from_edges(vertex_count, edges),
        }
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.inner.components()
    }

    fn is_subgraph_of(&self, other: &PyGraph) -> bool {
        self.inner.is_subgraph_of(&other.inner)
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = classify(&self.inner);
        let out = PyDict::new(py);
        out.set_item("components", c.component_count)?;
        out.set_item("connected", c.connected)?;
        out.set_item("complete", c.complete)?;
        out.set_item("null", c.null)?;
        out.set_item("tree", c.tree)?;
        out.set_item("star", c.star)?;
        out.set_item("acyclic", c.acyclic)?;
        out.set_item("bipartite", c.bipartite)?;
        out.set_item("regular_degree", c.regular_degree)?;
        out.set_item("min_degree", c.min_degree)?;
        out.set_item("max_degree", c.max_degree)?;
        out.set_item("odd_cycle", c.odd_cycle_witness)?;
        out.set_item("diameters", c.diameter_per_component)?;
        Ok(out)
    }

    /// `(alpha, witness)`.
    fn independence_number(&self) -> (usize, Vec<usize>) {
        independence_number(&self.inner)
    }

    fn clique_number(&self) -> (usize, Vec<usize>) {
        clique_number(&self.inner)
    }

    fn chromatic_number(&self) -> PyResult<usize> {
        chromatic_number(&self.inner).map_err(py_err)
    }

    /// `(planar, witness)`; the witness is a dict with `kind`,
    /// `branch_vertices`, `parts` and `paths`.
    fn planarity<'py>(&self, py: Python<'py>) -> PyResult<(bool, Option<Bound<'py, PyDict>>)> {
        let result = is_planar(&self.inner);
        let witness = match result.witness {
            None => None,
            Some(w) => {
                let d = PyDict::new(py);
                let kind = match w.kind {
                    KuratowskiKind::K5 => "K5",
                    KuratowskiKind::K33 => "K33",
                };
                d.set_item("kind", kind)?;
                d.set_item("branch_vertices", w.branch_vertices)?;
                d.set_item("parts", w.parts)?;
                d.set_item("paths", w.paths)?;
                Some(d)
            }
        };
        Ok((result.planar, witness))
    }

    fn is_planar(&self) -> bool {
        is_planar(&self.inner).planar
    }

    #[pyo3(signature = (name = "g"))]
    fn to_dot(&self, name: &str) -> String {
        epg::dot::to_dot(&self.inner, name)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

#[pyfunction]
#[pyo3(name = "count_semigroups", signature = (order, dedup = "iso-anti"))]
fn py_count_semigroups(order: usize, dedup: &str) -> PyResult<u64> {
    count_semigroups(&EnumerationConfig::new(order, dedup_mode(dedup)?)).map_err(py_err)
}

#[pyfunction]
#[pyo3(name = "enumerate_semigroups", signature = (order, dedup = "iso-anti"))]
fn py_enumerate_semigroups(order: usize, dedup: &str) -> PyResult<Vec<PySemigroup>> {
    let tables =
        enumerate_semigroups(&EnumerationConfig::new(order, dedup_mode(dedup)?)).map_err(py_err)?;
    Ok(tables
        .into_iter()
        .map(|inner| PySemigroup { inner })
        .collect())
}

/// Runs the checks over the order-`order` classes; returns the text report
/// and the number of counterexamples.
#[pyfunction]
#[pyo3(name = "audit", signature = (order, checks = None))]
fn py_audit(
    py: Python<'_>,
    order: usize,
    checks: Option<Vec<String>>,
) -> PyResult<(String, usize)> {
    let checks = select_checks(&checks.unwrap_or_default()).map_err(py_err)?;
    let corpus = enumerate_semigroups(&EnumerationConfig::new(order, DedupMode::UpToIsoAndAnti))
        .map_err(py_err)?;
    let report = py.detach(|| run_audit(&checks, &corpus));
    Ok((report.to_text(), report.counterexample_count()))
}

#[pymodule]
fn pyepg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySemigroup>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(py_count_semigroups, m)?)?;
    m.add_function(wrap_pyfunction!(py_enumerate_semigroups, m)?)?;
    m.add_function(wrap_pyfunction!(py_audit, m)?)?;
    Ok(())
}
