//! Python bindings: groups, fix-lines, singularities, curve counts, lattices and table verification.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use bipoly_k3::config::parse_config;
use bipoly_k3::geometry::orbits_on_ruling;
use bipoly_k3::groups::{GroupLabel, Side};
use bipoly_k3::lattices::{self, DivisorClass, IntegralLattice};
use bipoly_k3::singularities::{self as sing, AdeType, Fiber, NodeOrbitRecord};
use bipoly_k3::tables::{self, Format, Scope};

create_exception!(
    pybipoly,
    BipolyError,
    PyValueError,
    "Raised for invalid input or inconsistent data."
);

fn err(e: impl ToString) -> PyErr {
    BipolyError::new_err(e.to_string())
}

fn label(s: &str) -> PyResult<GroupLabel> {
    s.parse().map_err(err)
}

fn fiber(s: &str) -> PyResult<Fiber> {
    s.parse().map_err(err)
}

/// Built-in node records, with records parsed from `nodes` (config text) taking precedence.
fn node_data(nodes: Option<&str>) -> PyResult<Vec<NodeOrbitRecord>> {
    let overrides = match nodes {
        Some(text) => parse_config(text).map_err(err)?.nodes,
        None => Vec::new(),
    };
    Ok(sing::merge_nodes(&overrides))
}

/// One of the seven groups of the registry.
#[pyclass(module = "pybipoly", frozen)]
struct Group {
    inner: GroupLabel,
}

#[pymethods]
impl Group {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(Group { inner: label(name)? })
    }

    #[getter]
    fn label(&self) -> &'static str {
        self.inner.as_str()
    }

    #[getter]
    fn name(&self) -> &'static str {
        self.inner.display_name()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.group().order()
    }

    #[getter]
    fn projective_order(&self) -> usize {
        self.inner.group().projective().order()
    }

    #[getter]
    fn degree(&self) -> Option<u32> {
        self.inner.parent().map(|_| self.inner.degree())
    }

    #[getter]
    fn parent(&self) -> Option<&'static str> {
        self.inner.parent().map(GroupLabel::as_str)
    }

    /// Index in the parent group, or None for O×O.
    fn index(&self) -> PyResult<Option<usize>> {
        match self.inner.parent() {
            Some(p) => Ok(Some(self.inner.group().index_in(&p.group()).map_err(err)?)),
            None => Ok(None),
        }
    }

    fn is_normal(&self) -> Option<bool> {
        self.inner.parent().map(|p| self.inner.group().is_normal_in(&p.group()))
    }

    /// `{fixing order: [orbit lengths]}` for the lines of one ruling ("left" or "right").
    fn ruling_orbits(&self, side: &str) -> PyResult<BTreeMap<usize, Vec<usize>>> {
        let side = match side {
            "left" => Side::Left,
            "right" => Side::Right,
            other => return Err(err(format!("side must be left or right, got {other:?}"))),
        };
        Ok(orbits_on_ruling(&self.inner.group().projective(), side))
    }

    /// Orbit lengths of base-locus meeting points, per pair of line orbits.
    fn base_point_orbits(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(sing::analyze(self.inner).map_err(err)?.base_point_orbits.clone())
    }

    fn fixline_classes(&self) -> PyResult<Vec<FixLineClass>> {
        let a = sing::analyze(self.inner).map_err(err)?;
        a.classes
            .iter()
            .map(|c| {
                Ok(FixLineClass {
                    label: c.label.clone(),
                    representative: c.representative.clone(),
                    fix_order: c.fix_order(),
                    length: c.class.length(),
                    ratio: c.class.ratio(),
                    points_off_quadric: c.points_off_quadric,
                    orbits: c.orbit_count().map_err(err)?,
                    singularities: c.singularities().map_err(err)?.to_string(),
                })
            })
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("Group('{}')", self.inner.as_str())
    }
}

/// An orbit of fix-lines off the quadric.
#[pyclass(module = "pybipoly", frozen, get_all)]
struct FixLineClass {
    label: String,
    representative: (String, String),
    fix_order: usize,
    length: usize,
    ratio: usize,
    points_off_quadric: usize,
    orbits: usize,
    singularities: String,
}

#[pymethods]
impl FixLineClass {
    fn __repr__(&self) -> String {
        format!(
            "FixLineClass({}, F=Z{}, length={}, ratio={}, sing={})",
            self.label, self.fix_order, self.length, self.ratio, self.singularities
        )
    }
}

/// The seven groups in registry order.
#[pyfunction]
fn groups() -> Vec<Group> {
    GroupLabel::ALL.iter().map(|&inner| Group { inner }).collect()
}

/// `(quadric, off_quadric, nodes)` singularities of the quotient of one member.
#[pyfunction]
#[pyo3(signature = (group, fiber_name, nodes=None))]
fn singularities(group: &str, fiber_name: &str, nodes: Option<&str>) -> PyResult<(String, String, String)> {
    let data = node_data(nodes)?;
    let [q, o, n] = sing::fiber_singularities(label(group)?, fiber(fiber_name)?, &data).map_err(err)?;
    Ok((q.to_string(), o.to_string(), n.to_string()))
}

/// `(ν₁, ν₂, ν₃, ν₄, ν)`; the degree defaults to the pencil of the group.
#[pyfunction]
#[pyo3(signature = (group, fiber_name, degree=None, nodes=None))]
fn nu(
    group: &str,
    fiber_name: &str,
    degree: Option<u32>,
    nodes: Option<&str>,
) -> PyResult<(usize, usize, usize, usize, usize)> {
    let g = label(group)?;
    let data = node_data(nodes)?;
    let n = sing::nu_totals(g, degree.unwrap_or(g.degree()), fiber(fiber_name)?, &data).map_err(err)?;
    Ok(n.as_tuple())
}

/// Singularity type of `C²/F̃` for a fix-group name such as "T", "Z3", "D3", "Z2xZ2".
#[pyfunction]
fn binary_quotient_type(fix_group: &str) -> PyResult<String> {
    Ok(sing::binary_quotient_type(fix_group.parse().map_err(err)?).to_string())
}

/// A lattice given by its Gram matrix, with named basis vectors and named classes.
#[pyclass(module = "pybipoly", frozen)]
struct Lattice {
    inner: IntegralLattice,
    classes: Vec<(String, DivisorClass)>,
}

impl Lattice {
    fn class_vector(&self, class: &Bound<'_, PyAny>) -> PyResult<DivisorClass> {
        if let Ok(name) = class.extract::<String>() {
            return self
                .classes
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, c)| c.clone())
                .ok_or_else(|| err(format!("no class named {name}")));
        }
        Ok(DivisorClass::new(class.extract::<Vec<i64>>()?))
    }
}

#[pymethods]
impl Lattice {
    #[new]
    fn new(gram: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(Lattice {
            inner: IntegralLattice::from_gram(gram).map_err(err)?,
            classes: Vec::new(),
        })
    }

    /// Parses the `curve`/`edge`/`class` text format.
    #[staticmethod]
    fn from_config(text: &str) -> PyResult<Self> {
        let cfg = parse_config(text).map_err(err)?;
        Ok(Lattice {
            inner: cfg.graph.to_lattice(),
            classes: cfg.classes,
        })
    }

    /// Root lattice such as "A2", "D4", "E8"; negative definite.
    #[staticmethod]
    fn ade(name: &str) -> PyResult<Self> {
        let t: AdeType = name.parse().map_err(err)?;
        Ok(Lattice {
            inner: lattices::ade_lattice(t),
            classes: Vec::new(),
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn gram(&self) -> Vec<Vec<i64>> {
        self.inner.gram().to_vec()
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    #[getter]
    fn class_names(&self) -> Vec<String> {
        self.classes.iter().map(|(n, _)| n.clone()).collect()
    }

    fn discriminant(&self) -> PyResult<i128> {
        lattices::discriminant(&self.inner).map_err(err)
    }

    /// Invariant factors of the discriminant group, each greater than 1.
    fn discriminant_group(&self) -> PyResult<Vec<i128>> {
        Ok(lattices::discriminant_group(&self.inner)
            .map_err(err)?
            .invariant_factors)
    }

    /// `class` is a class name or a coefficient list.
    fn is_p_divisible(&self, class: &Bound<'_, PyAny>, p: i64) -> PyResult<bool> {
        lattices::is_p_divisible(&self.inner, &self.class_vector(class)?, p).map_err(err)
    }

    fn nikulin_check(&self, class: &Bound<'_, PyAny>, p: i64) -> PyResult<bool> {
        lattices::nikulin_count_check(&self.inner, &self.class_vector(class)?, p).map_err(err)
    }

    /// The overlattice `L + Z·v/p`.
    fn adjoin(&self, class: &Bound<'_, PyAny>, p: i64) -> PyResult<Lattice> {
        let inner = lattices::adjoin_class(&self.inner, &self.class_vector(class)?, p).map_err(err)?;
        Ok(Lattice {
            inner,
            classes: Vec::new(),
        })
    }

    fn __repr__(&self) -> String {
        format!("Lattice(rank={})", self.inner.rank())
    }
}

/// `d(W) == d(W′)·(Π ps)²`.
#[pyfunction]
fn index_formula_check(d_w: i128, d_w2: i128, ps: Vec<i64>) -> bool {
    lattices::index_formula_check(d_w, d_w2, &ps)
}

#[pyfunction]
fn cover_self_intersection(s: i64, ramified: bool, p: i64) -> PyResult<i64> {
    lattices::cover_self_intersection(s, ramified, p).map_err(err)
}

/// Ids of the verifiable tables.
#[pyfunction]
fn table_ids() -> Vec<&'static str> {
    tables::TABLE_IDS.to_vec()
}

/// `(table, key, expected, computed, passed, note)` per cell.
#[pyfunction]
#[pyo3(signature = (table=None, nodes=None))]
fn verify(
    table: Option<&str>,
    nodes: Option<&str>,
) -> PyResult<Vec<(String, String, String, String, bool, Option<String>)>> {
    let data = node_data(nodes)?;
    let r = tables::run_verification(&Scope::parse(table), &data).map_err(err)?;
    Ok(r.cells
        .iter()
        .map(|c| {
            (
                c.table.to_string(),
                c.key.clone(),
                c.expected.clone(),
                c.computed.clone(),
                c.passed(),
                c.erratum.clone(),
            )
        })
        .collect())
}

/// The verification report as TSV or markdown text.
#[pyfunction]
#[pyo3(signature = (table=None, format="tsv"))]
fn report(table: Option<&str>, format: &str) -> PyResult<String> {
    let format: Format = format.parse().map_err(err)?;
    let r = tables::run_verification(&Scope::parse(table), sing::builtin_nodes()).map_err(err)?;
    Ok(r.table().render(format))
}

#[pymodule]
fn pybipoly(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("BipolyError", m.py().get_type::<BipolyError>())?;
    m.add_class::<Group>()?;
    m.add_class::<FixLineClass>()?;
    m.add_class::<Lattice>()?;
    m.add_function(wrap_pyfunction!(groups, m)?)?;
    m.add_function(wrap_pyfunction!(singularities, m)?)?;
    m.add_function(wrap_pyfunction!(nu, m)?)?;
    m.add_function(wrap_pyfunction!(binary_quotient_type, m)?)?;
    m.add_function(wrap_pyfunction!(index_formula_check, m)?)?;
    m.add_function(wrap_pyfunction!(cover_self_intersection, m)?)?;
    m.add_function(wrap_pyfunction!(table_ids, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    Ok(())
}
