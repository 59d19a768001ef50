//! Python bindings. Paths, trees, bit and trit sequences cross the boundary
//! as their text forms; counts come back as Python integers.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use schroder_core::bijections::{self as bij, BitSeq, TritSeq};
use schroder_core::paths::{self, PathClass, SchroderPath};
use schroder_core::perm::{self, Permutation as CorePermutation};
use schroder_core::riordan;
use schroder_core::trees::{self, DiSkTree};
use schroder_core::verify::{run_suite, SuiteId};
use schroder_core::Error;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.name()))
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

fn hash_of(x: &impl Hash) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

fn int_rows(t: &schroder_core::triangle::RiordanTriangle<BigInt>) -> Vec<Vec<BigInt>> {
    t.rows().to_vec()
}

fn class_of(kind: &str) -> PyResult<PathClass> {
    match kind {
        "all" => Ok(PathClass::All),
        "little" => Ok(PathClass::Little),
        "hill-free" => Ok(PathClass::HillFree),
        "little-hill-free" => Ok(PathClass::LittleHillFree),
        _ => Err(PyValueError::new_err(format!("unknown path class {kind:?}"))),
    }
}

/// A Schröder path over the letters U, D, H.
#[pyclass(name = "Path", frozen, skip_from_py_object)]
struct PyPath(SchroderPath);

#[pymethods]
impl PyPath {
    #[new]
    fn new(word: &str) -> PyResult<Self> {
        parse(word).map(PyPath)
    }

    #[getter]
    fn semi_length(&self) -> usize {
        self.0.semi_length()
    }

    #[getter]
    fn hills(&self) -> usize {
        self.0.hills()
    }

    fn is_little(&self) -> bool {
        self.0.is_little()
    }

    fn heights(&self) -> Vec<i64> {
        self.0.heights()
    }

    fn stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = self.0.stats();
        let d = PyDict::new(py);
        d.set_item("semi_length", s.semi_length)?;
        d.set_item("hills", s.hills)?;
        d.set_item("peaks", s.peaks)?;
        d.set_item("h0", s.h0)?;
        d.set_item("h", s.h)?;
        d.set_item("is_little", s.is_little)?;
        Ok(d)
    }

    fn diagram(&self) -> String {
        self.0.ascii_diagram()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Path({:?})", self.0.to_string())
    }

    fn __eq__(&self, other: PyRef<'_, Self>) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        hash_of(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.steps().len()
    }
}

/// A di-sk tree in `(label left right)` form.
#[pyclass(name = "Tree", frozen, skip_from_py_object)]
struct PyTree(DiSkTree);

#[pymethods]
impl PyTree {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse(text).map(PyTree)
    }

    fn label_sequence(&self) -> String {
        self.0.label_sequence().iter().map(|s| s.as_char()).collect()
    }

    #[getter]
    fn first_minus_index(&self) -> usize {
        self.0.first_minus_index()
    }

    fn minus_positions(&self) -> Vec<usize> {
        self.0.minus_positions().into_iter().collect()
    }

    fn is_star(&self) -> bool {
        self.0.is_star()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tree({:?})", self.0.to_string())
    }

    fn __eq__(&self, other: PyRef<'_, Self>) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        hash_of(&self.0)
    }
}

/// A permutation of 1..n, given as a one-line string or a list.
#[pyclass(name = "Permutation", frozen, skip_from_py_object)]
struct PyPermutation(CorePermutation);

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(values: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = values.extract::<String>() {
            return parse(&s).map(PyPermutation);
        }
        let v: Vec<usize> = values.extract()?;
        CorePermutation::new(v).map(PyPermutation).map_err(err)
    }

    fn values(&self) -> Vec<usize> {
        self.0.values().to_vec()
    }

    fn iar(&self) -> usize {
        self.0.iar()
    }

    fn comp(&self) -> usize {
        self.0.comp()
    }

    fn descent_set(&self) -> Vec<usize> {
        self.0.descent_set().into_iter().collect()
    }

    fn is_separable(&self) -> bool {
        self.0.is_separable()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.to_string())
    }

    fn __eq__(&self, other: PyRef<'_, Self>) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        hash_of(&self.0)
    }
}

#[pyfunction]
fn phi(path: &str, b: &str) -> PyResult<String> {
    Ok(bij::phi(&parse(path)?, &parse(b)?).map_err(err)?.to_string())
}

#[pyfunction]
fn phi_inv(path: &str) -> PyResult<(String, String)> {
    let (p, b) = bij::phi_inv(&parse(path)?).map_err(err)?;
    Ok((p.to_string(), b.to_string()))
}

#[pyfunction]
fn big_phi(path: &str, b: &str, k: usize) -> PyResult<String> {
    Ok(bij::big_phi(&parse(path)?, &parse::<BitSeq>(b)?, k).map_err(err)?.to_string())
}

#[pyfunction]
fn big_phi_inv(path: &str) -> PyResult<(String, String)> {
    let (p, b) = bij::big_phi_inv(&parse(path)?).map_err(err)?;
    Ok((p.to_string(), b.to_string()))
}

#[pyfunction]
fn psi(path: &str, t: &str) -> PyResult<String> {
    Ok(bij::psi(&parse(path)?, &parse(t)?).map_err(err)?.to_string())
}

#[pyfunction]
fn psi_inv(path: &str) -> PyResult<(String, String)> {
    let (p, t) = bij::psi_inv(&parse(path)?).map_err(err)?;
    Ok((p.to_string(), t.to_string()))
}

#[pyfunction]
fn big_psi(path: &str, t: &str, k: usize) -> PyResult<String> {
    Ok(bij::big_psi(&parse(path)?, &parse::<TritSeq>(t)?, k).map_err(err)?.to_string())
}

#[pyfunction]
fn big_psi_inv(path: &str) -> PyResult<(String, String)> {
    let (p, t) = bij::big_psi_inv(&parse(path)?).map_err(err)?;
    Ok((p.to_string(), t.to_string()))
}

#[pyfunction]
fn rho(tree: &str, b: &str, k: usize) -> PyResult<String> {
    Ok(trees::rho(&parse(tree)?, &parse(b)?, k).map_err(err)?.to_string())
}

#[pyfunction]
fn rho_inv(tree: &str) -> PyResult<(String, String)> {
    let (t, b) = trees::rho_inv(&parse(tree)?).map_err(err)?;
    Ok((t.to_string(), b.to_string()))
}

#[pyfunction]
fn tau(tree: &str) -> PyResult<String> {
    Ok(trees::tau(&parse(tree)?).map_err(err)?.to_string())
}

#[pyfunction]
fn path_to_tree(path: &str) -> PyResult<String> {
    Ok(trees::path_to_tree(&parse(path)?).map_err(err)?.to_string())
}

#[pyfunction]
fn tree_to_path(tree: &str) -> PyResult<String> {
    Ok(trees::tree_to_path(&parse(tree)?).map_err(err)?.to_string())
}

/// Rows `0..=n_max` of the hill triangle for all paths or little paths.
#[pyfunction]
#[pyo3(signature = (n_max, little = false))]
fn hill_triangle(n_max: usize, little: bool) -> Vec<Vec<BigInt>> {
    let class = if little { PathClass::Little } else { PathClass::All };
    int_rows(&paths::hill_triangle(n_max, class))
}

/// The polynomial triangle specialized at integers `u`, `v`.
#[pyfunction]
fn uv_triangle(n_max: usize, u: i64, v: i64) -> Vec<Vec<BigInt>> {
    int_rows(&riordan::specialize(&riordan::uv_triangle(n_max), &BigInt::from(u), &BigInt::from(v)))
}

/// Entry `(n, k)` of the polynomial triangle as `[(deg_u, deg_v, coeff)]`.
#[pyfunction]
fn uv_entry(n: usize, k: usize) -> PyResult<Vec<(u32, u32, BigInt)>> {
    let t = riordan::uv_triangle(n);
    t.get(n, k)
        .map(|p| p.terms())
        .ok_or_else(|| PyValueError::new_err(format!("k = {k} exceeds n = {n}")))
}

#[pyfunction]
#[pyo3(signature = (n, kind = "all"))]
fn enumerate_paths(n: usize, kind: &str) -> PyResult<Vec<String>> {
    Ok(paths::enumerate_paths(n, class_of(kind)?).map(|p| p.to_string()).collect())
}

#[pyfunction]
fn enumerate_trees(n: usize) -> Vec<String> {
    trees::enumerate_trees(n).iter().map(|t| t.to_string()).collect()
}

#[pyfunction]
fn class_counts(n: usize) -> Vec<usize> {
    trees::class_counts(n)
}

#[pyfunction]
fn enumerate_separable(n: usize) -> Vec<String> {
    perm::enumerate_separable(n).iter().map(|p| p.to_string()).collect()
}

/// Runs a named verification suite; returns `(ok, report)`.
#[pyfunction]
#[pyo3(signature = (suite, n = None, jobs = None))]
fn verify(py: Python<'_>, suite: &str, n: Option<usize>, jobs: Option<usize>) -> PyResult<(bool, String)> {
    let id: SuiteId = parse(suite)?;
    let report = py.detach(|| run_suite(id, n.unwrap_or(id.default_n()), jobs)).map_err(err)?;
    Ok((report.ok(), report.to_string()))
}

#[pymodule]
fn schroder(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPath>()?;
    m.add_class::<PyTree>()?;
    m.add_class::<PyPermutation>()?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_inv, m)?)?;
    m.add_function(wrap_pyfunction!(big_phi, m)?)?;
    m.add_function(wrap_pyfunction!(big_phi_inv, m)?)?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    m.add_function(wrap_pyfunction!(psi_inv, m)?)?;
    m.add_function(wrap_pyfunction!(big_psi, m)?)?;
    m.add_function(wrap_pyfunction!(big_psi_inv, m)?)?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(rho_inv, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(path_to_tree, m)?)?;
    m.add_function(wrap_pyfunction!(tree_to_path, m)?)?;
    m.add_function(wrap_pyfunction!(hill_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(uv_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(uv_entry, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_paths, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_trees, m)?)?;
    m.add_function(wrap_pyfunction!(class_counts, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_separable, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
