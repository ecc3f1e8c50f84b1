//! Python bindings. Type tuples cross the boundary as lists of ints,
//! tournaments as `Tournament` objects built from the `n:bits` text form.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use tourtypes::verify::{Property, Scope};
use tourtypes::{Digraph2Spec, Error, SignedTuple, TypeKind};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn tuple(entries: Vec<i32>) -> SignedTuple {
    SignedTuple::new(entries)
}

#[pyclass(
    name = "Tournament",
    frozen,
    eq,
    skip_from_py_object,
    module = "pytourtypes"
)]
#[derive(Clone, PartialEq)]
struct PyTournament {
    inner: tourtypes::Tournament,
}

#[pymethods]
impl PyTournament {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyTournament {
            inner: text.parse().map_err(err)?,
        })
    }

    #[staticmethod]
    fn transitive(n: usize) -> PyResult<Self> {
        if n > tourtypes::tournament::MAX_ORDER {
            return Err(PyValueError::new_err(format!("order {n} too large")));
        }
        Ok(PyTournament {
            inner: tourtypes::Tournament::transitive(n),
        })
    }

    #[staticmethod]
    fn random(n: usize, seed: u64) -> PyResult<Self> {
        if n > tourtypes::tournament::MAX_ORDER {
            return Err(PyValueError::new_err(format!("order {n} too large")));
        }
        Ok(PyTournament {
            inner: tourtypes::random_tournament(n, seed),
        })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn has_arc(&self, u: usize, v: usize) -> PyResult<bool> {
        let n = self.inner.order();
        if u >= n || v >= n {
            return Err(PyValueError::new_err(format!(
                "vertex out of range for order {n}"
            )));
        }
        Ok(self.inner.has_arc(u, v))
    }

    fn complement(&self) -> Self {
        PyTournament {
            inner: self.inner.complement(),
        }
    }

    fn induced(&self, vertices: Vec<usize>) -> PyResult<Self> {
        Ok(PyTournament {
            inner: self.inner.induced(&vertices).map_err(err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!("Tournament('{}')", self.inner)
    }
}

#[pyfunction]
fn parse_tuple(text: &str) -> PyResult<Vec<i32>> {
    Ok(text.parse::<SignedTuple>().map_err(err)?.entries().to_vec())
}

#[pyfunction]
fn normalize_path(entries: Vec<i32>) -> PyResult<Vec<i32>> {
    Ok(tourtypes::normalize_path(&tuple(entries))
        .map_err(err)?
        .entries()
        .to_vec())
}

#[pyfunction]
fn normalize_cycle(entries: Vec<i32>) -> PyResult<Vec<i32>> {
    Ok(tourtypes::normalize_cycle(&tuple(entries))
        .map_err(err)?
        .entries()
        .to_vec())
}

#[pyfunction]
fn path_canonical(entries: Vec<i32>) -> PyResult<Vec<i32>> {
    Ok(tourtypes::path_canonical(&tuple(entries))
        .map_err(err)?
        .repr()
        .entries()
        .to_vec())
}

#[pyfunction]
fn cycle_canonical(entries: Vec<i32>) -> PyResult<Vec<i32>> {
    Ok(tourtypes::cycle_canonical(&tuple(entries))
        .map_err(err)?
        .repr()
        .entries()
        .to_vec())
}

#[pyfunction]
fn is_symmetric(entries: Vec<i32>) -> bool {
    tourtypes::types::is_symmetric(&tuple(entries))
}

/// `(r, t)`: least period and repetition count.
#[pyfunction]
fn period(entries: Vec<i32>) -> (usize, usize) {
    let p = tourtypes::period_info(&tuple(entries));
    (p.r, p.t)
}

#[pyfunction]
fn delta(entries: Vec<i32>) -> PyResult<u64> {
    let b = tuple(entries);
    if !b.is_standard_cycle() {
        return Err(PyValueError::new_err(format!(
            "{b} is not a standard cycle tuple"
        )));
    }
    Ok(tourtypes::delta(&b))
}

/// `(beta, beta_prime, coincide)` as canonical tuples.
#[pyfunction]
fn generated_cycle_types(entries: Vec<i32>) -> PyResult<(Vec<i32>, Vec<i32>, bool)> {
    let g = tourtypes::generated_cycle_types(&tuple(entries)).map_err(err)?;
    Ok((
        g.beta.repr().entries().to_vec(),
        g.beta_prime.repr().entries().to_vec(),
        g.coincide,
    ))
}

#[pyfunction]
fn list_types(arc_sum: usize, kind: &str) -> PyResult<Vec<Vec<i32>>> {
    let kind = match kind {
        "path" => TypeKind::Path,
        "cycle" => TypeKind::Cycle,
        other => {
            return Err(PyValueError::new_err(format!(
                "kind must be 'path' or 'cycle', got {other:?}"
            )))
        }
    };
    Ok(tourtypes::list_types(arc_sum, kind)
        .into_iter()
        .map(|a| a.entries().to_vec())
        .collect())
}

#[pyfunction]
fn count_enumerations(t: &PyTournament, entries: Vec<i32>) -> PyResult<u64> {
    tourtypes::count_enumerations(&t.inner, &tuple(entries)).map_err(err)
}

#[pyfunction]
fn count_paths(t: &PyTournament, entries: Vec<i32>) -> PyResult<u64> {
    tourtypes::count_paths(&t.inner, &tuple(entries)).map_err(err)
}

#[pyfunction]
fn count_cycles(t: &PyTournament, entries: Vec<i32>) -> PyResult<u64> {
    tourtypes::count_cycles(&t.inner, &tuple(entries)).map_err(err)
}

/// `(paths, cycles)`: dicts from canonical type text to count.
#[pyfunction]
fn census(
    py: Python<'_>,
    t: &PyTournament,
) -> PyResult<(BTreeMap<String, u64>, BTreeMap<String, u64>)> {
    let r = py.detach(|| tourtypes::census(&t.inner)).map_err(err)?;
    Ok((
        r.path_counts
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect(),
        r.cycle_counts
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect(),
    ))
}

#[pyfunction]
fn count_copies(t: &PyTournament, digraph: &str) -> PyResult<u64> {
    let h: Digraph2Spec = digraph.parse().map_err(err)?;
    tourtypes::count_copies(&t.inner, &h).map_err(err)
}

/// `(count, complement_count, equal)`.
#[pyfunction]
fn check_complement_invariance(t: &PyTournament, digraph: &str) -> PyResult<(u64, u64, bool)> {
    let h: Digraph2Spec = digraph.parse().map_err(err)?;
    let r = tourtypes::check_complement_invariance(&t.inner, &h).map_err(err)?;
    Ok((r.count, r.complement_count, r.equal))
}

/// `(tournament, count, complement_count)` for the out-star on `n + 1`
/// vertices.
#[pyfunction]
fn star_counterexample(n: usize) -> PyResult<(PyTournament, u64, u64)> {
    if n > 9 {
        return Err(PyValueError::new_err("n must be at most 9"));
    }
    let (t, r) = tourtypes::star_counterexample(n).map_err(err)?;
    Ok((PyTournament { inner: t }, r.count, r.complement_count))
}

/// Runs a property sweep and returns the JSON report text.
#[pyfunction]
#[pyo3(signature = (property, order, samples=None, seed=0, allow_large=false))]
fn verify(
    py: Python<'_>,
    property: &str,
    order: usize,
    samples: Option<u64>,
    seed: u64,
    allow_large: bool,
) -> PyResult<String> {
    let property: Property = property.parse().map_err(err)?;
    let scope = match samples {
        None => Scope::Exhaustive { order, allow_large },
        Some(samples) => Scope::random(order, samples, seed),
    };
    let report = py
        .detach(|| tourtypes::verify(property, scope))
        .map_err(err)?;
    Ok(report.to_json().to_string())
}

#[pymodule]
fn pytourtypes(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTournament>()?;
    m.add_function(wrap_pyfunction!(parse_tuple, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_path, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(path_canonical, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_canonical, m)?)?;
    m.add_function(wrap_pyfunction!(is_symmetric, m)?)?;
    m.add_function(wrap_pyfunction!(period, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(generated_cycle_types, m)?)?;
    m.add_function(wrap_pyfunction!(list_types, m)?)?;
    m.add_function(wrap_pyfunction!(count_enumerations, m)?)?;
    m.add_function(wrap_pyfunction!(count_paths, m)?)?;
    m.add_function(wrap_pyfunction!(count_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(count_copies, m)?)?;
    m.add_function(wrap_pyfunction!(check_complement_invariance, m)?)?;
    m.add_function(wrap_pyfunction!(star_counterexample, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
