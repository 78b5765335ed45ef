//! Python bindings: algebras from the catalog or presentation files,
//! exact polynomials over them, normal forms and the verification suite.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qheis_core::families::{catalog, extract_ore, FAMILIES};
use qheis_core::interface::{
    format_latex, format_plain, load_presentation, machine_json, save_presentation,
};
use qheis_core::rewrite::check_confluence;
use qheis_core::verify::{run_suite, Selection, DEFAULT_K};
use qheis_core::{Error, ErrorCategory, NCPoly, Presentation, RewriteSystem};

create_exception!(qheis, QheisError, PyException);
create_exception!(qheis, UsageError, QheisError);
create_exception!(qheis, ParseError, QheisError);
create_exception!(qheis, EngineError, QheisError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e.category() {
        ErrorCategory::Usage => UsageError::new_err(msg),
        ErrorCategory::Parse => ParseError::new_err(msg),
        ErrorCategory::Engine => EngineError::new_err(msg),
    }
}

/// A finitely presented algebra with its compiled rewrite system.
#[pyclass(module = "qheis", frozen)]
struct Algebra {
    pres: Presentation,
    sys: RewriteSystem,
}

/// Noncommutative polynomial with exact rational-function coefficients.
#[pyclass(module = "qheis", frozen, name = "Poly", from_py_object)]
#[derive(Clone)]
struct Poly {
    inner: NCPoly,
}

/// Either a `Poly` or expression text to parse over the algebra.
#[derive(FromPyObject)]
enum PolyLike {
    Poly(Poly),
    Text(String),
}

impl Algebra {
    fn build(pres: Presentation) -> PyResult<Self> {
        let sys = pres.rewrite_system().map_err(to_py)?;
        Ok(Self { pres, sys })
    }

    fn poly(&self, x: PolyLike) -> PyResult<NCPoly> {
        match x {
            PolyLike::Poly(p) => Ok(p.inner),
            PolyLike::Text(t) => self.pres.parse(&t).map_err(to_py),
        }
    }
}

fn render(p: &NCPoly, format: &str) -> PyResult<String> {
    match format {
        "plain" => Ok(format_plain(p)),
        "latex" => Ok(format_latex(p)),
        "json" => Ok(machine_json(p).to_string()),
        other => Err(UsageError::new_err(format!(
            "unknown format `{other}` (expected plain, latex or json)"
        ))),
    }
}

#[pymethods]
impl Algebra {
    /// Catalog family `id` with optional string parameters.
    #[new]
    #[pyo3(signature = (id, **params))]
    fn new(id: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<Self> {
        let mut map = BTreeMap::new();
        if let Some(d) = params {
            for (k, v) in d.iter() {
                map.insert(k.extract::<String>()?, v.str()?.to_string());
            }
        }
        Self::build(catalog(id, &map).map_err(to_py)?)
    }

    /// Loads a presentation document from text.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Self::build(load_presentation(text).map_err(to_py)?)
    }

    #[staticmethod]
    fn from_file(path: std::path::PathBuf) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| UsageError::new_err(format!("cannot read {}: {e}", path.display())))?;
        Self::from_text(&text)
    }

    /// The presentation document, loadable with `from_text`.
    fn to_text(&self) -> String {
        save_presentation(&self.pres)
    }

    #[getter]
    fn name(&self) -> String {
        self.pres.name.clone()
    }

    /// Generator spellings in ascending precedence.
    #[getter]
    fn generators(&self) -> Vec<String> {
        self.pres.alphabet.spellings()
    }

    /// `(label, relation)` pairs, each relation read as `= 0`.
    #[getter]
    fn relations(&self) -> Vec<(String, String)> {
        self.pres
            .relations
            .iter()
            .map(|r| (r.label.clone(), format_plain(&r.poly)))
            .collect()
    }

    fn parse(&self, expr: &str) -> PyResult<Poly> {
        Ok(Poly {
            inner: self.pres.parse(expr).map_err(to_py)?,
        })
    }

    /// Normal form as a `Poly`.
    fn reduce(&self, expr: PolyLike) -> PyResult<Poly> {
        let a = self.poly(expr)?;
        Ok(Poly {
            inner: self.sys.normalize(&a).map_err(to_py)?,
        })
    }

    /// Normal form rendered as plain text, LaTeX or JSON.
    #[pyo3(signature = (expr, format = "plain"))]
    fn normalize(&self, expr: PolyLike, format: &str) -> PyResult<String> {
        render(&self.reduce(expr)?.inner, format)
    }

    /// `(rule, word, position, result)` for every rule application.
    fn trace(&self, expr: PolyLike) -> PyResult<Vec<(String, String, usize, String)>> {
        let a = self.poly(expr)?;
        let steps = self.sys.reduce_trace(&a).map_err(to_py)?;
        Ok(steps
            .into_iter()
            .map(|s| {
                (
                    s.origin,
                    s.word.render(&self.pres.alphabet),
                    s.position,
                    format_plain(&s.result),
                )
            })
            .collect())
    }

    #[pyo3(signature = (a, b, format = "plain"))]
    fn commutator(&self, a: PolyLike, b: PolyLike, format: &str) -> PyResult<String> {
        let c = self.poly(a)?.commutator(&self.poly(b)?).map_err(to_py)?;
        render(&self.sys.normalize(&c).map_err(to_py)?, format)
    }

    fn equal(&self, a: PolyLike, b: PolyLike) -> PyResult<bool> {
        let d = self.poly(a)?.checked_sub(&self.poly(b)?).map_err(to_py)?;
        Ok(self.sys.normalize(&d).map_err(to_py)?.is_zero())
    }

    /// Dict with `confluent`, `bound`, `pairs_checked` and the unresolved
    /// overlaps with both normal forms.
    #[pyo3(signature = (max_overlap = 6))]
    fn confluence<'py>(&self, py: Python<'py>, max_overlap: usize) -> PyResult<Bound<'py, PyDict>> {
        let rep = check_confluence(&self.sys, max_overlap).map_err(to_py)?;
        let out = PyDict::new(py);
        out.set_item("confluent", rep.confluent)?;
        out.set_item("bound", rep.bound)?;
        out.set_item("pairs_checked", rep.pairs_checked)?;
        let al = self.sys.alphabet();
        let unresolved: Vec<(String, String, String)> = rep
            .unresolved
            .iter()
            .map(|cp| {
                (
                    cp.overlap.render(al),
                    format_plain(&cp.left_normal),
                    format_plain(&cp.right_normal),
                )
            })
            .collect();
        out.set_item("unresolved", unresolved)?;
        Ok(out)
    }

    /// `(adjoined, earlier, sigma, delta)` for each pair of the tower.
    fn ore(&self, tower: Vec<String>) -> PyResult<Vec<(String, String, String, String)>> {
        let refs: Vec<&str> = tower.iter().map(String::as_str).collect();
        let data = extract_ore(&self.pres, &refs).map_err(to_py)?;
        Ok(data
            .entries
            .into_iter()
            .map(|e| (e.adjoined, e.earlier, format_plain(&e.sigma), format_plain(&e.delta)))
            .collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra({:?}, generators={:?})",
            self.pres.name,
            self.pres.alphabet.spellings()
        )
    }
}

#[pymethods]
impl Poly {
    fn __add__(&self, other: &Poly) -> PyResult<Poly> {
        self.inner.checked_add(&other.inner).map(|inner| Poly { inner }).map_err(to_py)
    }

    fn __sub__(&self, other: &Poly) -> PyResult<Poly> {
        self.inner.checked_sub(&other.inner).map(|inner| Poly { inner }).map_err(to_py)
    }

    fn __mul__(&self, other: &Poly) -> PyResult<Poly> {
        self.inner.checked_mul(&other.inner).map(|inner| Poly { inner }).map_err(to_py)
    }

    fn __neg__(&self) -> Poly {
        Poly {
            inner: self.inner.neg_poly(),
        }
    }

    fn __pow__(&self, k: u32, _modulo: Option<Py<PyAny>>) -> Poly {
        Poly {
            inner: self.inner.pow(k),
        }
    }

    /// Equality in the free algebra; use `Algebra.equal` for the quotient.
    fn __eq__(&self, other: &Poly) -> bool {
        self.inner == other.inner
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn latex(&self) -> String {
        format_latex(&self.inner)
    }

    fn to_json(&self) -> String {
        machine_json(&self.inner).to_string()
    }

    fn __str__(&self) -> String {
        format_plain(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?})", format_plain(&self.inner))
    }
}

/// `(name, default, meaning)` of one family parameter.
type ParamInfo = (&'static str, &'static str, &'static str);

/// `(id, summary, [(param, default, meaning), ...])` for every family.
#[pyfunction]
fn families() -> Vec<(&'static str, &'static str, Vec<ParamInfo>)> {
    FAMILIES
        .iter()
        .map(|f| (f.id, f.summary, f.params.to_vec()))
        .collect()
}

/// Runs the verification corpus and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (selection = "all", k = DEFAULT_K))]
fn run_verification(py: Python<'_>, selection: &str, k: u32) -> PyResult<String> {
    let sel = Selection::parse(selection);
    let rep = py.detach(|| run_suite(&sel, k)).map_err(to_py)?;
    Ok(rep.to_json())
}

#[pymodule]
fn qheis(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<Algebra>()?;
    m.add_class::<Poly>()?;
    m.add_function(wrap_pyfunction!(families, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    m.add("QheisError", py.get_type::<QheisError>())?;
    m.add("UsageError", py.get_type::<UsageError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("EngineError", py.get_type::<EngineError>())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
