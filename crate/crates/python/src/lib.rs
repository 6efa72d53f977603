//! Python bindings: `import pylfactor`.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use lfactor_core::dsl::parse_repr;
use lfactor_core::galois::{galois_ext, langlands_agree as core_langlands_agree, FormalParam};
use lfactor_core::lfun;
use lfactor_core::scalar::parse_rational;
use lfactor_core::segment::derivative_constituents as core_constituents;
use lfactor_core::{Constituent, Error, EulerFactor, GammaClass, Registry, Representation, Scalar};

create_exception!(pylfactor, LFactorError, PyException);
create_exception!(pylfactor, ParseError, LFactorError);

fn err(e: Error) -> PyErr {
    match e {
        Error::Parse(p) => ParseError::new_err(p.to_string()),
        other => LFactorError::new_err(other.to_string()),
    }
}

/// `ζ·q^e` with `ζ = exp(2πi·zeta)`.
#[pyclass(
    name = "Scalar",
    module = "pylfactor",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyScalar(Scalar);

#[pymethods]
impl PyScalar {
    #[new]
    #[pyo3(signature = (zeta = "0", qexp = "0"))]
    fn new(zeta: &str, qexp: &str) -> PyResult<Self> {
        let z = parse_rational(zeta).map_err(LFactorError::new_err)?;
        let e = parse_rational(qexp).map_err(LFactorError::new_err)?;
        Ok(PyScalar(Scalar::new(z, e)))
    }

    /// `q^e`.
    #[staticmethod]
    fn q(e: &str) -> PyResult<Self> {
        PyScalar::new("0", e)
    }

    #[getter]
    fn zeta(&self) -> String {
        let z = self.0.zeta();
        format!("{}/{}", z.numer(), z.denom())
    }

    #[getter]
    fn qexp(&self) -> String {
        let e = self.0.qexp();
        format!("{}/{}", e.numer(), e.denom())
    }

    fn inv(&self) -> Self {
        PyScalar(self.0.inv())
    }

    fn __mul__(&self, other: &PyScalar) -> Self {
        PyScalar(self.0 * other.0)
    }

    fn __truediv__(&self, other: &PyScalar) -> Self {
        PyScalar(self.0 / other.0)
    }

    fn __pow__(&self, n: i64, _modulo: Option<i64>) -> Self {
        PyScalar(self.0.pow(n))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Scalar(zeta='{}', qexp='{}')", self.zeta(), self.qexp())
    }
}

/// `∏(1 - αX)^{-1}` over a multiset of inverse roots, `X = q^{-s}`.
#[pyclass(
    name = "EulerFactor",
    module = "pylfactor",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyEulerFactor(EulerFactor);

#[pymethods]
impl PyEulerFactor {
    #[new]
    #[pyo3(signature = (roots = Vec::new()))]
    fn new(roots: Vec<PyRef<'_, PyScalar>>) -> Self {
        PyEulerFactor(EulerFactor::from_roots(roots.iter().map(|r| r.0)))
    }

    #[staticmethod]
    fn from_json(src: &str) -> PyResult<Self> {
        serde_json::from_str(src)
            .map(PyEulerFactor)
            .map_err(|e| LFactorError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("factors serialize")
    }

    #[getter]
    fn roots(&self) -> Vec<PyScalar> {
        self.0.roots().iter().copied().map(PyScalar).collect()
    }

    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn __len__(&self) -> usize {
        self.0.degree()
    }

    fn __mul__(&self, other: &PyEulerFactor) -> Self {
        PyEulerFactor(self.0.mul(&other.0))
    }

    fn divide(&self, other: &PyEulerFactor) -> PyResult<Self> {
        self.0.divide(&other.0).map(PyEulerFactor).map_err(err)
    }

    fn shift(&self, c: &PyScalar) -> Self {
        PyEulerFactor(self.0.shift(c.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("EulerFactor({})", self.0)
    }
}

/// `γ` modulo units, as cancelled numerator and denominator factors.
#[pyclass(
    name = "GammaClass",
    module = "pylfactor",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGammaClass(GammaClass);

#[pymethods]
impl PyGammaClass {
    #[getter]
    fn num(&self) -> PyEulerFactor {
        PyEulerFactor(self.0.num().clone())
    }

    #[getter]
    fn den(&self) -> PyEulerFactor {
        PyEulerFactor(self.0.den().clone())
    }

    fn is_trivial(&self) -> bool {
        self.0.is_trivial()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GammaClass({})", self.0)
    }
}

#[pyclass(name = "Registry", module = "pylfactor", frozen)]
struct PyRegistry(Registry);

#[pymethods]
impl PyRegistry {
    /// The bundled registry (one, chi, eta, rho2, rho2o, sigma, rho3, ...).
    #[staticmethod]
    fn standard() -> Self {
        PyRegistry(Registry::standard())
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Registry::load(path).map(PyRegistry).map_err(err)
    }

    #[staticmethod]
    fn from_json(src: &str) -> PyResult<Self> {
        Registry::from_json_str(src).map(PyRegistry).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn labels(&self) -> Vec<String> {
        self.0.labels().map(str::to_string).collect()
    }

    fn rs_pair_roots(&self, a: &str, b: &str) -> PyResult<Vec<PyScalar>> {
        let roots = self.0.rs_pair_roots(a, b).map_err(err)?;
        Ok(roots.into_iter().map(PyScalar).collect())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// `Ind(Δ₁ ⊗ ⋯ ⊗ Δ_t)`, written `[label:len@e~zk/N] * ...`.
#[pyclass(
    name = "Representation",
    module = "pylfactor",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyRepresentation(Representation);

#[pymethods]
impl PyRepresentation {
    #[new]
    fn new(src: &str) -> PyResult<Self> {
        parse_repr(src)
            .map(PyRepresentation)
            .map_err(|e| ParseError::new_err(e.to_string()))
    }

    /// Principal series with the given Satake values over a `GL_1` label.
    #[staticmethod]
    #[pyo3(signature = (reg, satake, label = "one"))]
    fn unramified(
        reg: &PyRegistry,
        satake: Vec<PyRef<'_, PyScalar>>,
        label: &str,
    ) -> PyResult<Self> {
        let a: Vec<Scalar> = satake.iter().map(|s| s.0).collect();
        Representation::unramified(&reg.0, label, &a)
            .map(PyRepresentation)
            .map_err(err)
    }

    /// `(label, len, tau)` for each segment.
    fn segments(&self) -> Vec<(String, u32, PyScalar)> {
        self.0
            .segments()
            .iter()
            .map(|d| (d.label.clone(), d.len, PyScalar(d.tau)))
            .collect()
    }

    fn dim(&self, reg: &PyRegistry) -> PyResult<u32> {
        self.0.dim(&reg.0).map_err(err)
    }

    fn dual(&self, reg: &PyRegistry) -> PyResult<Self> {
        self.0.dual(&reg.0).map(PyRepresentation).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Representation('{}')", self.0)
    }
}

fn factor(r: Result<EulerFactor, Error>) -> PyResult<PyEulerFactor> {
    r.map(PyEulerFactor).map_err(err)
}

/// `L(s, π, ∧²)`.
#[pyfunction]
fn ext(reg: &PyRegistry, p: &PyRepresentation) -> PyResult<PyEulerFactor> {
    factor(lfun::l_rep_ext(&reg.0, &p.0))
}

/// `L(s, π, Sym²)`.
#[pyfunction]
fn sym(reg: &PyRegistry, p: &PyRepresentation) -> PyResult<PyEulerFactor> {
    factor(lfun::l_rep_sym(&reg.0, &p.0))
}

/// `L(s, π × π′)`, or `L(s, π × π)` when `other` is omitted.
#[pyfunction]
#[pyo3(signature = (reg, p, other = None))]
fn rs(
    reg: &PyRegistry,
    p: &PyRepresentation,
    other: Option<&PyRepresentation>,
) -> PyResult<PyEulerFactor> {
    match other {
        Some(o) => factor(lfun::l_rep_rs_pair(&reg.0, &p.0, &o.0)),
        None => factor(lfun::l_rep_rs(&reg.0, &p.0)),
    }
}

/// `γ(s, π, ∧²)` up to units.
#[pyfunction]
fn gamma(reg: &PyRegistry, p: &PyRepresentation) -> PyResult<PyGammaClass> {
    lfun::gamma_ext(&reg.0, &p.0).map(PyGammaClass).map_err(err)
}

/// Exceptional factor of the whole representation as one constituent.
#[pyfunction]
fn lex(reg: &PyRegistry, p: &PyRepresentation) -> PyResult<PyEulerFactor> {
    factor(lfun::l_ex_constituent(&reg.0, &Constituent::whole(&p.0)))
}

/// `L(s, π, ∧²)` via exceptional factors of derivatives.
#[pyfunction]
fn ext_via_derivatives(reg: &PyRegistry, p: &PyRepresentation) -> PyResult<PyEulerFactor> {
    factor(lfun::l_ext_via_derivatives(&reg.0, &p.0))
}

/// `(k₁, …, k_t)` and the surviving parts of each constituent of `π^{(k)}`.
#[pyfunction]
fn derivative_constituents(
    reg: &PyRegistry,
    p: &PyRepresentation,
    k: u32,
) -> PyResult<Vec<(Vec<u32>, Option<PyRepresentation>)>> {
    let cons = core_constituents(&reg.0, &p.0, k).map_err(err)?;
    Ok(cons
        .into_iter()
        .map(|c| {
            let parts = Representation::new(c.parts).ok().map(PyRepresentation);
            (c.source, parts)
        })
        .collect())
}

/// `(ok, [(condition, description), ...])`.
#[pyfunction]
fn check_general_position(
    reg: &PyRegistry,
    p: &PyRepresentation,
) -> PyResult<(bool, Vec<(u8, String)>)> {
    let report = lfun::check_general_position(&reg.0, &p.0).map_err(err)?;
    let violations = report
        .violations
        .into_iter()
        .map(|v| (v.condition, v.description))
        .collect();
    Ok((report.ok, violations))
}

/// `L(s, ∧²φ)` on the Galois side, summands in the given order.
#[pyfunction]
fn galois(reg: &PyRegistry, p: &PyRepresentation) -> PyResult<PyEulerFactor> {
    factor(galois_ext(&reg.0, &FormalParam::from(p.0.clone())))
}

#[pyfunction]
fn langlands_agree(reg: &PyRegistry, p: &PyRepresentation) -> PyResult<bool> {
    core_langlands_agree(&reg.0, &FormalParam::from(p.0.clone())).map_err(err)
}

#[pymodule]
fn pylfactor(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScalar>()?;
    m.add_class::<PyEulerFactor>()?;
    m.add_class::<PyGammaClass>()?;
    m.add_class::<PyRegistry>()?;
    m.add_class::<PyRepresentation>()?;
    m.add_function(wrap_pyfunction!(ext, m)?)?;
    m.add_function(wrap_pyfunction!(sym, m)?)?;
    m.add_function(wrap_pyfunction!(rs, m)?)?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(lex, m)?)?;
    m.add_function(wrap_pyfunction!(ext_via_derivatives, m)?)?;
    m.add_function(wrap_pyfunction!(derivative_constituents, m)?)?;
    m.add_function(wrap_pyfunction!(check_general_position, m)?)?;
    m.add_function(wrap_pyfunction!(galois, m)?)?;
    m.add_function(wrap_pyfunction!(langlands_agree, m)?)?;
    m.add("LFactorError", m.py().get_type::<LFactorError>())?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    Ok(())
}
