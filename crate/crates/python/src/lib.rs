//! Python bindings: `import pyqrot`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qrotundus::annulus::{AnnulusKind, AnnulusTriangulation, LoopStatistic};
use qrotundus::farey::{self, Rational, RegularCF};
use qrotundus::polygon::{FanTriangulation, Statistic};
use qrotundus::{pfaffian, qcore, svg, verify};

fn err(e: qrotundus::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = qrotundus::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

/// Laurent polynomial in `q` with integer coefficients.
#[pyclass(name = "LaurentPoly", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyLaurent(qrotundus::LaurentPoly);

#[pymethods]
impl PyLaurent {
    /// Parses text such as `"1 + 2*q - q^-1"`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse(text).map(Self)
    }

    #[staticmethod]
    fn from_coeffs(min: i64, coeffs: Vec<i64>) -> Self {
        Self(qrotundus::LaurentPoly::from_coeffs(min, coeffs))
    }

    /// Lowest exponent, `None` for zero.
    #[getter]
    fn min_degree(&self) -> Option<i64> {
        self.0.min_degree()
    }

    #[getter]
    fn max_degree(&self) -> Option<i64> {
        self.0.max_degree()
    }

    /// Coefficients from `min_degree` upward.
    fn coeffs(&self) -> Vec<num_bigint::BigInt> {
        match (self.0.min_degree(), self.0.max_degree()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|e| self.0.coeff(e)).collect(),
            _ => Vec::new(),
        }
    }

    fn coeff(&self, exp: i64) -> num_bigint::BigInt {
        self.0.coeff(exp)
    }

    fn eval(&self, x: i64) -> PyResult<num_bigint::BigInt> {
        self.0
            .eval(x)
            .ok_or_else(|| PyValueError::new_err("negative powers of q at q = 0"))
    }

    fn is_palindromic(&self) -> bool {
        self.0.is_palindromic()
    }

    fn is_unimodal(&self) -> bool {
        self.0.is_unimodal()
    }

    fn mirror(&self) -> PyResult<Self> {
        self.0.mirror().map(Self).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializes")
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        Self(-self.0.clone())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly('{}')", self.0)
    }
}

fn wrap(p: qrotundus::LaurentPoly) -> PyLaurent {
    PyLaurent(p)
}

/// `(num, den)` of `[r/s]_q`.
#[pyfunction]
fn q_rational(x: &str) -> PyResult<(PyLaurent, PyLaurent)> {
    let x: Rational = parse(x)?;
    let (n, d) = if x.is_greater_than_one() && !x.is_infinity() {
        let a = farey::regular_expansion(x).map_err(err)?;
        qcore::qcf_regular(a.as_slice()).map_err(err)?
    } else {
        farey::q_rational_farey(x)
    };
    Ok((wrap(n), wrap(d)))
}

#[pyfunction]
fn regular_cf(x: &str) -> PyResult<Vec<i64>> {
    let x: Rational = parse(x)?;
    Ok(farey::regular_expansion(x).map_err(err)?.as_slice().to_vec())
}

#[pyfunction]
fn negative_cf(x: &str) -> PyResult<Vec<i64>> {
    let x: Rational = parse(x)?;
    Ok(farey::negative_expansion(x).map_err(err)?.as_slice().to_vec())
}

#[pyfunction]
fn continuant_k(a: Vec<i64>) -> PyResult<PyLaurent> {
    qcore::continuant_k(&a).map(wrap).map_err(err)
}

#[pyfunction]
fn continuant_e(c: Vec<i64>) -> PyLaurent {
    wrap(qcore::continuant_e(&c))
}

#[pyfunction]
fn rotundus_plus(a: Vec<i64>) -> PyResult<PyLaurent> {
    qcore::rotundus_plus(&a).map(wrap).map_err(err)
}

#[pyfunction]
fn rotundus_minus(c: Vec<i64>) -> PyResult<PyLaurent> {
    qcore::rotundus_minus(&c).map(wrap).map_err(err)
}

/// Fan triangulation of a polygon attached to an even-length `a`.
#[pyclass(name = "Fan", frozen)]
pub struct PyFan(FanTriangulation);

#[pymethods]
impl PyFan {
    #[new]
    fn new(a: Vec<i64>) -> PyResult<Self> {
        let a = RegularCF::new(a).map_err(err)?;
        Ok(Self(FanTriangulation::from_regular(&a)))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k
    }

    fn quiddity(&self) -> Vec<usize> {
        self.0.quiddity()
    }

    /// `(from, to, exponent)` for every oriented edge.
    fn edges(&self) -> Vec<(usize, usize, i64)> {
        self.0.edges.iter().map(|(&(u, v), &e)| (u, v, e)).collect()
    }

    /// `(vertices, coarea, area, weight)` for every oriented path.
    fn paths(&self, start: usize, end: usize) -> PyResult<Vec<(Vec<usize>, u32, u32, i64)>> {
        let paths = self.0.enumerate_paths(start, end).map_err(err)?;
        Ok(paths
            .into_iter()
            .map(|p| (p.vertices, p.coarea, p.area, p.weight))
            .collect())
    }

    #[pyo3(signature = (start, end, statistic = "coarea"))]
    fn path_poly(&self, start: usize, end: usize, statistic: &str) -> PyResult<PyLaurent> {
        let stat: Statistic = parse(statistic)?;
        self.0.path_generating_poly(start, end, stat).map(wrap).map_err(err)
    }

    #[pyo3(signature = (highlight = None))]
    fn svg(&self, highlight: Option<usize>) -> PyResult<String> {
        svg::render_fan(&self.0, highlight).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializes")
    }
}

/// Triangulated annulus `T+(a)` (`kind="plus"`) or `T-(c)` (`kind="minus"`).
#[pyclass(name = "Annulus", frozen)]
pub struct PyAnnulus(AnnulusTriangulation);

#[pymethods]
impl PyAnnulus {
    #[new]
    fn new(kind: &str, seq: Vec<i64>) -> PyResult<Self> {
        let kind: AnnulusKind = parse(kind)?;
        AnnulusTriangulation::build(kind, &seq).map(Self).map_err(err)
    }

    #[getter]
    fn kind(&self) -> String {
        self.0.kind.to_string()
    }

    /// Marked points on the inner boundary.
    #[getter]
    fn inner(&self) -> usize {
        self.0.k
    }

    #[getter]
    fn outer(&self) -> usize {
        self.0.l
    }

    #[getter]
    fn triangle_count(&self) -> usize {
        self.0.triangles.len()
    }

    /// `(vertex labels, area, coarea)` for every oriented loop.
    fn loops(&self) -> PyResult<Vec<(Vec<usize>, u32, u32)>> {
        let loops = self.0.enumerate_loops().map_err(err)?;
        Ok(loops.into_iter().map(|l| (l.vertices, l.area, l.coarea)).collect())
    }

    #[pyo3(signature = (statistic = "coarea"))]
    fn loop_poly(&self, statistic: &str) -> PyResult<PyLaurent> {
        let stat: LoopStatistic = parse(statistic)?;
        self.0.loop_generating_poly(stat).map(wrap).map_err(err)
    }

    fn matchings(&self) -> PyResult<Vec<String>> {
        let ms = self.0.matchings().map_err(err)?;
        Ok(ms.iter().map(|m| self.0.matching_label(m)).collect())
    }

    fn closure_poly(&self) -> PyResult<PyLaurent> {
        self.0.closure_generating_poly().map(wrap).map_err(err)
    }

    fn is_isomorphic(&self, other: &Self) -> bool {
        self.0.is_isomorphic(&other.0)
    }

    #[pyo3(signature = (highlight = None))]
    fn svg(&self, highlight: Option<usize>) -> PyResult<String> {
        svg::render_annulus(&self.0, highlight).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializes")
    }
}

/// Both determinant identities for `c` as JSON strings, skew first.
#[pyfunction]
fn pfaffian_identities(c: Vec<i64>) -> PyResult<Vec<(String, bool)>> {
    let recs = pfaffian::check_identities(&c).map_err(err)?;
    Ok(recs
        .iter()
        .map(|r| {
            (
                serde_json::to_string(r).expect("serializes"),
                r.status == pfaffian::Status::Confirmed,
            )
        })
        .collect())
}

/// Runs the invariant sweeps; returns `(name, cases, failed)` per check.
#[pyfunction]
#[pyo3(signature = (max_num = 20, max_k = 3, max_c = 4, max_a_sum = 6, max_em_k = 5))]
fn run_verify(
    max_num: u64,
    max_k: usize,
    max_c: i64,
    max_a_sum: i64,
    max_em_k: usize,
) -> Vec<(String, usize, usize)> {
    let cfg = verify::VerifyConfig {
        max_num,
        max_k,
        max_c,
        max_a_sum,
        max_em_k,
    };
    verify::run_all(&cfg)
        .into_iter()
        .map(|c| (c.name.to_string(), c.cases, c.failed))
        .collect()
}

#[pymodule]
fn pyqrot(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurent>()?;
    m.add_class::<PyFan>()?;
    m.add_class::<PyAnnulus>()?;
    m.add_function(wrap_pyfunction!(q_rational, m)?)?;
    m.add_function(wrap_pyfunction!(regular_cf, m)?)?;
    m.add_function(wrap_pyfunction!(negative_cf, m)?)?;
    m.add_function(wrap_pyfunction!(continuant_k, m)?)?;
    m.add_function(wrap_pyfunction!(continuant_e, m)?)?;
    m.add_function(wrap_pyfunction!(rotundus_plus, m)?)?;
    m.add_function(wrap_pyfunction!(rotundus_minus, m)?)?;
    m.add_function(wrap_pyfunction!(pfaffian_identities, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
