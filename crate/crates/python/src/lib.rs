//! Python bindings. Rationals cross the boundary as `"p/q"` strings (or
//! Python ints), so nothing is rounded on the way in or out.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fusion_sos::exactcore::scalar;
use fusion_sos::lattice::LatticeSpec;
use fusion_sos::sos::WeightQuery;
use fusion_sos::{correspondence, elevenvertex, fusion, lattice, sos, suite, vertex};

fn err(e: fusion_sos::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Accepts `int` or a `"p/q"` string.
#[derive(FromPyObject)]
enum Rational {
    Int(i64),
    Text(String),
}

impl Rational {
    fn get(&self) -> PyResult<fusion_sos::Scalar> {
        match self {
            Rational::Int(i) => Ok(scalar::int(*i)),
            Rational::Text(s) => scalar::parse(s).map_err(err),
        }
    }
}

#[pyclass(name = "ModelParams", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyModelParams(vertex::ModelParams);

#[pymethods]
impl PyModelParams {
    #[new]
    #[pyo3(signature = (alpha = Rational::Int(1), s = None, t = None))]
    fn new(alpha: Rational, s: Option<Rational>, t: Option<Rational>) -> PyResult<Self> {
        let d = vertex::ModelParams::default();
        let s = s.map(|x| x.get()).transpose()?.unwrap_or(d.s);
        let t = t.map(|x| x.get()).transpose()?.unwrap_or(d.t);
        Ok(PyModelParams(vertex::ModelParams::new(alpha.get()?, s, t).map_err(err)?))
    }

    /// `s = 2w`, `t = 0`.
    #[staticmethod]
    #[pyo3(signature = (w, alpha = Rational::Int(1)))]
    fn with_w(w: Rational, alpha: Rational) -> PyResult<Self> {
        Ok(PyModelParams(vertex::ModelParams::with_w(alpha.get()?, w.get()?).map_err(err)?))
    }

    #[getter]
    fn alpha(&self) -> String {
        scalar::format(&self.0.alpha)
    }

    #[getter]
    fn s(&self) -> String {
        scalar::format(&self.0.s)
    }

    #[getter]
    fn t(&self) -> String {
        scalar::format(&self.0.t)
    }

    #[getter]
    fn w(&self) -> String {
        scalar::format(&self.0.w())
    }

    fn __repr__(&self) -> String {
        format!("ModelParams(alpha={}, s={}, t={})", self.alpha(), self.s(), self.t())
    }
}

#[pyclass(name = "Matrix", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMatrix(fusion_sos::Matrix);

#[pymethods]
impl PyMatrix {
    /// From a list of rows of ints / `"p/q"` strings.
    #[new]
    fn new(rows: Vec<Vec<Rational>>) -> PyResult<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(Rational::get).collect::<PyResult<Vec<_>>>())
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyMatrix(fusion_sos::Matrix::from_rows(rows).map_err(err)?))
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyMatrix(fusion_sos::Matrix::identity(n))
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        self.0.shape()
    }

    fn entries(&self) -> Vec<Vec<String>> {
        (0..self.0.rows()).map(|i| self.0.row(i).iter().map(scalar::format).collect()).collect()
    }

    fn get(&self, i: usize, j: usize) -> PyResult<String> {
        if i >= self.0.rows() || j >= self.0.cols() {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(scalar::format(&self.0[(i, j)]))
    }

    fn __matmul__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        Ok(PyMatrix(self.0.mat_mul(&other.0).map_err(err)?))
    }

    fn kron(&self, other: &PyMatrix) -> PyMatrix {
        PyMatrix(self.0.kron(&other.0))
    }

    fn transpose(&self) -> PyMatrix {
        PyMatrix(self.0.transpose())
    }

    fn determinant(&self) -> PyResult<String> {
        Ok(scalar::format(&self.0.determinant().map_err(err)?))
    }

    /// Exact solve of `self · x = rhs`.
    fn solve(&self, rhs: &PyMatrix) -> PyResult<PyMatrix> {
        Ok(PyMatrix(self.0.solve_exact(&rhs.0).map_err(err)?))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("matrix serializes")
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<PyMatrix> {
        serde_json::from_str(text).map(PyMatrix).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("Matrix({:?})", self.entries())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

fn params_or_default(p: Option<&PyModelParams>) -> vertex::ModelParams {
    p.map(|p| p.0.clone()).unwrap_or_default()
}

/// Seven-vertex R-matrix.
#[pyfunction]
#[pyo3(signature = (u, params = None))]
fn r7v(u: Rational, params: Option<&PyModelParams>) -> PyResult<PyMatrix> {
    Ok(PyMatrix(vertex::r7v(&u.get()?, &params_or_default(params))))
}

/// Eleven-vertex R-matrix at spectral difference `d`.
#[pyfunction]
#[pyo3(signature = (d, params = None))]
fn r11v(d: Rational, params: Option<&PyModelParams>) -> PyResult<PyMatrix> {
    Ok(PyMatrix(elevenvertex::r11v(&d.get()?, &params_or_default(params))))
}

/// Fused R-matrix `R^(n,m)(u)`.
#[pyfunction]
#[pyo3(signature = (n, m, u, params = None))]
fn fuse(n: usize, m: usize, u: Rational, params: Option<&PyModelParams>) -> PyResult<PyMatrix> {
    Ok(PyMatrix(fusion::fuse_nm(n, m, &u.get()?, &params_or_default(params))))
}

/// Yang-Baxter check for three operators on spaces of the given dimensions.
#[pyfunction]
fn check_ybe(r12: &PyMatrix, r13: &PyMatrix, r23: &PyMatrix, dims: (usize, usize, usize)) -> PyResult<bool> {
    vertex::check_ybe_triple(&r12.0, &r13.0, &r23.0, dims).map_err(err)
}

/// `W^(n,m)(a,b;b',c|u)`; `method` is `"sum"`, `"hyper"` or `"solve"`.
#[pyfunction]
#[pyo3(signature = (n, m, a, b, bprime, c, u, params, method = "sum"))]
#[allow(clippy::too_many_arguments)]
fn weight(
    n: usize,
    m: usize,
    a: i64,
    b: i64,
    bprime: i64,
    c: i64,
    u: Rational,
    params: &PyModelParams,
    method: &str,
) -> PyResult<String> {
    let q = WeightQuery::new(n, m, [a, b, bprime, c], u.get()?);
    let p = &params.0;
    let v = match method {
        "sum" => sos::w_nm_sum(&q, p),
        "hyper" => sos::w_nm_hypergeometric(&q, p),
        "solve" => {
            if !q.is_valid() {
                Ok(fusion_sos::Scalar::default())
            } else {
                correspondence::solve_weights_from_relation(n, m, a, b, c, &q.u, p)
                    .map(|t| t.get(&bprime).cloned().unwrap_or_default())
            }
        }
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    Ok(scalar::format(&v.map_err(err)?))
}

/// Periodic-lattice partition function; `model` is `"vertex"` or `"sos"`.
#[pyfunction]
#[pyo3(signature = (model, cols, rows, u, params, n = 1, m = 1, window = (-2, 2)))]
#[allow(clippy::too_many_arguments)]
fn partition(
    model: &str,
    cols: usize,
    rows: usize,
    u: Rational,
    params: &PyModelParams,
    n: usize,
    m: usize,
    window: (i64, i64),
) -> PyResult<String> {
    let spec = LatticeSpec { cols, rows, n, m, u: u.get()? };
    let v = match model {
        "vertex" => lattice::partition_vertex_transfer(&spec, &params.0),
        "sos" => lattice::partition_sos(&spec, window.0, window.1, &params.0),
        other => return Err(PyValueError::new_err(format!("unknown model {other:?}"))),
    };
    Ok(scalar::format(&v.map_err(err)?))
}

/// Runs the standard identity battery; returns `(name, passed, cases)`.
#[pyfunction]
#[pyo3(signature = (ids = None))]
fn verify(py: Python<'_>, ids: Option<Vec<usize>>) -> Vec<(String, bool, usize)> {
    py.detach(|| {
        suite::standard()
            .into_iter()
            .filter(|c| ids.as_ref().is_none_or(|ids| ids.contains(&c.id)))
            .map(|c| {
                let o = (c.run)();
                (o.name.clone(), o.passed(), o.cases)
            })
            .collect()
    })
}

#[pymodule]
fn fusion_sos_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyModelParams>()?;
    m.add_class::<PyMatrix>()?;
    m.add_function(wrap_pyfunction!(r7v, m)?)?;
    m.add_function(wrap_pyfunction!(r11v, m)?)?;
    m.add_function(wrap_pyfunction!(fuse, m)?)?;
    m.add_function(wrap_pyfunction!(check_ybe, m)?)?;
    m.add_function(wrap_pyfunction!(weight, m)?)?;
    m.add_function(wrap_pyfunction!(partition, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
