//! Python bindings: semigroups, curve analysis, triangulation and codes.

use std::sync::Mutex;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use weierstrass_core::approx_roots::{analyze_curve, CurveAnalysis};
use weierstrass_core::branch::{parametrize, valuation_by_resultant, BranchParam};
use weierstrass_core::codes::{build_code, CodeSpec, EvaluationSet};
use weierstrass_core::parse::parse_poly;
use weierstrass_core::semigroup::{NumericalSemigroup, TelescopicStructure};
use weierstrass_core::weierstrass::{
    parse_integral_basis, triangulate, FunctionTable, TriangulationMode, TriangulationReport,
};
use weierstrass_core::{Error, ErrorClass, FiniteField};

create_exception!(weierstrass, WeierstrassError, PyException);
create_exception!(weierstrass, InputError, WeierstrassError);
create_exception!(weierstrass, PreconditionError, WeierstrassError);
create_exception!(weierstrass, InconsistencyError, WeierstrassError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e.class() {
        ErrorClass::Input => InputError::new_err(msg),
        ErrorClass::Precondition => PreconditionError::new_err(msg),
        ErrorClass::Inconsistency => InconsistencyError::new_err(msg),
    }
}

trait IntoPy<T> {
    fn py_err(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for Result<T, Error> {
    fn py_err(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

#[pyclass(name = "Semigroup", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySemigroup {
    inner: NumericalSemigroup,
}

#[pymethods]
impl PySemigroup {
    #[new]
    #[pyo3(signature = (gens, pivot = None))]
    fn new(gens: Vec<u64>, pivot: Option<u64>) -> PyResult<Self> {
        let inner = match pivot {
            Some(e) => NumericalSemigroup::with_pivot(&gens, e),
            None => NumericalSemigroup::from_generators(&gens),
        }
        .py_err()?;
        Ok(PySemigroup { inner })
    }

    #[getter]
    fn generators(&self) -> Vec<u64> {
        self.inner.generators().to_vec()
    }

    #[getter]
    fn pivot(&self) -> u64 {
        self.inner.pivot()
    }

    #[getter]
    fn apery(&self) -> Vec<u64> {
        self.inner.apery().to_vec()
    }

    #[getter]
    fn genus(&self) -> u64 {
        self.inner.genus()
    }

    #[getter]
    fn conductor(&self) -> u64 {
        self.inner.conductor()
    }

    #[getter]
    fn multiplicity(&self) -> u64 {
        self.inner.multiplicity()
    }

    #[getter]
    fn gaps(&self) -> Vec<u64> {
        self.inner.gaps()
    }

    fn is_symmetric(&self) -> bool {
        self.inner.is_symmetric()
    }

    fn __contains__(&self, m: u64) -> bool {
        self.inner.contains(m)
    }

    fn nu(&self, m: u64) -> PyResult<u64> {
        self.inner.nu(m).py_err()
    }

    fn nu_bruteforce(&self, m: u64) -> PyResult<u64> {
        self.inner.nu_bruteforce(m).py_err()
    }

    fn feng_rao(&self, m: u64) -> PyResult<u64> {
        self.inner.feng_rao(m).py_err()
    }

    fn feng_rao_bruteforce(&self, m: u64) -> PyResult<u64> {
        self.inner.feng_rao_bruteforce(m).py_err()
    }

    fn feng_rao_symmetric(&self, m: u64) -> PyResult<u64> {
        self.inner.feng_rao_symmetric(m).py_err()
    }

    fn delta_gap(&self, q: u64) -> PyResult<u64> {
        self.inner.delta_gap(q).py_err()
    }

    /// `(q0, m0)` of a symmetric semigroup.
    fn q0_m0(&self) -> PyResult<(i64, i64)> {
        let r = self.inner.q0_m0().py_err()?;
        Ok((r.q0, r.m0))
    }

    fn min_formula_threshold(&self) -> u64 {
        self.inner.min_formula_threshold()
    }

    fn adjoin(&self, b: u64) -> Self {
        PySemigroup { inner: self.inner.adjoin(b) }
    }

    fn __repr__(&self) -> String {
        format!("Semigroup({})", self.inner)
    }
}

/// The unique bounded representation of `m` over telescopic generators.
#[pyfunction]
fn telescopic_repr(gens: Vec<u64>, m: u64) -> PyResult<Vec<u64>> {
    TelescopicStructure::new(&gens).and_then(|t| t.repr(m)).py_err()
}

#[pyfunction]
fn telescopic_apery(gens: Vec<u64>) -> PyResult<Vec<u64>> {
    Ok(TelescopicStructure::new(&gens).py_err()?.apery())
}

#[pyclass(name = "Curve", frozen)]
struct PyCurve {
    field: FiniteField,
    analysis: CurveAnalysis,
    oracle: Mutex<Option<BranchParam>>,
}

impl PyCurve {
    fn with_oracle<T>(&self, f: impl FnOnce(&mut BranchParam) -> Result<T, Error>) -> PyResult<T> {
        let mut guard = self.oracle.lock().unwrap();
        if guard.is_none() {
            *guard = Some(parametrize(&self.analysis.model, 16).py_err()?);
        }
        f(guard.as_mut().unwrap()).py_err()
    }
}

#[pymethods]
impl PyCurve {
    #[new]
    fn new(field: &str, equation: &str) -> PyResult<Self> {
        let field = FiniteField::parse(field).py_err()?;
        let poly = parse_poly(&field, equation).py_err()?;
        let analysis = analyze_curve(&poly).py_err()?;
        Ok(PyCurve { field, analysis, oracle: Mutex::new(None) })
    }

    #[getter]
    fn substitution(&self) -> Option<u32> {
        self.analysis.model.substitution()
    }

    #[getter]
    fn model(&self) -> String {
        self.analysis.model.equation().to_string()
    }

    #[getter]
    fn h(&self) -> usize {
        self.analysis.sequence.h
    }

    #[getter]
    fn delta(&self) -> Vec<u64> {
        self.analysis.sequence.delta.clone()
    }

    #[getter]
    fn d(&self) -> Vec<u64> {
        self.analysis.sequence.d.clone()
    }

    #[getter]
    fn roots(&self) -> Vec<String> {
        self.analysis.sequence.roots.iter().map(|r| r.to_string()).collect()
    }

    #[getter]
    fn one_branch(&self) -> bool {
        self.analysis.verdict.is_one_branch()
    }

    #[getter]
    fn verdict(&self) -> String {
        self.analysis.verdict.to_string()
    }

    #[getter]
    fn semigroup_at_infinity(&self) -> Option<PySemigroup> {
        self.analysis.semigroup.as_ref().map(|sp| PySemigroup { inner: sp.semigroup() })
    }

    /// Pole order at the branch at infinity of a polynomial in model coordinates.
    fn pole_order(&self, poly: &str) -> PyResult<i64> {
        let g = parse_poly(&self.field, poly).py_err()?;
        self.with_oracle(|o| o.valuation_poly(&g).map(|v| v.pole_order()))
    }

    /// `deg_X Res_Y(F, g)` for a polynomial in model coordinates.
    fn resultant_degree(&self, poly: &str) -> PyResult<u64> {
        let g = parse_poly(&self.field, poly).py_err()?;
        valuation_by_resultant(&self.analysis.model, &g).py_err()
    }

    /// Triangulates against an integral basis given as `num / den` strings
    /// in model coordinates.
    #[pyo3(signature = (basis = None, mode = "fast"))]
    fn triangulate(&self, basis: Option<Vec<String>>, mode: &str) -> PyResult<PyWeierstrass> {
        let Some(sp) = self.analysis.semigroup.clone() else {
            return Err(to_py(Error::NotOneBranch(self.analysis.verdict.to_string())));
        };
        let mode = match mode {
            "fast" => TriangulationMode::Fast,
            "plain" => TriangulationMode::Plain,
            other => return Err(to_py(Error::InvalidArgument(format!("unknown mode `{other}`")))),
        };
        let basis = parse_integral_basis(&self.field, &basis.unwrap_or_default().join("\n")).py_err()?;
        let mut oracle = parametrize(&self.analysis.model, 16).py_err()?;
        let (report, table) = triangulate(&sp, &basis, &mut oracle, mode).py_err()?;
        Ok(PyWeierstrass { report, table, oracle: Mutex::new(oracle) })
    }

    fn __repr__(&self) -> String {
        format!("Curve({} over {})", self.analysis.model.original(), self.field)
    }
}

#[pyclass(name = "Weierstrass", frozen)]
struct PyWeierstrass {
    report: TriangulationReport,
    table: FunctionTable,
    oracle: Mutex<BranchParam>,
}

#[pymethods]
impl PyWeierstrass {
    #[getter]
    fn semigroup_at_infinity(&self) -> PySemigroup {
        PySemigroup { inner: self.report.s_p.clone() }
    }

    #[getter]
    fn semigroup(&self) -> PySemigroup {
        PySemigroup { inner: self.report.gamma.clone() }
    }

    #[getter]
    fn genus(&self) -> u64 {
        self.report.genus
    }

    #[getter]
    fn added_values(&self) -> Vec<u64> {
        self.report.added_values.clone()
    }

    #[getter]
    fn escaped_values(&self) -> Vec<u64> {
        self.report.escaped_values.clone()
    }

    /// `(value, function)` pairs spanning L(mP).
    fn lbasis(&self, m: u64) -> PyResult<Vec<(u64, String)>> {
        let mut oracle = self.oracle.lock().unwrap();
        let basis = self.table.l_basis(m, &mut oracle).py_err()?;
        Ok(basis.into_iter().map(|f| (f.value, f.function.to_string())).collect())
    }

    /// The code C(m) on the affine points over GF(p^ext).
    #[pyo3(signature = (m, ext = 1, improved = false))]
    fn code(&self, m: u64, ext: u32, improved: bool) -> PyResult<PyCode> {
        let base = self.table.modulus().field();
        let field = FiniteField::new(base.characteristic(), base.degree() * ext).py_err()?;
        let points = EvaluationSet::for_table(&self.table, &field).py_err()?;
        let spec = build_code(&self.table, &points, m, improved).py_err()?;
        Ok(PyCode { spec })
    }
}

#[pyclass(name = "Code", frozen)]
struct PyCode {
    spec: CodeSpec,
}

#[pymethods]
impl PyCode {
    #[getter]
    fn n(&self) -> usize {
        self.spec.n
    }

    #[getter]
    fn k(&self) -> usize {
        self.spec.k
    }

    #[getter]
    fn rank(&self) -> usize {
        self.spec.rank
    }

    #[getter]
    fn d_star(&self) -> i64 {
        self.spec.goppa
    }

    #[getter]
    fn feng_rao(&self) -> u64 {
        self.spec.feng_rao
    }

    #[getter]
    fn row_values(&self) -> Vec<u64> {
        self.spec.row_values.clone()
    }

    /// Parity-check matrix as integer element codes.
    #[getter]
    fn matrix(&self) -> Vec<Vec<u32>> {
        self.spec.matrix.clone()
    }

    fn known_syndromes(&self, word: Vec<u32>) -> PyResult<Vec<u32>> {
        self.spec.known_syndromes(&word).py_err()
    }

    fn dual_basis(&self) -> Vec<Vec<u32>> {
        self.spec.dual_basis()
    }

    fn min_distance(&self) -> Option<usize> {
        self.spec.min_distance_exhaustive()
    }
}

#[pymodule]
fn weierstrass(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}

/// Adds every class, function and exception to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PySemigroup>()?;
    m.add_class::<PyCurve>()?;
    m.add_class::<PyWeierstrass>()?;
    m.add_class::<PyCode>()?;
    m.add_function(wrap_pyfunction!(telescopic_repr, m)?)?;
    m.add_function(wrap_pyfunction!(telescopic_apery, m)?)?;
    m.add("WeierstrassError", py.get_type::<WeierstrassError>())?;
    m.add("InputError", py.get_type::<InputError>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    m.add("InconsistencyError", py.get_type::<InconsistencyError>())?;
    Ok(())
}
