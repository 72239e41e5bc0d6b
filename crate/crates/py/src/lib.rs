//! Python bindings. Reports and witnesses are returned as JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use amitsur_core::algebra::{
    cyclic_group_table, field_ext_algebra, group_extension, matrix_algebra,
    upper_triangular_over_diagonal, Extension as CoreExtension, HopfData,
};
use amitsur_core::amitsur::AmitsurComplex as CoreAmitsur;
use amitsur_core::commands::hopf_compare as core_hopf_compare;
use amitsur_core::coring::{build_f2, endo_coring, hopf_coring, sweedler_coring};
use amitsur_core::hochschild::CochainComplex as CoreCochains;
use amitsur_core::io::{parse_extension, parse_hopf, to_json, ExtensionJson};
use amitsur_core::iso::verify_isomorphism_for;
use amitsur_core::relative::RelativeTensor;
use amitsur_core::simplicial::{
    gs_compare as core_gs, parse_complex, simplicial_cohomology as core_simplicial,
};
use amitsur_core::{corpus, FieldSpec};

fn err(e: amitsur_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(p: u64) -> PyResult<FieldSpec> {
    FieldSpec::new(p).map_err(err)
}

fn rows(m: &amitsur_core::linalg::Matrix) -> Vec<Vec<u32>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

/// An algebra extension `B -> A` over a prime field.
#[pyclass(frozen)]
#[derive(Clone)]
struct Extension {
    inner: CoreExtension,
}

#[pymethods]
impl Extension {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Extension {
            inner: parse_extension(text).map_err(err)?,
        })
    }

    /// A member of the bundled corpus, e.g. `"m2-gf5"`.
    #[staticmethod]
    fn corpus(name: &str) -> PyResult<Self> {
        corpus::extension(name)
            .map(|inner| Extension { inner })
            .ok_or_else(|| PyValueError::new_err(format!("unknown corpus entry {name}")))
    }

    #[staticmethod]
    fn matrix_algebra(p: u64, n: usize) -> PyResult<Self> {
        Ok(Extension {
            inner: CoreExtension::over_ground(matrix_algebra(field(p)?, n)),
        })
    }

    #[staticmethod]
    fn upper_triangular(p: u64, n: usize) -> PyResult<Self> {
        Ok(Extension {
            inner: upper_triangular_over_diagonal(field(p)?, n).map_err(err)?,
        })
    }

    /// `k[C_n]` over the subgroup given by its elements.
    #[staticmethod]
    #[pyo3(signature = (p, n, subgroup = vec![0]))]
    fn cyclic_group(p: u64, n: usize, subgroup: Vec<usize>) -> PyResult<Self> {
        Ok(Extension {
            inner: group_extension(field(p)?, &cyclic_group_table(n), &subgroup).map_err(err)?,
        })
    }

    /// `GF(p)[x]/(poly)` over `GF(p)`, coefficients low degree first.
    #[staticmethod]
    fn field_extension(p: u64, poly: Vec<u32>) -> PyResult<Self> {
        Ok(Extension {
            inner: CoreExtension::over_ground(field_ext_algebra(field(p)?, &poly).map_err(err)?),
        })
    }

    #[getter]
    fn prime(&self) -> u32 {
        self.inner.field().characteristic()
    }
    #[getter]
    fn dim_a(&self) -> usize {
        self.inner.ambient().dim()
    }
    #[getter]
    fn dim_b(&self) -> usize {
        self.inner.sub().dim()
    }

    /// Violated axioms, empty when valid.
    fn validate(&self) -> Vec<String> {
        self.inner
            .validate()
            .violations
            .iter()
            .map(|v| format!("{v:?}"))
            .collect()
    }

    fn to_json(&self) -> String {
        to_json(&ExtensionJson::from_extension(&self.inner))
    }

    fn __repr__(&self) -> String {
        format!(
            "Extension(GF({}), dim A = {}, dim B = {})",
            self.prime(),
            self.dim_a(),
            self.dim_b()
        )
    }
}

/// Relative Hochschild cochains `C^0 .. C^N`.
#[pyclass(frozen)]
struct CochainComplex {
    inner: CoreCochains,
}

#[pymethods]
impl CochainComplex {
    #[new]
    fn new(ext: &Extension, max_degree: usize) -> PyResult<Self> {
        Ok(CochainComplex {
            inner: CoreCochains::build(&ext.inner, max_degree).map_err(err)?,
        })
    }

    fn dims(&self) -> Vec<usize> {
        self.inner.dims()
    }

    fn cohomology_dims(&self) -> Vec<usize> {
        self.inner.cohomology_dims()
    }

    /// The matrix of `delta^n` as a list of rows.
    fn delta(&self, n: usize) -> PyResult<Vec<Vec<u32>>> {
        if n >= self.inner.max_degree() {
            return Err(PyValueError::new_err("degree out of range"));
        }
        Ok(rows(self.inner.delta(n)))
    }

    #[pyo3(signature = (trials = 50, seed = 0))]
    fn verify_dga(&self, trials: usize, seed: u64) -> PyResult<bool> {
        Ok(self
            .inner
            .verify_dga(trials, &mut ChaCha8Rng::seed_from_u64(seed))
            .map_err(err)?
            .passed())
    }

    /// The `f_2` certificate as JSON.
    fn d2_certificate(&self) -> PyResult<String> {
        Ok(to_json(&build_f2(&self.inner).map_err(err)?))
    }
}

/// The Amitsur complex of a coring with grouplike.
#[pyclass(frozen)]
struct AmitsurComplex {
    inner: CoreAmitsur,
}

#[pymethods]
impl AmitsurComplex {
    /// Over the endomorphism coring; fails without a depth-two certificate.
    #[staticmethod]
    fn endo(ext: &Extension, max_degree: usize) -> PyResult<Self> {
        let cc = CoreCochains::build(&ext.inner, 2).map_err(err)?;
        let (c, _) = endo_coring(&cc).map_err(err)?;
        Ok(AmitsurComplex {
            inner: CoreAmitsur::build(&c, max_degree).map_err(err)?,
        })
    }

    #[staticmethod]
    fn sweedler(ext: &Extension, max_degree: usize) -> PyResult<Self> {
        let rt = RelativeTensor::build(&ext.inner, 2).map_err(err)?;
        let c = sweedler_coring(&rt).map_err(err)?;
        Ok(AmitsurComplex {
            inner: CoreAmitsur::build(&c, max_degree).map_err(err)?,
        })
    }

    /// The cobar complex of a bialgebra given as JSON (or of its dual).
    #[staticmethod]
    #[pyo3(signature = (hopf_json, max_degree, dual = false))]
    fn hopf(hopf_json: &str, max_degree: usize, dual: bool) -> PyResult<Self> {
        let mut h: HopfData = parse_hopf(hopf_json).map_err(err)?;
        if dual {
            h = amitsur_core::algebra::dual_hopf(&h).map_err(err)?;
        }
        let c = hopf_coring(&h).map_err(err)?;
        Ok(AmitsurComplex {
            inner: CoreAmitsur::build(&c, max_degree).map_err(err)?,
        })
    }

    fn dims(&self) -> Vec<usize> {
        self.inner.dims()
    }

    fn cohomology_dims(&self) -> Vec<usize> {
        self.inner.cohomology_dims()
    }

    fn differential(&self, n: usize) -> PyResult<Vec<Vec<u32>>> {
        if n >= self.inner.max_degree() {
            return Err(PyValueError::new_err("degree out of range"));
        }
        Ok(rows(self.inner.differential(n)))
    }

    #[pyo3(signature = (trials = 50, seed = 0))]
    fn verify_dga(&self, trials: usize, seed: u64) -> bool {
        self.inner
            .verify_dga(trials, &mut ChaCha8Rng::seed_from_u64(seed))
            .passed()
    }
}

/// Returns `(passed, witness_json)`.
#[pyfunction]
#[pyo3(signature = (ext, max_degree = 3, trials = 50, seed = 0))]
fn verify_isomorphism(
    ext: &Extension,
    max_degree: usize,
    trials: usize,
    seed: u64,
) -> PyResult<(bool, String)> {
    let w = verify_isomorphism_for(&ext.inner, max_degree, trials, seed).map_err(err)?;
    Ok((w.passed(), to_json(&w)))
}

#[pyfunction]
#[pyo3(signature = (facets, p = 5, max_n = 1))]
fn simplicial_cohomology(facets: &str, p: u64, max_n: usize) -> PyResult<Vec<usize>> {
    let s = parse_complex(facets).map_err(err)?;
    Ok(core_simplicial(&s, field(p)?, max_n))
}

/// Returns `(hochschild, simplicial)` dimension lists.
#[pyfunction]
#[pyo3(signature = (facets, p = 5, max_n = 1, cap = 20))]
fn gs_compare(
    facets: &str,
    p: u64,
    max_n: usize,
    cap: usize,
) -> PyResult<(Vec<usize>, Vec<usize>)> {
    let s = parse_complex(facets).map_err(err)?;
    let r = core_gs(&s, field(p)?, max_n, cap).map_err(err)?;
    Ok((r.hochschild, r.simplicial))
}

/// JSON with both sides of the bialgebra comparison.
#[pyfunction]
#[pyo3(signature = (hopf_json, max_degree = 4))]
fn hopf_compare(hopf_json: &str, max_degree: usize) -> PyResult<String> {
    let h = parse_hopf(hopf_json).map_err(err)?;
    Ok(to_json(&core_hopf_compare(&h, max_degree).map_err(err)?))
}

#[pymodule]
fn amitsur(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Extension>()?;
    m.add_class::<CochainComplex>()?;
    m.add_class::<AmitsurComplex>()?;
    m.add_function(wrap_pyfunction!(verify_isomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(simplicial_cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(gs_compare, m)?)?;
    m.add_function(wrap_pyfunction!(hopf_compare, m)?)?;
    m.add("CORPUS_EXTENSIONS", corpus::EXTENSIONS.to_vec())?;
    Ok(())
}
