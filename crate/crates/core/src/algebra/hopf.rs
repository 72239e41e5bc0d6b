use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

use super::{group_algebra, FinDimAlgebra};

/// A finite-dimensional bialgebra (the antipode is never used, so it is not stored).
///
/// `coproduct` is the `d^2 x d` matrix of `K -> K (x) K`, where the tensor
/// index of `e_i (x) e_j` is `i * d + j`; `counit` is a row of length `d`.
#[derive(Clone, Debug)]
pub struct HopfData {
    algebra: FinDimAlgebra,
    coproduct: Matrix,
    counit: Vec<u32>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HopfReport {
    pub algebra_violations: Vec<super::Violation>,
    pub failures: Vec<String>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.algebra_violations.is_empty() && self.failures.is_empty()
    }
}

impl HopfData {
    pub fn new(algebra: FinDimAlgebra, coproduct: Matrix, counit: Vec<u32>) -> Result<Self> {
        let d = algebra.dim();
        if coproduct.rows() != d * d || coproduct.cols() != d || counit.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "coproduct must be {}x{d} and counit of length {d}",
                d * d
            )));
        }
        Ok(HopfData {
            algebra,
            coproduct,
            counit,
        })
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }
    pub fn coproduct(&self) -> &Matrix {
        &self.coproduct
    }
    pub fn counit(&self) -> &[u32] {
        &self.counit
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    fn tensor_mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let a = &self.algebra;
        let d = a.dim();
        let f = a.field();
        let mut out = vec![0u32; d * d];
        for (ab, &xv) in x.iter().enumerate() {
            if xv == 0 {
                continue;
            }
            for (cd, &yv) in y.iter().enumerate() {
                if yv == 0 {
                    continue;
                }
                let left = a.mul(&a.basis_vector(ab / d), &a.basis_vector(cd / d));
                let right = a.mul(&a.basis_vector(ab % d), &a.basis_vector(cd % d));
                let c = f.mul(xv, yv);
                for (i, &l) in left.iter().enumerate() {
                    if l == 0 {
                        continue;
                    }
                    for (j, &r) in right.iter().enumerate() {
                        if r != 0 {
                            out[i * d + j] = f.add(out[i * d + j], f.mul(c, f.mul(l, r)));
                        }
                    }
                }
            }
        }
        out
    }

    /// Algebra axioms, coassociativity, counit laws, and the bialgebra compatibilities.
    pub fn validate(&self) -> HopfReport {
        let a = &self.algebra;
        let f = a.field();
        let d = a.dim();
        let mut failures = Vec::new();
        let id = Matrix::identity(f, d);
        let delta = &self.coproduct;
        let eps_row = Matrix::from_row_vecs(f, d, std::slice::from_ref(&self.counit));
        if delta.kron(&id).mul(delta) != id.kron(delta).mul(delta) {
            failures.push("coassociativity".to_string());
        }
        if eps_row.kron(&id).mul(delta) != id {
            failures.push("left counit law".to_string());
        }
        if id.kron(&eps_row).mul(delta) != id {
            failures.push("right counit law".to_string());
        }
        for i in 0..d {
            for j in 0..d {
                let (ei, ej) = (a.basis_vector(i), a.basis_vector(j));
                let prod = a.mul(&ei, &ej);
                let lhs = delta.mul_vec(&prod);
                let rhs = self.tensor_mul(&delta.column(i), &delta.column(j));
                if lhs != rhs {
                    failures.push(format!("coproduct not multiplicative at ({i}, {j})"));
                }
                let eps = |v: &[u32]| f.dot(&self.counit, v);
                if eps(&prod) != f.mul(self.counit[i], self.counit[j]) {
                    failures.push(format!("counit not multiplicative at ({i}, {j})"));
                }
            }
        }
        let unit = a.unit();
        let mut unit_sq = vec![0u32; d * d];
        for i in 0..d {
            for j in 0..d {
                unit_sq[i * d + j] = f.mul(unit[i], unit[j]);
            }
        }
        if delta.mul_vec(unit) != unit_sq {
            failures.push("unit is not grouplike".to_string());
        }
        if f.dot(&self.counit, unit) != 1 {
            failures.push("counit of unit is not 1".to_string());
        }
        HopfReport {
            algebra_violations: a.validate().violations,
            failures,
        }
    }
}

/// `k[G]` with `Delta(g) = g (x) g`, `eps(g) = 1`.
pub fn group_hopf(field: crate::field::FieldSpec, table: &[Vec<usize>]) -> Result<HopfData> {
    let algebra = group_algebra(field, table)?;
    let d = algebra.dim();
    let mut coproduct = Matrix::zeros(field, d * d, d);
    for g in 0..d {
        coproduct.set(g * d + g, g, 1);
    }
    HopfData::new(algebra, coproduct, vec![1; d])
}

/// The dual bialgebra on the dual basis: its product is the transpose of the
/// coproduct, its coproduct the transpose of the product, and unit and counit swap.
pub fn dual_hopf(h: &HopfData) -> Result<HopfData> {
    let a = h.algebra();
    let f = a.field();
    let d = a.dim();
    let names = a.basis_names().iter().map(|n| format!("{n}*")).collect();
    let delta = h.coproduct();
    let algebra = FinDimAlgebra::from_products(f, names, h.counit().to_vec(), |i, j| {
        (0..d).map(|k| delta.get(i * d + j, k)).collect()
    })?;
    let mut coproduct = Matrix::zeros(f, d * d, d);
    for i in 0..d {
        for j in 0..d {
            let prod = a.mul(&a.basis_vector(i), &a.basis_vector(j));
            for (k, &c) in prod.iter().enumerate() {
                coproduct.set(i * d + j, k, c);
            }
        }
    }
    let dual = HopfData::new(algebra, coproduct, a.unit().to_vec())?;
    let report = dual.validate();
    if !report.passed() {
        return Err(Error::AxiomFailure(format!(
            "dual fails bialgebra axioms: {:?} {:?}",
            report.algebra_violations, report.failures
        )));
    }
    Ok(dual)
}
