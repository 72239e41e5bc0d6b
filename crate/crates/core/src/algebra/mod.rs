//! Finite-dimensional associative algebras given by structure constants,
//! algebra extensions `B -> A`, and Hopf algebra data.

mod generators;
mod hopf;
mod poly;

pub use generators::{
    cyclic_group_table, field_ext_algebra, group_algebra, group_extension, matrix_algebra,
    symmetric_group_table, upper_triangular, upper_triangular_over_diagonal,
};
pub use hopf::{dual_hopf, group_hopf, HopfData};
pub use poly::is_irreducible;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{kernel_basis, Matrix, Subspace};

/// Structure constants: `structure[i][j]` lists `(k, c)` with `e_i e_j = sum c e_k`.
pub type StructureConstants = Vec<Vec<Vec<(usize, u32)>>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    field: FieldSpec,
    basis_names: Vec<String>,
    structure: StructureConstants,
    unit: Vec<u32>,
}

/// A single violated identity found by [`FinDimAlgebra::validate`] or
/// [`Extension::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    LeftUnit {
        i: usize,
    },
    RightUnit {
        i: usize,
    },
    InclusionNotInjective {
        rank: usize,
    },
    InclusionUnit,
    InclusionNotMultiplicative {
        i: usize,
        j: usize,
    },
    FieldMismatch,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FinDimAlgebra {
    /// Checks shapes and ranges only; use [`validate`](Self::validate) for the axioms.
    pub fn new(
        field: FieldSpec,
        basis_names: Vec<String>,
        structure: StructureConstants,
        unit: Vec<u32>,
    ) -> Result<Self> {
        let d = basis_names.len();
        if structure.len() != d || structure.iter().any(|row| row.len() != d) {
            return Err(Error::DimensionMismatch(format!(
                "structure constants must be {d}x{d}"
            )));
        }
        if unit.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "unit has length {}, expected {d}",
                unit.len()
            )));
        }
        let p = field.characteristic();
        for row in &structure {
            for entry in row {
                for &(k, c) in entry {
                    if k >= d || c >= p {
                        return Err(Error::InvalidInput(format!(
                            "structure entry ({k}, {c}) out of range"
                        )));
                    }
                }
            }
        }
        if unit.iter().any(|&c| c >= p) {
            return Err(Error::InvalidInput("unit coefficient out of range".into()));
        }
        Ok(FinDimAlgebra {
            field,
            basis_names,
            structure,
            unit,
        })
    }

    /// Builds structure constants from a product function on basis indices.
    pub fn from_products(
        field: FieldSpec,
        basis_names: Vec<String>,
        unit: Vec<u32>,
        mut product: impl FnMut(usize, usize) -> Vec<u32>,
    ) -> Result<Self> {
        let d = basis_names.len();
        let structure = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        product(i, j)
                            .into_iter()
                            .enumerate()
                            .filter(|&(_, c)| c != 0)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self::new(field, basis_names, structure, unit)
    }

    /// The one-dimensional algebra `k`.
    pub fn ground(field: FieldSpec) -> Self {
        FinDimAlgebra {
            field,
            basis_names: vec!["1".into()],
            structure: vec![vec![vec![(0, 1)]]],
            unit: vec![1],
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }
    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }
    pub fn structure(&self) -> &StructureConstants {
        &self.structure
    }
    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.dim()];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul(xi, yj);
                for &(k, s) in &self.structure[i][j] {
                    out[k] = f.add(out[k], f.mul(c, s));
                }
            }
        }
        out
    }

    /// Matrix of `y -> x y`.
    pub fn left_mul(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim())
            .map(|j| self.mul(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mul(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim())
            .map(|j| self.mul(&self.basis_vector(j), x))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Dense structure tensor entry `c_{ij}^k`.
    fn coeff(&self, i: usize, j: usize, k: usize) -> u32 {
        self.structure[i][j]
            .iter()
            .filter(|&&(kk, _)| kk == k)
            .fold(0, |acc, &(_, c)| self.field.add(acc, c))
    }

    /// Exhaustive associativity and unit check; O(d^5) but d stays small here.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let f = self.field;
        let mut violations = Vec::new();
        let dense: Vec<Vec<Vec<u32>>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| self.coeff(i, j, k)).collect())
                    .collect()
            })
            .collect();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut lhs = 0u32;
                        let mut rhs = 0u32;
                        for m in 0..d {
                            lhs = f.add(lhs, f.mul(dense[i][j][m], dense[m][k][l]));
                            rhs = f.add(rhs, f.mul(dense[j][k][m], dense[i][m][l]));
                        }
                        if lhs != rhs {
                            violations.push(Violation::Associativity { i, j, k, l });
                        }
                    }
                }
            }
        }
        for i in 0..d {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e {
                violations.push(Violation::LeftUnit { i });
            }
            if self.mul(&e, &self.unit) != e {
                violations.push(Violation::RightUnit { i });
            }
        }
        ValidationReport { violations }
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                self.mul(&self.basis_vector(i), &self.basis_vector(j))
                    == self.mul(&self.basis_vector(j), &self.basis_vector(i))
            })
        })
    }

    /// Re-packages a subalgebra spanned by `basis` (vectors in `self`) as a
    /// standalone algebra. Fails if the span is not closed or misses the unit.
    pub fn subalgebra(&self, basis: &Subspace, names: Vec<String>) -> Result<FinDimAlgebra> {
        let unit = basis
            .coordinates(&self.unit)
            .ok_or_else(|| Error::ElementNotInSpace("unit is not in the subalgebra".into()))?;
        let vecs = basis.vectors();
        let mut err = None;
        let sub = FinDimAlgebra::from_products(self.field, names, unit, |i, j| {
            let prod = self.mul(&vecs[i], &vecs[j]);
            basis.coordinates(&prod).unwrap_or_else(|| {
                err = Some(Error::ElementNotInSpace(format!(
                    "product of subalgebra basis {i},{j}"
                )));
                vec![0; vecs.len()]
            })
        })?;
        match err {
            Some(e) => Err(e),
            None => Ok(sub),
        }
    }
}

/// An algebra extension `B -> A`, with the inclusion as an explicit
/// `dim A x dim B` matrix so non-split embeddings are representable.
#[derive(Clone, Debug)]
pub struct Extension {
    ambient: FinDimAlgebra,
    sub: FinDimAlgebra,
    inclusion: Matrix,
}

impl Extension {
    pub fn new(ambient: FinDimAlgebra, sub: FinDimAlgebra, inclusion: Matrix) -> Result<Self> {
        if ambient.field() != sub.field() {
            return Err(Error::InvalidInput(
                "ambient and sub algebras live over different fields".into(),
            ));
        }
        if inclusion.rows() != ambient.dim() || inclusion.cols() != sub.dim() {
            return Err(Error::DimensionMismatch(format!(
                "inclusion is {}x{}, expected {}x{}",
                inclusion.rows(),
                inclusion.cols(),
                ambient.dim(),
                sub.dim()
            )));
        }
        Ok(Extension {
            ambient,
            sub,
            inclusion,
        })
    }

    /// Like [`new`](Self::new) but rejects extensions failing [`validate`](Self::validate).
    pub fn checked(ambient: FinDimAlgebra, sub: FinDimAlgebra, inclusion: Matrix) -> Result<Self> {
        let e = Self::new(ambient, sub, inclusion)?;
        let report = e.validate();
        if !report.passed() {
            return Err(Error::AxiomFailure(format!(
                "invalid extension: {:?}",
                report.violations
            )));
        }
        Ok(e)
    }

    /// `A` over the scalars `k 1_A`.
    pub fn over_ground(ambient: FinDimAlgebra) -> Self {
        let field = ambient.field();
        let inclusion = Matrix::from_columns(field, ambient.dim(), &[ambient.unit().to_vec()]);
        Extension {
            sub: FinDimAlgebra::ground(field),
            ambient,
            inclusion,
        }
    }

    /// `A` over itself.
    pub fn identity(ambient: FinDimAlgebra) -> Self {
        let inclusion = Matrix::identity(ambient.field(), ambient.dim());
        Extension {
            sub: ambient.clone(),
            ambient,
            inclusion,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.ambient.field()
    }
    pub fn ambient(&self) -> &FinDimAlgebra {
        &self.ambient
    }
    pub fn sub(&self) -> &FinDimAlgebra {
        &self.sub
    }
    pub fn inclusion(&self) -> &Matrix {
        &self.inclusion
    }

    /// Images `iota(b_t)` of the sub-algebra basis in `A`.
    pub fn sub_images(&self) -> Vec<Vec<u32>> {
        (0..self.sub.dim())
            .map(|t| self.inclusion.column(t))
            .collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = self.ambient.validate().violations;
        violations.extend(self.sub.validate().violations);
        let rank = self.inclusion.rank();
        if rank != self.sub.dim() {
            violations.push(Violation::InclusionNotInjective { rank });
        }
        if self.inclusion.mul_vec(self.sub.unit()) != self.ambient.unit() {
            violations.push(Violation::InclusionUnit);
        }
        let imgs = self.sub_images();
        for i in 0..self.sub.dim() {
            for j in 0..self.sub.dim() {
                let prod = self
                    .sub
                    .mul(&self.sub.basis_vector(i), &self.sub.basis_vector(j));
                if self.inclusion.mul_vec(&prod) != self.ambient.mul(&imgs[i], &imgs[j]) {
                    violations.push(Violation::InclusionNotMultiplicative { i, j });
                }
            }
        }
        ValidationReport { violations }
    }
}

/// `R = A^B`: the elements of `A` commuting with the image of `B`.
pub fn centralizer(e: &Extension) -> Subspace {
    let a = e.ambient();
    let d = a.dim();
    let mut stacked = Matrix::zeros(a.field(), 0, d);
    for b in e.sub_images() {
        stacked = stacked.vstack(&a.right_mul(&b).sub(&a.left_mul(&b)));
    }
    kernel_basis(&stacked)
}

/// `Z(A)`.
pub fn center(a: &FinDimAlgebra) -> Subspace {
    let d = a.dim();
    let mut stacked = Matrix::zeros(a.field(), 0, d);
    for j in 0..d {
        let b = a.basis_vector(j);
        stacked = stacked.vstack(&a.right_mul(&b).sub(&a.left_mul(&b)));
    }
    kernel_basis(&stacked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn matrix_algebra_is_valid() {
        let a = matrix_algebra(gf(5), 2);
        assert_eq!(a.dim(), 4);
        assert!(a.validate().passed());
    }

    #[test]
    fn altered_structure_constant_is_localized() {
        let a = matrix_algebra(gf(5), 2);
        let mut s = a.structure().clone();
        // e11 * e11 = 2 e11 instead of e11
        s[0][0] = vec![(0, 2)];
        let bad =
            FinDimAlgebra::new(gf(5), a.basis_names().to_vec(), s, a.unit().to_vec()).unwrap();
        let rep = bad.validate();
        assert!(!rep.passed());
        // (e11 e11) e12 = 2 e12 but e11 (e11 e12) = e12
        assert!(rep.violations.contains(&Violation::Associativity {
            i: 0,
            j: 0,
            k: 1,
            l: 1
        }));
        assert!(rep.violations.contains(&Violation::LeftUnit { i: 0 }));
        assert!(!rep.violations.contains(&Violation::LeftUnit { i: 3 }));
    }

    #[test]
    fn group_algebra_c2_over_gf2() {
        let a = group_algebra(gf(2), &cyclic_group_table(2)).unwrap();
        assert!(a.validate().passed());
        assert!(a.is_commutative());
    }

    #[test]
    fn left_mul_examples() {
        let a = matrix_algebra(gf(5), 2);
        assert!(a.left_mul(a.unit()).is_identity());
        // e12 . e21 = e11 ; basis order e11, e12, e21, e22
        let e12 = a.basis_vector(1);
        let e21 = a.basis_vector(2);
        assert_eq!(a.left_mul(&e12).mul_vec(&e21), a.basis_vector(0));
    }

    #[test]
    fn left_mul_is_multiplicative_and_commutes_with_right_mul() {
        let f = gf(7);
        let a = upper_triangular(f, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let x: Vec<u32> = (0..a.dim()).map(|_| rng.random_range(0..7)).collect();
            let y: Vec<u32> = (0..a.dim()).map(|_| rng.random_range(0..7)).collect();
            assert_eq!(
                a.left_mul(&x).mul(&a.left_mul(&y)),
                a.left_mul(&a.mul(&x, &y))
            );
            assert_eq!(
                a.left_mul(&x).mul(&a.right_mul(&y)),
                a.right_mul(&y).mul(&a.left_mul(&x))
            );
        }
    }

    #[test]
    fn centralizer_examples() {
        let f = gf(5);
        let m2 = matrix_algebra(f, 2);
        assert_eq!(centralizer(&Extension::over_ground(m2.clone())).dim(), 4);
        assert_eq!(centralizer(&Extension::identity(m2.clone())).dim(), 1);
        let ut = upper_triangular_over_diagonal(f, 2).unwrap();
        let r = centralizer(&ut);
        assert_eq!(r.dim(), 2);
        // basis order of T2: e11, e12, e22 ; R is the diagonal
        assert!(r.contains(&[1, 0, 0]));
        assert!(r.contains(&[0, 0, 1]));
        assert!(!r.contains(&[0, 1, 0]));
    }

    #[test]
    fn center_examples() {
        let f = gf(5);
        let c3 = group_algebra(f, &cyclic_group_table(3)).unwrap();
        assert_eq!(center(&c3).dim(), 3);
        assert_eq!(center(&matrix_algebra(f, 2)).dim(), 1);
        assert_eq!(center(&upper_triangular(f, 2)).dim(), 1);
    }

    #[test]
    fn centralizer_contains_center() {
        let f = gf(7);
        let e = group_extension(f, &symmetric_group_table(), &[0, 1]).unwrap();
        assert!(centralizer(&e).contains_subspace(&center(e.ambient())));
    }

    #[test]
    fn field_extension_square() {
        let f = gf(5);
        // x^2 - 2 = x^2 + 3
        let a = field_ext_algebra(f, &[3, 0, 1]).unwrap();
        assert_eq!(a.dim(), 2);
        let x = a.basis_vector(1);
        assert_eq!(a.mul(&x, &x), vec![2, 0]);
        // 2 is a non-square mod 5, checked by enumeration
        assert!((0..5u32).all(|t| (t * t) % 5 != 2));
        assert!(matches!(
            field_ext_algebra(f, &[1, 0, 1]),
            Err(Error::ReduciblePolynomial(5))
        ));
    }

    #[test]
    fn extension_validation_catches_bad_inclusion() {
        let f = gf(5);
        let a = matrix_algebra(f, 2);
        let b = FinDimAlgebra::ground(f);
        // send 1 to e11: not unital
        let inc = Matrix::from_columns(f, 4, &[vec![1, 0, 0, 0]]);
        let e = Extension::new(a, b, inc).unwrap();
        let rep = e.validate();
        assert!(rep.violations.contains(&Violation::InclusionUnit));
    }
}
