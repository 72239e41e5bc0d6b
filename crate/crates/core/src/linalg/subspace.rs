use crate::error::{Error, Result};
use crate::field::FieldSpec;

use super::echelon::{kernel_vectors, Echelon};
use super::Matrix;

/// A subspace of `GF(p)^n`, stored as a matrix with independent columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub(crate) fn from_independent(
        field: FieldSpec,
        ambient_dim: usize,
        vectors: &[Vec<u32>],
    ) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::from_columns(field, ambient_dim, vectors),
        }
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Self::from_independent(field, ambient_dim, &[])
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
        }
    }

    /// Span of arbitrary vectors; the basis is the RREF of the spanning set.
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: &[Vec<u32>]) -> Self {
        let mut ech = Echelon::new(field, ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim);
            ech.insert(v.clone());
        }
        let (rows, _) = ech.into_sorted();
        Self::from_independent(field, ambient_dim, &rows)
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn vector(&self, i: usize) -> Vec<u32> {
        self.basis.column(i)
    }
    pub fn vectors(&self) -> Vec<Vec<u32>> {
        (0..self.dim()).map(|i| self.vector(i)).collect()
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.field(), self.ambient_dim);
        for v in self.vectors() {
            ech.insert(v);
        }
        ech
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        let ech = self.echelon();
        other.vectors().iter().all(|v| ech.contains(v))
    }

    /// Coordinates of `v` in this basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        super::solve(&self.basis, v)
    }
}

/// `V / U` with a canonical complement: coordinates are the non-pivot columns
/// of the RREF of `U`, so the section sends quotient basis vector `t` to the
/// ambient unit vector at the `t`-th free column.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    field: FieldSpec,
    ambient_dim: usize,
    /// RREF rows of the relation span, sorted by pivot.
    rel_rows: Vec<Vec<u32>>,
    rel_pivots: Vec<usize>,
    free: Vec<usize>,
    /// Transposed projection: row `c` is the quotient image of ambient unit vector `c`.
    proj_t: Matrix,
}

impl QuotientSpace {
    pub(crate) fn from_echelon(ech: Echelon) -> Self {
        let field = ech.field();
        let ambient_dim = ech.cols();
        let (rel_rows, rel_pivots) = ech.into_sorted();
        let (_, free) = kernel_vectors(field, ambient_dim, &rel_rows, &rel_pivots);
        let q = free.len();
        let mut free_index = vec![usize::MAX; ambient_dim];
        for (t, &c) in free.iter().enumerate() {
            free_index[c] = t;
        }
        let mut proj_t = Matrix::zeros(field, ambient_dim, q);
        for (t, &c) in free.iter().enumerate() {
            proj_t.set(c, t, 1);
        }
        for (row, &p) in rel_rows.iter().zip(&rel_pivots) {
            // v_p e_p == -v_p * (row - e_p) modulo relations
            for (t, &c) in free.iter().enumerate() {
                if row[c] != 0 {
                    proj_t.set(p, t, field.neg(row[c]));
                }
            }
        }
        QuotientSpace {
            field,
            ambient_dim,
            rel_rows,
            rel_pivots,
            free,
            proj_t,
        }
    }

    /// The quotient by nothing.
    pub fn trivial(field: FieldSpec, ambient_dim: usize) -> Self {
        Self::from_echelon(Echelon::new(field, ambient_dim))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.free.len()
    }
    pub fn relation_dim(&self) -> usize {
        self.rel_rows.len()
    }
    /// Ambient columns that carry the quotient coordinates, in order.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn relations(&self) -> Subspace {
        Subspace::from_independent(self.field, self.ambient_dim, &self.rel_rows)
    }

    /// `dim x ambient_dim` projection matrix.
    pub fn projection(&self) -> Matrix {
        self.proj_t.transpose()
    }

    /// `ambient_dim x dim` section matrix.
    pub fn section(&self) -> Matrix {
        let mut s = Matrix::zeros(self.field, self.ambient_dim, self.dim());
        for (t, &c) in self.free.iter().enumerate() {
            s.set(c, t, 1);
        }
        s
    }

    /// Quotient image of the ambient unit vector `c`.
    #[inline]
    pub fn image_of_unit(&self, c: usize) -> &[u32] {
        self.proj_t.row(c)
    }

    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient_dim);
        self.project_sparse(
            v.iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| (i, x)),
        )
    }

    pub fn project_sparse(&self, entries: impl IntoIterator<Item = (usize, u32)>) -> Vec<u32> {
        let mut out = vec![0u32; self.dim()];
        self.project_sparse_into(&mut out, entries);
        out
    }

    /// `out += project(sparse vector)`.
    pub fn project_sparse_into(
        &self,
        out: &mut [u32],
        entries: impl IntoIterator<Item = (usize, u32)>,
    ) {
        for (i, x) in entries {
            self.field.axpy(out, x, self.proj_t.row(i));
        }
    }

    pub fn lift(&self, q: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; self.ambient_dim];
        for (t, &c) in self.free.iter().enumerate() {
            v[c] = q[t];
        }
        v
    }

    /// Pushes an ambient-domain map `f` (codomain plain, `cod x ambient_dim`)
    /// down to the quotient, after checking that it kills every relation.
    pub fn descend(&self, f: &Matrix, context: &str) -> Result<Matrix> {
        if f.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "{context}: map has {} columns, quotient ambient is {}",
                f.cols(),
                self.ambient_dim
            )));
        }
        let field = self.field;
        let ft = f.transpose();
        let mut acc = vec![0u32; f.rows()];
        for (idx, (row, &p)) in self.rel_rows.iter().zip(&self.rel_pivots).enumerate() {
            acc.copy_from_slice(ft.row(p));
            for &c in &self.free {
                field.axpy(&mut acc, row[c], ft.row(c));
            }
            if acc.iter().any(|&x| x != 0) {
                return Err(Error::NotWellDefined {
                    context: context.to_string(),
                    relation: idx,
                });
            }
        }
        Ok(f.select_columns(&self.free))
    }
}

/// Builds `V / relations`.
pub fn quotient_of(ambient_dim: usize, relations: &Subspace) -> Result<QuotientSpace> {
    if relations.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "relations live in dimension {}, expected {ambient_dim}",
            relations.ambient_dim()
        )));
    }
    let mut ech = Echelon::new(relations.field(), ambient_dim);
    for v in relations.vectors() {
        ech.insert(v);
    }
    Ok(QuotientSpace::from_echelon(ech))
}

/// `projection_cod . ambient_map . section_dom`, after verifying that the
/// ambient map sends the domain relations into the codomain relations.
pub fn induced_map(
    q_dom: &QuotientSpace,
    q_cod: &QuotientSpace,
    ambient_map: &Matrix,
) -> Result<Matrix> {
    if ambient_map.rows() != q_cod.ambient_dim() || ambient_map.cols() != q_dom.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "ambient map is {}x{}, quotients expect {}x{}",
            ambient_map.rows(),
            ambient_map.cols(),
            q_cod.ambient_dim(),
            q_dom.ambient_dim()
        )));
    }
    let projected = q_cod.projection().mul(ambient_map);
    q_dom.descend(&projected, "induced_map")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn quotient_by_nothing_is_identity() {
        let f = gf(5);
        let q = quotient_of(4, &Subspace::zero(f, 4)).unwrap();
        assert_eq!(q.dim(), 4);
        assert!(q.projection().is_identity());
    }

    #[test]
    fn quotient_by_everything() {
        let f = gf(5);
        let q = quotient_of(4, &Subspace::full(f, 4)).unwrap();
        assert_eq!(q.dim(), 0);
    }

    #[test]
    fn antidiagonal_relation_identifies_units() {
        let f = gf(5);
        let rel = Subspace::span(f, 2, &[vec![1, 4]]);
        let q = quotient_of(2, &rel).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.project(&[1, 0]), q.project(&[0, 1]));
        assert!(q.projection().mul(&q.section()).is_identity());
        assert!(q.project(&[1, 4]).iter().all(|&x| x == 0));
    }

    #[test]
    fn identity_induces_identity() {
        let f = gf(7);
        let rel = Subspace::span(f, 3, &[vec![1, 2, 3]]);
        let q = quotient_of(3, &rel).unwrap();
        let m = induced_map(&q, &q, &Matrix::identity(f, 3)).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        let f = gf(7);
        let dom = quotient_of(2, &Subspace::span(f, 2, &[vec![1, 6]])).unwrap();
        let cod = QuotientSpace::trivial(f, 2);
        // swaps nothing, but sends the relation (1,-1) to (1,0): not a relation
        let bad = Matrix::from_rows_i64(f, &[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(matches!(
            induced_map(&dom, &cod, &bad),
            Err(Error::NotWellDefined { .. })
        ));
    }
}
