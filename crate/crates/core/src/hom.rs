//! Spaces of module maps cut out by intertwining constraints, in particular
//! the `B`-bimodule maps `A (x)_B ... (x)_B A -> A`.
//!
//! A map `T: W -> U` is stored as its `dim U x dim W` matrix and flattened
//! row-major (`vec(T)[a * dim W + w] = T[a][w]`). The space is the kernel of
//! the constraint system, kept as a sparse RREF; coordinates of an element
//! are its entries at the free columns.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{Echelon, Matrix};
use crate::relative::RelativeTensor;

#[derive(Clone, Debug)]
pub struct HomSpace {
    field: FieldSpec,
    dom_dim: usize,
    cod_dim: usize,
    /// RREF rows of the constraints, sparse, sorted by pivot
    rows: Vec<Vec<(usize, u32)>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl HomSpace {
    /// Maps `T: W -> U` with `T . dom_action = cod_action . T` for each pair.
    pub fn intertwiners(
        field: FieldSpec,
        dom_dim: usize,
        cod_dim: usize,
        pairs: &[(&Matrix, &Matrix)],
    ) -> Self {
        let (q, d) = (dom_dim, cod_dim);
        let mut ech = Echelon::new(field, d * q);
        'outer: for &(l, m) in pairs {
            debug_assert_eq!((l.rows(), l.cols(), m.rows(), m.cols()), (q, q, d, d));
            for a in 0..d {
                for u in 0..q {
                    // (T l)[a][u] - (m T)[a][u]
                    let mut v = vec![0u32; d * q];
                    for w in 0..q {
                        let c = l.get(w, u);
                        if c != 0 {
                            v[a * q + w] = field.add(v[a * q + w], c);
                        }
                    }
                    for b in 0..d {
                        let c = m.get(a, b);
                        if c != 0 {
                            v[b * q + u] = field.sub(v[b * q + u], c);
                        }
                    }
                    if v.iter().any(|&x| x != 0) {
                        ech.insert(v);
                        if ech.is_full() {
                            break 'outer;
                        }
                    }
                }
            }
        }
        let (dense, pivots) = ech.into_sorted();
        let mut is_pivot = vec![false; d * q];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free = (0..d * q).filter(|&c| !is_pivot[c]).collect();
        let rows = dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i, c))
                    .collect()
            })
            .collect();
        HomSpace {
            field,
            dom_dim,
            cod_dim,
            rows,
            pivots,
            free,
        }
    }

    /// `Hom_{B-B}(A^(x)_B n, A)`.
    pub fn bimodule_maps(rt: &RelativeTensor, n: usize) -> Self {
        let e = rt.extension();
        let a = e.ambient();
        let tower = rt.tower();
        let images = e.sub_images();
        let lambdas: Vec<Matrix> = images.iter().map(|b| a.left_mul(b)).collect();
        let rhos: Vec<Matrix> = images.iter().map(|b| a.right_mul(b)).collect();
        let mut pairs = Vec::new();
        for t in 0..images.len() {
            pairs.push((tower.left_action(n, t), &lambdas[t]));
            pairs.push((tower.right_action(n, t), &rhos[t]));
        }
        Self::intertwiners(a.field(), rt.dim(n), a.dim(), &pairs)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.free.len()
    }
    pub fn dom_dim(&self) -> usize {
        self.dom_dim
    }
    pub fn cod_dim(&self) -> usize {
        self.cod_dim
    }

    /// The matrix with the given coordinates.
    pub fn element(&self, coords: &[u32]) -> Matrix {
        assert_eq!(coords.len(), self.dim(), "coordinate length");
        let f = self.field;
        let mut v = vec![0u32; self.dom_dim * self.cod_dim];
        for (&c, &x) in self.free.iter().zip(coords) {
            v[c] = x;
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let mut acc = 0u32;
            for &(c, x) in row {
                if c != p {
                    acc = f.add(acc, f.mul(x, v[c]));
                }
            }
            v[p] = f.neg(acc);
        }
        Matrix::from_data(f, self.cod_dim, self.dom_dim, v)
    }

    pub fn basis_element(&self, i: usize) -> Matrix {
        let mut c = vec![0u32; self.dim()];
        c[i] = 1;
        self.element(&c)
    }

    pub fn contains(&self, t: &Matrix) -> bool {
        if t.rows() != self.cod_dim || t.cols() != self.dom_dim {
            return false;
        }
        let f = self.field;
        let data = t.data();
        self.rows.iter().all(|row| {
            row.iter()
                .fold(0u32, |acc, &(c, x)| f.add(acc, f.mul(x, data[c])))
                == 0
        })
    }

    pub fn coordinates(&self, t: &Matrix) -> Option<Vec<u32>> {
        if !self.contains(t) {
            return None;
        }
        Some(self.free.iter().map(|&c| t.data()[c]).collect())
    }

    pub fn coordinates_or_err(&self, t: &Matrix, what: &str) -> Result<Vec<u32>> {
        self.coordinates(t)
            .ok_or_else(|| Error::ElementNotInSpace(what.to_string()))
    }

    pub fn evaluate(&self, coords: &[u32], v: &[u32]) -> Vec<u32> {
        self.element(coords).mul_vec(v)
    }

    /// Coordinates of `f . g` (composition of endomorphisms; `dom = cod`).
    pub fn compose_endo(&self, f: &[u32], g: &[u32]) -> Result<Vec<u32>> {
        let prod = self.element(f).mul(&self.element(g));
        self.coordinates_or_err(&prod, "composite of endomorphisms")
    }

    pub fn identity_endo(&self) -> Result<Vec<u32>> {
        self.coordinates_or_err(&Matrix::identity(self.field, self.dom_dim), "identity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, upper_triangular_over_diagonal, Extension};

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn over_scalars_everything_is_a_map() {
        let e = Extension::over_ground(matrix_algebra(gf(5), 2));
        let rt = RelativeTensor::build(&e, 1).unwrap();
        assert_eq!(HomSpace::bimodule_maps(&rt, 1).dim(), 16);
    }

    /// Brute-force count of linear maps `W -> U` commuting with the actions,
    /// by enumerating all matrices over GF(2).
    fn brute_count(q: usize, d: usize, pairs: &[(&Matrix, &Matrix)]) -> usize {
        let f = gf(2);
        let n = q * d;
        (0u64..1 << n)
            .filter(|bits| {
                let t =
                    Matrix::from_data(f, d, q, (0..n).map(|i| ((bits >> i) & 1) as u32).collect());
                pairs.iter().all(|(l, m)| t.mul(l) == m.mul(&t))
            })
            .count()
    }

    #[test]
    fn upper_triangular_dims() {
        let e = upper_triangular_over_diagonal(gf(2), 2).unwrap();
        let rt = RelativeTensor::build(&e, 2).unwrap();
        let s = HomSpace::bimodule_maps(&rt, 1);
        assert_eq!(s.dim(), 3);
        let c2 = HomSpace::bimodule_maps(&rt, 2);
        assert_eq!(c2.dim(), 4);
        // oracle: solution count is 2^dim
        let a = e.ambient();
        for (n, space) in [(1, &s), (2, &c2)] {
            let lambdas: Vec<Matrix> = e.sub_images().iter().map(|b| a.left_mul(b)).collect();
            let rhos: Vec<Matrix> = e.sub_images().iter().map(|b| a.right_mul(b)).collect();
            let mut pairs = vec![];
            for t in 0..2 {
                pairs.push((rt.tower().left_action(n, t), &lambdas[t]));
                pairs.push((rt.tower().right_action(n, t), &rhos[t]));
            }
            assert_eq!(brute_count(rt.dim(n), 3, &pairs), 1 << space.dim());
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let e = upper_triangular_over_diagonal(gf(5), 2).unwrap();
        let rt = RelativeTensor::build(&e, 2).unwrap();
        let c2 = HomSpace::bimodule_maps(&rt, 2);
        for i in 0..c2.dim() {
            let t = c2.basis_element(i);
            let mut unit = vec![0; c2.dim()];
            unit[i] = 1;
            assert_eq!(c2.coordinates(&t), Some(unit));
        }
        // left multiplication by e12 is not a bimodule map
        let a = e.ambient();
        assert!(!HomSpace::bimodule_maps(&rt, 1).contains(&a.left_mul(&a.basis_vector(1))));
    }

    #[test]
    fn endomorphism_ring() {
        let e = upper_triangular_over_diagonal(gf(5), 2).unwrap();
        let rt = RelativeTensor::build(&e, 1).unwrap();
        let s = HomSpace::bimodule_maps(&rt, 1);
        let id = s.identity_endo().unwrap();
        for i in 0..3 {
            let mut f = vec![0; 3];
            f[i] = 1;
            assert_eq!(s.compose_endo(&f, &id).unwrap(), f);
            assert_eq!(s.compose_endo(&id, &f).unwrap(), f);
        }
        // projection onto the e12 component is idempotent
        let mut p = Matrix::zeros(gf(5), 3, 3);
        p.set(1, 1, 1);
        let pc = s.coordinates(&p).unwrap();
        assert_eq!(s.compose_endo(&pc, &pc).unwrap(), pc);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let (mut x, mut y, mut z) = (vec![0; 3], vec![0; 3], vec![0; 3]);
                    x[i] = 1;
                    y[j] = 1;
                    z[k] = 1;
                    let lhs = s
                        .compose_endo(&s.compose_endo(&x, &y).unwrap(), &z)
                        .unwrap();
                    let rhs = s
                        .compose_endo(&x, &s.compose_endo(&y, &z).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn evaluation_is_balanced() {
        let e = upper_triangular_over_diagonal(gf(5), 2).unwrap();
        let rt = RelativeTensor::build(&e, 2).unwrap();
        let c2 = HomSpace::bimodule_maps(&rt, 2);
        let a = e.ambient();
        let coords: Vec<u32> = (0..c2.dim() as u32).map(|i| i + 1).collect();
        for b in e.sub_images() {
            for x in 0..3 {
                for y in 0..3 {
                    let (x, y) = (a.basis_vector(x), a.basis_vector(y));
                    let l = c2.evaluate(&coords, &rt.embed_pure(&[a.mul(&x, &b), y.clone()]));
                    let r = c2.evaluate(&coords, &rt.embed_pure(&[x, a.mul(&b, &y)]));
                    assert_eq!(l, r);
                }
            }
        }
    }
}
