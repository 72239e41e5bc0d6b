//! Balanced tensor powers `V (x)_R V (x)_R ... (x)_R V` of a bimodule `V` over
//! a finite-dimensional algebra `R`.
//!
//! Every basis vector of level `n` is the class of a pure tensor of
//! `V`-basis vectors, and the prefix of such a multi-index is itself a basis
//! multi-index of level `n-1`. The plain product `level(n-1) (x) V` indexes
//! `e_j (x) e_k` as `j * dim V + k`.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{kernel_basis, solve, Echelon, Matrix, QuotientSpace};

/// A bimodule over an algebra with basis `r_0..r_{m-1}`, given by the action
/// matrices `left[t] = (v -> r_t v)` and `right[t] = (v -> v r_t)`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    field: FieldSpec,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        field: FieldSpec,
        dim: usize,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Self> {
        if left.len() != right.len() {
            return Err(Error::DimensionMismatch(
                "left and right actions index different bases".into(),
            ));
        }
        if left
            .iter()
            .chain(&right)
            .any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(Error::DimensionMismatch(format!(
                "action matrices must be {dim}x{dim}"
            )));
        }
        Ok(Bimodule {
            field,
            dim,
            left,
            right,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn left(&self) -> &[Matrix] {
        &self.left
    }
    pub fn right(&self) -> &[Matrix] {
        &self.right
    }
    pub fn base_dim(&self) -> usize {
        self.left.len()
    }
}

/// A presentation `R^m -> V -> 0` of `V` as a left `R`-module, with the
/// generators chosen among the basis vectors of `V`.
#[derive(Clone, Debug)]
struct Presentation {
    /// basis indices of the generators
    gens: Vec<usize>,
    /// `coef[k]` expresses `e_k = sum_(beta, t) c r_t e_(gens[beta])`, sparse over `(beta, t)`
    coef: Vec<Vec<(usize, usize, u32)>>,
    /// basis of the syzygies, sparse over `(beta, t)`
    syzygies: Vec<Vec<(usize, usize, u32)>>,
}

impl Presentation {
    fn new(module: &Bimodule) -> Result<Self> {
        let field = module.field;
        let d = module.dim;
        let m_r = module.base_dim();
        let mut span = Echelon::new(field, d);
        let mut gens = Vec::new();
        for k in 0..d {
            let mut e = vec![0u32; d];
            e[k] = 1;
            if span.contains(&e) {
                continue;
            }
            gens.push(k);
            for t in 0..m_r {
                span.insert(module.left[t].column(k));
            }
        }
        if !span.is_full() {
            return Err(Error::AxiomFailure(
                "left action is not unital: generators do not span".into(),
            ));
        }
        // G: d x (m * |R|), column beta * |R| + t = r_t e_(gens[beta])
        let cols: Vec<Vec<u32>> = gens
            .iter()
            .flat_map(|&g| (0..m_r).map(move |t| module.left[t].column(g)))
            .collect();
        let g = Matrix::from_columns(field, d, &cols);
        let sparse = |v: &[u32]| -> Vec<(usize, usize, u32)> {
            v.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i / m_r, i % m_r, c))
                .collect()
        };
        let coef = (0..d)
            .map(|k| {
                let mut e = vec![0u32; d];
                e[k] = 1;
                solve(&g, &e)
                    .map(|x| sparse(&x))
                    .ok_or_else(|| Error::ElementNotInSpace(format!("basis vector {k}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let syzygies = kernel_basis(&g)
            .vectors()
            .iter()
            .map(|v| sparse(v))
            .collect();
        Ok(Presentation {
            gens,
            coef,
            syzygies,
        })
    }
}

#[derive(Clone, Debug)]
struct Level {
    dim: usize,
    /// `proj[j * dim V + k]` is the class of `e_j (x) e_k`, sparse
    proj: Vec<Vec<(usize, u32)>>,
    /// basis `t` of this level is the class of `e_{parent.0} (x) e_{parent.1}`
    parent: Vec<(usize, usize)>,
    reps: Vec<Vec<usize>>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

/// Tensor powers of a bimodule over its base algebra.
///
/// Level `n >= 2` is `X (x)_R V` with `X` the previous level. Writing `V` as
/// `R^m / K` (generators `v_beta` among the basis of `V`), this is `X^m`
/// modulo the image of `X (x) K`, with `x (x) r v_beta` sitting in block `beta`
/// as `x r`. The canonical map from the plain product `X (x) V` has kernel
/// spanned by the balancing relations `x r (x) v - x (x) r v`; maps out of a
/// level are defined on `X (x) V` and checked against those relations.
#[derive(Clone, Debug)]
pub struct TensorTower {
    module: Bimodule,
    pres: Presentation,
    /// `levels[0]` is the ground field (dimension 1); `levels[n]` is the n-th power.
    levels: Vec<Level>,
}

impl TensorTower {
    pub fn new(module: Bimodule, max_level: usize) -> Result<Self> {
        let pres = Presentation::new(&module)?;
        let ground = Level {
            dim: 1,
            proj: vec![],
            parent: vec![(0, 0)],
            reps: vec![vec![]],
            left: vec![],
            right: vec![],
        };
        let mut tower = TensorTower {
            module,
            pres,
            levels: vec![ground],
        };
        tower.extend_to(max_level)?;
        Ok(tower)
    }

    pub fn module(&self) -> &Bimodule {
        &self.module
    }
    pub fn field(&self) -> FieldSpec {
        self.module.field
    }
    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.levels[n].dim
    }

    /// Dimension of the plain product `level(n-1) (x) V` that level `n` is a quotient of.
    pub fn ambient_dim(&self, n: usize) -> usize {
        self.dim(n - 1) * self.module.dim
    }

    /// Number of generators of `V` as a left module over the base.
    pub fn generator_count(&self) -> usize {
        self.pres.gens.len()
    }

    /// Multi-index of the pure tensor representing basis vector `t` of level `n`.
    pub fn rep(&self, n: usize, t: usize) -> &[usize] {
        &self.levels[n].reps[t]
    }

    pub fn parent(&self, n: usize, t: usize) -> (usize, usize) {
        self.levels[n].parent[t]
    }

    /// Index of the level-`m` prefix of basis vector `t` of level `n >= m`.
    pub fn prefix(&self, n: usize, mut t: usize, m: usize) -> usize {
        for level in (m + 1..=n).rev() {
            t = self.levels[level].parent[t].0;
        }
        t
    }

    /// Left action of base basis element `t` on level `n >= 1`.
    pub fn left_action(&self, n: usize, t: usize) -> &Matrix {
        &self.levels[n].left[t]
    }

    pub fn right_action(&self, n: usize, t: usize) -> &Matrix {
        &self.levels[n].right[t]
    }

    pub fn extend_to(&mut self, max_level: usize) -> Result<()> {
        while self.max_level() < max_level {
            self.push_level()?;
        }
        Ok(())
    }

    fn push_level(&mut self) -> Result<()> {
        let n = self.levels.len();
        let field = self.field();
        let d = self.module.dim;
        let level = if n == 1 {
            Level {
                dim: d,
                proj: (0..d).map(|k| vec![(k, 1)]).collect(),
                parent: (0..d).map(|k| (0, k)).collect(),
                reps: (0..d).map(|k| vec![k]).collect(),
                left: vec![],
                right: vec![],
            }
        } else {
            let prev = &self.levels[n - 1];
            let q = prev.dim;
            let m = self.pres.gens.len();
            // block vector of x r_t in block beta, accumulated sparsely into y
            let add_block = |y: &mut Vec<u32>, j: usize, beta: usize, t: usize, c: u32| {
                let col = prev.right[t].column(j);
                for (i, &x) in col.iter().enumerate() {
                    if x != 0 {
                        let idx = i * m + beta;
                        y[idx] = field.add(y[idx], field.mul(c, x));
                    }
                }
            };
            let mut ech = Echelon::new(field, q * m);
            for j in 0..q {
                for syz in &self.pres.syzygies {
                    let mut y = vec![0u32; q * m];
                    for &(beta, t, c) in syz {
                        add_block(&mut y, j, beta, t, c);
                    }
                    ech.insert(y);
                }
            }
            let quotient = QuotientSpace::from_echelon(ech);
            let mut proj = Vec::with_capacity(q * d);
            for j in 0..q {
                for k in 0..d {
                    let mut y = vec![0u32; q * m];
                    for &(beta, t, c) in &self.pres.coef[k] {
                        add_block(&mut y, j, beta, t, c);
                    }
                    let img = quotient.project(&y);
                    proj.push(
                        img.iter()
                            .enumerate()
                            .filter(|(_, &c)| c != 0)
                            .map(|(i, &c)| (i, c))
                            .collect(),
                    );
                }
            }
            let parent: Vec<(usize, usize)> = quotient
                .free_columns()
                .iter()
                .map(|&c| (c / m, self.pres.gens[c % m]))
                .collect();
            let reps = parent
                .iter()
                .map(|&(j, k)| {
                    let mut r = prev.reps[j].clone();
                    r.push(k);
                    r
                })
                .collect();
            Level {
                dim: quotient.dim(),
                proj,
                parent,
                reps,
                left: vec![],
                right: vec![],
            }
        };
        self.levels.push(level);

        let mut left = Vec::with_capacity(self.module.base_dim());
        let mut right = Vec::with_capacity(self.module.base_dim());
        for t in 0..self.module.base_dim() {
            left.push(if n == 1 {
                self.module.left[t].clone()
            } else {
                let prev_left = &self.levels[n - 1].left[t];
                self.descend_with(n, "left base action", self.dim(n), |j, k| {
                    self.push_basis(n, &prev_left.column(j), k)
                })?
            });
            right.push(self.lift_last(n, &self.module.right[t])?);
        }
        let level = &mut self.levels[n];
        level.left = left;
        level.right = right;
        Ok(())
    }

    /// Pushes a map `f` on the plain product `level(n-1) (x) V` (`cod x ambient_dim(n)`,
    /// column `j * dim V + k`) down to level `n`, after checking that it kills
    /// every balancing relation `e_j r_t (x) e_k - e_j (x) r_t e_k`.
    pub fn descend(&self, n: usize, f: &Matrix, context: &str) -> Result<Matrix> {
        let d = self.module.dim;
        if f.cols() != self.ambient_dim(n) {
            return Err(Error::DimensionMismatch(format!(
                "{context}: map has {} columns, level {n} ambient is {}",
                f.cols(),
                self.ambient_dim(n)
            )));
        }
        let field = self.field();
        let cod = f.rows();
        if n >= 2 {
            let prev = &self.levels[n - 1];
            let ft = f.transpose();
            let mut acc = vec![0u32; cod];
            for t in 0..self.module.base_dim() {
                let xr = &prev.right[t];
                let rv = &self.module.left[t];
                for j in 0..prev.dim {
                    for k in 0..d {
                        acc.iter_mut().for_each(|x| *x = 0);
                        for i in 0..prev.dim {
                            let c = xr.get(i, j);
                            if c != 0 {
                                field.axpy(&mut acc, c, ft.row(i * d + k));
                            }
                        }
                        for l in 0..d {
                            let c = rv.get(l, k);
                            if c != 0 {
                                field.axpy(&mut acc, field.neg(c), ft.row(j * d + l));
                            }
                        }
                        if acc.iter().any(|&x| x != 0) {
                            return Err(Error::NotWellDefined {
                                context: context.to_string(),
                                relation: (t * prev.dim + j) * d + k,
                            });
                        }
                    }
                }
            }
        }
        let section: Vec<usize> = self.levels[n]
            .parent
            .iter()
            .map(|&(j, k)| j * d + k)
            .collect();
        Ok(f.select_columns(&section))
    }

    /// [`descend`](Self::descend) for a map given column by column: `col(j, k)`
    /// is the image of `e_j (x) e_k`.
    pub fn descend_with(
        &self,
        n: usize,
        context: &str,
        cod_dim: usize,
        mut col: impl FnMut(usize, usize) -> Vec<u32>,
    ) -> Result<Matrix> {
        let d = self.module.dim;
        let prev_dim = self.dim(n - 1);
        let mut f = Matrix::zeros(self.field(), cod_dim, prev_dim * d);
        for j in 0..prev_dim {
            for k in 0..d {
                let v = col(j, k);
                debug_assert_eq!(v.len(), cod_dim);
                f.set_column(j * d + k, &v);
            }
        }
        self.descend(n, &f, context)
    }

    /// Class of `x (x) v` in level `n`, for `x` in level `n-1` and `v` in `V`.
    pub fn push(&self, n: usize, x: &[u32], v: &[u32]) -> Vec<u32> {
        let d = self.module.dim;
        let field = self.field();
        let proj = &self.levels[n].proj;
        let mut out = vec![0u32; self.dim(n)];
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for (k, &vk) in v.iter().enumerate() {
                if vk != 0 {
                    let c = field.mul(xj, vk);
                    for &(i, p) in &proj[j * d + k] {
                        out[i] = field.add(out[i], field.mul(c, p));
                    }
                }
            }
        }
        out
    }

    /// Class of `x (x) e_k`.
    pub fn push_basis(&self, n: usize, x: &[u32], k: usize) -> Vec<u32> {
        let d = self.module.dim;
        let field = self.field();
        let proj = &self.levels[n].proj;
        let mut out = vec![0u32; self.dim(n)];
        for (j, &xj) in x.iter().enumerate() {
            if xj != 0 {
                for &(i, p) in &proj[j * d + k] {
                    out[i] = field.add(out[i], field.mul(xj, p));
                }
            }
        }
        out
    }

    /// Class of `v_1 (x) ... (x) v_n`.
    pub fn embed_pure(&self, factors: &[Vec<u32>]) -> Vec<u32> {
        let mut cur = vec![1u32];
        for (i, v) in factors.iter().enumerate() {
            assert_eq!(v.len(), self.module.dim, "factor length must equal dim V");
            cur = self.push(i + 1, &cur, v);
        }
        cur
    }

    /// Class of `e_{k_1} (x) ... (x) e_{k_n}`.
    pub fn embed_indices(&self, idx: &[usize]) -> Vec<u32> {
        let mut cur = vec![1u32];
        for (i, &k) in idx.iter().enumerate() {
            cur = self.push_basis(i + 1, &cur, k);
        }
        cur
    }

    /// `x (x) y` in level `m + n`, for `x` in level `m` and `y` in level `n`.
    ///
    /// Works level by level along the prefix tree of `y`'s basis representatives.
    pub fn concat(&self, m: usize, x: &[u32], n: usize, y: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.dim(m));
        assert_eq!(y.len(), self.dim(n));
        if n == 0 {
            let field = self.field();
            return x.iter().map(|&a| field.mul(a, y[0])).collect();
        }
        // needed[l] = basis indices of level l that are prefixes of supp(y)
        let mut needed: Vec<Vec<bool>> = (0..=n).map(|l| vec![false; self.dim(l)]).collect();
        for (t, &c) in y.iter().enumerate() {
            if c != 0 {
                needed[n][t] = true;
            }
        }
        for l in (1..=n).rev() {
            for t in 0..self.dim(l) {
                if needed[l][t] {
                    let (j, _) = self.levels[l].parent[t];
                    needed[l - 1][j] = true;
                }
            }
        }
        // images[t] = x (x) basis_t(level l)
        let mut images: Vec<Option<Vec<u32>>> = vec![Some(x.to_vec())];
        for l in 1..=n {
            let mut next = vec![None; self.dim(l)];
            for t in 0..self.dim(l) {
                if needed[l][t] {
                    let (j, k) = self.levels[l].parent[t];
                    let base = images[j].as_ref().expect("prefix image computed");
                    next[t] = Some(self.push_basis(m + l, base, k));
                }
            }
            images = next;
        }
        let field = self.field();
        let mut out = vec![0u32; self.dim(m + n)];
        for (t, &c) in y.iter().enumerate() {
            if c != 0 {
                field.axpy(&mut out, c, images[t].as_ref().unwrap());
            }
        }
        out
    }

    /// The matrix of `e_i (x) e_j -> class in level m+n`, columns indexed `i * dim(n) + j`.
    pub fn concat_matrix(&self, m: usize, n: usize) -> Matrix {
        let (qm, qn) = (self.dim(m), self.dim(n));
        let mut out = Matrix::zeros(self.field(), self.dim(m + n), qm * qn);
        for i in 0..qm {
            let mut x = vec![0u32; qm];
            x[i] = 1;
            for j in 0..qn {
                let mut y = vec![0u32; qn];
                y[j] = 1;
                out.set_column(i * qn + j, &self.concat(m, &x, n, &y));
            }
        }
        out
    }

    /// The endomorphism `id (x) ... (x) id (x) m` of level `n`; `m` must be a
    /// left-`R`-module map of `V` for this to be well defined (checked).
    pub fn lift_last(&self, n: usize, m: &Matrix) -> Result<Matrix> {
        if n == 1 {
            return Ok(m.clone());
        }
        self.descend_with(n, "last-factor action", self.dim(n), |j, k| {
            let mut x = vec![0u32; self.dim(n - 1)];
            x[j] = 1;
            self.push(n, &x, &m.column(k))
        })
    }

    /// The endomorphism `m (x) id (x) ... (x) id` of every level `0..=n`
    /// (level 0 gets the identity); `m` must be a right-`R`-module map of `V` (checked).
    pub fn lift_first_all(&self, n: usize, m: &Matrix) -> Result<Vec<Matrix>> {
        let mut out = vec![Matrix::identity(self.field(), 1), m.clone()];
        for l in 2..=n {
            let prev = &out[l - 1];
            let next = self.descend_with(l, "first-factor action", self.dim(l), |j, k| {
                self.push_basis(l, &prev.column(j), k)
            })?;
            out.push(next);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{upper_triangular_over_diagonal, Extension, FinDimAlgebra};

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    /// `A` as a `B`-bimodule.
    fn bimodule_of(e: &Extension) -> Bimodule {
        let a = e.ambient();
        let left = e.sub_images().iter().map(|b| a.left_mul(b)).collect();
        let right = e.sub_images().iter().map(|b| a.right_mul(b)).collect();
        Bimodule::new(a.field(), a.dim(), left, right).unwrap()
    }

    #[test]
    fn scalars_give_plain_tensor_powers() {
        let a = crate::algebra::matrix_algebra(gf(5), 2);
        let t = TensorTower::new(bimodule_of(&Extension::over_ground(a)), 3).unwrap();
        assert_eq!((t.dim(1), t.dim(2), t.dim(3)), (4, 16, 64));
    }

    #[test]
    fn upper_triangular_over_diagonal_dims() {
        let e = upper_triangular_over_diagonal(gf(5), 2).unwrap();
        let t = TensorTower::new(bimodule_of(&e), 3).unwrap();
        // graded component count: (A (x)_B A)_{ik} = sum_j dim A_ij dim A_jk
        assert_eq!(t.dim(2), 4);
        assert_eq!(t.dim(3), 5);
    }

    #[test]
    fn reps_are_prefix_closed() {
        let e = upper_triangular_over_diagonal(gf(7), 3).unwrap();
        let t = TensorTower::new(bimodule_of(&e), 3).unwrap();
        for n in 1..=3 {
            for u in 0..t.dim(n) {
                let rep = t.rep(n, u).to_vec();
                let mut unit = vec![0; t.dim(n)];
                unit[u] = 1;
                assert_eq!(t.embed_indices(&rep), unit);
                let p = t.prefix(n, u, n - 1);
                assert_eq!(t.rep(n - 1, p), &rep[..n - 1]);
            }
        }
    }

    #[test]
    fn concat_matches_pure_embedding() {
        let e = upper_triangular_over_diagonal(gf(5), 3).unwrap();
        let t = TensorTower::new(bimodule_of(&e), 3).unwrap();
        let d = e.ambient().dim();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let x = t.embed_indices(&[a]);
                    let y = t.embed_indices(&[b, c]);
                    assert_eq!(t.concat(1, &x, 2, &y), t.embed_indices(&[a, b, c]));
                    let x2 = t.embed_indices(&[a, b]);
                    let y2 = t.embed_indices(&[c]);
                    assert_eq!(t.concat(2, &x2, 1, &y2), t.embed_indices(&[a, b, c]));
                }
            }
        }
    }

    #[test]
    fn ill_defined_last_factor_action_is_rejected() {
        let e = upper_triangular_over_diagonal(gf(5), 2).unwrap();
        let t = TensorTower::new(bimodule_of(&e), 2).unwrap();
        // left multiplication by e12 is not left-B-linear
        let a: &FinDimAlgebra = e.ambient();
        let m = a.left_mul(&a.basis_vector(1));
        assert!(matches!(
            t.lift_last(2, &m),
            Err(Error::NotWellDefined { .. })
        ));
        // right multiplication is
        assert!(t.lift_last(2, &a.right_mul(&a.basis_vector(1))).is_ok());
    }

    /// Independent oracle: the quotient of the plain `V^(x)n` by all junction
    /// relations at once.
    fn flat_dim(m: &Bimodule, n: usize) -> usize {
        let d = m.dim();
        let ambient = d.pow(n as u32);
        let mut gens = Vec::new();
        for slot in 0..n - 1 {
            for t in 0..m.base_dim() {
                for idx in 0..ambient {
                    let mut digits = vec![0; n];
                    let mut r = idx;
                    for p in (0..n).rev() {
                        digits[p] = r % d;
                        r /= d;
                    }
                    let mut v = vec![0u32; ambient];
                    let flat = |ds: &[usize]| ds.iter().fold(0, |acc, &x| acc * d + x);
                    for a in 0..d {
                        let c = m.right()[t].get(a, digits[slot]);
                        if c != 0 {
                            let mut ds = digits.clone();
                            ds[slot] = a;
                            let f = flat(&ds);
                            v[f] = m.field().add(v[f], c);
                        }
                        let c = m.left()[t].get(a, digits[slot + 1]);
                        if c != 0 {
                            let mut ds = digits.clone();
                            ds[slot + 1] = a;
                            let f = flat(&ds);
                            v[f] = m.field().sub(v[f], c);
                        }
                    }
                    gens.push(v);
                }
            }
        }
        let rel = crate::linalg::Subspace::span(m.field(), ambient, &gens);
        ambient - rel.dim()
    }

    #[test]
    fn dims_match_flat_quotient() {
        let cases = vec![
            upper_triangular_over_diagonal(gf(5), 2).unwrap(),
            upper_triangular_over_diagonal(gf(3), 3).unwrap(),
            Extension::identity(crate::algebra::matrix_algebra(gf(3), 2)),
            crate::algebra::group_extension(
                gf(7),
                &crate::algebra::symmetric_group_table(),
                &[0, 1],
            )
            .unwrap(),
        ];
        for e in cases {
            let m = bimodule_of(&e);
            let t = TensorTower::new(m.clone(), 3).unwrap();
            for n in 1..=3 {
                assert_eq!(t.dim(n), flat_dim(&m, n), "level {n}");
            }
        }
    }

    #[test]
    fn b_equal_a_collapses() {
        let a = crate::algebra::matrix_algebra(gf(5), 2);
        let t = TensorTower::new(bimodule_of(&Extension::identity(a)), 3).unwrap();
        assert_eq!((t.dim(2), t.dim(3)), (4, 4));
        assert_eq!(t.ambient_dim(2) - t.dim(2), 16 - 4);
    }

    #[test]
    fn embedding_is_balanced() {
        let e = upper_triangular_over_diagonal(gf(5), 2).unwrap();
        let t = TensorTower::new(bimodule_of(&e), 2).unwrap();
        let a = e.ambient();
        // basis e11, e12, e22; e22 lies in B and is idempotent
        let (e12, e22) = (a.basis_vector(1), a.basis_vector(2));
        let lhs = t.embed_pure(&[a.mul(&e12, &e22), e22.clone()]);
        let rhs = t.embed_pure(&[e12.clone(), a.mul(&e22, &e22)]);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, t.embed_pure(&[e12, e22]));
        for b in e.sub_images() {
            for x in 0..3 {
                for y in 0..3 {
                    let (x, y) = (a.basis_vector(x), a.basis_vector(y));
                    assert_eq!(
                        t.embed_pure(&[a.mul(&x, &b), y.clone()]),
                        t.embed_pure(&[x, a.mul(&b, &y)])
                    );
                }
            }
        }
    }
}
