//! The relative Hochschild cochain complex `C^n(A, B; A)` with its cup
//! product.
//!
//! `C^0` is the centralizer `R = A^B` (coordinates in its kernel basis) and
//! `C^n` for `n >= 1` is the space of `B`-bimodule maps from the `n`-th relative
//! tensor power to `A`. The coboundary is
//! `(df)(a_1..a_(n+1)) = a_1 f(a_2..) + sum (-1)^i f(..a_i a_(i+1)..) + (-1)^(n+1) f(a_1..a_n) a_(n+1)`
//! and on degree 0, `(dr)(a) = a r - r a`, the sign for which the graded
//! Leibniz rule holds with `r u g = r.g(-)` and `g u r = g(-).r`.

use std::collections::BTreeMap;

use rand::Rng;

use crate::algebra::{centralizer, Extension};
use crate::dga::{cohomology_from_ranks, leibniz_splits, DgaReport, LeibnizCheck, SquareCheck};
use crate::error::{Error, Result};
use crate::hom::HomSpace;
use crate::linalg::{Matrix, Subspace};
use crate::relative::RelativeTensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub coords: Vec<u32>,
}

/// Data for cups of degrees `(m, n)`, both positive.
#[derive(Clone, Debug)]
struct CupPlan {
    /// level-`m` prefix index of each basis vector of level `m + n`
    prefix: Vec<usize>,
    /// column `u`: the level-`n` suffix of basis vector `u` of level `m + n`
    suffix: Matrix,
    /// column `i * q_n + j`: the class of `x_i (x) y_j` in level `m + n`
    concat: Matrix,
}

#[derive(Clone, Debug)]
pub struct CochainComplex {
    ext: Extension,
    max_degree: usize,
    rt: RelativeTensor,
    r: Subspace,
    homs: Vec<HomSpace>,
    delta: Vec<Matrix>,
    plans: BTreeMap<(usize, usize), CupPlan>,
}

impl CochainComplex {
    pub fn build(e: &Extension, max_degree: usize) -> Result<Self> {
        if max_degree == 0 {
            return Err(Error::InvalidInput("max degree must be at least 1".into()));
        }
        let rt = RelativeTensor::build(e, max_degree)?;
        let r = centralizer(e);
        let homs = (1..=max_degree)
            .map(|n| HomSpace::bimodule_maps(&rt, n))
            .collect();
        let tower = rt.tower();
        let mut plans = BTreeMap::new();
        for total in 2..=max_degree {
            for m in 1..total {
                let n = total - m;
                let prefix = (0..tower.dim(total))
                    .map(|u| tower.prefix(total, u, m))
                    .collect();
                let cols: Vec<Vec<u32>> = (0..tower.dim(total))
                    .map(|u| tower.embed_indices(&tower.rep(total, u)[m..]))
                    .collect();
                let suffix = Matrix::from_columns(e.field(), tower.dim(n), &cols);
                plans.insert(
                    (m, n),
                    CupPlan {
                        prefix,
                        suffix,
                        concat: tower.concat_matrix(m, n),
                    },
                );
            }
        }
        let mut cc = CochainComplex {
            ext: e.clone(),
            max_degree,
            rt,
            r,
            homs,
            delta: Vec::new(),
            plans,
        };
        let mut delta = vec![cc.build_delta0()?];
        for n in 1..max_degree {
            delta.push(cc.build_delta(n)?);
        }
        cc.delta = delta;
        Ok(cc)
    }

    pub fn extension(&self) -> &Extension {
        &self.ext
    }
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }
    pub fn relative(&self) -> &RelativeTensor {
        &self.rt
    }
    pub fn centralizer(&self) -> &Subspace {
        &self.r
    }
    pub fn hom(&self, n: usize) -> &HomSpace {
        &self.homs[n - 1]
    }

    pub fn dim(&self, n: usize) -> usize {
        if n == 0 {
            self.r.dim()
        } else {
            self.homs[n - 1].dim()
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.max_degree).map(|n| self.dim(n)).collect()
    }

    /// `delta^n: C^n -> C^(n+1)`, for `n < max_degree`.
    pub fn delta(&self, n: usize) -> &Matrix {
        &self.delta[n]
    }

    #[cfg(test)]
    pub(crate) fn delta_mut(&mut self, n: usize) -> &mut Matrix {
        &mut self.delta[n]
    }

    pub fn zero(&self, n: usize) -> Cochain {
        Cochain {
            degree: n,
            coords: vec![0; self.dim(n)],
        }
    }

    pub fn basis_cochain(&self, n: usize, i: usize) -> Cochain {
        let mut c = self.zero(n);
        c.coords[i] = 1;
        c
    }

    pub fn random_cochain<R: Rng>(&self, n: usize, rng: &mut R) -> Cochain {
        let p = self.ext.field().characteristic();
        Cochain {
            degree: n,
            coords: (0..self.dim(n)).map(|_| rng.random_range(0..p)).collect(),
        }
    }

    /// `1_R` in degree 0.
    pub fn unit(&self) -> Result<Cochain> {
        self.from_center_element(self.ext.ambient().unit())
    }

    /// `id_A` in degree 1.
    pub fn identity(&self) -> Result<Cochain> {
        let d = self.ext.ambient().dim();
        self.from_values(1, &Matrix::identity(self.ext.field(), d))
    }

    pub fn from_center_element(&self, r: &[u32]) -> Result<Cochain> {
        let coords = self
            .r
            .coordinates(r)
            .ok_or_else(|| Error::ElementNotInSpace("element of the centralizer".into()))?;
        Ok(Cochain { degree: 0, coords })
    }

    /// The cochain whose matrix on the level-`n` basis is `values`.
    pub fn from_values(&self, n: usize, values: &Matrix) -> Result<Cochain> {
        let coords = self
            .hom(n)
            .coordinates_or_err(values, &format!("bimodule map on power {n}"))?;
        Ok(Cochain { degree: n, coords })
    }

    /// Degree 0: the element of `A`.
    pub fn center_value(&self, c: &Cochain) -> Vec<u32> {
        assert_eq!(c.degree, 0);
        self.r.basis().mul_vec(&c.coords)
    }

    /// Degree `n >= 1`: the `dim A x dim(power n)` matrix.
    pub fn values(&self, c: &Cochain) -> Matrix {
        assert!(c.degree >= 1);
        self.hom(c.degree).element(&c.coords)
    }

    /// `(f u g)` on matrices of degrees `m, n >= 1`, checked against every pair
    /// of basis tensors.
    pub fn cup_values(&self, m: usize, f: &Matrix, n: usize, g: &Matrix) -> Result<Matrix> {
        let a = self.ext.ambient();
        let field = a.field();
        let plan = self.plans.get(&(m, n)).ok_or_else(|| {
            Error::InvalidInput(format!("cup of degrees {m} + {n} exceeds max degree"))
        })?;
        let gs = g.mul(&plan.suffix);
        let total = plan.prefix.len();
        let mut out = Matrix::zeros(field, a.dim(), total);
        for (u, &p) in plan.prefix.iter().enumerate() {
            out.set_column(u, &a.mul(&f.column(p), &gs.column(u)));
        }
        let (qm, qn) = (f.cols(), g.cols());
        let check = out.mul(&plan.concat);
        for i in 0..qm {
            let fi = f.column(i);
            for j in 0..qn {
                if check.column(i * qn + j) != a.mul(&fi, &g.column(j)) {
                    return Err(Error::NotWellDefined {
                        context: format!("cup of degrees {m} and {n}"),
                        relation: i * qn + j,
                    });
                }
            }
        }
        Ok(out)
    }

    pub fn cup(&self, f: &Cochain, g: &Cochain) -> Result<Cochain> {
        let a = self.ext.ambient();
        match (f.degree, g.degree) {
            (0, 0) => {
                self.from_center_element(&a.mul(&self.center_value(f), &self.center_value(g)))
            }
            (0, n) => {
                let lr = a.left_mul(&self.center_value(f));
                self.from_values(n, &lr.mul(&self.values(g)))
            }
            (m, 0) => {
                let rr = a.right_mul(&self.center_value(g));
                self.from_values(m, &rr.mul(&self.values(f)))
            }
            (m, n) => {
                let v = self.cup_values(m, &self.values(f), n, &self.values(g))?;
                self.from_values(m + n, &v)
            }
        }
    }

    pub fn apply_delta(&self, c: &Cochain) -> Cochain {
        Cochain {
            degree: c.degree + 1,
            coords: self.delta[c.degree].mul_vec(&c.coords),
        }
    }

    fn build_delta0(&self) -> Result<Matrix> {
        let a = self.ext.ambient();
        let field = a.field();
        let mut out = Matrix::zeros(field, self.dim(1), self.dim(0));
        for t in 0..self.dim(0) {
            let r = self.r.vector(t);
            let v = a.right_mul(&r).sub(&a.left_mul(&r));
            out.set_column(t, &self.from_values(1, &v)?.coords);
        }
        Ok(out)
    }

    fn build_delta(&self, n: usize) -> Result<Matrix> {
        let a = self.ext.ambient();
        let field = a.field();
        let id = Matrix::identity(field, a.dim());
        let mut out = Matrix::zeros(field, self.dim(n + 1), self.dim(n));
        for t in 0..self.dim(n) {
            let f = self.hom(n).basis_element(t);
            let mut v = self.cup_values(1, &id, n, &f)?;
            v.add_scaled(field.sign(n + 1), &self.cup_values(n, &f, 1, &id)?);
            for i in 1..=n {
                v.add_scaled(field.sign(i), &f.mul(self.rt.mult_at(n, i)));
            }
            out.set_column(t, &self.from_values(n + 1, &v)?.coords);
        }
        Ok(out)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.delta.iter().map(|d| d.rank()).collect()
    }

    /// `dim H^0 .. dim H^(N-1)`.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        cohomology_from_ranks(&self.dims(), &self.ranks())
    }

    fn leibniz_holds(&self, f: &Cochain, g: &Cochain) -> Result<bool> {
        let field = self.ext.field();
        let lhs = self.apply_delta(&self.cup(f, g)?);
        let mut rhs = self.cup(&self.apply_delta(f), g)?;
        let second = self.cup(f, &self.apply_delta(g))?;
        field.axpy(&mut rhs.coords, field.sign(f.degree), &second.coords);
        Ok(lhs == rhs)
    }

    /// `delta^2 = 0` in every stored degree and the graded Leibniz rule on
    /// `trials` random pairs for every split with `m + n < max_degree`.
    pub fn verify_dga<R: Rng>(&self, trials: usize, rng: &mut R) -> Result<DgaReport> {
        let d_squared = (0..self.max_degree.saturating_sub(1))
            .map(|n| SquareCheck {
                degree: n,
                passed: self.delta[n + 1].mul(&self.delta[n]).is_zero(),
            })
            .collect();
        let mut leibniz = Vec::new();
        for (m, n) in leibniz_splits(self.max_degree) {
            let mut failures = 0;
            let mut first_failure = None;
            for trial in 0..trials {
                let f = self.random_cochain(m, rng);
                let g = self.random_cochain(n, rng);
                if !self.leibniz_holds(&f, &g)? {
                    failures += 1;
                    first_failure.get_or_insert(trial);
                }
            }
            leibniz.push(LeibnizCheck {
                m,
                n,
                trials,
                failures,
                first_failure,
            });
        }
        Ok(DgaReport { d_squared, leibniz })
    }
}
