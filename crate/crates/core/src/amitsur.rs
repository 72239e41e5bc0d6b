//! The Amitsur complex `Omega(C)` of a coring with grouplike `g`: the tensor
//! algebra of `C` over its base, with
//! `d(c^1..c^n) = g (x) c^1..c^n + sum (-1)^i ..Delta(c^i).. + (-1)^(n+1) c^1..c^n (x) g`
//! and `d(r) = g r - r g` in degree 0.

use rand::Rng;
use serde::Serialize;

use crate::coring::CoringWithGrouplike;
use crate::dga::{cohomology_from_ranks, leibniz_splits, DgaReport, LeibnizCheck, SquareCheck};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaElement {
    pub degree: usize,
    pub coords: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct AmitsurComplex {
    coring: CoringWithGrouplike,
    max_degree: usize,
    d: Vec<Matrix>,
}

impl AmitsurComplex {
    pub fn build(coring: &CoringWithGrouplike, max_degree: usize) -> Result<Self> {
        if max_degree == 0 {
            return Err(Error::InvalidInput("max degree must be at least 1".into()));
        }
        let mut coring = coring.clone();
        coring.tower_mut().extend_to(max_degree.max(3))?;
        let t = coring.tower();
        let field = coring.base().field();
        let g = coring.grouplike().to_vec();
        let delta = coring.coproduct().clone();

        let mut d = Vec::with_capacity(max_degree);
        let mut d0 = Matrix::zeros(field, t.dim(1), coring.base().dim());
        for r in 0..coring.base().dim() {
            let mut col = t.right_action(1, r).mul_vec(&g);
            field.axpy(&mut col, field.neg(1), &t.left_action(1, r).mul_vec(&g));
            d0.set_column(r, &col);
        }
        d.push(d0);

        // insert_g[n]: level n -> n+1, c -> g (x) c; slots[n][i-1]: Delta at slot i
        let mut insert_g: Vec<Matrix> = vec![Matrix::zeros(field, 0, 0)];
        let mut slots: Vec<Vec<Matrix>> = vec![Vec::new()];
        for n in 1..max_degree {
            let ig = if n == 1 {
                let cols: Vec<Vec<u32>> = (0..t.dim(1)).map(|k| t.push_basis(2, &g, k)).collect();
                Matrix::from_columns(field, t.dim(2), &cols)
            } else {
                let prev = &insert_g[n - 1];
                t.descend_with(n, "left grouplike insertion", t.dim(n + 1), |j, k| {
                    t.push_basis(n + 1, &prev.column(j), k)
                })?
            };
            let mut level_slots = Vec::with_capacity(n);
            for i in 1..=n {
                let m = if n == 1 {
                    delta.clone()
                } else if i < n {
                    let prev = &slots[n - 1][i - 1];
                    t.descend_with(n, "coproduct at an inner slot", t.dim(n + 1), |j, k| {
                        t.push_basis(n + 1, &prev.column(j), k)
                    })?
                } else {
                    t.descend_with(n, "coproduct at the last slot", t.dim(n + 1), |j, k| {
                        let mut x = vec![0u32; t.dim(n - 1)];
                        x[j] = 1;
                        t.concat(n - 1, &x, 2, &delta.column(k))
                    })?
                };
                level_slots.push(m);
            }
            let rg_cols: Vec<Vec<u32>> = (0..t.dim(n))
                .map(|j| {
                    let mut x = vec![0u32; t.dim(n)];
                    x[j] = 1;
                    t.push(n + 1, &x, &g)
                })
                .collect();
            let mut dn = ig.clone();
            dn.add_scaled(
                field.sign(n + 1),
                &Matrix::from_columns(field, t.dim(n + 1), &rg_cols),
            );
            for (i, m) in level_slots.iter().enumerate() {
                dn.add_scaled(field.sign(i + 1), m);
            }
            d.push(dn);
            insert_g.push(ig);
            slots.push(level_slots);
        }
        Ok(AmitsurComplex {
            coring,
            max_degree,
            d,
        })
    }

    pub fn coring(&self) -> &CoringWithGrouplike {
        &self.coring
    }
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn dim(&self, n: usize) -> usize {
        if n == 0 {
            self.coring.base().dim()
        } else {
            self.coring.tower().dim(n)
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.max_degree).map(|n| self.dim(n)).collect()
    }

    /// `d^n: Omega^n -> Omega^(n+1)`, for `n < max_degree`.
    pub fn differential(&self, n: usize) -> &Matrix {
        &self.d[n]
    }

    #[cfg(test)]
    pub(crate) fn differential_mut(&mut self, n: usize) -> &mut Matrix {
        &mut self.d[n]
    }

    pub fn apply_d(&self, w: &OmegaElement) -> OmegaElement {
        OmegaElement {
            degree: w.degree + 1,
            coords: self.d[w.degree].mul_vec(&w.coords),
        }
    }

    pub fn random_element<R: Rng>(&self, n: usize, rng: &mut R) -> OmegaElement {
        let p = self.coring.base().field().characteristic();
        OmegaElement {
            degree: n,
            coords: (0..self.dim(n)).map(|_| rng.random_range(0..p)).collect(),
        }
    }

    pub fn unit(&self) -> OmegaElement {
        OmegaElement {
            degree: 0,
            coords: self.coring.base().unit().to_vec(),
        }
    }

    pub fn grouplike(&self) -> OmegaElement {
        OmegaElement {
            degree: 1,
            coords: self.coring.grouplike().to_vec(),
        }
    }

    /// Product in the tensor algebra; degree 0 acts through the base actions.
    pub fn omega_product(&self, a: &OmegaElement, b: &OmegaElement) -> OmegaElement {
        let c = &self.coring;
        let coords = match (a.degree, b.degree) {
            (0, 0) => c.base().mul(&a.coords, &b.coords),
            (0, n) => c.act_left(n, &a.coords, &b.coords),
            (m, 0) => c.act_right(m, &a.coords, &b.coords),
            (m, n) => c.tower().concat(m, &a.coords, n, &b.coords),
        };
        OmegaElement {
            degree: a.degree + b.degree,
            coords,
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.d.iter().map(|m| m.rank()).collect()
    }

    /// `dim H^0 .. dim H^(N-1)`; `H^0` is the coinvariant subring `{r : r g = g r}`.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        cohomology_from_ranks(&self.dims(), &self.ranks())
    }

    pub fn verify_dga<R: Rng>(&self, trials: usize, rng: &mut R) -> DgaReport {
        let field = self.coring.base().field();
        let d_squared = (0..self.max_degree.saturating_sub(1))
            .map(|n| SquareCheck {
                degree: n,
                passed: self.d[n + 1].mul(&self.d[n]).is_zero(),
            })
            .collect();
        let mut leibniz = Vec::new();
        for (m, n) in leibniz_splits(self.max_degree) {
            let mut failures = 0;
            let mut first_failure = None;
            for trial in 0..trials {
                let a = self.random_element(m, rng);
                let b = self.random_element(n, rng);
                let lhs = self.apply_d(&self.omega_product(&a, &b));
                let mut rhs = self.omega_product(&self.apply_d(&a), &b);
                let second = self.omega_product(&a, &self.apply_d(&b));
                field.axpy(&mut rhs.coords, field.sign(m), &second.coords);
                if lhs != rhs {
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
        DgaReport { d_squared, leibniz }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        cyclic_group_table, dual_hopf, field_ext_algebra, group_hopf, matrix_algebra,
        upper_triangular_over_diagonal, Extension,
    };
    use crate::coring::{endo_coring, hopf_coring, sweedler_coring, CoringWithGrouplike};
    use crate::field::FieldSpec;
    use crate::hochschild::CochainComplex;
    use crate::relative::RelativeTensor;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn endo_coring_degree_zero_matches_hochschild() {
        let e = upper_triangular_over_diagonal(gf(5), 2).unwrap();
        let cc = CochainComplex::build(&e, 2).unwrap();
        let (coring, _) = endo_coring(&cc).unwrap();
        let ac = AmitsurComplex::build(&coring, 2).unwrap();
        assert_eq!(ac.differential(0), cc.delta(0));
    }

    #[test]
    fn grouplike_differential() {
        let h = group_hopf(gf(3), &cyclic_group_table(3)).unwrap();
        let ac = AmitsurComplex::build(&hopf_coring(&h).unwrap(), 2).unwrap();
        let g = ac.grouplike();
        // d(g) = g g - g g + g g
        assert_eq!(ac.apply_d(&g), ac.omega_product(&g, &g));
        let one = ac.unit();
        let w = ac.random_element(2, &mut ChaCha8Rng::seed_from_u64(0));
        assert_eq!(ac.omega_product(&one, &w), w);
        assert_eq!(ac.omega_product(&w, &one), w);
    }

    #[test]
    fn sweedler_gf25_is_acyclic() {
        let e = Extension::over_ground(field_ext_algebra(gf(5), &[3, 0, 1]).unwrap());
        let rt = RelativeTensor::build(&e, 2).unwrap();
        let ac = AmitsurComplex::build(&sweedler_coring(&rt).unwrap(), 3).unwrap();
        assert_eq!(ac.cohomology_dims(), vec![1, 0, 0]);
        let rep = ac.verify_dga(20, &mut ChaCha8Rng::seed_from_u64(4));
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn m2_endo_coring_cohomology() {
        let e = Extension::over_ground(matrix_algebra(gf(5), 2));
        let cc = CochainComplex::build(&e, 2).unwrap();
        let (coring, _) = endo_coring(&cc).unwrap();
        let ac = AmitsurComplex::build(&coring, 3).unwrap();
        assert_eq!(ac.dims(), vec![4, 16, 64, 256]);
        assert_eq!(ac.cohomology_dims(), vec![1, 0, 0]);
        assert!(ac
            .verify_dga(10, &mut ChaCha8Rng::seed_from_u64(9))
            .passed());
    }

    #[test]
    fn associativity_of_product() {
        let e = upper_triangular_over_diagonal(gf(5), 2).unwrap();
        let cc = CochainComplex::build(&e, 2).unwrap();
        let (coring, _) = endo_coring(&cc).unwrap();
        let ac = AmitsurComplex::build(&coring, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for (a, b, c) in [(1, 1, 1), (0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 0, 0)] {
            for _ in 0..10 {
                let (x, y, z) = (
                    ac.random_element(a, &mut rng),
                    ac.random_element(b, &mut rng),
                    ac.random_element(c, &mut rng),
                );
                assert_eq!(
                    ac.omega_product(&ac.omega_product(&x, &y), &z),
                    ac.omega_product(&x, &ac.omega_product(&y, &z))
                );
            }
        }
    }

    #[test]
    fn corrupted_coproduct_breaks_d_squared() {
        let h = dual_hopf(&group_hopf(gf(2), &cyclic_group_table(2)).unwrap()).unwrap();
        let good = hopf_coring(&h).unwrap();
        let mut delta = good.coproduct().clone();
        // add e_1 (x) e_1 to Delta(e_0)
        let v = delta.get(3, 0);
        delta.set(3, 0, (v + 1) % 2);
        let bad = CoringWithGrouplike::from_parts_unchecked(
            "corrupted",
            good.base().clone(),
            good.tower().clone(),
            delta,
            good.counit().clone(),
            good.grouplike().to_vec(),
        )
        .unwrap();
        assert!(!bad.axiom_failures().is_empty());
        let ac = AmitsurComplex::build(&bad, 3).unwrap();
        let rep = ac.verify_dga(5, &mut ChaCha8Rng::seed_from_u64(1));
        assert!(!rep.passed());
        assert!(!rep.failing_degrees().is_empty());
    }

    #[test]
    fn corrupted_differential_is_localized() {
        let h = group_hopf(gf(3), &cyclic_group_table(2)).unwrap();
        let mut ac = AmitsurComplex::build(&hopf_coring(&h).unwrap(), 3).unwrap();
        let v = ac.differential(2).get(0, 0);
        ac.differential_mut(2).set(0, 0, (v + 1) % 3);
        let rep = ac.verify_dga(3, &mut ChaCha8Rng::seed_from_u64(2));
        assert_eq!(rep.failing_degrees(), vec![1]);
    }
}
