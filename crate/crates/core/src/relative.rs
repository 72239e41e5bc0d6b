//! Relative tensor powers `A (x)_B ... (x)_B A` of an extension, with the
//! outer `A`-actions and the multiplication maps between adjacent powers.

use crate::algebra::Extension;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::tower::{Bimodule, TensorTower};

/// `A` as a `B`-bimodule through the inclusion.
pub fn extension_bimodule(e: &Extension) -> Bimodule {
    let a = e.ambient();
    let images = e.sub_images();
    let left = images.iter().map(|b| a.left_mul(b)).collect();
    let right = images.iter().map(|b| a.right_mul(b)).collect();
    Bimodule::new(a.field(), a.dim(), left, right).expect("multiplication matrices are square")
}

#[derive(Clone, Debug)]
pub struct RelativeTensor {
    ext: Extension,
    tower: TensorTower,
    /// `a_left[n][a]`: `e_a . -` on level `n` (level 0 entries are empty)
    a_left: Vec<Vec<Matrix>>,
    a_right: Vec<Vec<Matrix>>,
    /// `mult[n][i - 1]`: level `n+1 -> n`, multiplying slots `i, i+1`
    mult: Vec<Vec<Matrix>>,
}

impl RelativeTensor {
    pub fn build(e: &Extension, max_power: usize) -> Result<Self> {
        if max_power == 0 {
            return Err(Error::InvalidInput("tensor powers start at 1".into()));
        }
        let a = e.ambient();
        let d = a.dim();
        let tower = TensorTower::new(extension_bimodule(e), max_power)?;
        let mut a_left = vec![Vec::new(); max_power + 1];
        let mut a_right = vec![Vec::new(); max_power + 1];
        for x in 0..d {
            let ex = a.basis_vector(x);
            let lifted = tower.lift_first_all(max_power, &a.left_mul(&ex))?;
            for (n, m) in lifted.into_iter().enumerate().skip(1) {
                a_left[n].push(m);
            }
            let rx = a.right_mul(&ex);
            for (n, slot) in a_right.iter_mut().enumerate().skip(1) {
                slot.push(tower.lift_last(n, &rx)?);
            }
        }
        let mut rt = RelativeTensor {
            ext: e.clone(),
            tower,
            a_left,
            a_right,
            mult: vec![Vec::new(); max_power],
        };
        for n in 1..max_power {
            let mut maps = Vec::with_capacity(n);
            for i in 1..=n {
                let m = if i == n {
                    let rt_ref = &rt;
                    rt.tower.descend_with(
                        n + 1,
                        "multiplication of the last two slots",
                        rt.tower.dim(n),
                        |j, k| rt_ref.a_right[n][k].column(j),
                    )?
                } else {
                    let lower = &rt.mult[n - 1][i - 1];
                    rt.tower.descend_with(
                        n + 1,
                        "slot multiplication",
                        rt.tower.dim(n),
                        |j, k| rt.tower.push_basis(n, &lower.column(j), k),
                    )?
                };
                maps.push(m);
            }
            rt.mult[n] = maps;
        }
        Ok(rt)
    }

    pub fn extension(&self) -> &Extension {
        &self.ext
    }
    pub fn tower(&self) -> &TensorTower {
        &self.tower
    }
    pub fn max_power(&self) -> usize {
        self.tower.max_level()
    }
    pub fn dim(&self, n: usize) -> usize {
        self.tower.dim(n)
    }

    pub fn embed_pure(&self, factors: &[Vec<u32>]) -> Vec<u32> {
        self.tower.embed_pure(factors)
    }

    /// Level `n+1 -> n`, multiplying slots `i` and `i+1` (`1 <= i <= n`).
    pub fn mult_at(&self, n: usize, i: usize) -> &Matrix {
        assert!(i >= 1 && i <= n, "slot {i} out of range for power {n}");
        &self.mult[n][i - 1]
    }

    /// Left multiplication by basis element `a` on the first slot of level `n`.
    pub fn left_mul(&self, n: usize, a: usize) -> &Matrix {
        &self.a_left[n][a]
    }

    pub fn right_mul(&self, n: usize, a: usize) -> &Matrix {
        &self.a_right[n][a]
    }

    /// `x . v` for `x` in `A` and `v` in level `n`.
    pub fn act_left(&self, n: usize, x: &[u32], v: &[u32]) -> Vec<u32> {
        self.combine(&self.a_left[n], x, v)
    }

    pub fn act_right(&self, n: usize, v: &[u32], x: &[u32]) -> Vec<u32> {
        self.combine(&self.a_right[n], x, v)
    }

    fn combine(&self, maps: &[Matrix], x: &[u32], v: &[u32]) -> Vec<u32> {
        let field = self.ext.field();
        let mut out = vec![0u32; v.len()];
        for (a, &c) in x.iter().enumerate() {
            if c != 0 {
                field.axpy(&mut out, c, &maps[a].mul_vec(v));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{field_ext_algebra, matrix_algebra, upper_triangular_over_diagonal};
    use crate::field::FieldSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn random_vec(rng: &mut ChaCha8Rng, p: u32, n: usize) -> Vec<u32> {
        (0..n).map(|_| rng.random_range(0..p)).collect()
    }

    #[test]
    fn multiplication_on_pure_tensors() {
        let e = upper_triangular_over_diagonal(gf(5), 2).unwrap();
        let rt = RelativeTensor::build(&e, 3).unwrap();
        let a = e.ambient();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let (x, y, z) = (
                random_vec(&mut rng, 5, 3),
                random_vec(&mut rng, 5, 3),
                random_vec(&mut rng, 5, 3),
            );
            assert_eq!(
                rt.mult_at(1, 1)
                    .mul_vec(&rt.embed_pure(&[x.clone(), y.clone()])),
                a.mul(&x, &y)
            );
            let t = rt.embed_pure(&[x.clone(), y.clone(), z.clone()]);
            assert_eq!(
                rt.mult_at(2, 1).mul_vec(&t),
                rt.embed_pure(&[a.mul(&x, &y), z.clone()])
            );
            assert_eq!(
                rt.mult_at(2, 2).mul_vec(&t),
                rt.embed_pure(&[x.clone(), a.mul(&y, &z)])
            );
        }
        let one = a.unit().to_vec();
        assert_eq!(
            rt.mult_at(1, 1)
                .mul_vec(&rt.embed_pure(&[one.clone(), one.clone()])),
            one
        );
    }

    #[test]
    fn simplicial_identities() {
        let e = crate::algebra::group_extension(
            gf(7),
            &crate::algebra::symmetric_group_table(),
            &[0, 1],
        )
        .unwrap();
        let rt = RelativeTensor::build(&e, 4).unwrap();
        for n in 2..=3 {
            for i in 1..=n - 1 {
                for j in i..=n - 1 {
                    // mu_i . mu_(j+1) = mu_j . mu_i, maps level n+1 -> n-1
                    let lhs = rt.mult_at(n - 1, i).mul(rt.mult_at(n, j + 1));
                    let rhs = rt.mult_at(n - 1, j).mul(rt.mult_at(n, i));
                    assert_eq!(lhs, rhs, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn b_equal_a_multiplication_is_bijective() {
        let e = Extension::identity(matrix_algebra(gf(5), 2));
        let rt = RelativeTensor::build(&e, 2).unwrap();
        let m = rt.mult_at(1, 1);
        assert_eq!((m.rows(), m.cols(), m.rank()), (4, 4, 4));
    }

    #[test]
    fn outer_actions_on_pure_tensors() {
        let e = Extension::over_ground(field_ext_algebra(gf(5), &[3, 0, 1]).unwrap());
        let rt = RelativeTensor::build(&e, 2).unwrap();
        let a = e.ambient();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let (x, y, z) = (
                random_vec(&mut rng, 5, 2),
                random_vec(&mut rng, 5, 2),
                random_vec(&mut rng, 5, 2),
            );
            let t = rt.embed_pure(&[x.clone(), y.clone()]);
            assert_eq!(
                rt.act_left(2, &z, &t),
                rt.embed_pure(&[a.mul(&z, &x), y.clone()])
            );
            assert_eq!(
                rt.act_right(2, &t, &z),
                rt.embed_pure(&[x.clone(), a.mul(&y, &z)])
            );
        }
        assert_eq!(rt.dim(2), 4);
    }
}
