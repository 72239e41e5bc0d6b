//! The comparison map `f: Omega(S) -> C(A/B)` from the Amitsur complex of the
//! endomorphism coring to relative Hochschild cochains,
//! `f_n(a^1 (x) ... (x) a^n) = a^1 u ... u a^n`, and its verification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Extension;
use crate::amitsur::{AmitsurComplex, OmegaElement};
use crate::coring::{endo_coring, D2Certificate};
use crate::error::{Error, Result};
use crate::hochschild::{Cochain, CochainComplex};
use crate::linalg::Matrix;

/// `f_0 .. f_N` as matrices `dim C^n x dim Omega^n`.
pub fn build_all(cc: &CochainComplex, ac: &AmitsurComplex) -> Result<Vec<Matrix>> {
    let field = cc.extension().field();
    let top = cc.max_degree().min(ac.max_degree());
    if ac.dim(0) != cc.dim(0) || ac.dim(1) != cc.dim(1) {
        return Err(Error::DimensionMismatch(
            "Amitsur complex is not over the endomorphism coring".into(),
        ));
    }
    let mut fs = vec![Matrix::identity(field, cc.dim(0))];
    if top >= 1 {
        fs.push(Matrix::identity(field, cc.dim(1)));
    }
    let t = ac.coring().tower();
    let s = cc.hom(1);
    let alphas: Vec<Matrix> = (0..s.dim()).map(|k| s.basis_element(k)).collect();
    for n in 2..=top {
        let prev = &fs[n - 1];
        let fnm = t.descend_with(n, "comparison map", cc.dim(n), |j, k| {
            let left = cc.hom(n - 1).element(&prev.column(j));
            let v = cc.cup_values(n - 1, &left, 1, &alphas[k]).and_then(|m| {
                cc.hom(n)
                    .coordinates_or_err(&m, "cup product of endomorphisms")
            });
            v.expect("cups of bimodule maps are bimodule maps")
        })?;
        fs.push(fnm);
    }
    Ok(fs)
}

/// `f_n` alone; `n` must not exceed either complex's top degree.
pub fn build_fn(cc: &CochainComplex, ac: &AmitsurComplex, n: usize) -> Result<Matrix> {
    let mut fs = build_all(cc, ac)?;
    if n >= fs.len() {
        return Err(Error::InvalidInput(format!(
            "degree {n} exceeds the complexes"
        )));
    }
    Ok(fs.swap_remove(n))
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeWitness {
    pub degree: usize,
    pub dim_omega: usize,
    pub dim_cochains: usize,
    pub rank: usize,
    pub bijective: bool,
    /// `f_(n+1) d^n = delta^n f_n`; absent in the top degree
    pub chain_map: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicativityCheck {
    pub a: usize,
    pub b: usize,
    pub trials: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoWitness {
    pub max_degree: usize,
    pub certificate: D2Certificate,
    pub degrees: Vec<DegreeWitness>,
    pub f2_matches_certificate: bool,
    pub multiplicativity: Vec<MultiplicativityCheck>,
    pub amitsur_cohomology: Vec<usize>,
    pub hochschild_cohomology: Vec<usize>,
}

impl IsoWitness {
    pub fn passed(&self) -> bool {
        self.f2_matches_certificate
            && self
                .degrees
                .iter()
                .all(|d| d.bijective && d.chain_map != Some(false))
            && self.multiplicativity.iter().all(|m| m.failures == 0)
            && self.amitsur_cohomology == self.hochschild_cohomology
    }
}

fn apply(f: &Matrix, w: &OmegaElement) -> Cochain {
    Cochain {
        degree: w.degree,
        coords: f.mul_vec(&w.coords),
    }
}

/// Checks that `f` is a bijective map of differential graded algebras in
/// degrees `0..=N`, with multiplicativity sampled on `trials` random pairs
/// for each split `a + b <= N`.
pub fn verify_isomorphism<R: Rng>(
    cc: &CochainComplex,
    ac: &AmitsurComplex,
    cert: &D2Certificate,
    trials: usize,
    rng: &mut R,
) -> Result<IsoWitness> {
    let fs = build_all(cc, ac)?;
    let top = fs.len() - 1;
    let degrees = (0..=top)
        .map(|n| {
            let f = &fs[n];
            let rank = f.rank();
            DegreeWitness {
                degree: n,
                dim_omega: f.cols(),
                dim_cochains: f.rows(),
                rank,
                bijective: f.rows() == f.cols() && rank == f.rows(),
                chain_map: (n < top)
                    .then(|| fs[n + 1].mul(ac.differential(n)) == cc.delta(n).mul(f)),
            }
        })
        .collect();
    let f2_matches_certificate = top < 2 || fs[2] == cert.f2;
    let mut multiplicativity = Vec::new();
    for s in 0..=top {
        for a in 0..=s {
            let b = s - a;
            let mut failures = 0;
            for _ in 0..trials {
                let x = ac.random_element(a, rng);
                let y = ac.random_element(b, rng);
                let lhs = apply(&fs[s], &ac.omega_product(&x, &y));
                let rhs = cc.cup(&apply(&fs[a], &x), &apply(&fs[b], &y))?;
                if lhs != rhs {
                    failures += 1;
                }
            }
            multiplicativity.push(MultiplicativityCheck {
                a,
                b,
                trials,
                failures,
            });
        }
    }
    Ok(IsoWitness {
        max_degree: top,
        certificate: cert.clone(),
        degrees,
        f2_matches_certificate,
        multiplicativity,
        amitsur_cohomology: ac.cohomology_dims(),
        hochschild_cohomology: cc.cohomology_dims(),
    })
}

/// Builds both complexes to degree `max_degree` and runs [`verify_isomorphism`].
pub fn verify_isomorphism_for(
    e: &Extension,
    max_degree: usize,
    trials: usize,
    seed: u64,
) -> Result<IsoWitness> {
    let cc = CochainComplex::build(e, max_degree.max(2))?;
    let (coring, cert) = endo_coring(&cc)?;
    let ac = AmitsurComplex::build(&coring, max_degree)?;
    verify_isomorphism(
        &cc,
        &ac,
        &cert,
        trials,
        &mut ChaCha8Rng::seed_from_u64(seed),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        cyclic_group_table, group_extension, matrix_algebra, upper_triangular_over_diagonal,
    };
    use crate::field::FieldSpec;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn triangular_over_diagonal() {
        let e = upper_triangular_over_diagonal(gf(5), 2).unwrap();
        let w = verify_isomorphism_for(&e, 4, 20, 1).unwrap();
        assert!(w.passed(), "{w:?}");
        assert_eq!(w.amitsur_cohomology, w.hochschild_cohomology);
    }

    #[test]
    fn matrices_over_scalars() {
        let e = Extension::over_ground(matrix_algebra(gf(5), 2));
        let w = verify_isomorphism_for(&e, 3, 10, 2).unwrap();
        assert!(w.passed(), "{w:?}");
        assert_eq!(
            w.degrees.iter().map(|d| d.dim_omega).collect::<Vec<_>>(),
            vec![4, 16, 64, 256]
        );
    }

    #[test]
    fn group_algebra_over_ground() {
        let e = group_extension(gf(2), &cyclic_group_table(2), &[0]).unwrap();
        let w = verify_isomorphism_for(&e, 4, 20, 3).unwrap();
        assert!(w.passed(), "{w:?}");
    }

    #[test]
    fn broken_comparison_is_detected() {
        let e = upper_triangular_over_diagonal(gf(5), 2).unwrap();
        let cc = CochainComplex::build(&e, 3).unwrap();
        let (coring, cert) = endo_coring(&cc).unwrap();
        let ac = AmitsurComplex::build(&coring, 3).unwrap();
        let mut fs = build_all(&cc, &ac).unwrap();
        assert_eq!(build_fn(&cc, &ac, 2).unwrap(), cert.f2);
        assert!(build_fn(&cc, &ac, 1).unwrap().is_identity());
        let v = fs[2].get(0, 0);
        fs[2].set(0, 0, (v + 1) % 5);
        assert!(fs[2].mul(ac.differential(1)) != cc.delta(1).mul(&fs[1]) || fs[2] != cert.f2);
    }
}
