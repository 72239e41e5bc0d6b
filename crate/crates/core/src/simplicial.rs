//! Simplicial complexes given by facet lists, the incidence algebra of their
//! face poset over the diagonal, and a direct simplicial cohomology routine.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{Extension, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hochschild::CochainComplex;
use crate::linalg::Matrix;

/// Default cap on `dim A` for [`gs_compare`].
pub const DEFAULT_GS_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
    /// sorted by size, then lexicographically
    faces: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn from_facets(facets: &[Vec<usize>]) -> Result<Self> {
        let mut clean = BTreeSet::new();
        for (i, f) in facets.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::EmptyFacet(i));
            }
            let s: BTreeSet<usize> = f.iter().copied().collect();
            clean.insert(s.into_iter().collect::<Vec<_>>());
        }
        let vertex_count = clean.iter().flatten().max().map_or(0, |&m| m + 1);
        let mut faces = BTreeSet::new();
        for f in &clean {
            for mask in 1u64..(1 << f.len()) {
                let face: Vec<usize> = (0..f.len())
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| f[b])
                    .collect();
                faces.insert(face);
            }
        }
        let mut faces: Vec<Vec<usize>> = faces.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(SimplicialComplex {
            vertex_count,
            facets: clean.into_iter().collect(),
            faces,
        })
    }

    /// One more than the largest vertex id.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Faces with `n + 1` vertices.
    pub fn simplices(&self, n: usize) -> Vec<&[usize]> {
        self.faces
            .iter()
            .filter(|f| f.len() == n + 1)
            .map(|f| f.as_slice())
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.faces.last().map_or(0, |f| f.len() - 1)
    }
}

/// One facet per line, vertex ids separated by whitespace; `#` starts a comment line.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let facet = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: i + 1,
                    msg: format!("bad vertex id `{tok}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        facets.push(facet);
    }
    if facets.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "no facets".into(),
        });
    }
    SimplicialComplex::from_facets(&facets)
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// The incidence algebra of the face poset (basis `e[s,t]` for `s <= t`,
/// diagonal first) over the span of the `e[s,s]`.
pub fn incidence_extension(s: &SimplicialComplex, field: FieldSpec) -> Result<Extension> {
    let faces = s.faces();
    let nf = faces.len();
    let mut pairs: Vec<(usize, usize)> = (0..nf).map(|i| (i, i)).collect();
    for i in 0..nf {
        for j in 0..nf {
            if i != j && is_subset(&faces[i], &faces[j]) {
                pairs.push((i, j));
            }
        }
    }
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a, b));
    let table: Vec<Vec<Option<usize>>> = pairs
        .iter()
        .map(|&(a, b)| {
            pairs
                .iter()
                .map(|&(c, d)| if b == c { index(a, d) } else { None })
                .collect()
        })
        .collect();
    let name = |f: &[usize]| f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("");
    let names = pairs
        .iter()
        .map(|&(a, b)| format!("e[{},{}]", name(&faces[a]), name(&faces[b])))
        .collect();
    let n = pairs.len();
    let mut unit = vec![0u32; n];
    unit[..nf].fill(1);
    let a = FinDimAlgebra::from_products(field, names, unit, |i, j| {
        let mut v = vec![0u32; n];
        if let Some(k) = table[i][j] {
            v[k] = 1;
        }
        v
    })?;
    let b = FinDimAlgebra::from_products(
        field,
        (0..nf).map(|i| format!("e[{}]", name(&faces[i]))).collect(),
        vec![1; nf],
        |i, j| {
            let mut v = vec![0u32; nf];
            if i == j {
                v[i] = 1;
            }
            v
        },
    )?;
    let mut inclusion = Matrix::zeros(field, n, nf);
    for i in 0..nf {
        inclusion.set(i, i, 1);
    }
    Extension::checked(a, b, inclusion)
}

/// `d^n: C^n -> C^(n+1)` with `(d c)(v_0..v_(n+1)) = sum (-1)^i c(..v_i omitted..)`.
fn coboundary(s: &SimplicialComplex, field: FieldSpec, n: usize) -> Matrix {
    let src = s.simplices(n);
    let dst = s.simplices(n + 1);
    let mut m = Matrix::zeros(field, dst.len(), src.len());
    for (r, t) in dst.iter().enumerate() {
        for i in 0..t.len() {
            let face: Vec<usize> = t
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &v)| v)
                .collect();
            let c = src
                .iter()
                .position(|f| *f == face.as_slice())
                .expect("faces are closed under subsets");
            m.set(r, c, field.sign(i));
        }
    }
    m
}

/// `dim H^0 .. dim H^max_n` of the complex with coefficients in the field.
pub fn simplicial_cohomology(s: &SimplicialComplex, field: FieldSpec, max_n: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=max_n)
        .map(|n| coboundary(s, field, n).rank())
        .collect();
    (0..=max_n)
        .map(|n| s.simplices(n).len() - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GsReport {
    pub faces: usize,
    pub dim_a: usize,
    pub dim_b: usize,
    pub hochschild: Vec<usize>,
    pub simplicial: Vec<usize>,
    pub matches: Vec<bool>,
}

impl GsReport {
    pub fn passed(&self) -> bool {
        self.matches.iter().all(|&m| m)
    }
}

/// Relative Hochschild cohomology of the incidence algebra against
/// simplicial cohomology, degrees `0..=max_n`. Rejects `dim A > cap`.
pub fn gs_compare(
    s: &SimplicialComplex,
    field: FieldSpec,
    max_n: usize,
    cap: usize,
) -> Result<GsReport> {
    let e = incidence_extension(s, field)?;
    let dim_a = e.ambient().dim();
    if dim_a > cap {
        return Err(Error::SizeLimit(format!(
            "incidence algebra has dimension {dim_a}, cap is {cap}"
        )));
    }
    let cc = CochainComplex::build(&e, max_n + 1)?;
    let hochschild = cc.cohomology_dims();
    let simplicial = simplicial_cohomology(s, field, max_n);
    let matches = hochschild
        .iter()
        .zip(&simplicial)
        .map(|(a, b)| a == b)
        .collect();
    Ok(GsReport {
        faces: s.faces().len(),
        dim_a,
        dim_b: e.sub().dim(),
        hochschild,
        simplicial,
        matches,
    })
}
