//! JSON input formats.
//!
//! Algebra: `{"field": {"prime": p}, "dim": d, "basis": [..], "structure": s, "unit": [..]}`
//! where `s[i][j]` is a list of `[k, c]` pairs with `e_i e_j = sum c e_k`.
//! An extension file is an algebra with extra keys `"sub"` (an algebra) and
//! `"inclusion"` (row-major `dim A x dim B`). A Hopf file is an algebra with
//! `"coproduct"` (row-major `d^2 x d`, tensor index `i * d + j`) and `"counit"`.
//! Coefficients are arbitrary integers, reduced mod `p`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Extension, FinDimAlgebra, HopfData};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::Matrix;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldJson {
    pub prime: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraJson {
    pub field: FieldJson,
    pub dim: usize,
    pub basis: Vec<String>,
    pub structure: Vec<Vec<Vec<(usize, i64)>>>,
    pub unit: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExtensionJson {
    #[serde(flatten)]
    pub ambient: AlgebraJson,
    pub sub: AlgebraJson,
    pub inclusion: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HopfJson {
    #[serde(flatten)]
    pub algebra: AlgebraJson,
    pub coproduct: Vec<Vec<i64>>,
    pub counit: Vec<i64>,
}

impl AlgebraJson {
    pub fn from_algebra(a: &FinDimAlgebra) -> Self {
        AlgebraJson {
            field: FieldJson {
                prime: a.field().characteristic() as u64,
            },
            dim: a.dim(),
            basis: a.basis_names().to_vec(),
            structure: a
                .structure()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| e.iter().map(|&(k, c)| (k, c as i64)).collect())
                        .collect()
                })
                .collect(),
            unit: a.unit().iter().map(|&c| c as i64).collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<FinDimAlgebra> {
        let field = FieldSpec::new(self.field.prime)?;
        if self.basis.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} basis names for dim {}",
                self.basis.len(),
                self.dim
            )));
        }
        let mut structure = Vec::with_capacity(self.dim);
        for row in &self.structure {
            let mut out_row = Vec::with_capacity(row.len());
            for entry in row {
                let mut acc: Vec<(usize, u32)> = Vec::new();
                for &(k, c) in entry {
                    let c = field.reduce(c);
                    match acc.iter_mut().find(|(kk, _)| *kk == k) {
                        Some(e) => e.1 = field.add(e.1, c),
                        None => acc.push((k, c)),
                    }
                }
                acc.retain(|&(_, c)| c != 0);
                out_row.push(acc);
            }
            structure.push(out_row);
        }
        let unit = self.unit.iter().map(|&c| field.reduce(c)).collect();
        FinDimAlgebra::new(field, self.basis.clone(), structure, unit)
    }
}

fn matrix(field: FieldSpec, rows: &[Vec<i64>], r: usize, c: usize, what: &str) -> Result<Matrix> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(Error::DimensionMismatch(format!("{what} must be {r}x{c}")));
    }
    Matrix::from_rows_i64(field, rows)
}

fn rows_of(m: &Matrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|&c| c as i64).collect())
        .collect()
}

impl ExtensionJson {
    pub fn from_extension(e: &Extension) -> Self {
        ExtensionJson {
            ambient: AlgebraJson::from_algebra(e.ambient()),
            sub: AlgebraJson::from_algebra(e.sub()),
            inclusion: rows_of(e.inclusion()),
        }
    }

    /// Shapes are checked; axioms are left to [`Extension::validate`].
    pub fn to_extension(&self) -> Result<Extension> {
        let a = self.ambient.to_algebra()?;
        let b = self.sub.to_algebra()?;
        let inc = matrix(a.field(), &self.inclusion, a.dim(), b.dim(), "inclusion")?;
        Extension::new(a, b, inc)
    }
}

impl HopfJson {
    pub fn from_hopf(h: &HopfData) -> Self {
        HopfJson {
            algebra: AlgebraJson::from_algebra(h.algebra()),
            coproduct: rows_of(h.coproduct()),
            counit: h.counit().iter().map(|&c| c as i64).collect(),
        }
    }

    pub fn to_hopf(&self) -> Result<HopfData> {
        let a = self.algebra.to_algebra()?;
        let d = a.dim();
        let field = a.field();
        let delta = matrix(field, &self.coproduct, d * d, d, "coproduct")?;
        let counit = self.counit.iter().map(|&c| field.reduce(c)).collect();
        HopfData::new(a, delta, counit)
    }
}

pub fn parse_algebra(text: &str) -> Result<FinDimAlgebra> {
    serde_json::from_str::<AlgebraJson>(text)?.to_algebra()
}

pub fn parse_extension(text: &str) -> Result<Extension> {
    serde_json::from_str::<ExtensionJson>(text)?.to_extension()
}

pub fn parse_hopf(text: &str) -> Result<HopfData> {
    serde_json::from_str::<HopfJson>(text)?.to_hopf()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory serialization");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        cyclic_group_table, group_hopf, matrix_algebra, upper_triangular_over_diagonal,
    };

    #[test]
    fn round_trips() {
        let f = FieldSpec::new(5).unwrap();
        let a = matrix_algebra(f, 2);
        assert_eq!(
            parse_algebra(&to_json(&AlgebraJson::from_algebra(&a))).unwrap(),
            a
        );
        let e = upper_triangular_over_diagonal(f, 2).unwrap();
        let e2 = parse_extension(&to_json(&ExtensionJson::from_extension(&e))).unwrap();
        assert_eq!(e2.ambient(), e.ambient());
        assert_eq!(e2.inclusion(), e.inclusion());
        let h = group_hopf(FieldSpec::new(3).unwrap(), &cyclic_group_table(2)).unwrap();
        let h2 = parse_hopf(&to_json(&HopfJson::from_hopf(&h))).unwrap();
        assert_eq!(h2.coproduct(), h.coproduct());
        assert!(h2.validate().passed());
    }

    #[test]
    fn negative_coefficients_reduce() {
        let text = r#"{"field": {"prime": 3}, "dim": 1, "basis": ["1"], "structure": [[[[0, -2]]]], "unit": [4]}"#;
        let a = parse_algebra(text).unwrap();
        assert_eq!(a.unit(), &[1]);
        assert!(a.validate().passed());
    }

    #[test]
    fn shape_errors() {
        let text =
            r#"{"field": {"prime": 3}, "dim": 2, "basis": ["1"], "structure": [], "unit": [1]}"#;
        assert!(matches!(
            parse_algebra(text),
            Err(Error::DimensionMismatch(_))
        ));
        let text = r#"{"field": {"prime": 4}, "dim": 1, "basis": ["1"], "structure": [[[[0, 1]]]], "unit": [1]}"#;
        assert!(parse_algebra(text).is_err());
        assert!(matches!(parse_algebra("{"), Err(Error::Json(_))));
    }
}
