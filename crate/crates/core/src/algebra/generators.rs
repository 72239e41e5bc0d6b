use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::Matrix;

use super::{is_irreducible, Extension, FinDimAlgebra};

/// `M_n(k)` with basis `e_ij` at index `i * n + j`.
pub fn matrix_algebra(field: FieldSpec, n: usize) -> FinDimAlgebra {
    let names = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("e{}{}", i + 1, j + 1)))
        .collect();
    let mut unit = vec![0; n * n];
    for i in 0..n {
        unit[i * n + i] = 1;
    }
    FinDimAlgebra::from_products(field, names, unit, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        let mut v = vec![0; n * n];
        if j == k {
            v[i * n + l] = 1;
        }
        v
    })
    .expect("matrix units are well formed")
}

fn upper_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Upper-triangular `n x n` matrices, basis `e_ij` (`i <= j`) in row order.
pub fn upper_triangular(field: FieldSpec, n: usize) -> FinDimAlgebra {
    let pairs = upper_pairs(n);
    let index = |i: usize, j: usize| pairs.iter().position(|&q| q == (i, j)).unwrap();
    let names = pairs
        .iter()
        .map(|(i, j)| format!("e{}{}", i + 1, j + 1))
        .collect();
    let mut unit = vec![0; pairs.len()];
    for i in 0..n {
        unit[index(i, i)] = 1;
    }
    FinDimAlgebra::from_products(field, names, unit, |a, b| {
        let (i, j) = pairs[a];
        let (k, l) = pairs[b];
        let mut v = vec![0; pairs.len()];
        if j == k {
            v[index(i, l)] = 1;
        }
        v
    })
    .expect("matrix units are well formed")
}

/// Upper-triangular matrices over the diagonal subalgebra `k^n`.
pub fn upper_triangular_over_diagonal(field: FieldSpec, n: usize) -> Result<Extension> {
    let a = upper_triangular(field, n);
    let diag_names = (0..n).map(|i| format!("d{}", i + 1)).collect();
    let b = FinDimAlgebra::from_products(field, diag_names, vec![1; n], |i, j| {
        let mut v = vec![0; n];
        if i == j {
            v[i] = 1;
        }
        v
    })?;
    let pairs = upper_pairs(n);
    let cols: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut v = vec![0; pairs.len()];
            v[pairs.iter().position(|&q| q == (i, i)).unwrap()] = 1;
            v
        })
        .collect();
    Extension::checked(a, b, Matrix::from_columns(field, pairs.len(), &cols))
}

pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect()
}

/// Multiplication table of `S_3`, elements as permutations of `{0,1,2}` in
/// lexicographic order: `0 = id, 1 = (12), 2 = (01), 3 = (012), 4 = (021), 5 = (02)`.
/// Composition is `(g h)(x) = g(h(x))`.
pub fn symmetric_group_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    perms
        .iter()
        .map(|g| {
            perms
                .iter()
                .map(|h| idx([g[h[0]], g[h[1]], g[h[2]]]))
                .collect()
        })
        .collect()
}

fn check_group_table(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::InvalidTable("empty table".into()));
    }
    if table
        .iter()
        .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
    {
        return Err(Error::InvalidTable(
            "table must be square with entries in range".into(),
        ));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::InvalidTable(format!(
                        "not associative at ({a}, {b}, {c})"
                    )));
                }
            }
        }
        if !(0..n).any(|b| table[a][b] == identity) {
            return Err(Error::InvalidTable(format!("element {a} has no inverse")));
        }
    }
    Ok(identity)
}

/// `k[G]` for a group given by its multiplication table.
pub fn group_algebra(field: FieldSpec, table: &[Vec<usize>]) -> Result<FinDimAlgebra> {
    let identity = check_group_table(table)?;
    let n = table.len();
    let names = (0..n).map(|i| format!("g{i}")).collect();
    let mut unit = vec![0; n];
    unit[identity] = 1;
    FinDimAlgebra::from_products(field, names, unit, |i, j| {
        let mut v = vec![0; n];
        v[table[i][j]] = 1;
        v
    })
}

/// `k[H] -> k[G]` for the subgroup `H` given by its elements (indices into `table`).
pub fn group_extension(
    field: FieldSpec,
    table: &[Vec<usize>],
    subgroup: &[usize],
) -> Result<Extension> {
    let g = group_algebra(field, table)?;
    let pos = |x: usize| subgroup.iter().position(|&s| s == x);
    let sub_table: Vec<Vec<usize>> = subgroup
        .iter()
        .map(|&a| {
            subgroup
                .iter()
                .map(|&b| {
                    pos(table[a][b])
                        .ok_or_else(|| Error::InvalidTable("subgroup not closed".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let h = group_algebra(field, &sub_table)?;
    let cols: Vec<Vec<u32>> = subgroup
        .iter()
        .map(|&s| {
            let mut v = vec![0; table.len()];
            v[s] = 1;
            v
        })
        .collect();
    Extension::checked(g, h, Matrix::from_columns(field, table.len(), &cols))
}

/// `GF(p)[x] / (poly)` for an irreducible `poly` (low degree first), with basis `1, x, ..., x^(n-1)`.
pub fn field_ext_algebra(field: FieldSpec, poly: &[u32]) -> Result<FinDimAlgebra> {
    let mut poly: Vec<u32> = poly.iter().map(|&c| c % field.characteristic()).collect();
    while poly.last() == Some(&0) {
        poly.pop();
    }
    if poly.len() < 2 {
        return Err(Error::InvalidInput(
            "polynomial must have positive degree".into(),
        ));
    }
    let lead_inv = field.inv(*poly.last().unwrap());
    field.scale(&mut poly, lead_inv);
    if !is_irreducible(field, &poly) {
        return Err(Error::ReduciblePolynomial(field.characteristic()));
    }
    let n = poly.len() - 1;
    let names = (0..n)
        .map(|i| {
            if i == 0 {
                "1".to_string()
            } else {
                format!("x^{i}")
            }
        })
        .collect();
    let mut unit = vec![0; n];
    unit[0] = 1;
    FinDimAlgebra::from_products(field, names, unit, |i, j| {
        // x^(i+j) reduced by x^n = -sum poly[k] x^k
        let mut v = vec![0u32; 2 * n];
        v[i + j] = 1;
        for top in (n..2 * n).rev() {
            let c = v[top];
            if c == 0 {
                continue;
            }
            v[top] = 0;
            for k in 0..n {
                v[top - n + k] = field.sub(v[top - n + k], field.mul(c, poly[k]));
            }
        }
        v.truncate(n);
        v
    })
}
