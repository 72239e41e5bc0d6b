use crate::field::FieldSpec;

use super::{Matrix, Subspace};

/// Incrementally maintained reduced row-echelon basis of a row space.
///
/// Invariant: every stored row has a leading 1 at its pivot column and zeros
/// at every other pivot column. Because of that, reducing a vector only ever
/// consults its entries at pivot columns as they were on input.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    cols: usize,
    rows: Vec<Vec<u32>>,
    pivot_of_row: Vec<usize>,
    row_of_col: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl Echelon {
    pub fn new(field: FieldSpec, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
            pivot_of_row: Vec::new(),
            row_of_col: vec![NONE; cols],
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }
    pub fn is_pivot(&self, c: usize) -> bool {
        self.row_of_col[c] != NONE
    }

    /// Reduce `v` modulo the row space, leaving zeros at all pivot columns.
    pub fn reduce(&self, v: &mut [u32]) {
        debug_assert_eq!(v.len(), self.cols);
        let f = self.field;
        let hits: Vec<(usize, u32)> = v
            .iter()
            .enumerate()
            .filter(|&(c, &x)| x != 0 && self.row_of_col[c] != NONE)
            .map(|(c, &x)| (self.row_of_col[c], f.neg(x)))
            .collect();
        for (r, coef) in hits {
            f.axpy(v, coef, &self.rows[r]);
        }
    }

    /// Adds `v` to the row space. Returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(v[pc]);
        f.scale(&mut v, inv);
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                f.axpy(row, f.neg(c), &v);
            }
        }
        self.row_of_col[pc] = self.rows.len();
        self.pivot_of_row.push(pc);
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Rows sorted by pivot column, with their pivots.
    pub fn into_sorted(self) -> (Vec<Vec<u32>>, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.pivot_of_row[r]);
        let pivots = order.iter().map(|&r| self.pivot_of_row[r]).collect();
        let mut rows: Vec<Option<Vec<u32>>> = self.rows.into_iter().map(Some).collect();
        let sorted = order.iter().map(|&r| rows[r].take().unwrap()).collect();
        (sorted, pivots)
    }
}

/// Result of [`row_reduce`].
#[derive(Clone, Debug)]
pub struct RowReduced {
    /// Same shape as the input; nonzero rows first, in pivot order.
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row-echelon form with first-nonzero pivoting. The RREF of a row
/// space is unique, so the output does not depend on insertion order.
pub fn row_reduce(m: &Matrix) -> RowReduced {
    let mut ech = Echelon::new(m.field(), m.cols());
    for r in 0..m.rows() {
        if ech.is_full() {
            break;
        }
        ech.insert(m.row(r).to_vec());
    }
    let (rows, pivots) = ech.into_sorted();
    let rank = rows.len();
    let mut reduced = Matrix::zeros(m.field(), m.rows(), m.cols());
    for (i, row) in rows.iter().enumerate() {
        reduced.row_mut(i).copy_from_slice(row);
    }
    RowReduced {
        reduced,
        pivots,
        rank,
    }
}

/// Kernel vectors from sorted RREF rows: one per free column `f`, with a 1 at
/// `f`, zeros at the other free columns, and `-row[f]` at each pivot.
pub(crate) fn kernel_vectors(
    field: FieldSpec,
    cols: usize,
    rows: &[Vec<u32>],
    pivots: &[usize],
) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let vecs = free
        .iter()
        .map(|&fc| {
            let mut v = vec![0u32; cols];
            v[fc] = 1;
            for (row, &p) in rows.iter().zip(pivots) {
                v[p] = field.neg(row[fc]);
            }
            v
        })
        .collect();
    (vecs, free)
}

/// Basis of `{v : m v = 0}`, one vector per free column of the RREF.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let mut ech = Echelon::new(m.field(), m.cols());
    for r in 0..m.rows() {
        ech.insert(m.row(r).to_vec());
    }
    kernel_of_echelon(ech)
}

fn kernel_of_echelon(ech: Echelon) -> Subspace {
    let field = ech.field();
    let cols = ech.cols();
    let (rows, pivots) = ech.into_sorted();
    let (vecs, _) = kernel_vectors(field, cols, &rows, &pivots);
    Subspace::from_independent(field, cols, &vecs)
}

/// One solution of `m x = rhs`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, rhs: &[u32]) -> Option<Vec<u32>> {
    assert_eq!(rhs.len(), m.rows(), "rhs length must equal row count");
    let n = m.cols();
    let mut ech = Echelon::new(m.field(), n + 1);
    for r in 0..m.rows() {
        let mut row = m.row(r).to_vec();
        row.push(rhs[r]);
        ech.insert(row);
    }
    let (rows, pivots) = ech.into_sorted();
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![0u32; n];
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[n];
    }
    Some(x)
}
