//! Report types shared by the two differential graded algebras.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareCheck {
    /// the identity checked is `d^(degree+1) d^degree = 0`
    pub degree: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeibnizCheck {
    pub m: usize,
    pub n: usize,
    pub trials: usize,
    pub failures: usize,
    /// index of the first failing trial
    pub first_failure: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DgaReport {
    pub d_squared: Vec<SquareCheck>,
    pub leibniz: Vec<LeibnizCheck>,
}

impl DgaReport {
    pub fn passed(&self) -> bool {
        self.d_squared.iter().all(|c| c.passed) && self.leibniz.iter().all(|c| c.failures == 0)
    }

    pub fn failing_degrees(&self) -> Vec<usize> {
        self.d_squared
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.degree)
            .collect()
    }
}

/// `dim H^n = dim C^n - rank d^n - rank d^(n-1)` for `n < ranks.len()`.
pub fn cohomology_from_ranks(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..ranks.len())
        .map(|n| dims[n] - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect()
}

/// Splits `(m, n)` with `m + n + 1 <= top`.
pub(crate) fn leibniz_splits(top: usize) -> Vec<(usize, usize)> {
    (0..top)
        .flat_map(|s| (0..=s).map(move |m| (m, s - m)))
        .collect()
}
