//! Exact dense linear algebra over GF(p): the substrate for every Hom space,
//! tensor quotient and cohomology rank in this crate.

mod echelon;
mod matrix;
mod subspace;

pub use echelon::{kernel_basis, row_reduce, solve, Echelon, RowReduced};
pub use matrix::Matrix;
pub use subspace::{induced_map, quotient_of, QuotientSpace, Subspace};
