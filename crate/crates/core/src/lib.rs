//! Exact computations with relative Hochschild cochains, corings and their
//! Amitsur complexes over prime fields `GF(p)`.

pub mod algebra;
pub mod amitsur;
pub mod commands;
pub mod coring;
pub mod corpus;
pub mod dga;
pub mod error;
pub mod field;
pub mod hochschild;
pub mod hom;
pub mod io;
pub mod iso;
pub mod linalg;
pub mod relative;
pub mod report;
pub mod simplicial;
pub mod tower;

pub use error::{Error, Result};
pub use field::FieldSpec;
