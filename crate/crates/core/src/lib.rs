//! Exact computations for the maximal eigenvalues of the generalized
//! eigenvalue problems behind `L^2` inverse inequalities on the square
//! `(-1,1)^2`.

pub mod arith;
pub mod assembly;
pub mod charpoly;
pub mod detkit;
pub mod error;
pub mod matrix;
pub mod spectra;

pub use error::{Error, Result};
