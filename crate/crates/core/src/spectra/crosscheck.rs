//! Floating-point sanity check of the certified maximal root.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::arith::rat;
use crate::arith::rational::to_f64;
use crate::assembly::{mass_matrix, stiffness_matrix};
use crate::error::{precondition, Result};
use crate::matrix::RatMatrix;

use super::roots::max_root;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FloatCheck {
    pub n: u64,
    pub float_max: Option<f64>,
    pub certified_mid: f64,
    pub tol: f64,
    /// `None` when the mass matrix failed to factor in floating point.
    pub agrees: Option<bool>,
}

fn to_dense(m: &RatMatrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.dim(), m.dim(), |i, j| to_f64(m.get(i, j)))
}

/// Largest eigenvalue of `K x = lambda M x` via `L^-1 K L^-T` with
/// `M = L L^T`.
pub fn float_max_eigenvalue(k: &RatMatrix, m: &RatMatrix) -> Option<f64> {
    let chol = to_dense(m).cholesky()?;
    let l = chol.l();
    let kk = to_dense(k);
    let y = l.solve_lower_triangular(&kk)?;
    let c = l.solve_lower_triangular(&y.transpose())?;
    let sym = (&c + c.transpose()) * 0.5;
    SymmetricEigen::new(sym)
        .eigenvalues
        .iter()
        .cloned()
        .fold(None, |acc: Option<f64>, x| Some(acc.map_or(x, |a| a.max(x))))
}

pub fn float_eigen_crosscheck(n: u64, tol: f64) -> Result<FloatCheck> {
    if !(2..=4).contains(&n) {
        return precondition(format!("float cross-check supports 2 <= n <= 4, got {n}"));
    }
    let enc = max_root(n, &rat(1, 1_000_000_000_000))?;
    let mid = to_f64(&enc.mid());
    let float_max = float_max_eigenvalue(&stiffness_matrix(n as usize), &mass_matrix(n as usize));
    let agrees = float_max.map(|x| (x - mid).abs() <= tol);
    Ok(FloatCheck { n, float_max, certified_mid: mid, tol, agrees })
}

/// Default agreement tolerances, looser as conditioning degrades.
pub fn default_tolerance(n: u64) -> f64 {
    match n {
        2 => 1e-8,
        3 => 1e-6,
        _ => 1e-4,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_for_small_n() {
        for n in 2..=4 {
            let c = float_eigen_crosscheck(n, default_tolerance(n)).unwrap();
            assert_eq!(c.agrees, Some(true), "{c:?}");
        }
        assert!(float_eigen_crosscheck(5, 1e-3).is_err());
    }
}
