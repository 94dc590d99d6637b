//! Largest eigenvalue of the boundary trace pencil.

use serde::Serialize;

use crate::arith::{int, IntPoly, Rational};
use crate::assembly::Parity;
use crate::detkit::{boundary_block_closed_form, boundary_full_closed_form, boundary_roots};
use crate::error::{precondition, Result};

use super::roots::no_root_above;

/// `n(n+3)/2`, plus one for odd `n`.
pub fn mu_max(n: u64) -> Result<Rational> {
    if n < 1 {
        return precondition("mu_max needs n >= 1");
    }
    let k = n as i64;
    Ok(int(k * (k + 3) / 2 + k % 2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuCheck {
    pub n: u64,
    #[serde(serialize_with = "ser")]
    pub mu: Rational,
    #[serde(serialize_with = "ser")]
    pub largest_root: Rational,
    /// The determinant closed form vanishes at `mu` and has no larger root.
    pub root_certified: bool,
    pub equal: bool,
}

fn ser<S: serde::Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Compares `mu_max` with the largest root of the factored `det C_n`.
pub fn mu_cross_check(n: u64) -> Result<MuCheck> {
    let mu = mu_max(n)?;
    let largest = boundary_roots(n).last().cloned().expect("n >= 1 has roots");
    let det = if n >= 2 {
        boundary_full_closed_form(n)
    } else {
        &boundary_block_closed_form(Parity::Even, 0) * &boundary_block_closed_form(Parity::Odd, 1)
    };
    let p = IntPoly::from_rat(&det);
    let root_certified = p.sign_at(&mu) == std::cmp::Ordering::Equal && no_root_above(&p, &mu);
    Ok(MuCheck { n, equal: largest == mu && root_certified, mu, largest_root: largest, root_certified })
}
