//! Closed-form assembly of every matrix family of the problem.
//!
//! All builders take 1-based formulas directly from the monomial and
//! Legendre integrals on `(-1,1)`; nothing here performs quadrature.

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{int, rat, RatPoly, Rational};
use crate::error::{precondition, Result};
use crate::matrix::{Matrix, PolyMatrix, RatMatrix};

/// Which of the two decoupled blocks a matrix belongs to: the block built
/// from even basis indices (`ell = 0`) or from odd ones (`ell = 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Parity {
    #[serde(rename = "0")]
    Even,
    #[serde(rename = "1")]
    Odd,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];

    pub fn ell(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_ell(ell: u32) -> Option<Self> {
        match ell {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }
}

/// `(chi, rho)` with `k = chi * n + rho + 1`, both in `0..n`.
pub fn index_split(k: usize, n: usize) -> Result<(usize, usize)> {
    if n == 0 || k == 0 || k > n * n {
        return precondition(format!("index k={k} outside 1..={} for n={n}", n * n));
    }
    Ok(((k - 1) / n, (k - 1) % n))
}

/// `int_{-1}^{1} x^p dx`.
fn monomial_integral(p: usize) -> Rational {
    if p % 2 == 1 {
        Rational::zero()
    } else {
        rat(2, p as i64 + 1)
    }
}

/// Mass matrix of the basis `x^rho(k) t^chi(k)` on the square, dimension `n^2`.
pub fn mass_matrix(n: usize) -> RatMatrix {
    let split = |k| index_split(k, n).expect("index in range");
    Matrix::from_fn(n * n, |i, j| {
        let ((ci, ri), (cj, rj)) = (split(i), split(j));
        monomial_integral(ri + rj) * monomial_integral(ci + cj)
    })
}

/// Stiffness matrix of the x-derivatives, dimension `n^2`.
pub fn stiffness_matrix(n: usize) -> RatMatrix {
    let split = |k| index_split(k, n).expect("index in range");
    Matrix::from_fn(n * n, |i, j| {
        let ((ci, ri), (cj, rj)) = (split(i), split(j));
        if ri + rj <= 1 {
            return Rational::zero();
        }
        int((ri * rj) as i64) * monomial_integral(ri + rj - 2) * monomial_integral(ci + cj)
    })
}

/// `(1 - (-1)^(i+j-1)) / (i+j-1)`.
pub fn a_entry(i: usize, j: usize) -> Rational {
    let s = i + j - 1;
    if s.is_multiple_of(2) {
        Rational::zero()
    } else {
        rat(2, s as i64)
    }
}

/// `(i-1)(j-1) (1 - (-1)^(i+j-3)) / (i+j-3)`; the parity factor is tested
/// before dividing so `i + j = 3` never reaches a zero denominator.
pub fn b_entry(i: usize, j: usize) -> Rational {
    let s = i as i64 + j as i64 - 3;
    if s.rem_euclid(2) == 0 {
        return Rational::zero();
    }
    int(((i - 1) * (j - 1)) as i64) * rat(2, s)
}

pub fn matrix_a(n: usize) -> RatMatrix {
    Matrix::from_fn(n, a_entry)
}

pub fn matrix_b(n: usize) -> RatMatrix {
    Matrix::from_fn(n, b_entry)
}

pub fn kronecker(x: &RatMatrix, y: &RatMatrix) -> RatMatrix {
    let (p, q) = (x.dim(), y.dim());
    Matrix::from_fn(p * q, |i, j| {
        let (xi, yi) = ((i - 1) / q, (i - 1) % q);
        let (xj, yj) = ((j - 1) / q, (j - 1) % q);
        x.get(xi, xj) * y.get(yi, yj)
    })
}

/// `B_n - lambda A_n`.
pub fn pencil(n: usize) -> PolyMatrix {
    Matrix::from_fn(n, |i, j| RatPoly::linear(b_entry(i, j), -a_entry(i, j)))
}

/// Dimension-independent blocks of the pencil after separating even and
/// odd indices (a common factor 2 removed from every entry).
pub fn parity_block(parity: Parity, n: usize) -> PolyMatrix {
    Matrix::from_fn(n, |i, j| {
        let (i, j) = (i as i64, j as i64);
        match parity {
            Parity::Even => {
                RatPoly::linear(rat((2 * i - 1) * (2 * j - 1), 2 * i + 2 * j - 3), -rat(1, 2 * i + 2 * j - 1))
            }
            Parity::Odd => RatPoly::linear(rat(4 * (i - 1) * (j - 1), 2 * i + 2 * j - 5), -rat(1, 2 * i + 2 * j - 3)),
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryVariant {
    Full,
    #[serde(rename = "0")]
    Even,
    #[serde(rename = "1")]
    Odd,
}

/// Legendre-basis pencil of the boundary trace problem, in the variable `mu`.
pub fn boundary_matrix(variant: BoundaryVariant, n: usize) -> PolyMatrix {
    Matrix::from_fn(n, |i, j| {
        let ii = i as i64;
        let (constant, denom) = match variant {
            BoundaryVariant::Full => (if (i + j) % 2 == 0 { 2 } else { 0 }, 2 * ii + 1),
            BoundaryVariant::Even => (2, 4 * ii + 1),
            BoundaryVariant::Odd => (2, 4 * ii - 1),
        };
        let slope = if i == j { -rat(2, denom) } else { Rational::zero() };
        RatPoly::linear(int(constant), slope)
    })
}

/// Legendre-basis blocks of the derivative pencil; constant along hooks
/// `min(i, j) = m` with the mass term on the diagonal only.
pub fn legendre_hook(parity: Parity, n: usize) -> PolyMatrix {
    Matrix::from_fn(n, |i, j| {
        let m = i.min(j) as i64;
        let ii = i as i64;
        let (constant, denom) = match parity {
            Parity::Even => (2 * m * (2 * m + 1), 4 * ii + 1),
            Parity::Odd => (2 * m * (2 * m - 1), 4 * ii - 1),
        };
        let slope = if i == j { -rat(2, denom) } else { Rational::zero() };
        RatPoly::linear(int(constant), slope)
    })
}

/// Result of reordering a matrix to even indices first, then odd ones.
#[derive(Clone, Debug)]
pub struct BlockSplit {
    /// `order[k]` is the original 0-based index placed at position `k`.
    pub order: Vec<usize>,
    pub permuted: PolyMatrix,
    /// Block on the even original indices 2, 4, ... (dimension `floor(n/2)`).
    pub even: PolyMatrix,
    /// Block on the odd original indices 1, 3, ... (dimension `ceil(n/2)`).
    pub odd: PolyMatrix,
    pub off_diagonal_zero: bool,
}

/// The index map `(2, 4, 6, ..., 1, 3, 5, ...)` in 0-based form.
pub fn even_odd_order(n: usize) -> Vec<usize> {
    (1..n).step_by(2).chain((0..n).step_by(2)).collect()
}

pub fn split_by_parity(m: &PolyMatrix) -> BlockSplit {
    let n = m.dim();
    let order = even_odd_order(n);
    let permuted = m.permute(&order);
    let ne = n / 2;
    let off_diagonal_zero =
        (0..ne).all(|i| (ne..n).all(|j| permuted.get(i, j).is_zero() && permuted.get(j, i).is_zero()));
    BlockSplit {
        even: permuted.principal_block(0, ne),
        odd: permuted.principal_block(ne, n - ne),
        order,
        permuted,
        off_diagonal_zero,
    }
}

/// Multiplies every entry by `c`; used to compare pencil blocks against the
/// normalized parity blocks.
pub fn scaled(m: &PolyMatrix, c: i64) -> PolyMatrix {
    m.scale(&int(c))
}
