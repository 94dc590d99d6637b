//! The characteristic polynomials `F_n`, their coefficient family `f_j(n)`,
//! the prefactors `h_n^(ell)` and the normalized inverse columns of the
//! parity blocks.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::rational::pow_i;
use crate::arith::{factorial, int, pochhammer, rat, RatPoly, Rational};
use crate::assembly::{parity_block, Parity};
use crate::error::{precondition, Result};

/// `f_j(n) = (n-2j+1)_{4j} / (4^j (2j)!)` without the range check.
pub(crate) fn f_coeff_unchecked(j: u64, n: u64) -> Rational {
    let start = int(n as i64 - 2 * j as i64 + 1);
    let num = pochhammer(&start, 4 * j);
    num / (pow_i(&int(4), j as i64) * Rational::from_integer(factorial(2 * j)))
}

/// Absolute value of the coefficient of `lambda^(nu-j)` in `F_n`.
pub fn f_coeff(j: u64, n: u64) -> Result<Rational> {
    if j > n / 2 {
        return precondition(format!("f_j(n) needs j <= floor(n/2), got j={j}, n={n}"));
    }
    Ok(f_coeff_unchecked(j, n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharPoly {
    pub n: u64,
    pub nu: u64,
    pub poly: RatPoly,
}

/// `F_n` from its alternating coefficient form
/// `sum_j (-1)^j f_j(n) lambda^(nu-j)`.
pub fn char_poly(n: u64) -> CharPoly {
    let nu = n / 2;
    let mut coeffs = vec![Rational::zero(); nu as usize + 1];
    for j in 0..=nu {
        let f = f_coeff_unchecked(j, n);
        coeffs[(nu - j) as usize] = if j % 2 == 0 { f } else { -f };
    }
    let poly = RatPoly::new(coeffs);
    debug_assert_eq!(poly, char_poly_by_summation(n), "F_{n}: coefficient forms disagree");
    CharPoly { n, nu, poly }
}

/// `F_n` from the defining hypergeometric sum
/// `sum_j (-4)^(j-nu) (2nu-2j+1)_n / (2j-2nu+n)! lambda^j`.
pub fn char_poly_by_summation(n: u64) -> RatPoly {
    let nu = (n / 2) as i64;
    let coeffs = (0..=nu)
        .map(|j| {
            let rise = pochhammer(&int(2 * nu - 2 * j + 1), n);
            let fact = factorial((2 * j - 2 * nu + n as i64) as u64);
            pow_i(&int(-4), j - nu) * rise / Rational::from_integer(fact)
        })
        .collect();
    RatPoly::new(coeffs)
}

impl CharPoly {
    pub fn is_monic(&self) -> bool {
        self.poly.is_monic()
    }

    /// Coefficient of `lambda^(nu-j)` has sign `(-1)^j` and is nonzero.
    pub fn alternates_strictly(&self) -> bool {
        (0..=self.nu).all(|j| {
            let c = self.poly.coeff((self.nu - j) as usize);
            if j % 2 == 0 {
                c.is_positive()
            } else {
                c.is_negative()
            }
        })
    }
}

/// `h_n^(ell) = 2^-n prod_{i=1}^n ((i-1)!)^2 / (i - ell + 1/2)_n`.
pub fn h_constant(parity: Parity, n: u64) -> Rational {
    let ell = parity.ell() as i64;
    let mut acc = pow_i(&int(2), -(n as i64));
    for i in 1..=n as i64 {
        let f = Rational::from_integer(factorial((i - 1) as u64));
        let base = int(i - ell) + rat(1, 2);
        acc = acc * &f * &f / pochhammer(&base, n);
    }
    acc
}

/// Entries `p_{n,1..n}` of the normalized last column of the inverse of the
/// parity block of dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InverseColumn {
    pub parity: Parity,
    pub n: u64,
    pub entries: Vec<RatPoly>,
}

/// The double sum shared by both parities; `rise(m, k)` is `(2m+1)_{2k}`
/// resp. `(2m)_{2k}`. Terms whose factorial argument `2m+k-n-j+2` is
/// negative vanish (reciprocal factorial convention).
fn inner_sum(n: i64, j: i64, rise: impl Fn(i64, i64) -> Rational) -> RatPoly {
    let mut coeffs = vec![Rational::zero(); n as usize];
    for m in 0..n {
        let mut acc = Rational::zero();
        for k in 0..=(2 * n - 2 * m - 2) {
            let arg = 2 * m + k - n - j + 2;
            if arg < 0 {
                continue;
            }
            let denom = pow_i(&int(4), m + k)
                * Rational::from_integer(factorial(k as u64))
                * Rational::from_integer(factorial(arg as u64));
            acc += rise(m, k) / denom;
        }
        if (j + m) % 2 == 1 {
            acc = -acc;
        }
        coeffs[m as usize] = acc;
    }
    RatPoly::new(coeffs)
}

pub fn inverse_column(parity: Parity, n: u64) -> Result<InverseColumn> {
    if n == 0 {
        return precondition("inverse column needs n >= 1");
    }
    let ni = n as i64;
    let fact = |k: i64| Rational::from_integer(factorial(k as u64));
    let entries = (1..=ni)
        .map(|j| match parity {
            Parity::Even => {
                let pre = pow_i(&int(2), 2 * ni + 2 * j - 3)
                    * pochhammer(&rat(3, 2), (2 * ni - 1) as u64)
                    * pochhammer(&(int(ni) + rat(1, 2)), (j - 1) as u64)
                    / (fact(ni - 1) * fact(2 * j - 1));
                inner_sum(ni, j, |m, k| pochhammer(&int(2 * m + 1), 2 * k as u64)).scale(&pre)
            }
            Parity::Odd => {
                let pre =
                    pow_i(&int(4), j - ni) * fact(4 * ni - 3) * pochhammer(&(int(ni) - rat(1, 2)), (j - 1) as u64)
                        / (fact(2 * ni - 2) * fact(ni - 1) * fact(2 * j - 2));
                inner_sum(ni, j, |m, k| pochhammer(&int(2 * m), 2 * k as u64)).scale(&pre)
            }
        })
        .collect();
    Ok(InverseColumn { parity, n, entries })
}

/// Outcome of an exact polynomial identity check, carrying the first failing
/// index and its residual when the identity does not hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub failing_index: Option<u64>,
    pub residual: Option<RatPoly>,
}

impl IdentityCheck {
    fn pass() -> Self {
        IdentityCheck { holds: true, failing_index: None, residual: None }
    }

    fn fail(index: u64, residual: RatPoly) -> Self {
        IdentityCheck { holds: false, failing_index: Some(index), residual: Some(residual) }
    }
}

/// Target of row `n` in `A_n p = (0, ..., 0, target)`.
pub fn inverse_target(parity: Parity, n: u64) -> RatPoly {
    match parity {
        Parity::Even => char_poly(2 * n).poly,
        Parity::Odd => char_poly(2 * n - 1).poly.shift(1),
    }
}

/// Checks `sum_j a_{i,j} p_{n,j} = delta_{i,n} * target` for every row `i`.
pub fn verify_inverse_identity(parity: Parity, n: u64) -> Result<IdentityCheck> {
    let column = inverse_column(parity, n)?;
    let product = parity_block(parity, n as usize).mul_vec(&column.entries);
    let target = inverse_target(parity, n);
    for (i, row) in product.iter().enumerate() {
        let i = i as u64 + 1;
        let expected = if i == n { target.clone() } else { RatPoly::zero() };
        let residual = row - &expected;
        if !residual.is_zero() {
            return Ok(IdentityCheck::fail(i, residual));
        }
    }
    Ok(IdentityCheck::pass())
}

/// Left-hand side of
/// `(4n+3) F_{2n+4} + (4n+5)(16n^2+40n-2 lambda+21) F_{2n+2} + (4n+7) lambda^2 F_{2n}`.
pub fn recurrence_residual(n: u64) -> RatPoly {
    let k = n as i64;
    let f0 = char_poly(2 * n).poly;
    let f1 = char_poly(2 * n + 2).poly;
    let f2 = char_poly(2 * n + 4).poly;
    let middle = RatPoly::linear(int(16 * k * k + 40 * k + 21), int(-2)).scale(&int(4 * k + 5));
    let t0 = f2.scale(&int(4 * k + 3));
    let t1 = &middle * &f1;
    let t2 = f0.shift(2).scale(&int(4 * k + 7));
    &(&t0 + &t1) + &t2
}

/// Checks the three-term recurrence of `F_{2n}` for all `0 <= n <= n_max`.
pub fn verify_recurrence(n_max: u64) -> IdentityCheck {
    for n in 0..=n_max {
        let r = recurrence_residual(n);
        if !r.is_zero() {
            return IdentityCheck::fail(n, r);
        }
    }
    IdentityCheck::pass()
}

/// `(f_1(n)/2) f_j(n) > f_{j+1}(n)` for `1 <= j <= nu(n)-1`; returns the
/// first `j` where the dominance fails.
pub fn coefficient_dominance(n: u64) -> Option<u64> {
    let half_f1 = f_coeff_unchecked(1, n) / int(2);
    (1..(n / 2)).find(|&j| &half_f1 * f_coeff_unchecked(j, n) <= f_coeff_unchecked(j + 1, n))
}
