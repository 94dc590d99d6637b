//! Exact determinants and the catalogue of closed-form determinant
//! identities checked against them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::rational::pow_i;
use crate::arith::{int, pochhammer, rat, RatPoly, Rational};
use crate::assembly::{
    boundary_matrix, kronecker, legendre_hook, mass_matrix, matrix_a, matrix_b, parity_block, pencil, stiffness_matrix,
    BoundaryVariant, Parity,
};
use crate::charpoly::{char_poly, h_constant};
use crate::error::{precondition, Result};
use crate::matrix::{PolyMatrix, RatMatrix};

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled to integers by the lcm of its denominators, so
/// every intermediate is an integer and each Bareiss division is exact.
pub fn det_rational(m: &RatMatrix) -> Rational {
    let n = m.dim();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            scale *= &l;
            row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
        })
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Rational::zero();
            };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = Rational::new(a[n - 1][n - 1].clone(), scale);
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant of a polynomial matrix by evaluation at `0, 1, ..., dim * d`
/// and exact interpolation, where `d` is the largest entry degree.
pub fn det_poly(m: &PolyMatrix) -> RatPoly {
    let n = m.dim();
    if n == 0 {
        return RatPoly::one();
    }
    let npts = n * m.max_degree() + 1;
    let points: Vec<(Rational, Rational)> = (0..npts as i64)
        .map(|k| {
            let x = int(k);
            let d = det_rational(&m.eval(&x));
            (x, d)
        })
        .collect();
    RatPoly::interpolate(&points).expect("abscissae are distinct integers")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Thm31Parity0,
    Thm31Parity1,
    CorollaryFull,
    Cauchy0,
    Cauchy1,
    Boundary0,
    Boundary1,
    BoundaryFull,
    Legendre0,
    Legendre1,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Thm31Parity0 => "thm31-parity0",
            IdentityId::Thm31Parity1 => "thm31-parity1",
            IdentityId::CorollaryFull => "corollary-full",
            IdentityId::Cauchy0 => "cauchy-0",
            IdentityId::Cauchy1 => "cauchy-1",
            IdentityId::Boundary0 => "boundary-0",
            IdentityId::Boundary1 => "boundary-1",
            IdentityId::BoundaryFull => "boundary-full",
            IdentityId::Legendre0 => "legendre-0",
            IdentityId::Legendre1 => "legendre-1",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Exact comparison of a computed determinant against a closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DetReport {
    pub n: u64,
    pub identity: IdentityId,
    pub lhs: RatPoly,
    pub rhs: RatPoly,
    pub equal: bool,
}

impl DetReport {
    pub fn new(n: u64, identity: IdentityId, lhs: RatPoly, rhs: RatPoly) -> Self {
        let equal = (&lhs - &rhs).is_zero();
        DetReport { n, identity, lhs, rhs, equal }
    }
}

fn sign(n: u64) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `(-1)^n h^(ell)_n F_{2n}` resp. `(-1)^n h^(ell)_n lambda F_{2n-1}`.
pub fn thm31_closed_form(parity: Parity, n: u64) -> RatPoly {
    let c = sign(n) * h_constant(parity, n);
    match parity {
        Parity::Even => char_poly(2 * n).poly.scale(&c),
        Parity::Odd => {
            assert!(n >= 1, "the odd identity starts at n = 1");
            char_poly(2 * n - 1).poly.shift(1).scale(&c)
        }
    }
}

/// Determinant identities of both parity blocks at dimension `n`. The odd
/// block is only checked from `n = 1` on, since its closed form refers to
/// `F_{-1}` at `n = 0`.
pub fn verify_thm31(n: u64) -> (DetReport, Option<DetReport>) {
    let even = DetReport::new(
        n,
        IdentityId::Thm31Parity0,
        det_poly(&parity_block(Parity::Even, n as usize)),
        thm31_closed_form(Parity::Even, n),
    );
    let odd = (n >= 1).then(|| {
        DetReport::new(
            n,
            IdentityId::Thm31Parity1,
            det_poly(&parity_block(Parity::Odd, n as usize)),
            thm31_closed_form(Parity::Odd, n),
        )
    });
    (even, odd)
}

/// `(-2)^n h^(0)_{floor(n/2)} h^(1)_{ceil(n/2)} lambda F_{n-1} F_n`.
pub fn corollary_closed_form(n: u64) -> RatPoly {
    assert!(n >= 1);
    let c = pow_i(&int(-2), n as i64) * h_constant(Parity::Even, n / 2) * h_constant(Parity::Odd, n.div_ceil(2));
    (&char_poly(n - 1).poly * &char_poly(n).poly).shift(1).scale(&c)
}

pub fn verify_corollary_full(n: u64) -> Result<DetReport> {
    if n == 0 {
        return precondition("the full-pencil identity is stated for n >= 1");
    }
    Ok(DetReport::new(n, IdentityId::CorollaryFull, det_poly(&pencil(n as usize)), corollary_closed_form(n)))
}

/// The Cauchy-type matrix `1/(2i+2j-1)` (even) or `1/(2i+2j-3)` (odd).
pub fn cauchy_matrix(parity: Parity, n: usize) -> RatMatrix {
    let shift = match parity {
        Parity::Even => 1,
        Parity::Odd => 3,
    };
    RatMatrix::from_fn(n, |i, j| rat(1, (2 * i + 2 * j) as i64 - shift))
}

pub fn verify_cauchy(parity: Parity, n: u64) -> DetReport {
    let id = match parity {
        Parity::Even => IdentityId::Cauchy0,
        Parity::Odd => IdentityId::Cauchy1,
    };
    let lhs = det_rational(&cauchy_matrix(parity, n as usize));
    DetReport::new(n, id, RatPoly::constant(lhs), RatPoly::constant(h_constant(parity, n)))
}

/// `(-1)^n / (2^n (5/4)_n) mu^(n-1) (mu - 2n^2 - 3n)` (even) and the odd
/// analogue with `(3/4)_n` and `mu - 2n^2 - n`. At `n = 0` the product
/// `mu^(-1) * mu` is read as 1, matching the empty determinant.
pub fn boundary_block_closed_form(parity: Parity, n: u64) -> RatPoly {
    if n == 0 {
        return RatPoly::one();
    }
    let k = n as i64;
    let (base, root) = match parity {
        Parity::Even => (rat(5, 4), 2 * k * k + 3 * k),
        Parity::Odd => (rat(3, 4), 2 * k * k + k),
    };
    let c = sign(n) / (pow_i(&int(2), k) * pochhammer(&base, n));
    RatPoly::linear(int(-root), Rational::one()).shift((n - 1) as usize).scale(&c)
}

/// `(-1)^n / (3/2)_n mu^(n-2) (mu - 2a^2 - 3a)(mu - 2b^2 - b)` with
/// `a = floor(n/2)`, `b = ceil(n/2)`; defined for `n >= 2`.
pub fn boundary_full_closed_form(n: u64) -> RatPoly {
    assert!(n >= 2);
    let (a, b) = ((n / 2) as i64, n.div_ceil(2) as i64);
    let c = sign(n) / pochhammer(&rat(3, 2), n);
    let f1 = RatPoly::linear(int(-(2 * a * a + 3 * a)), Rational::one());
    let f2 = RatPoly::linear(int(-(2 * b * b + b)), Rational::one());
    (&f1 * &f2).shift((n - 2) as usize).scale(&c)
}

/// The rational roots of `det C_n` read off its factored closed form, with
/// multiplicity, in increasing order.
pub fn boundary_roots(n: u64) -> Vec<Rational> {
    let (a, b) = ((n / 2) as i64, n.div_ceil(2) as i64);
    let mut roots = Vec::new();
    if n >= 2 {
        roots.extend(std::iter::repeat_n(Rational::zero(), (n - 2) as usize));
        roots.push(int(2 * a * a + 3 * a));
        roots.push(int(2 * b * b + b));
    } else if n == 1 {
        roots.push(int(3));
    }
    roots.sort();
    roots
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryReports {
    pub even: DetReport,
    pub odd: DetReport,
    pub full: DetReport,
}

impl BoundaryReports {
    pub fn all_equal(&self) -> bool {
        self.even.equal && self.odd.equal && self.full.equal
    }
}

/// For `n < 2` the full matrix is compared against the product of the
/// block closed forms instead of the combined factorization.
pub fn verify_boundary(n: u64) -> BoundaryReports {
    let block = |variant, parity, id| {
        DetReport::new(n, id, det_poly(&boundary_matrix(variant, n as usize)), boundary_block_closed_form(parity, n))
    };
    let full_rhs = if n >= 2 {
        boundary_full_closed_form(n)
    } else {
        &boundary_block_closed_form(Parity::Even, n / 2) * &boundary_block_closed_form(Parity::Odd, n.div_ceil(2))
    };
    BoundaryReports {
        even: block(BoundaryVariant::Even, Parity::Even, IdentityId::Boundary0),
        odd: block(BoundaryVariant::Odd, Parity::Odd, IdentityId::Boundary1),
        full: DetReport::new(
            n,
            IdentityId::BoundaryFull,
            det_poly(&boundary_matrix(BoundaryVariant::Full, n as usize)),
            full_rhs,
        ),
    }
}

/// `(-1)^n/(2^n (5/4)_n) F_{2n+1}` (even) and `(-1)^n/(2^n (3/4)_n) F_{2n}` (odd).
pub fn legendre_closed_form(parity: Parity, n: u64) -> RatPoly {
    let (base, f) = match parity {
        Parity::Even => (rat(5, 4), char_poly(2 * n + 1).poly),
        Parity::Odd => (rat(3, 4), char_poly(2 * n).poly),
    };
    f.scale(&(sign(n) / (pow_i(&int(2), n as i64) * pochhammer(&base, n))))
}

pub fn verify_legendre_hooks(n: u64) -> (DetReport, DetReport) {
    let report = |parity, id| {
        DetReport::new(n, id, det_poly(&legendre_hook(parity, n as usize)), legendre_closed_form(parity, n))
    };
    (report(Parity::Even, IdentityId::Legendre0), report(Parity::Odd, IdentityId::Legendre1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KronReport {
    pub n: u64,
    #[serde(serialize_with = "ser_display")]
    pub sample: Rational,
    /// `M_n == A_n (x) A_n` and `K_n == A_n (x) B_n` entrywise.
    pub structure: bool,
    #[serde(serialize_with = "ser_display")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_display")]
    pub rhs: Rational,
    pub equal: bool,
}

fn ser_display<S: Serializer, T: fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Compares `det(K_n - x M_n)` with `det(A_n)^n det(B_n - x A_n)^n` at the
/// rational `sample`.
pub fn verify_kron_factorization(n: u64, sample: &Rational) -> Result<KronReport> {
    if !(1..=6).contains(&n) {
        return precondition(format!("Kronecker check limited to 1 <= n <= 6, got {n}"));
    }
    let nn = n as usize;
    let (a, b) = (matrix_a(nn), matrix_b(nn));
    let (m, k) = (mass_matrix(nn), stiffness_matrix(nn));
    let structure = kronecker(&a, &a) == m && kronecker(&a, &b) == k;
    let shifted = RatMatrix::from_fn(nn * nn, |i, j| k.at(i, j) - sample * m.at(i, j));
    let lhs = det_rational(&shifted);
    let pencil_det = det_rational(&pencil(nn).eval(sample));
    let rhs = num_traits::pow(det_rational(&a) * pencil_det, nn);
    let equal = lhs == rhs;
    Ok(KronReport { n, sample: sample.clone(), structure, lhs, rhs, equal })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    /// Laplace expansion along the first row; exponential, test-only oracle.
    pub(crate) fn laplace_det(m: &PolyMatrix) -> RatPoly {
        fn rec(rows: &[Vec<RatPoly>]) -> RatPoly {
            let n = rows.len();
            if n == 0 {
                return RatPoly::one();
            }
            let mut acc = RatPoly::zero();
            for c in 0..n {
                if rows[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<RatPoly>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &rows[0][c] * &rec(&minor);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        rec(&m.rows())
    }

    #[test]
    fn det_rational_examples() {
        assert_eq!(det_rational(&RatMatrix::from_rows(vec![])), int(1));
        assert_eq!(det_rational(&RatMatrix::from_rows(vec![vec![rat(1, 3)]])), rat(1, 3));
        let m = RatMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(3), int(4)]]);
        assert_eq!(det_rational(&m), int(-2));
        // zero pivot forces a row swap
        let m = RatMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
        assert_eq!(det_rational(&m), int(-1));
        let singular = RatMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]);
        assert_eq!(det_rational(&singular), int(0));
    }

    #[test]
    fn det_poly_examples() {
        assert_eq!(det_poly(&parity_block(Parity::Even, 1)), RatPoly::linear(int(1), rat(-1, 3)));
        assert_eq!(det_poly(&pencil(1)), RatPoly::linear(int(0), int(-2)));
        let d = det_poly(&parity_block(Parity::Odd, 2));
        assert_eq!(d, laplace_det(&parity_block(Parity::Odd, 2)));
        assert_eq!(d, thm31_closed_form(Parity::Odd, 2));
    }

    #[test]
    fn thm31_small() {
        let (e, o) = verify_thm31(0);
        assert!(e.equal && o.is_none());
        assert_eq!(e.lhs, RatPoly::one());
        let (e, o) = verify_thm31(1);
        assert!(e.equal);
        assert_eq!(e.lhs, RatPoly::linear(int(1), rat(-1, 3)));
        let o = o.unwrap();
        assert!(o.equal);
        assert_eq!(o.lhs, RatPoly::linear(int(0), int(-1)));
    }

    #[test]
    fn corollary_small() {
        assert_eq!(verify_corollary_full(1).unwrap().rhs, RatPoly::linear(int(0), int(-2)));
        let r = verify_corollary_full(2).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, RatPoly::new(vec![int(0), int(-4), rat(4, 3)]));
        assert!(verify_corollary_full(4).unwrap().equal);
        assert!(verify_corollary_full(0).is_err());
    }

    #[test]
    fn cauchy_small() {
        assert_eq!(verify_cauchy(Parity::Even, 1).lhs, RatPoly::constant(rat(1, 3)));
        assert_eq!(verify_cauchy(Parity::Odd, 1).lhs, RatPoly::one());
        assert!(verify_cauchy(Parity::Even, 3).equal);
        assert!(verify_cauchy(Parity::Odd, 0).equal);
    }

    #[test]
    fn boundary_small() {
        let r = verify_boundary(1);
        assert!(r.all_equal(), "{r:?}");
        assert_eq!(r.even.lhs, RatPoly::linear(int(2), rat(-2, 5)));
        assert_eq!(r.full.lhs, RatPoly::linear(int(2), rat(-2, 3)));
        let r = verify_boundary(2);
        assert!(r.all_equal());
        assert!(verify_boundary(0).all_equal());
        // the combined factorization with mu^(n-2) regularized agrees at n = 1 too
        let one = RatPoly::linear(int(-3), int(1)).scale(&rat(-2, 3));
        assert_eq!(verify_boundary(1).full.rhs, one);
        assert_eq!(boundary_roots(1), vec![int(3)]);
        assert_eq!(boundary_roots(4), vec![int(0), int(0), int(10), int(14)]);
    }

    #[test]
    fn legendre_small() {
        let (e, o) = verify_legendre_hooks(1);
        assert!(e.equal && o.equal);
        assert_eq!(o.lhs, RatPoly::linear(int(2), rat(-2, 3)));
        assert_eq!(e.lhs, RatPoly::linear(int(6), rat(-2, 5)));
        let (e, o) = verify_legendre_hooks(3);
        assert!(e.equal && o.equal);
    }

    #[test]
    fn kron_small() {
        let r = verify_kron_factorization(1, &int(0)).unwrap();
        assert!(r.structure && r.equal);
        assert_eq!(r.lhs, int(0));
        assert!(verify_kron_factorization(2, &int(1)).unwrap().equal);
        assert!(verify_kron_factorization(3, &rat(7, 2)).unwrap().equal);
        assert!(verify_kron_factorization(7, &int(1)).is_err());
    }

    #[test]
    fn leading_coefficient_matches_cauchy() {
        // det(A_n)/lambda^n -> det(-cauchy), so the leading coefficient is (-1)^n h_n
        for n in 0..8u64 {
            for p in Parity::BOTH {
                let d = det_poly(&parity_block(p, n as usize));
                assert_eq!(d.degree(), Some(n as usize), "{p:?} n={n}");
                assert_eq!(d.leading().unwrap(), &(sign(n) * h_constant(p, n)));
            }
        }
    }

    #[test]
    fn json_shape() {
        let r = verify_cauchy(Parity::Even, 1);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"n": 1, "identity": "cauchy-0", "lhs": ["1/3"], "rhs": ["1/3"], "equal": true})
        );
    }

    fn arb_poly_matrix() -> impl Strategy<Value = PolyMatrix> {
        (0usize..=4).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec((-9i64..9, 1i64..4), 0..=3), n * n).prop_map(move |entries| {
                let mut it = entries.into_iter();
                PolyMatrix::from_fn(n, |_, _| {
                    RatPoly::new(it.next().unwrap().into_iter().map(|(a, b)| rat(a, b)).collect())
                })
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn interpolated_det_matches_laplace(m in arb_poly_matrix()) {
            prop_assert_eq!(det_poly(&m), laplace_det(&m));
        }
    }
}
