//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Polynomial in one variable; `coeffs[i]` is the coefficient of `x^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `a + b x`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RatPoly { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect())
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut q = vec![Rational::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Integer multiple of `self` with coprime integer coefficients and the
    /// same sign of the leading coefficient. Returns the multiplier as well.
    pub fn primitive_part(&self) -> (Vec<BigInt>, Rational) {
        if self.is_zero() {
            return (Vec::new(), Rational::one());
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let ints: Vec<BigInt> = ints.into_iter().map(|c| c / &g).collect();
        (ints, Rational::new(lcm, g))
    }

    /// Exact interpolation through `points` by Newton divided differences.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<RatPoly> {
        let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
        for (i, a) in xs.iter().enumerate() {
            if xs[..i].contains(a) {
                return Err(Error::DuplicateAbscissa(a.to_string()));
            }
        }
        // In-place divided-difference table; dd[i] ends up as f[x_0..x_i].
        let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..dd.len() {
            for i in (level..dd.len()).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
            }
        }
        // Nested Newton form, expanded from the innermost coefficient out.
        let mut acc = RatPoly::zero();
        for i in (0..dd.len()).rev() {
            let factor = RatPoly::linear(-xs[i].clone(), Rational::one());
            acc = &(&acc * &factor) + &RatPoly::constant(dd[i].clone());
        }
        Ok(acc)
    }

    /// Coefficients as exact `"p/q"` strings, lowest degree first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Number of sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        let signs: Vec<bool> = self.coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-3, 1]).eval(&int(3)), int(0));
        assert_eq!(RatPoly::zero().eval(&int(7)), int(0));
        assert_eq!(p(&[105, -45, 1]).eval(&int(0)), int(105));
    }

    #[test]
    fn interpolate_examples() {
        let pts = |v: &[(i64, i64)]| v.iter().map(|&(x, y)| (int(x), int(y))).collect::<Vec<_>>();
        assert_eq!(RatPoly::interpolate(&pts(&[(0, 1), (1, 1)])).unwrap(), RatPoly::one());
        assert_eq!(RatPoly::interpolate(&pts(&[(0, -3), (1, -2), (2, -1)])).unwrap(), p(&[-3, 1]));
        let f4 = p(&[105, -45, 1]);
        let four = pts(&[(0, 105), (1, 61), (2, 19), (-1, 151)]);
        assert_eq!(RatPoly::interpolate(&four).unwrap(), f4);
        for skip in 0..4 {
            let three: Vec<_> = four.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| v.clone()).collect();
            let q = RatPoly::interpolate(&three).unwrap();
            assert_eq!(q, f4);
            assert_eq!(q.eval(&four[skip].0), four[skip].1);
        }
    }

    #[test]
    fn interpolate_rejects_duplicates() {
        let err = RatPoly::interpolate(&[(int(1), int(0)), (int(1), int(2))]).unwrap_err();
        assert!(matches!(err, Error::DuplicateAbscissa(_)));
    }

    #[test]
    fn trimming_and_degree() {
        let z = RatPoly::new(vec![int(0), int(0)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(p(&[105, -45, 1]).to_string(), "x^2 - 45*x + 105");
        assert_eq!(RatPoly::linear(int(1), rat(-1, 3)).to_string(), "-1/3*x + 1");
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[105, -45, 1]);
        let d = p(&[-3, 1]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn primitive_part_scales() {
        let a = RatPoly::new(vec![rat(1, 2), rat(-3, 4), rat(3, 2)]);
        let (ints, m) = a.primitive_part();
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(6)]);
        assert_eq!(m, int(4));
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = RatPoly> {
        prop::collection::vec((-50i64..50, 1i64..8), 0..=max_deg + 1)
            .prop_map(|v| RatPoly::new(v.into_iter().map(|(a, b)| rat(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn interpolation_recovers_polynomial(poly in arb_poly(8), shift in -5i64..5) {
            let npts = poly.degree().map_or(1, |d| d + 1);
            let pts: Vec<_> = (0..npts as i64)
                .map(|k| { let x = rat(2 * k + shift, 3); let y = poly.eval(&x); (x, y) })
                .collect();
            prop_assert_eq!(RatPoly::interpolate(&pts).unwrap(), poly);
        }

        #[test]
        fn ring_laws(a in arb_poly(5), b in arb_poly(5), x in -20i64..20) {
            let x = rat(x, 3);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            let (q, r) = if b.is_zero() { (RatPoly::zero(), a.clone()) } else { a.div_rem(&b) };
            prop_assert_eq!(&(&q * &b) + &r, a);
        }
    }
}
