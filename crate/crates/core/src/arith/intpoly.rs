//! Primitive integer polynomials used for sign evaluation and root counting.
//!
//! Root certificates only ever need the *sign* of a polynomial at a rational
//! point, so the rational polynomial is cleared of denominators once and then
//! evaluated homogeneously: `sign f(p/q) = sign sum c_i p^i q^(d-i)` for
//! `q > 0`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::RatPoly;
use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Positive rational multiple of `p` with coprime integer coefficients.
    pub fn from_rat(p: &RatPoly) -> Self {
        let (mut coeffs, mult) = p.primitive_part();
        if mult.is_negative() {
            coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        IntPoly { coeffs }
    }

    fn from_vec(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// `q^deg * f(p/q)` for `q > 0`; its sign is the sign of `f(p/q)`.
    pub fn eval_scaled(&self, x: &Rational) -> BigInt {
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        // Horner in p with the q powers accumulated from the top.
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> Ordering {
        self.eval_scaled(x).sign_cmp()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let d = self.degree().unwrap_or(0);
        Rational::new(self.eval_scaled(x), num_traits::pow(x.denom().clone(), d))
    }

    /// Sign of the leading coefficient (at `+inf`).
    pub fn sign_at_pos_inf(&self) -> Ordering {
        self.coeffs.last().map_or(Ordering::Equal, |c| c.sign_cmp())
    }

    pub fn sign_at_neg_inf(&self) -> Ordering {
        let s = self.sign_at_pos_inf();
        if self.degree().unwrap_or(0) % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_vec(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// Positive multiple of `f(x + a)` as an integer polynomial in `x`.
    ///
    /// With `a = p/q` this is `q^d f((y + p)/q)` under `y = q x`, i.e. the roots
    /// of the result are `q (r - a)` for each root `r` of `f`, and sign
    /// patterns of roots relative to `a` are preserved.
    pub fn taylor_shift(&self, a: &Rational) -> Self {
        let (p, q) = (a.numer(), a.denom());
        // g_i = c_i q^(d-i), then shift g(y) -> g(y + p) by repeated synthetic division.
        let mut qpow = BigInt::one();
        let mut g: Vec<BigInt> = vec![BigInt::zero(); self.coeffs.len()];
        for i in (0..self.coeffs.len()).rev() {
            g[i] = &self.coeffs[i] * &qpow;
            qpow *= q;
        }
        let n = g.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &g[j + 1] * p;
                g[j] += t;
            }
        }
        Self::from_vec(g)
    }

    /// Number of sign changes among the nonzero coefficients.
    pub fn sign_variations(&self) -> usize {
        let signs: Vec<bool> = self.coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Pseudo-remainder `prem(self, d)` made primitive, with the sign that a
    /// true Euclidean remainder would carry.
    fn primitive_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("zero divisor");
        let lead = d.coeffs.last().unwrap().clone();
        let mut r = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return self.clone();
        };
        for k in (0..=n - dd).rev() {
            let c = r[k + dd].clone();
            if c.is_zero() {
                r.iter_mut().for_each(|x| *x *= &lead);
                continue;
            }
            // r <- lead * r - c * x^k d ; keeps integrality
            for x in r.iter_mut() {
                *x *= &lead;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
        }
        r.truncate(dd);
        // Each step multiplied by `lead`; when lead < 0 an odd number of
        // steps flips the sign relative to the Euclidean remainder.
        let steps = n - dd + 1;
        if lead.is_negative() && steps % 2 == 1 {
            r.iter_mut().for_each(|x| *x = -&*x);
        }
        let g = r.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() && !g.is_one() {
            r.iter_mut().for_each(|x| *x /= &g);
        }
        Self::from_vec(r)
    }
}

/// Sturm chain `f, f', -rem(f, f'), ...`, each member scaled by a positive
/// constant so that sign counts are unchanged.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(f: &IntPoly) -> Self {
        let mut chain = vec![f.clone()];
        if f.degree().unwrap_or(0) == 0 {
            return SturmChain { chain };
        }
        chain.push(f.derivative());
        loop {
            let n = chain.len();
            let r = chain[n - 2].primitive_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            let neg = IntPoly { coeffs: r.coeffs.iter().map(|c| -c).collect() };
            chain.push(neg);
        }
        SturmChain { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let s: Vec<Ordering> = signs.filter(|s| *s != Ordering::Equal).collect();
        s.windows(2).filter(|w| w[0] != w[1]).count()
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(IntPoly::sign_at_pos_inf))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(IntPoly::sign_at_neg_inf))
    }

    /// Distinct real roots in the half-open interval `(a, b]`.
    pub fn count_in(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Distinct real roots greater than `a`.
    pub fn count_above(&self, a: &Rational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at_pos_inf())
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_neg_inf().saturating_sub(self.variations_at_pos_inf())
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn sign_matches_rational_eval() {
        let f = RatPoly::new(vec![rat(105, 2), rat(-45, 7), rat(1, 3)]);
        let g = IntPoly::from_rat(&f);
        for x in [rat(0, 1), rat(7, 3), rat(-5, 2), rat(100, 1), rat(12, 1)] {
            assert_eq!(g.sign_at(&x), f.eval(&x).cmp(&int(0)));
        }
    }

    #[test]
    fn sturm_counts_simple() {
        // (x-1)(x-2)(x-3)
        let f = IntPoly::from_rat(&RatPoly::from_ints(&[-6, 11, -6, 1]));
        let s = SturmChain::new(&f);
        assert_eq!(s.count_real(), 3);
        assert_eq!(s.count_in(&int(0), &int(2)), 2);
        assert_eq!(s.count_in(&rat(3, 2), &rat(5, 2)), 1);
        assert_eq!(s.count_above(&int(3)), 0);
        // x^2 + 1
        let g = IntPoly::from_rat(&RatPoly::from_ints(&[1, 0, 1]));
        assert_eq!(SturmChain::new(&g).count_real(), 0);
    }

    #[test]
    fn taylor_shift_moves_roots() {
        // roots 1,2,3 ; shift by 5/2 -> roots scaled q(r-a) = 2r-5 -> -3,-1,1
        let f = IntPoly::from_rat(&RatPoly::from_ints(&[-6, 11, -6, 1]));
        let g = f.taylor_shift(&rat(5, 2));
        let expect = IntPoly::from_rat(
            &(&(&RatPoly::from_ints(&[3, 1]) * &RatPoly::from_ints(&[1, 1])) * &RatPoly::from_ints(&[-1, 1])),
        );
        assert_eq!(g, expect);
        assert_eq!(f.taylor_shift(&int(3)).sign_variations(), 0);
        assert_eq!(f.taylor_shift(&rat(29, 10)).sign_variations(), 1);
    }

    proptest! {
        #[test]
        fn sturm_count_matches_known_roots(roots in prop::collection::btree_set(-30i64..30, 1..7), a in -35i64..35, w in 1i64..40) {
            let mut p = RatPoly::one();
            for r in &roots {
                p = &p * &RatPoly::from_ints(&[-r, 1]);
            }
            // times an irreducible quadratic to exercise non-real roots
            p = &p * &RatPoly::from_ints(&[3, 1, 1]);
            let s = SturmChain::new(&IntPoly::from_rat(&p));
            prop_assert_eq!(s.count_real(), roots.len());
            let lo = rat(2 * a + 1, 2);
            let hi = rat(2 * (a + w) + 1, 2);
            let expect = roots.iter().filter(|&&r| int(r) > lo && int(r) <= hi).count();
            prop_assert_eq!(s.count_in(&lo, &hi), expect);
        }
    }
}
