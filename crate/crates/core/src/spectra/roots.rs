//! Certified real-root enclosures by exact sign evaluation.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::rational::to_decimal;
use crate::arith::{int, IntPoly, Rational, SturmChain};
use crate::charpoly::{char_poly, f_coeff_unchecked};
use crate::error::{precondition, Error, Result};

/// Closed interval `[lo, hi]` with `lo < hi` known to contain a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo < hi, "degenerate enclosure");
        Enclosure { lo, hi }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn overlaps(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Every point of `self` is strictly below every point of `other`.
    pub fn strictly_below(&self, other: &Enclosure) -> bool {
        self.hi < other.lo
    }
}

impl Serialize for Enclosure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Enclosure", 3)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.serialize_field("mid", &to_decimal(&self.mid(), 15))?;
        st.end()
    }
}

/// `1 + max |c_i / c_d|`; every real root lies in `(-B, B)`.
pub fn cauchy_bound(p: &IntPoly) -> Rational {
    let c = p.coeffs();
    let lead = Rational::from_integer(c.last().expect("zero polynomial").abs());
    let max =
        c[..c.len() - 1].iter().map(|x| Rational::from_integer(x.abs()) / &lead).max().unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// True if `p` has no real root strictly greater than `a`: the Taylor shift
/// `p(x + a)`, stripped of any factor `x`, has no sign variation and so no
/// positive root by Descartes' rule.
pub fn no_root_above(p: &IntPoly, a: &Rational) -> bool {
    let shifted = p.taylor_shift(a);
    shifted.sign_variations() == 0
}

/// Refines `(a, b]`, known to hold exactly one simple root of `p`, to width
/// at most `tol`.
fn refine_single(p: &IntPoly, chain: &SturmChain, mut a: Rational, mut b: Rational, tol: &Rational) -> Enclosure {
    let two = int(2);
    if p.sign_at(&b) == Ordering::Equal {
        let lo = std::cmp::max(a, &b - tol);
        return Enclosure::new(lo, b);
    }
    while &b - &a > *tol {
        let mid = (&a + &b) / &two;
        let sa = p.sign_at(&a);
        let sm = p.sign_at(&mid);
        let left =
            if sa == Ordering::Equal { chain.count_in(&a, &mid) == 1 } else { sm == Ordering::Equal || sm != sa };
        if left {
            b = mid;
            if sm == Ordering::Equal {
                let lo = std::cmp::max(a, &b - tol);
                return Enclosure::new(lo, b);
            }
        } else {
            a = mid;
        }
    }
    Enclosure::new(a, b)
}

/// Isolates every distinct real root of `p` and refines each to width `tol`.
pub fn isolate_real_roots(p: &IntPoly, tol: &Rational) -> Vec<Enclosure> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(p);
    let bound = cauchy_bound(p);
    let mut pending = vec![(-bound.clone(), bound)];
    let mut out = Vec::new();
    let two = int(2);
    while let Some((a, b)) = pending.pop() {
        match chain.count_in(&a, &b) {
            0 => {}
            1 => out.push(refine_single(p, &chain, a, b, tol)),
            _ => {
                let mid = (&a + &b) / &two;
                pending.push((a, mid.clone()));
                pending.push((mid, b));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Largest real root of an arbitrary polynomial by Sturm counting. Works for
/// repeated roots since only distinct roots are counted.
pub fn largest_real_root(p: &IntPoly, tol: &Rational) -> Option<Enclosure> {
    if p.degree().unwrap_or(0) == 0 {
        return None;
    }
    let chain = SturmChain::new(p);
    let mut hi = cauchy_bound(p);
    let mut lo = -hi.clone();
    if chain.count_in(&lo, &hi) == 0 {
        return None;
    }
    let two = int(2);
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if chain.count_in(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(Enclosure::new(lo, hi))
}

/// Smallest real root of `p` inside `(a, b]` by Sturm counting.
pub fn smallest_root_in(p: &IntPoly, a: &Rational, b: &Rational, tol: &Rational) -> Option<Enclosure> {
    let chain = SturmChain::new(p);
    let (mut lo, mut hi) = (a.clone(), b.clone());
    if chain.count_in(&lo, &hi) == 0 {
        return None;
    }
    let two = int(2);
    loop {
        if chain.count_in(&lo, &hi) == 1 {
            return Some(refine_single(p, &chain, lo, hi, tol));
        }
        let mid = (&lo + &hi) / &two;
        if chain.count_in(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Lower rational approximation of `sqrt(v)` for `v >= 0`, exact when `v` is
/// the square of a dyadic rational with at most `bits` fractional bits.
pub(crate) fn sqrt_floor(v: &Rational, bits: u32) -> Rational {
    let scale = num_bigint::BigInt::one() << (2 * bits) as usize;
    let s = (v.numer() * &scale / v.denom()).sqrt();
    Rational::new(s, num_bigint::BigInt::one() << bits as usize)
}

/// `F_n` as a primitive integer polynomial.
pub fn char_int_poly(n: u64) -> IntPoly {
    IntPoly::from_rat(&char_poly(n).poly)
}

/// Certified enclosure of the maximal root of `F_n`.
///
/// Bisection runs on `[max(m_floor, f1/2), f1]` keeping `F_n(lo) < 0 <= F_n(hi)`;
/// the result is then certified maximal by Descartes' rule at `hi`.
pub fn max_root(n: u64, tol: &Rational) -> Result<Enclosure> {
    if n < 2 {
        return precondition(format!("max_root needs n >= 2, got {n}"));
    }
    if !tol.is_positive() {
        return precondition("tolerance must be positive");
    }
    max_root_of(&char_int_poly(n), n, tol)
}

pub(crate) fn max_root_of(f: &IntPoly, n: u64, tol: &Rational) -> Result<Enclosure> {
    let f1 = f_coeff_unchecked(1, n);
    let f2 = f_coeff_unchecked(2, n);
    let u = &f1 / int(2);
    let v = &u * &u - &f2;
    let mut lo = std::cmp::max(&u + sqrt_floor(&v, 64), u.clone());
    let mut hi = f1;
    if f.sign_at(&hi) == Ordering::Less {
        return Err(Error::Internal(format!("F_{n}(f1) < 0: upper bracket invalid")));
    }
    if lo == hi || f.sign_at(&lo) == Ordering::Equal {
        lo = &hi - tol;
    }
    if f.sign_at(&lo) != Ordering::Less {
        return Err(Error::Internal(format!("F_{n} is not negative at the lower bracket")));
    }
    let two = int(2);
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if f.sign_at(&mid) == Ordering::Less {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if !no_root_above(f, &hi) {
        // bisection locked onto a lower root; fall back to Sturm isolation
        return largest_real_root(f, tol).ok_or_else(|| Error::Internal(format!("F_{n} has no real root")));
    }
    Ok(Enclosure::new(lo, hi))
}

/// Enclosure of the maximal root refined to a smaller tolerance.
pub fn refine_max_root(n: u64, enc: &Enclosure, tol: &Rational) -> Result<Enclosure> {
    let f = char_int_poly(n);
    let (mut lo, mut hi) = (enc.lo.clone(), enc.hi.clone());
    let two = int(2);
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if f.sign_at(&mid) == Ordering::Less {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Enclosure::new(lo, hi))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootTable {
    pub n: u64,
    pub roots: Vec<Enclosure>,
    pub count: usize,
}

impl RootTable {
    /// Figure rows `n,root,parity` with the enclosure midpoints.
    pub fn figure_rows(&self, digits: usize) -> Vec<String> {
        self.roots.iter().map(|r| format!("{},{},{}", self.n, to_decimal(&r.mid(), digits), self.n % 2)).collect()
    }
}

pub const FIGURE_CSV_HEADER: &str = "n,root,parity";

/// All `floor(n/2)` roots of `F_n`, ascending.
pub fn all_roots(n: u64, tol: &Rational) -> Result<RootTable> {
    if n < 2 {
        return precondition(format!("all_roots needs n >= 2, got {n}"));
    }
    let f = char_int_poly(n);
    let roots = isolate_real_roots(&f, tol);
    let nu = (n / 2) as usize;
    if roots.len() != nu {
        return Err(Error::Internal(format!("F_{n}: {} distinct real roots, expected {nu}", roots.len())));
    }
    if roots.iter().any(|r| !r.lo.is_positive()) {
        return Err(Error::Internal(format!("F_{n} has a root that is not positive")));
    }
    Ok(RootTable { n, count: roots.len(), roots })
}

/// Smallest root of `F_n` (all roots are positive and below `f_1(n)`).
pub fn smallest_root(n: u64, tol: &Rational) -> Result<Enclosure> {
    if n < 2 {
        return precondition(format!("smallest_root needs n >= 2, got {n}"));
    }
    let f = char_int_poly(n);
    let upper = f_coeff_unchecked(1, n);
    smallest_root_in(&f, &Rational::zero(), &upper, tol)
        .ok_or_else(|| Error::Internal(format!("F_{n} has no root in (0, f1]")))
}
