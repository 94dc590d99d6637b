//! Scalar helpers on top of [`num_rational::BigRational`].
//!
//! `BigRational` reduces by the gcd after every operation and keeps the
//! denominator positive, which is exactly the invariant every other module
//! relies on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// `p/q` as a rational. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn big(p: BigInt) -> Rational {
    Rational::from_integer(p)
}

/// Rising factorial `a (a+1) ... (a+n-1)`, equal to 1 for `n == 0`.
///
/// With `a = p/q` the product is `prod (p + k q) / q^n`, reduced once.
pub fn pochhammer(a: &Rational, n: u64) -> Rational {
    let (p, q) = (a.numer(), a.denom());
    let mut num = BigInt::one();
    let mut term = p.clone();
    for _ in 0..n {
        if term.is_zero() {
            return Rational::zero();
        }
        num *= &term;
        term += q;
    }
    Rational::new(num, num_traits::pow(q.clone(), n as usize))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn pow_i(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"1e-12"` / `"0.25"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{whole}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i64;
    let mut v = Rational::from_integer(all) * pow_i(&int(10), scale);
    if neg {
        v = -v;
    }
    Some(v)
}

/// Decimal rendering with `digits` fractional digits, rounded half away
/// from zero.
pub fn to_decimal(x: &Rational, digits: usize) -> String {
    let neg = x.is_negative();
    let a = x.abs();
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled: BigInt = (a.numer() * &scale * 2 + a.denom()) / (a.denom() * 2);
    let s = scaled.to_string();
    let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
    let (w, f) = s.split_at(s.len() - digits);
    let sign = if neg && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{w}")
    } else {
        format!("{sign}{w}.{f}")
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}
