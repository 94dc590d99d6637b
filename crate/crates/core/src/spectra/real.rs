//! Binary fixed-point reals for values that are not rational (square and
//! cube roots, `pi`). These only feed diagnostics and the `M(n)` bound;
//! every root certificate is decided on exact rationals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rational;

pub const DEFAULT_BITS: u32 = 128;

/// `mantissa / 2^bits`, every operation truncating toward negative infinity
/// (one unit in the last place at most).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Real {
    mantissa: BigInt,
    bits: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::div_floor(a, b)
}

impl Real {
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn from_rational(x: &Rational, bits: u32) -> Self {
        let m = floor_div(&(x.numer() << bits as usize), x.denom());
        Real { mantissa: m, bits }
    }

    pub fn from_int(x: i64, bits: u32) -> Self {
        Real { mantissa: BigInt::from(x) << bits as usize, bits }
    }

    /// Exact rational value of this fixed-point number.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), BigInt::one() << self.bits as usize)
    }

    /// One unit in the last place.
    pub fn ulp(bits: u32) -> Rational {
        Rational::new(BigInt::one(), BigInt::one() << bits as usize)
    }

    pub fn to_f64(&self) -> f64 {
        // keep 60 significant bits before converting
        let shift = self.bits.saturating_sub(60);
        let m = (&self.mantissa >> shift as usize).to_f64().unwrap_or(f64::NAN);
        m / 2f64.powi((self.bits - shift) as i32)
    }

    fn same(&self, other: &Real) {
        assert_eq!(self.bits, other.bits, "mixed precisions");
    }

    pub fn add(&self, o: &Real) -> Real {
        self.same(o);
        Real { mantissa: &self.mantissa + &o.mantissa, bits: self.bits }
    }

    pub fn sub(&self, o: &Real) -> Real {
        self.same(o);
        Real { mantissa: &self.mantissa - &o.mantissa, bits: self.bits }
    }

    pub fn neg(&self) -> Real {
        Real { mantissa: -&self.mantissa, bits: self.bits }
    }

    pub fn mul(&self, o: &Real) -> Real {
        self.same(o);
        Real { mantissa: (&self.mantissa * &o.mantissa) >> self.bits as usize, bits: self.bits }
    }

    pub fn div(&self, o: &Real) -> Real {
        self.same(o);
        assert!(!o.mantissa.is_zero(), "division by zero");
        Real { mantissa: floor_div(&(&self.mantissa << self.bits as usize), &o.mantissa), bits: self.bits }
    }

    pub fn mul_rational(&self, r: &Rational) -> Real {
        Real { mantissa: floor_div(&(&self.mantissa * r.numer()), r.denom()), bits: self.bits }
    }

    /// Square root of a nonnegative value.
    pub fn sqrt(&self) -> Real {
        assert!(!self.mantissa.is_negative(), "sqrt of negative value");
        Real { mantissa: (&self.mantissa << self.bits as usize).sqrt(), bits: self.bits }
    }

    /// Real cube root (negative for negative input).
    pub fn cbrt(&self) -> Real {
        let scaled = &self.mantissa << (2 * self.bits) as usize;
        let r = if scaled.is_negative() { -(-scaled).cbrt() } else { scaled.cbrt() };
        Real { mantissa: r, bits: self.bits }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Real {
        Real { mantissa: self.mantissa.abs(), bits: self.bits }
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.to_rational().cmp(r)
    }

    /// `pi` by Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
    pub fn pi(bits: u32) -> Real {
        let work = bits + 32;
        let atan_inv = |x: i64| -> BigInt {
            // sum_k (-1)^k / ((2k+1) x^(2k+1)), scaled by 2^work
            let x = BigInt::from(x);
            let x2 = &x * &x;
            let mut power = (BigInt::one() << work as usize) / &x;
            let mut acc = BigInt::zero();
            let mut k: u64 = 0;
            while !power.is_zero() {
                let term = &power / BigInt::from(2 * k + 1);
                if k.is_multiple_of(2) {
                    acc += term;
                } else {
                    acc -= term;
                }
                power /= &x2;
                k += 1;
            }
            acc
        };
        let m = atan_inv(5) * 16 - atan_inv(239) * 4;
        Real { mantissa: m >> 32usize, bits }
    }

    /// Decimal rendering with `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        crate::arith::rational::to_decimal(&self.to_rational(), digits)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> Ordering {
        self.same(other);
        self.mantissa.cmp(&other.mantissa)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(20))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn pi_digits() {
        let pi = Real::pi(200);
        assert_eq!(pi.to_decimal(50), "3.14159265358979323846264338327950288419716939937511");
        assert!((Real::pi(64).to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn roots() {
        let two = Real::from_int(2, 128);
        let s = two.sqrt();
        assert_eq!(s.to_decimal(30), "1.414213562373095048801688724210");
        let c = Real::from_int(-27, 128).cbrt();
        assert!(c.cmp_rational(&int(-3)) != Ordering::Greater);
        assert!(c.sub(&Real::from_int(-3, 128)).abs().to_rational() <= Real::ulp(127));
        let x = Real::from_rational(&rat(1, 3), 64);
        assert!((x.mul(&Real::from_int(3, 64)).to_f64() - 1.0).abs() < 1e-18);
        assert!((Real::from_int(1, 64).div(&Real::from_int(7, 64)).to_f64() - 1.0 / 7.0).abs() < 1e-16);
    }
}
