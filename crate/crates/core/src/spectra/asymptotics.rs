//! Large-`n` diagnostics against the limiting constants.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use num_traits::{Signed, Zero};

use crate::arith::{int, Rational};
use crate::charpoly::f_coeff_unchecked;
use crate::error::{precondition, Result};

use super::real::Real;
use super::roots::{max_root, smallest_root, Enclosure};

/// `1/pi^2`, `8/pi^2`, `pi^2/4`, `pi^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Targets {
    pub inv_pi2: Real,
    pub eight_over_pi2: Real,
    pub pi2_over_4: Real,
    pub pi2: Real,
}

impl Targets {
    pub fn new(bits: u32) -> Self {
        let pi = Real::pi(bits + 16);
        let pi2 = pi.mul(&pi);
        let one = Real::from_int(1, bits + 16);
        let inv = one.div(&pi2);
        let round = |x: &Real| Real::from_rational(&x.to_rational(), bits);
        Targets {
            eight_over_pi2: round(&inv.mul_rational(&int(8))),
            pi2_over_4: round(&pi2.mul_rational(&Rational::new(1.into(), 4.into()))),
            inv_pi2: round(&inv),
            pi2: round(&pi2),
        }
    }
}

impl Serialize for Targets {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Targets", 4)?;
        st.serialize_field("inv_pi2", &self.inv_pi2.to_decimal(15))?;
        st.serialize_field("eight_over_pi2", &self.eight_over_pi2.to_decimal(15))?;
        st.serialize_field("pi2_over_4", &self.pi2_over_4.to_decimal(15))?;
        st.serialize_field("pi2", &self.pi2.to_decimal(15))?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticRow {
    pub n: u64,
    pub lambda_n: Enclosure,
    pub lambda_over_n4: Real,
    pub lambda_over_f1: Real,
    /// Smallest root of `F_{2 floor(n/2)}`.
    pub smallest_root_even: Enclosure,
    /// Smallest root of `F_{2 floor(n/2) + 1}`.
    pub smallest_root_odd: Enclosure,
    pub targets: Targets,
}

impl AsymptoticRow {
    pub fn dist_n4(&self) -> Real {
        self.lambda_over_n4.sub(&self.targets.inv_pi2).abs()
    }
}

impl Serialize for AsymptoticRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AsymptoticRow", 7)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("lambda_n", &self.lambda_n)?;
        st.serialize_field("lambda_over_n4", &self.lambda_over_n4.to_decimal(15))?;
        st.serialize_field("lambda_over_f1", &self.lambda_over_f1.to_decimal(15))?;
        st.serialize_field("smallest_root_even", &self.smallest_root_even)?;
        st.serialize_field("smallest_root_odd", &self.smallest_root_odd)?;
        st.serialize_field("targets", &self.targets)?;
        st.end()
    }
}

pub const ASYMPTOTICS_CSV_HEADER: &str =
    "n,lambda_over_n4,lambda_over_f1,smallest_root_even,smallest_root_odd,inv_pi2,eight_over_pi2,pi2_over_4,pi2";

impl AsymptoticRow {
    pub fn csv_row(&self, digits: usize) -> String {
        let d = |x: &Rational| crate::arith::rational::to_decimal(x, digits);
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.lambda_over_n4.to_decimal(digits),
            self.lambda_over_f1.to_decimal(digits),
            d(&self.smallest_root_even.mid()),
            d(&self.smallest_root_odd.mid()),
            self.targets.inv_pi2.to_decimal(digits),
            self.targets.eight_over_pi2.to_decimal(digits),
            self.targets.pi2_over_4.to_decimal(digits),
            self.targets.pi2.to_decimal(digits),
        )
    }
}

pub fn asymptotic_row(n: u64, tol: &Rational, bits: u32) -> Result<AsymptoticRow> {
    if n < 2 {
        return precondition(format!("asymptotics need n >= 2, got {n}"));
    }
    let lambda = max_root(n, tol)?;
    let mid = lambda.mid();
    let n4 = int(n as i64).pow(4);
    let f1 = f_coeff_unchecked(1, n);
    let even = 2 * (n / 2);
    Ok(AsymptoticRow {
        n,
        lambda_over_n4: Real::from_rational(&(&mid / n4), bits),
        lambda_over_f1: Real::from_rational(&(&mid / f1), bits),
        smallest_root_even: smallest_root(even, tol)?,
        smallest_root_odd: smallest_root(even + 1, tol)?,
        lambda_n: lambda,
        targets: Targets::new(bits),
    })
}

pub fn asymptotic_table(ns: &[u64], tol: &Rational, bits: u32) -> Result<Vec<AsymptoticRow>> {
    ns.iter().map(|&n| asymptotic_row(n, tol, bits)).collect()
}

/// Smallest roots of `F_{2n}` and `F_{2n+1}`, which tend to `pi^2/4` and
/// `pi^2` as `n` grows.
pub fn first_roots(n: u64, tol: &Rational) -> Result<(Enclosure, Enclosure)> {
    if n < 1 {
        return precondition("first_roots needs n >= 1");
    }
    Ok((smallest_root(2 * n, tol)?, smallest_root(2 * n + 1, tol)?))
}

/// The four limiting constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    InvPi2,
    EightOverPi2,
    Pi2Over4,
    Pi2,
}

impl Target {
    /// Rational interval of width `2^(1-bits)` containing the constant.
    pub fn interval(self, bits: u32) -> (Rational, Rational) {
        let t = Targets::new(bits + 16);
        let x = match self {
            Target::InvPi2 => t.inv_pi2,
            Target::EightOverPi2 => t.eight_over_pi2,
            Target::Pi2Over4 => t.pi2_over_4,
            Target::Pi2 => t.pi2,
        }
        .to_rational();
        let slack = Real::ulp(bits);
        (&x - &slack, &x + &slack)
    }
}

/// Certified bounds `lo <= |x - c| <= hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distance {
    pub lo: Rational,
    pub hi: Rational,
}

impl Distance {
    /// Distance between a point of `[a, b]` and a point of `[c0, c1]`.
    pub fn between(a: &Rational, b: &Rational, c: &(Rational, Rational)) -> Self {
        let abs = |x: Rational| if x.is_negative() { -x } else { x };
        let hi = std::cmp::max(abs(b - &c.0), abs(&c.1 - a));
        let lo = if b < &c.0 {
            &c.0 - b
        } else if a > &c.1 {
            a - &c.1
        } else {
            Rational::zero()
        };
        Distance { lo, hi }
    }

    /// Known to within a factor of two and bounded away from zero.
    pub fn resolved(&self) -> bool {
        self.lo.is_positive() && self.hi <= &self.lo * int(2)
    }

    pub fn strictly_below(&self, other: &Distance) -> bool {
        self.hi < other.lo
    }
}

pub const MAX_DISTANCE_BITS: u32 = 4096;

/// Distance from the smallest root of `F_m` to `target`, with the working
/// precision doubled from 128 bits until the bound is resolved. `None` if
/// still unresolved at [`MAX_DISTANCE_BITS`].
pub fn smallest_root_distance(m: u64, target: Target) -> Result<Option<Distance>> {
    let mut bits = 128;
    while bits <= MAX_DISTANCE_BITS {
        let enc = smallest_root(m, &Real::ulp(bits + 2))?;
        let d = Distance::between(&enc.lo, &enc.hi, &target.interval(bits + 2));
        if d.resolved() {
            return Ok(Some(d));
        }
        bits *= 2;
    }
    Ok(None)
}

/// `|lambda_n / n^4 - 1/pi^2|` from a certified enclosure of `lambda_n`.
pub fn lambda_n4_distance(n: u64, lambda: &Enclosure, bits: u32) -> Distance {
    let n4 = int(n as i64).pow(4);
    Distance::between(&(&lambda.lo / &n4), &(&lambda.hi / &n4), &Target::InvPi2.interval(bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn targets() {
        let t = Targets::new(128);
        let pi = std::f64::consts::PI;
        assert!((t.inv_pi2.to_f64() - 1.0 / (pi * pi)).abs() < 1e-15);
        assert!((t.eight_over_pi2.to_f64() - 8.0 / (pi * pi)).abs() < 1e-15);
        assert!((t.pi2_over_4.to_f64() - pi * pi / 4.0).abs() < 1e-14);
        assert!((t.pi2.to_f64() - pi * pi).abs() < 1e-13);
    }

    #[test]
    fn small_rows() {
        let r = asymptotic_row(2, &rat(1, 1_000_000_000_000), 128).unwrap();
        assert!((r.lambda_over_f1.to_f64() - 1.0).abs() < 1e-12);
        assert!(r.smallest_root_even.contains(&int(3)));
        assert!(r.smallest_root_odd.contains(&int(15)));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["n"], 2);
        assert_eq!(r.csv_row(4).split(',').count(), ASYMPTOTICS_CSV_HEADER.split(',').count());
    }

    #[test]
    fn distances() {
        let c = (rat(1, 1), rat(2, 1));
        assert_eq!(Distance::between(&rat(3, 1), &rat(4, 1), &c), Distance { lo: int(1), hi: int(3) });
        assert_eq!(Distance::between(&rat(3, 2), &rat(5, 2), &c).lo, int(0));
        let d5 = smallest_root_distance(10, Target::Pi2Over4).unwrap().unwrap();
        let d10 = smallest_root_distance(20, Target::Pi2Over4).unwrap().unwrap();
        assert!(d10.strictly_below(&d5));
        // F_10 smallest root sits about 4.07e-15 above pi^2/4
        let approx = crate::arith::rational::to_f64(&d5.lo);
        assert!((approx / 4.0707e-15 - 1.0).abs() < 1e-3);
    }
}
