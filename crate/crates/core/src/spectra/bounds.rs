//! Lower and upper bounds for the maximal root and the ordering report.

use std::cmp::Ordering;

use serde::Serialize;

use crate::arith::rational::to_decimal;
use crate::arith::{int, IntPoly, RatPoly, Rational};
use crate::charpoly::f_coeff_unchecked;
use crate::error::{precondition, Result};

use super::real::Real;
use super::roots::{char_int_poly, largest_real_root, max_root_of, Enclosure};

/// The exact value `u + sqrt(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radical {
    pub u: Rational,
    pub v: Rational,
}

impl Radical {
    /// Exact comparison of `u + sqrt(v)` with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        let d = r - &self.u;
        if d < Rational::from_integer(0.into()) {
            return Ordering::Greater;
        }
        self.v.cmp(&(&d * &d))
    }

    pub fn to_real(&self, bits: u32) -> Real {
        Real::from_rational(&self.u, bits).add(&Real::from_rational(&self.v, bits).sqrt())
    }
}

impl Serialize for Radical {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Radical", 3)?;
        st.serialize_field("u", &self.u.to_string())?;
        st.serialize_field("v", &self.v.to_string())?;
        st.serialize_field("value", &self.to_real(96).to_decimal(15))?;
        st.end()
    }
}

/// `m(n) = f1/2 + sqrt(f1^2/4 - f2)`.
pub fn bound_m(n: u64) -> Result<Radical> {
    if n < 2 {
        return precondition(format!("bound_m needs n >= 2, got {n}"));
    }
    let u = f_coeff_unchecked(1, n) / int(2);
    let v = &u * &u - f_coeff_unchecked(2, n);
    Ok(Radical { u, v })
}

fn poly_at(coeffs: &[i64], n: u64) -> Rational {
    RatPoly::from_ints(coeffs).eval(&int(n as i64))
}

/// `p_1(n)`.
pub fn p1(n: u64) -> Rational {
    poly_at(&[16200, -5130, -4733, 796, 404, 10, 8, 4, 1], n) / int(4320)
}

/// `p_2(n)`.
pub fn p2(n: u64) -> Rational {
    let k = n as i64;
    let outer = int((k - 3) * (k - 2) * (k + 3) * (k + 4));
    let inner = poly_at(
        &[116640000, -44971200, -40140000, 9619080, 4705644, -113090, -20619, 10198, -2951, -3590, -641, 42, 7],
        n,
    );
    outer * inner / int(597196800)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperMethod {
    /// Real-radical formula with `p_2 >= 0`.
    Cardano,
    /// Largest real root of `x^3 - f1 x^2 + f2 x - f3` when `p_2 < 0`.
    CubicRoot,
}

/// `M(n)` to within `2^-bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperBound {
    pub value: Real,
    pub method: UpperMethod,
}

impl UpperBound {
    pub fn error(&self) -> Rational {
        Real::ulp(self.value.bits())
    }

    pub fn lower(&self) -> Rational {
        self.value.to_rational() - self.error()
    }

    pub fn upper(&self) -> Rational {
        self.value.to_rational() + self.error()
    }
}

impl Serialize for UpperBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("UpperBound", 3)?;
        st.serialize_field("value", &self.value.to_decimal(15))?;
        st.serialize_field("method", &self.method)?;
        st.serialize_field("error_bits", &self.value.bits())?;
        st.end()
    }
}

/// The cubic `x^3 - f1 x^2 + f2 x - f3` truncating `F_n`.
pub fn truncated_cubic(n: u64) -> RatPoly {
    let f = |j| f_coeff_unchecked(j, n);
    RatPoly::new(vec![-f(3), f(2), -f(1), int(1)])
}

/// `M(n) = f1/3 + cbrt(f1 (p1 + sqrt p2)) + cbrt(f1 (p1 - sqrt p2))`.
///
/// The radical form is evaluated with `3 bits + 64` working bits so that the
/// cube roots stay within `2^-bits` even when their arguments are small.
pub fn bound_big_m(n: u64, bits: u32) -> Result<UpperBound> {
    if n < 2 {
        return precondition(format!("bound_M needs n >= 2, got {n}"));
    }
    let q2 = p2(n);
    if q2 < Rational::from_integer(0.into()) {
        let cubic = IntPoly::from_rat(&truncated_cubic(n));
        let tol = Real::ulp(bits + 8);
        let enc = largest_real_root(&cubic, &tol).expect("a real cubic has a real root");
        return Ok(UpperBound { value: Real::from_rational(&enc.lo, bits), method: UpperMethod::CubicRoot });
    }
    let w = 3 * bits + 64;
    let f1 = f_coeff_unchecked(1, n);
    let sq = Real::from_rational(&q2, w).sqrt();
    let a = Real::from_rational(&p1(n), w);
    let plus = a.add(&sq).mul_rational(&f1).cbrt();
    let minus = a.sub(&sq).mul_rational(&f1).cbrt();
    let total = Real::from_rational(&(&f1 / int(3)), w).add(&plus).add(&minus);
    Ok(UpperBound { value: Real::from_rational(&total.to_rational(), bits), method: UpperMethod::Cardano })
}

/// Tri-state outcome of a certified comparison; `None` means undecided at
/// the working precision.
pub type Verdict = Option<bool>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orderings {
    pub m_le_lambda: Verdict,
    pub lambda_le_f1: Verdict,
    pub lambda_le_big_m: Verdict,
    pub m_lt_lambda: Verdict,
    pub lambda_lt_f1: Verdict,
    pub lambda_lt_big_m: Verdict,
    /// `lambda = M(n)` up to the enclosure width and the precision of `M`.
    pub lambda_eq_big_m: Verdict,
}

impl Orderings {
    /// Every non-strict ordering certified.
    pub fn ok(&self) -> bool {
        [self.m_le_lambda, self.lambda_le_f1, self.lambda_le_big_m].iter().all(|v| *v == Some(true))
    }

    pub fn any_undecided(&self) -> bool {
        [
            self.m_le_lambda,
            self.lambda_le_f1,
            self.lambda_le_big_m,
            self.m_lt_lambda,
            self.lambda_lt_f1,
            self.lambda_lt_big_m,
            self.lambda_eq_big_m,
        ]
        .iter()
        .any(Option::is_none)
    }

    pub fn any_failed(&self) -> bool {
        [self.m_le_lambda, self.lambda_le_f1, self.lambda_le_big_m].contains(&Some(false))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub m_lower: Radical,
    #[serde(serialize_with = "ser_rational")]
    pub f1: Rational,
    #[serde(rename = "M_upper")]
    pub big_m_upper: UpperBound,
    pub lambda_n: Enclosure,
    pub orderings: Orderings,
}

fn ser_rational<S: serde::Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub const BOUNDS_CSV_HEADER: &str = "n,m,lambda_lo,lambda_hi,f1,M,ok";

impl BoundReport {
    pub fn csv_row(&self, digits: usize) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.m_lower.to_real(self.big_m_upper.value.bits()).to_decimal(digits),
            to_decimal(&self.lambda_n.lo, digits),
            to_decimal(&self.lambda_n.hi, digits),
            to_decimal(&self.f1, digits),
            self.big_m_upper.value.to_decimal(digits),
            self.orderings.ok()
        )
    }
}

/// Bounds and certified orderings for one `n`.
///
/// Equalities are structural: for `n <= 5` the polynomial `F_n` divides the
/// quadratic defining `m(n)` (so `m = lambda`), and for `n <= 7` `F_n`
/// divides the cubic behind `M(n)`.
pub fn bound_report(n: u64, tol: &Rational, bits: u32) -> Result<BoundReport> {
    if n < 2 {
        return precondition(format!("bounds need n >= 2, got {n}"));
    }
    let f = char_int_poly(n);
    let enc = max_root_of(&f, n, tol)?;
    let m = bound_m(n)?;
    let f1 = f_coeff_unchecked(1, n);
    let big_m = bound_big_m(n, bits)?;
    let nu = n / 2;

    let m_vs_lo = m.cmp_rational(&enc.lo);
    let m_vs_hi = m.cmp_rational(&enc.hi);
    let m_exact = nu <= 2;
    let (m_le_lambda, m_lt_lambda) = if m_vs_lo == Ordering::Less {
        (Some(true), Some(true))
    } else if m_vs_hi == Ordering::Greater {
        (Some(false), Some(false))
    } else if m_exact {
        (Some(true), Some(false))
    } else {
        (None, None)
    };

    let lambda_is_f1 = f.sign_at(&f1) == Ordering::Equal;
    let lambda_le_f1 = Some(enc.hi <= f1);
    let lambda_lt_f1 = if enc.hi < f1 {
        Some(true)
    } else if lambda_is_f1 {
        Some(false)
    } else {
        None
    };

    let (m_lo, m_hi) = (big_m.lower(), big_m.upper());
    let overlap = enc.lo <= m_hi && m_lo <= enc.hi;
    let big_m_exact = nu <= 3;
    let (lambda_le_big_m, lambda_lt_big_m) = if enc.hi < m_lo {
        (Some(true), Some(true))
    } else if enc.lo > m_hi {
        (Some(false), Some(false))
    } else if big_m_exact {
        (Some(true), Some(false))
    } else {
        (None, None)
    };
    let lambda_eq_big_m = if overlap {
        if big_m_exact {
            Some(true)
        } else {
            None
        }
    } else {
        Some(false)
    };

    Ok(BoundReport {
        n,
        m_lower: m,
        f1,
        big_m_upper: big_m,
        lambda_n: enc,
        orderings: Orderings {
            m_le_lambda,
            lambda_le_f1,
            lambda_le_big_m,
            m_lt_lambda,
            lambda_lt_f1,
            lambda_lt_big_m,
            lambda_eq_big_m,
        },
    })
}

/// `c1_hat(n) = sqrt(lambda_n)` with the window `f1/2 <= lambda_n <= f1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C1Report {
    pub n: u64,
    pub lambda_n: Enclosure,
    pub value: String,
    pub lower_holds: bool,
    pub upper_holds: bool,
}

impl C1Report {
    pub fn holds(&self) -> bool {
        self.lower_holds && self.upper_holds
    }
}

pub fn c1_hat(n: u64, tol: &Rational, bits: u32) -> Result<C1Report> {
    let enc = super::roots::max_root(n, tol)?;
    let f1 = f_coeff_unchecked(1, n);
    let value = Real::from_rational(&enc.mid(), bits).sqrt();
    Ok(C1Report {
        n,
        lower_holds: &f1 / int(2) <= enc.lo,
        upper_holds: enc.hi <= f1,
        value: value.to_decimal(15),
        lambda_n: enc,
    })
}

/// Outcome of the disjointness check for consecutive maximal roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotoneReport {
    pub n_max: u64,
    /// `(n, verdict for lambda_n < lambda_{n+1})`.
    pub steps: Vec<(u64, Verdict)>,
}

impl MonotoneReport {
    pub fn holds(&self) -> Verdict {
        if self.steps.iter().any(|s| s.1 == Some(false)) {
            Some(false)
        } else if self.steps.iter().any(|s| s.1.is_none()) {
            None
        } else {
            Some(true)
        }
    }
}

pub const REFINEMENT_CAP: u32 = 256;

/// `lambda_n < lambda_{n+1}` for `2 <= n < n_max` from enclosures indexed by
/// `n - 2`; overlapping pairs are refined up to [`REFINEMENT_CAP`] halvings.
pub fn monotone_from(encs: &[Enclosure], n_max: u64) -> Result<MonotoneReport> {
    let mut steps = Vec::new();
    for n in 2..n_max {
        let (a, b) = (&encs[(n - 2) as usize], &encs[(n - 1) as usize]);
        let mut verdict = None;
        let (mut ea, mut eb) = (a.clone(), b.clone());
        for k in 0..=REFINEMENT_CAP {
            if ea.strictly_below(&eb) {
                verdict = Some(true);
                break;
            }
            if eb.strictly_below(&ea) {
                verdict = Some(false);
                break;
            }
            if k == REFINEMENT_CAP {
                break;
            }
            ea = super::roots::refine_max_root(n, &ea, &(ea.width() / int(2)))?;
            eb = super::roots::refine_max_root(n + 1, &eb, &(eb.width() / int(2)))?;
        }
        steps.push((n, verdict));
    }
    Ok(MonotoneReport { n_max, steps })
}

pub fn check_monotone(n_max: u64, tol: &Rational) -> Result<MonotoneReport> {
    if n_max < 3 {
        return precondition(format!("check_monotone needs n_max >= 3, got {n_max}"));
    }
    let encs = (2..=n_max).map(|n| super::roots::max_root(n, tol)).collect::<Result<Vec<_>>>()?;
    monotone_from(&encs, n_max)
}

/// `F_{n+1} < 0` at `lambda_n`, proved from `F_{n+1}(lo) + L (hi - lo) < 0`
/// where `L` bounds `|F'_{n+1}|` on the enclosure.
pub fn comparison_lemma_check(n: u64, tol: &Rational) -> Result<Verdict> {
    let mut enc = super::roots::max_root(n, tol)?;
    let g = char_int_poly(n + 1).to_rat();
    let d = g.derivative();
    let abs_d = RatPoly::new(d.coeffs().iter().map(num_traits::Signed::abs).collect());
    for _ in 0..=REFINEMENT_CAP {
        let at_lo = g.eval(&enc.lo);
        let at_hi = g.eval(&enc.hi);
        let lip = abs_d.eval(&enc.hi.clone().max(-enc.lo.clone()));
        let sup = at_lo.clone() + &lip * enc.width();
        if sup < Rational::from_integer(0.into()) {
            return Ok(Some(true));
        }
        if at_lo > Rational::from_integer(0.into()) && at_hi > Rational::from_integer(0.into()) {
            let inf = at_lo - &lip * enc.width();
            if inf > Rational::from_integer(0.into()) {
                return Ok(Some(false));
            }
        }
        enc = super::roots::refine_max_root(n, &enc, &(enc.width() / int(2)))?;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn tol() -> Rational {
        rat(1, 1_000_000_000_000)
    }

    #[test]
    fn radical_examples() {
        let m2 = bound_m(2).unwrap();
        assert_eq!((m2.u.clone(), m2.v.clone()), (rat(3, 2), rat(9, 4)));
        assert_eq!(m2.cmp_rational(&int(3)), Ordering::Equal);
        let m4 = bound_m(4).unwrap();
        assert_eq!((m4.u, m4.v), (rat(45, 2), rat(1605, 4)));
        let m6 = bound_m(6).unwrap().to_real(96).to_f64();
        assert!((m6 - (105.0 + 6300f64.sqrt())).abs() < 1e-12);
        assert!((m6 - 184.3725).abs() < 1e-4);
        assert!(bound_m(1).is_err());
    }

    #[test]
    fn p_polynomials() {
        assert_eq!(p2(2), int(0));
        assert_eq!(p2(3), int(0));
        assert_eq!(p2(4), rat(-26215, 324));
        for n in 4..=9 {
            assert!(p2(n) < int(0), "p2({n})");
        }
        for n in 10..=300 {
            assert!(p2(n) > int(0), "p2({n})");
        }
    }

    #[test]
    fn big_m_examples() {
        let m2 = bound_big_m(2, 128).unwrap();
        assert_eq!(m2.method, UpperMethod::Cardano);
        assert!((m2.value.to_f64() - 3.0).abs() < 1e-30);
        assert!((bound_big_m(3, 128).unwrap().value.to_f64() - 15.0).abs() < 1e-12);
        let m6 = bound_big_m(6, 128).unwrap();
        assert_eq!(m6.method, UpperMethod::CubicRoot);
        let c = truncated_cubic(6);
        assert_eq!(c, RatPoly::from_ints(&[-10395, 4725, -210, 1]));
        assert!(c.eval(&int(184)) < int(0) && c.eval(&int(185)) > int(0));
        assert!((m6.value.to_f64() - 184.7).abs() < 0.1);
    }

    #[test]
    fn reports_small_n() {
        let r2 = bound_report(2, &tol(), 128).unwrap();
        assert!(r2.orderings.ok());
        assert_eq!(r2.orderings.lambda_lt_f1, Some(false));
        assert_eq!(r2.orderings.m_lt_lambda, Some(false));
        assert_eq!(r2.orderings.lambda_eq_big_m, Some(true));
        for n in 2..=20 {
            let r = bound_report(n, &tol(), 128).unwrap();
            let o = &r.orderings;
            assert!(o.ok(), "n={n}: {o:?}");
            assert!(!o.any_undecided(), "n={n}: {o:?}");
            assert_eq!(o.lambda_lt_f1, Some(n >= 4));
            assert_eq!(o.m_lt_lambda, Some(n >= 6));
            assert_eq!(o.lambda_lt_big_m, Some(n >= 8));
            assert_eq!(o.lambda_eq_big_m, Some(n <= 7));
        }
        let v = serde_json::to_value(bound_report(4, &tol(), 128).unwrap()).unwrap();
        assert_eq!(v["f1"], "45");
        assert_eq!(v["M_upper"]["method"], "cubic-root");
        assert!(bound_report(4, &tol(), 128).unwrap().csv_row(6).starts_with("4,42.5"));
    }

    #[test]
    fn monotone_and_comparison() {
        assert_eq!(check_monotone(12, &tol()).unwrap().holds(), Some(true));
        for n in 2..=12 {
            assert_eq!(comparison_lemma_check(n, &tol()).unwrap(), Some(true), "n={n}");
        }
    }

    #[test]
    fn c1_sandwich() {
        let r = c1_hat(2, &tol(), 128).unwrap();
        assert!(r.holds());
        assert!(r.value.starts_with("1.73205080"));
        let r6 = c1_hat(6, &tol(), 128).unwrap();
        assert!(r6.holds() && r6.value.starts_with("13.59"));
    }
}
