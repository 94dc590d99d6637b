use nalgebra::DMatrix;
use proptest::prelude::*;

use invq_core::arith::rational::to_f64;
use invq_core::arith::{int, rat, IntPoly, Rational};
use invq_core::assembly::pencil;
use invq_core::charpoly::char_poly;
use invq_core::detkit::det_poly;
use invq_core::spectra::roots::largest_real_root;
use invq_core::spectra::{all_roots, bound_big_m, bound_m, check_monotone, comparison_lemma_check, max_root};

fn tol() -> Rational {
    rat(1, 1_000_000_000_000)
}

/// Roots of `F_n` in floating point from the companion matrix.
fn companion_roots(n: u64) -> Vec<f64> {
    let p = char_poly(n).poly;
    let d = p.degree().unwrap();
    let c: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    let m = DMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -c[i] / c[d]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let mut roots: Vec<f64> = m.complex_eigenvalues().iter().map(|z| z.re).collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

#[test]
fn max_root_matches_companion_oracle() {
    for n in 2..=16 {
        let oracle = *companion_roots(n).last().unwrap();
        let got = to_f64(&max_root(n, &tol()).unwrap().mid());
        assert!((got - oracle).abs() <= 1e-7 * oracle, "n={n}: {got} vs {oracle}");
    }
}

#[test]
fn root_tables_match_companion_oracle() {
    for n in [4u64, 7, 10, 13] {
        let table = all_roots(n, &tol()).unwrap();
        for (e, r) in table.roots.iter().zip(companion_roots(n)) {
            assert!((to_f64(&e.mid()) - r).abs() <= 1e-6 * r.max(1.0), "n={n}");
        }
    }
}

#[test]
fn quadratic_cases_in_closed_form() {
    // F_4 = x^2 - 45 x + 105, F_5 = x^2 - 105 x + 945
    assert_eq!(char_poly(4).poly.coeffs(), &[int(105), int(-45), int(1)]);
    for n in [4u64, 5] {
        let f = char_poly(n).poly;
        let (b, c) = (to_f64(&f.coeff(1)), to_f64(&f.coeff(0)));
        let exact = (-b + (b * b - 4.0 * c).sqrt()) / 2.0;
        assert!((to_f64(&max_root(n, &tol()).unwrap().mid()) - exact).abs() < 1e-9);
        let m = bound_m(n).unwrap().to_real(128).to_f64();
        assert!((m - exact).abs() < 1e-9);
    }
}

#[test]
fn m_and_big_m_numeric_examples() {
    assert!((bound_m(6).unwrap().to_real(128).to_f64() - 184.3725).abs() < 1e-4);
    let m6 = bound_big_m(6, 128).unwrap().value.to_f64();
    let oracle = *companion_roots(6).last().unwrap();
    assert!((m6 - oracle).abs() < 1e-9);
}

/// The largest root of the full pencil determinant equals `lambda_n`.
#[test]
fn pencil_determinant_max_root() {
    for n in 2..=12usize {
        let det = det_poly(&pencil(n));
        let enc = largest_real_root(&IntPoly::from_rat(&det), &tol()).unwrap();
        let lambda = max_root(n as u64, &tol()).unwrap();
        assert!(enc.overlaps(&lambda), "n={n}");
    }
}

#[test]
fn monotone_and_comparison_examples() {
    let r = check_monotone(50, &tol()).unwrap();
    assert_eq!(r.holds(), Some(true));
    assert!(check_monotone(2, &tol()).is_err());
    // F_3(3) = -12 and F_4(15) = -345
    assert_eq!(char_poly(3).poly.eval(&int(3)), int(-12));
    assert_eq!(char_poly(4).poly.eval(&int(15)), int(-345));
    for n in 2..=30 {
        assert_eq!(comparison_lemma_check(n, &tol()).unwrap(), Some(true), "n={n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn enclosure_invariants(n in 2u64..120, exp in 3u32..40) {
        let t = Rational::new(1.into(), num_bigint::BigInt::from(2).pow(exp));
        let e = max_root(n, &t).unwrap();
        prop_assert!(e.lo < e.hi);
        prop_assert!(e.width() <= t);
        let f = IntPoly::from_rat(&char_poly(n).poly);
        prop_assert!(f.sign_at(&e.lo) == std::cmp::Ordering::Less);
        prop_assert!(f.sign_at(&e.hi) != std::cmp::Ordering::Less);
        // nothing above hi: Descartes on the shifted polynomial
        prop_assert_eq!(f.taylor_shift(&e.hi).sign_variations(), 0);
    }

    #[test]
    fn tables_are_positive_sorted_and_complete(n in 2u64..40) {
        let t = all_roots(n, &rat(1, 1_000_000)).unwrap();
        prop_assert_eq!(t.count as u64, n / 2);
        prop_assert!(t.roots.iter().all(|r| r.lo > int(0)));
        prop_assert!(t.roots.windows(2).all(|w| w[0].strictly_below(&w[1])));
    }
}
