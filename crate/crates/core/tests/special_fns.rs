mod common;

use std::f64::consts::PI;

use common::reference_values::{HURWITZ, PERIODIC};
use num_complex::Complex64;
use proptest::prelude::*;
use zetafam::special_fns::{
    gamma_complex, hurwitz_zeta, hurwitz_zeta_em, hurwitz_zeta_eval, periodic_zeta,
    periodic_zeta_eval, periodic_zeta_feli, riemann_zeta,
};
use zetafam::{cpt, AlphaParam, EvalSettings};

fn cfg() -> EvalSettings {
    EvalSettings::default()
}

fn alpha(x: f64) -> AlphaParam {
    AlphaParam::new(x).unwrap()
}

fn scaled_err(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm().max(1.0)
}

#[test]
fn hurwitz_matches_reference_table() {
    let c = cfg();
    for &(sr, si, a, re, im) in HURWITZ {
        let got = hurwitz_zeta_eval(cpt(sr, si), &alpha(a), &c).unwrap();
        let want = Complex64::new(re, im);
        let err = scaled_err(got.value, want);
        assert!(
            err < 1e-12,
            "s={sr}+{si}i a={a}: {} vs {want} ({err:e})",
            got.value
        );
    }
}

#[test]
fn periodic_matches_reference_table() {
    let c = cfg();
    for &(sr, si, a, re, im) in PERIODIC {
        let got = periodic_zeta_eval(cpt(sr, si), &alpha(a), &c).unwrap();
        let want = Complex64::new(re, im);
        let err = scaled_err(got.value, want);
        assert!(
            err < 1e-12,
            "s={sr}+{si}i a={a}: {} vs {want} ({err:e})",
            got.value
        );
    }
}

#[test]
fn default_settings_certify_moderate_region() {
    let c = cfg();
    for &(sr, si) in &[(0.5, 14.0), (-0.9, 40.0), (3.0, -100.0), (45.0, 10.0)] {
        let e = hurwitz_zeta_eval(cpt(sr, si), &alpha(0.3), &c).unwrap();
        assert!(e.warning.is_none(), "s={sr}+{si}i bound {}", e.error_bound);
    }
}

#[test]
fn riemann_is_hurwitz_at_one() {
    let c = cfg();
    let one = AlphaParam::rational(1, 1).unwrap();
    for &s in &[cpt(0.5, 14.134725141734693), cpt(-3.5, 2.0), cpt(7.0, -1.0)] {
        assert_eq!(
            riemann_zeta(s, &c).unwrap(),
            hurwitz_zeta(s, &one, &c).unwrap()
        );
    }
    // first nontrivial zero
    let z = riemann_zeta(cpt(0.5, 14.134725141734693), &c).unwrap();
    assert!(z.norm() < 1e-12);
}

// (s−1)ζ(s,a) − a^{1−s} = (s−1)(log a − ψ(a)) + O((s−1)²); constants from mpmath.
#[test]
fn pole_residue_is_one() {
    let c = cfg();
    let h = 1e-4;
    let cases = [
        (0.1, 8.123_209_222_680_996),
        (0.3, 2.298_876_920_762_024),
        (0.5, 1.270_474_173_068_725),
        (1.0, 0.577_222_946_438_108_3),
    ];
    for (a, slope) in cases {
        let v = hurwitz_zeta(cpt(1.0 + h, 0.0), &alpha(a), &c).unwrap();
        let diff = v.re * h - a.powf(-h);
        assert!((diff / h - slope).abs() < 1e-8, "a={a}: {}", diff / h);
        assert!(diff.abs() < 1e-3);
    }
}

#[test]
fn periodic_imaginary_part_positive_on_reals() {
    let c = cfg();
    for &sigma in &[0.5, 1.0, 2.0, 5.0] {
        for &a in &[0.1, 0.25, 0.4] {
            let v = periodic_zeta(cpt(sigma, 0.0), &alpha(a), &c).unwrap();
            assert!(v.im > 0.0, "sigma={sigma} a={a}: {v}");
        }
    }
}

fn away_from_one(s: Complex64) -> bool {
    (s - 1.0).norm() > 0.05
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // The shifted value uses plain Euler–Maclaurin, which is only well
    // conditioned for re(s) ≥ −1.
    #[test]
    fn recurrence_in_a(sr in -1.0f64..10.0, si in -30.0f64..30.0, ai in 0usize..3) {
        let s = cpt(sr, si);
        prop_assume!(away_from_one(s));
        let a = [0.1, 0.3, 0.5][ai];
        let c = cfg();
        let lhs = hurwitz_zeta(s, &alpha(a), &c).unwrap();
        let shifted = hurwitz_zeta_em(s, a + 1.0, &c).unwrap().value;
        let direct = (-s * a.ln()).exp();
        let err = (lhs - direct - shifted).norm();
        prop_assert!(err < 1e-10 * lhs.norm().max(1.0), "err {err:e}");
    }

    #[test]
    fn multiplication_formula(sr in -10.0f64..10.0, si in -30.0f64..30.0, qi in 0usize..4) {
        let s = cpt(sr, si);
        prop_assume!(away_from_one(s));
        let q = [2u64, 3, 4, 6][qi];
        let c = cfg();
        let sum: Complex64 = (1..=q)
            .map(|r| hurwitz_zeta(s, &AlphaParam::rational(r, q).unwrap(), &c).unwrap())
            .sum();
        let want = (s * (q as f64).ln()).exp() * riemann_zeta(s, &c).unwrap();
        prop_assert!((sum - want).norm() < 1e-9 * want.norm().max(1.0));
    }

    #[test]
    fn riemann_functional_equation(sr in -10.0f64..10.0, si in -30.0f64..30.0) {
        let s = cpt(sr, si);
        prop_assume!(away_from_one(s) && (s - 0.0).norm() > 0.05);
        prop_assume!(si.abs() > 0.05 || (sr - sr.round()).abs() > 0.05);
        let c = cfg();
        let lhs = riemann_zeta(Complex64::new(1.0, 0.0) - s, &c).unwrap();
        let rhs = gamma_complex(s).unwrap() * 2.0
            * (-s * (2.0 * PI).ln()).exp()
            * (s * (PI / 2.0)).cos()
            * riemann_zeta(s, &c).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-9 * lhs.norm().max(1.0));
    }

    #[test]
    fn periodic_paths_agree(sr in 0.76f64..3.0, si in -30.0f64..30.0, a in 0.02f64..0.98) {
        let s = cpt(sr, si);
        prop_assume!((s - 2.0).norm() > 0.05 && (s - 3.0).norm() > 0.05 && away_from_one(s));
        let c = cfg();
        let al = alpha(a);
        let series = periodic_zeta(s, &al, &c).unwrap();
        let feli = periodic_zeta_feli(s, &al, &c).unwrap().value;
        prop_assert!((series - feli).norm() < 1e-8 * series.norm().max(1.0));
    }
}
