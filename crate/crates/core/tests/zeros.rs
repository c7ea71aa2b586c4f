use zetafam::zeros::{
    bernoulli_interval_test, beta_zero, count_zeros_rectangle, scan_real_zeros, MultiplicityClass,
    DEFAULT_STEP,
};
use zetafam::{cpt, eval_family, AlphaParam, EvalSettings, FamilyId};

fn cfg() -> EvalSettings {
    EvalSettings::default()
}

fn alpha(x: f64) -> AlphaParam {
    AlphaParam::new(x).unwrap()
}

fn a_grid() -> Vec<f64> {
    (1..=9).map(|k| 0.05 * k as f64).collect()
}

fn assert_integer_zeros(fam: FamilyId, a: f64, lo: f64, hi: f64, want: &[f64]) {
    let r = scan_real_zeros(fam, &alpha(a), lo, hi, DEFAULT_STEP, &cfg()).unwrap();
    let got: Vec<f64> = r.zeros.iter().map(|z| z.location).collect();
    assert_eq!(got.len(), want.len(), "{fam} a={a}: {got:?}");
    for (z, w) in r.zeros.iter().zip(want) {
        assert!(
            (z.location - w).abs() < 1e-8,
            "{fam} a={a}: {} vs {w}",
            z.location
        );
        assert_eq!(z.multiplicity_class, MultiplicityClass::SimpleSignChange);
    }
}

#[test]
fn odd_families_vanish_at_negative_odd_integers() {
    let want: Vec<f64> = (0..6).map(|k| -11.0 + 2.0 * k as f64).collect();
    for a in a_grid() {
        for fam in [FamilyId::Y, FamilyId::O, FamilyId::X] {
            assert_integer_zeros(fam, a, -12.0, 3.0, &want);
        }
    }
}

#[test]
fn even_families_vanish_at_nonpositive_even_integers() {
    let z_want: Vec<f64> = (0..=6).map(|k| -12.0 + 2.0 * k as f64).collect();
    for a in [0.25, 0.3, 0.35, 0.4, 0.45, 0.5] {
        assert_integer_zeros(FamilyId::Z, a, -12.5, 3.0, &z_want);
        assert_integer_zeros(FamilyId::P, a, -12.5, 3.0, &z_want[..6]);
    }
}

#[test]
fn periodic_zeta_has_no_real_zeros() {
    for a in a_grid() {
        let r = scan_real_zeros(
            FamilyId::Periodic,
            &alpha(a),
            -12.0,
            5.0,
            DEFAULT_STEP,
            &cfg(),
        )
        .unwrap();
        assert!(r.zeros.is_empty(), "a={a}: {:?}", r.zeros);
    }
}

#[test]
fn beta_curves_below_one_sixth() {
    let c = cfg();
    let grid: Vec<f64> = (1..=50).map(|k| k as f64 / 51.0 / 6.0).collect();
    let mut prev: Option<(f64, f64)> = None;
    for &a in &grid {
        let z = beta_zero(FamilyId::Z, &alpha(a), &c).unwrap().beta;
        let p = beta_zero(FamilyId::P, &alpha(a), &c).unwrap().beta;
        assert!(z > 0.0 && z < 1.0 && p > 0.0 && p < 1.0, "a={a}");
        assert!((z + p - 1.0).abs() < 1e-8);
        if let Some((pz, pp)) = prev {
            assert!(z < pz && p > pp, "a={a}");
        }
        prev = Some((z, p));
    }
}

#[test]
fn extra_zero_in_unit_interval() {
    let c = cfg();
    for a in [0.05, 0.1, 0.15] {
        let bz = beta_zero(FamilyId::Z, &alpha(a), &c).unwrap().beta;
        let bp = beta_zero(FamilyId::P, &alpha(a), &c).unwrap().beta;
        let z = scan_real_zeros(FamilyId::Z, &alpha(a), 0.01, 1.0, DEFAULT_STEP, &c).unwrap();
        assert_eq!(z.zeros.len(), 1, "a={a}: {:?}", z.zeros);
        assert!((z.zeros[0].location - bz).abs() < 1e-8);
        let p = scan_real_zeros(FamilyId::P, &alpha(a), 0.0, 1.0, DEFAULT_STEP, &c).unwrap();
        assert_eq!(p.zeros.len(), 1, "a={a}: {:?}", p.zeros);
        assert!((p.zeros[0].location - bp).abs() < 1e-8);
    }
}

#[test]
fn beta_p_above_one_sixth() {
    let c = cfg();
    let mut prev = 1.0;
    for k in 1..20 {
        let a = 1.0 / 6.0 + (0.25 - 1.0 / 6.0) * k as f64 / 20.0;
        let p = beta_zero(FamilyId::P, &alpha(a), &c).unwrap().beta;
        assert!(p > prev, "a={a}");
        prev = p;
        let z = eval_family(FamilyId::Z, cpt(1.0 - p, 0.0), &alpha(a), &c).unwrap();
        assert!(z.norm() < 1e-8, "a={a}: Z(1-beta_P) = {z}");
        // on (−0.99, 0.99) the zeros are σ = 0 and, when it lies there, 1 − β_P
        let r = scan_real_zeros(FamilyId::Z, &alpha(a), -0.99, 0.99, DEFAULT_STEP, &c).unwrap();
        let mut want = vec![0.0];
        if 1.0 - p > -0.99 {
            want.insert(0, 1.0 - p);
        }
        let got: Vec<f64> = r.zeros.iter().map(|z| z.location).collect();
        assert_eq!(got.len(), want.len(), "a={a}: {got:?}");
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-8, "a={a}: {got:?} vs {want:?}");
        }
    }
}

#[test]
fn double_zero_where_beta_z_hits_minus_two() {
    let c = cfg();
    // a_1 with β_P(a_1) = 3, by bisection on the increasing map a ↦ β_P(a)
    let (mut lo, mut hi) = (1.0 / 6.0 + 1e-6, 0.2499);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if beta_zero(FamilyId::P, &alpha(mid), &c).unwrap().beta < 3.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let a1 = alpha(0.5 * (lo + hi));
    let r = scan_real_zeros(FamilyId::Z, &a1, -3.03, -0.51, DEFAULT_STEP, &c).unwrap();
    assert_eq!(r.zeros.len(), 1, "{:?}", r.zeros);
    let z = r.zeros[0];
    assert_eq!(z.multiplicity_class, MultiplicityClass::EvenTouch);
    assert!((z.location + 2.0).abs() < 1e-4);
}

#[test]
fn bernoulli_criterion_matches_scan() {
    let c = cfg();
    for k in 2..=9 {
        let a = AlphaParam::rational(k, 20).unwrap();
        for n in -8i64..=-1 {
            let predicted = bernoulli_interval_test(&a, n).unwrap();
            let lo = (n + 1) as f64 + 1e-9;
            let hi = (n + 2) as f64 - 1e-9;
            let found = !scan_real_zeros(FamilyId::Hurwitz, &a, lo, hi, DEFAULT_STEP, &c)
                .unwrap()
                .zeros
                .is_empty();
            assert_eq!(predicted, found, "a={a} n={n}");
        }
    }
}

#[test]
fn rectangle_counts_add_and_survive_doubling() {
    let c = cfg();
    let a = AlphaParam::rational(1, 6).unwrap();
    let whole =
        count_zeros_rectangle(FamilyId::Z, &a, (cpt(-1.0, 1.0), cpt(2.0, 30.0)), 128, &c).unwrap();
    let finer =
        count_zeros_rectangle(FamilyId::Z, &a, (cpt(-1.0, 1.0), cpt(2.0, 30.0)), 1024, &c).unwrap();
    assert_eq!(whole.count, 11);
    assert_eq!(finer.count, 11);
    let low =
        count_zeros_rectangle(FamilyId::Z, &a, (cpt(-1.0, 1.0), cpt(2.0, 16.0)), 128, &c).unwrap();
    let high =
        count_zeros_rectangle(FamilyId::Z, &a, (cpt(-1.0, 16.0), cpt(2.0, 30.0)), 128, &c).unwrap();
    assert_eq!(low.count + high.count, 11);
    // zeros of 3^s − 1 at 2πk/log 3 on σ = 0
    let a3 = AlphaParam::rational(1, 3).unwrap();
    let r = count_zeros_rectangle(FamilyId::Z, &a3, (cpt(-0.25, 1.0), cpt(0.25, 12.0)), 64, &c)
        .unwrap();
    assert_eq!(r.count, 2);
}
