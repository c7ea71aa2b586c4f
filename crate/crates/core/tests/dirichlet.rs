use num_complex::Complex64;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zetafam::composites::FamilyId;
use zetafam::dirichlet::{
    characters_mod, chi_minus4, closed_form_identity, f_factor, g_factor, gauss_sum, l_function,
    linear_relation_residual, RelationDirection,
};
use zetafam::{cpt, AlphaParam, ComplexPoint, EvalSettings};

fn cfg() -> EvalSettings {
    EvalSettings::default()
}

fn random_s(rng: &mut ChaCha8Rng) -> ComplexPoint {
    loop {
        let s = cpt(rng.gen_range(-3.0..4.0), rng.gen_range(-20.0..20.0));
        if (s - 1.0).norm() > 0.05 {
            return s;
        }
    }
}

#[test]
fn orthogonality_up_to_30() {
    for q in 1..=30u64 {
        let chars = characters_mod(q).unwrap();
        let phi = chars.len() as f64;
        for (i, x) in chars.iter().enumerate() {
            for (j, y) in chars.iter().enumerate() {
                let sum: Complex64 = (0..q as i64).map(|r| x.value(r) * y.value(r).conj()).sum();
                let want = if i == j { phi } else { 0.0 };
                assert!((sum - want).norm() < 1e-12, "q={q} i={i} j={j}");
            }
        }
    }
}

#[test]
fn primitive_gauss_sums_have_modulus_sqrt_q() {
    for q in 1..=30u64 {
        for chi in characters_mod(q)
            .unwrap()
            .iter()
            .filter(|c| c.is_primitive())
        {
            let g = gauss_sum(chi).norm();
            assert!((g - (q as f64).sqrt()).abs() < 1e-10, "q={q}");
        }
    }
}

// Direct alternating sum; the average of consecutive partial sums has
// error far below the last term.
#[test]
fn catalan_constant() {
    let mut partial = 0.0f64;
    let mut prev = 0.0f64;
    for n in 0..200_000u64 {
        prev = partial;
        let t = 1.0 / ((2 * n + 1) as f64).powi(2);
        partial += if n % 2 == 0 { t } else { -t };
    }
    let oracle = 0.5 * (partial + prev);
    let got = l_function(&chi_minus4(), cpt(2.0, 0.0), &cfg()).unwrap();
    assert!((got.re - oracle).abs() < 1e-9);
    assert!((got.re - 0.915_965_594_2).abs() < 1e-9);
}

#[test]
fn relations_both_directions() {
    let c = cfg();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for q in [3u64, 4, 5, 6, 8, 12] {
        for _ in 0..10 {
            let s = random_s(&mut rng);
            for fam in [FamilyId::Z, FamilyId::P, FamilyId::Y, FamilyId::O] {
                for r in (1..q).filter(|r| r.gcd(&q) == 1) {
                    if fam.is_odd() && 2 * r >= q {
                        continue;
                    }
                    for dir in [RelationDirection::FamilyToL, RelationDirection::LToFamily] {
                        let res = linear_relation_residual(fam, r, q, s, dir, &c).unwrap();
                        assert!(res < 1e-9, "{fam} {r}/{q} s={s} {dir:?}: {res:e}");
                    }
                }
            }
        }
    }
}

#[test]
fn closed_forms_on_random_points() {
    let c = cfg();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let cases = [
        (FamilyId::Z, [2u64, 3, 4, 6].as_slice()),
        (FamilyId::P, [2, 3, 4, 6].as_slice()),
        (FamilyId::Y, [2, 3, 4, 6].as_slice()),
        (FamilyId::O, [2, 3, 4, 6].as_slice()),
        (FamilyId::X, [2, 3, 4, 6].as_slice()),
    ];
    for (fam, qs) in cases {
        for &q in qs {
            let a = AlphaParam::rational(1, q).unwrap();
            for _ in 0..20 {
                let s = random_s(&mut rng);
                let (direct, closed) = closed_form_identity(fam, &a, s, &c).unwrap();
                let res = (direct - closed).norm() / direct.norm().max(1.0);
                assert!(res < 1e-8, "{fam} 1/{q} s={s}: {direct} vs {closed}");
            }
        }
    }
}

#[test]
fn x_sixth_factor_nonvanishing_off_critical_line() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut n = 0;
    while n < 500 {
        let s = cpt(rng.gen_range(0.5..6.0), rng.gen_range(-50.0..50.0));
        if s.re == 0.5 {
            continue;
        }
        let f = f_factor(s).norm();
        let g = g_factor(s).unwrap().norm();
        assert!(f > 1.0 && g < 1.0, "s={s}");
        let m = Complex64::new(1.0, 0.0) - s;
        let f = f_factor(m).norm();
        let g = g_factor(m).unwrap().norm();
        assert!(f < 1.0 && g > 1.0, "s={m}");
        n += 1;
    }
}
