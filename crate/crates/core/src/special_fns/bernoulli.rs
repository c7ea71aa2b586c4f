//! Bernoulli numbers and polynomials.
//!
//! Numbers `B_0..B_60` are generated once from
//! `Σ_{k=0}^{n} C(n+1,k) B_k = 0` in exact rational arithmetic (so
//! `B_1 = −1/2`). Polynomial coefficients `C(n,k) B_{n−k}` are kept both
//! exactly, for sign decisions at rational points, and as `f64` for Horner
//! evaluation.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Result, ZetaError};

/// Largest index held in the exact table.
pub const MAX_EXACT_ORDER: usize = 60;

struct Tables {
    numbers: Vec<BigRational>,
    poly_exact: Vec<Vec<BigRational>>,
    poly_f64: Vec<Vec<f64>>,
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one(); n + 1];
    for k in 1..n {
        row[k] = &row[k - 1] * BigInt::from(n + 1 - k) / BigInt::from(k);
    }
    row
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut numbers: Vec<BigRational> = Vec::with_capacity(MAX_EXACT_ORDER + 1);
        numbers.push(BigRational::one());
        for n in 1..=MAX_EXACT_ORDER {
            let binom = binomial_row(n + 1);
            let mut acc = BigRational::zero();
            for (k, b) in numbers.iter().enumerate() {
                acc += BigRational::from_integer(binom[k].clone()) * b;
            }
            numbers.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }

        // poly[n][k] = C(n,k) B_{n-k}: coefficient of x^k in B_n(x)
        let poly_exact: Vec<Vec<BigRational>> = (0..=MAX_EXACT_ORDER)
            .map(|n| {
                let binom = binomial_row(n);
                (0..=n)
                    .map(|k| BigRational::from_integer(binom[k].clone()) * &numbers[n - k])
                    .collect()
            })
            .collect();
        let poly_f64 = poly_exact
            .iter()
            .map(|row| row.iter().map(rational_to_f64).collect())
            .collect();
        Tables {
            numbers,
            poly_exact,
            poly_f64,
        }
    })
}

fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_EXACT_ORDER {
        Err(ZetaError::UnsupportedOrder {
            n,
            max: MAX_EXACT_ORDER,
        })
    } else {
        Ok(())
    }
}

/// Exact `B_n` for `n ≤ 60`.
pub fn bernoulli_number(n: usize) -> Result<BigRational> {
    check_order(n)?;
    Ok(tables().numbers[n].clone())
}

/// `B_n(x)` by Horner's scheme on the exact coefficients rounded to `f64`.
pub fn bernoulli_poly(n: usize, x: f64) -> Result<f64> {
    check_order(n)?;
    let coeffs = &tables().poly_f64[n];
    Ok(coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c))
}

/// `B_n(x)` at a rational point, exactly.
pub fn bernoulli_poly_exact(n: usize, x: &BigRational) -> Result<BigRational> {
    check_order(n)?;
    let coeffs = &tables().poly_exact[n];
    Ok(coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c))
}

/// Sign of `B_n(r/q)` decided in exact arithmetic.
pub fn bernoulli_poly_sign(n: usize, r: u64, q: u64) -> Result<Ordering> {
    let x = BigRational::new(BigInt::from(r), BigInt::from(q));
    let v = bernoulli_poly_exact(n, &x)?;
    Ok(if v.is_zero() {
        Ordering::Equal
    } else if v.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    })
}

/// `B_{2k}/(2k)!` as `f64`, the Euler–Maclaurin weights.
///
/// Exact for `2k ≤ 60`; beyond that the value comes from
/// `B_{2k}/(2k)! = (−1)^{k+1} 2 ζ(2k) / (2π)^{2k}`.
pub fn bernoulli_over_factorial(k: usize) -> f64 {
    static WEIGHTS: OnceLock<Vec<f64>> = OnceLock::new();
    let weights = WEIGHTS.get_or_init(|| {
        let t = tables();
        let mut fact = BigInt::one();
        let mut out = Vec::with_capacity(MAX_EXACT_ORDER / 2 + 1);
        for m in 0..=MAX_EXACT_ORDER {
            if m > 0 {
                fact *= BigInt::from(m);
            }
            if m % 2 == 0 {
                let q = &t.numbers[m] / BigRational::from_integer(fact.clone());
                out.push(rational_to_f64(&q));
            }
        }
        out
    });
    if let Some(&w) = weights.get(k) {
        return w;
    }
    let two_k = (2 * k) as f64;
    let zeta_2k: f64 = (1..40).map(|n| (n as f64).powf(-two_k)).sum();
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    sign * 2.0 * zeta_2k * (2.0 * std::f64::consts::PI).powf(-two_k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn first_numbers() {
        assert_eq!(bernoulli_number(0).unwrap(), ratio(1, 1));
        assert_eq!(bernoulli_number(1).unwrap(), ratio(-1, 2));
        assert_eq!(bernoulli_number(2).unwrap(), ratio(1, 6));
        assert_eq!(bernoulli_number(3).unwrap(), ratio(0, 1));
        assert_eq!(bernoulli_number(12).unwrap(), ratio(-691, 2730));
        assert_eq!(bernoulli_number(7).unwrap(), ratio(0, 1));
    }

    #[test]
    fn b60_matches_known_value() {
        let b60 = bernoulli_number(60).unwrap();
        let num: BigInt = "-1215233140483755572040304994079820246041491"
            .parse()
            .unwrap();
        assert_eq!(b60, BigRational::new(num, BigInt::from(56786730)));
    }

    #[test]
    fn known_values() {
        assert_eq!(bernoulli_poly(0, 0.7).unwrap(), 1.0);
        assert_eq!(bernoulli_poly(1, 0.5).unwrap(), 0.0);
        // B_2(x) = x² − x + 1/6
        let b2 = bernoulli_poly(2, 0.25).unwrap();
        assert!((b2 + 1.0 / 48.0).abs() < 1e-16);
    }

    #[test]
    fn order_limit() {
        assert!(matches!(
            bernoulli_poly(61, 0.1),
            Err(ZetaError::UnsupportedOrder { n: 61, .. })
        ));
    }

    #[test]
    fn symmetry_and_difference() {
        // B_n(1 − x) = (−1)^n B_n(x); B_n(x+1) − B_n(x) = n x^{n−1}
        for n in 1..=20usize {
            for &x in &[0.1, 0.3, 0.45] {
                let a = bernoulli_poly(n, 1.0 - x).unwrap();
                let b = bernoulli_poly(n, x).unwrap();
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert!((a - sign * b).abs() < 1e-9 * (1.0 + b.abs()), "n={n}");
                let d = bernoulli_poly(n, x + 1.0).unwrap() - b;
                let want = n as f64 * x.powi(n as i32 - 1);
                assert!((d - want).abs() < 1e-9 * (1.0 + want.abs()), "n={n}");
            }
        }
    }

    #[test]
    fn exact_signs() {
        assert_eq!(bernoulli_poly_sign(1, 1, 2).unwrap(), Ordering::Equal);
        assert_eq!(bernoulli_poly_sign(1, 1, 4).unwrap(), Ordering::Less);
        assert_eq!(bernoulli_poly_sign(2, 1, 4).unwrap(), Ordering::Less);
        assert_eq!(bernoulli_poly_sign(0, 1, 4).unwrap(), Ordering::Greater);
    }

    #[test]
    fn weights_agree_with_float_formula() {
        for k in 10..=30 {
            let exact = bernoulli_over_factorial(k);
            let two_k = (2 * k) as f64;
            let z: f64 = (1..40).map(|n| (n as f64).powf(-two_k)).sum();
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let approx = sign * 2.0 * z * (2.0 * std::f64::consts::PI).powf(-two_k);
            assert!((exact - approx).abs() <= 1e-13 * exact.abs(), "k={k}");
        }
        assert!(bernoulli_over_factorial(40) != 0.0);
    }
}
