//! Small building blocks shared by the kernels: π-scaled trigonometry with
//! exact argument reduction, `(e^z − 1)/z`, and powers of positive reals.

use std::f64::consts::PI;

use num_complex::Complex64;

/// `sin(πx)`, reduced exactly modulo 2 so integer and half-integer
/// arguments give exact zeros and ±1.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = x - 2.0 * (0.5 * x).round();
    let (sign, r) = if r < 0.0 { (-1.0, -r) } else { (1.0, r) };
    let r = if r > 0.5 { 1.0 - r } else { r };
    let v = if r == 0.5 {
        1.0
    } else if r > 0.25 {
        (PI * (0.5 - r)).cos()
    } else {
        (PI * r).sin()
    };
    sign * v
}

/// `cos(πx)` with the same reduction as [`sin_pi`].
pub fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = (x - 2.0 * (0.5 * x).round()).abs();
    let (sign, r) = if r > 0.5 { (-1.0, 1.0 - r) } else { (1.0, r) };
    let v = if r == 0.5 {
        0.0
    } else if r > 0.25 {
        (PI * (0.5 - r)).sin()
    } else {
        (PI * r).cos()
    };
    sign * v
}

/// `sin(π r/q)` with exact values for denominators 1, 2, 3, 4, 6.
pub fn sin_pi_rational(r: u64, q: u64) -> f64 {
    let r = r % (2 * q);
    let turns = |num: u64, den: u64| -> Option<f64> {
        // value of sin at num/den of π, num in [0, 2den)
        let (sign, num) = if num >= den {
            (-1.0, num - den)
        } else {
            (1.0, num)
        };
        let num = if 2 * num > den { den - num } else { num };
        let base = match (num * 12) / den {
            _ if (num * 12) % den != 0 => return None,
            0 => 0.0,
            2 => 0.5,
            3 => std::f64::consts::FRAC_1_SQRT_2,
            4 => 0.75f64.sqrt(),
            6 => 1.0,
            _ => return None,
        };
        Some(sign * base)
    };
    turns(r, q).unwrap_or_else(|| sin_pi(r as f64 / q as f64))
}

/// `cos(π r/q)` with exact values for denominators 1, 2, 3, 4, 6.
pub fn cos_pi_rational(r: u64, q: u64) -> f64 {
    // cos(πx) = sin(π(x + 1/2)) = sin(π(2r + q)/(2q))
    sin_pi_rational(2 * r + q, 2 * q)
}

/// `sin(πs)` for complex `s`.
pub fn sin_pi_c(s: Complex64) -> Complex64 {
    let (ch, sh) = ((PI * s.im).cosh(), (PI * s.im).sinh());
    Complex64::new(sin_pi(s.re) * ch, cos_pi(s.re) * sh)
}

/// `cos(πs)` for complex `s`.
pub fn cos_pi_c(s: Complex64) -> Complex64 {
    let (ch, sh) = ((PI * s.im).cosh(), (PI * s.im).sinh());
    Complex64::new(cos_pi(s.re) * ch, -sin_pi(s.re) * sh)
}

/// `e^{iπw}`.
pub fn cis_pi(w: Complex64) -> Complex64 {
    let m = (-PI * w.im).exp();
    Complex64::new(m * cos_pi(w.re), m * sin_pi(w.re))
}

/// `(e^z − 1)/z`, accurate near `z = 0`.
pub fn exprel(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for k in 2..40 {
            term = term * z / k as f64;
            sum += term;
            if term.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        sum
    } else {
        (z.exp() - 1.0) / z
    }
}

/// `e^z − 1`, accurate near `z = 0`.
#[inline]
pub fn expm1(z: Complex64) -> Complex64 {
    z * exprel(z)
}

/// `base^s` for a positive real base, principal real logarithm.
#[inline]
pub fn pow_pos(base: f64, s: Complex64) -> Complex64 {
    debug_assert!(base > 0.0);
    (s * base.ln()).exp()
}

/// `sin(πs/2)/s`, finite at `s = 0`.
pub fn sin_half_pi_over(s: Complex64) -> Complex64 {
    if s.norm() < 0.25 {
        // π/2 · Σ (−1)^k (πs/2)^{2k} / (2k+1)!
        let x = s * (PI / 2.0);
        let x2 = x * x;
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for k in 1..30 {
            term = -term * x2 / ((2 * k) as f64 * (2 * k + 1) as f64);
            sum += term;
            if term.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        sum * (PI / 2.0)
    } else {
        sin_pi_c(s * 0.5) / s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_trig_at_special_points() {
        assert_eq!(sin_pi(-3.0), 0.0);
        assert_eq!(sin_pi(2.5), 1.0);
        assert_eq!(cos_pi(7.5), 0.0);
        assert_eq!(cos_pi(-1.0), -1.0);
        assert_eq!(sin_pi_rational(1, 6), 0.5);
        assert_eq!(cos_pi_rational(1, 3), 0.5);
        assert_eq!(cos_pi_rational(1, 2), 0.0);
        assert_eq!(sin_pi_rational(5, 6), 0.5);
        assert_eq!(sin_pi_rational(7, 6), -0.5);
    }

    #[test]
    fn trig_matches_std() {
        for i in -200..200 {
            let x = i as f64 * 0.0371 + 0.013;
            assert!((sin_pi(x) - (PI * x).sin()).abs() < 1e-13);
            assert!((cos_pi(x) - (PI * x).cos()).abs() < 1e-13);
        }
        assert!((sin_pi_rational(2, 5) - (0.4 * PI).sin()).abs() < 1e-15);
    }

    #[test]
    fn exprel_small_and_large() {
        let z = Complex64::new(1e-9, -2e-9);
        let v = exprel(z);
        assert!((v - (Complex64::new(1.0, 0.0) + z / 2.0)).norm() < 1e-17);
        let w = Complex64::new(1.3, 0.4);
        assert!((exprel(w) - (w.exp() - 1.0) / w).norm() < 1e-15);
        let u = Complex64::new(0.3, 0.2);
        assert!((exprel(u) - (u.exp() - 1.0) / u).norm() < 1e-15);
    }

    #[test]
    fn sinc_like_is_continuous() {
        let at0 = sin_half_pi_over(Complex64::new(0.0, 0.0));
        assert!((at0.re - PI / 2.0).abs() < 1e-15);
        let s = Complex64::new(0.24, 0.1);
        let direct = (s * (PI / 2.0)).sin() / s;
        assert!((sin_half_pi_over(s) - direct).norm() < 1e-15);
    }
}
