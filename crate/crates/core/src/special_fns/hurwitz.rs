//! Hurwitz and Riemann zeta functions.
//!
//! For `re(s) ≥ −1` the value comes from Euler–Maclaurin summation
//!
//! ```text
//! ζ(s,a) = Σ_{n<N} (n+a)^{−s} + x^{1−s}/(s−1) + x^{−s}/2
//!        + Σ_{k=1}^{M} B_{2k}/(2k)! · s(s+1)…(s+2k−2) · x^{−s−2k+1},   x = N + a.
//! ```
//!
//! Further left the direct sum cancels catastrophically (terms grow like
//! `x^{−σ}` while the result does not), so the Hurwitz functional equation
//! is used instead, with the periodic zeta at `1 − s` summed as a series.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, ZetaError};
use crate::special_fns::bernoulli::bernoulli_over_factorial;
use crate::special_fns::elementary::{cis_pi, cos_pi_c, expm1, exprel};
use crate::special_fns::gamma::gamma_complex;
use crate::special_fns::periodic::periodic_series;
use crate::types::{check_finite, AlphaParam, ComplexPoint, EvalSettings, Evaluation};

/// Below this real part the functional equation replaces Euler–Maclaurin.
const EM_SIGMA_FLOOR: f64 = -1.0;

/// Largest number of directly summed terms before giving up on the bound.
const MAX_DIRECT_TERMS: usize = 1 << 16;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Sum of `(n+a)^{−s}` for `n < count`, in increasing `n`.
fn direct_sum(s: Complex64, a: f64, count: usize) -> Complex64 {
    (0..count).fold(Complex64::new(0.0, 0.0), |acc, n| {
        acc + (-s * (n as f64 + a).ln()).exp()
    })
}

/// Bernoulli correction terms at `x` and a bound on the first omitted one.
fn em_tail(s: Complex64, x: f64, x_pow_s: Complex64, order: usize) -> (Complex64, f64) {
    let mut poch = s;
    let mut xpow = x_pow_s / x;
    let mut sum = Complex64::new(0.0, 0.0);
    let pairs = order / 2;
    for k in 1..=pairs {
        sum += poch * xpow * bernoulli_over_factorial(k);
        let m = (2 * k) as f64;
        poch *= (s + (m - 1.0)) * (s + m);
        xpow /= x * x;
    }
    let m = (2 * pairs + 1) as f64;
    let next = (poch * xpow * bernoulli_over_factorial(pairs + 1)).norm();
    let bound = if s.re + m > 0.0 {
        next * (s + m).norm() / (s.re + m)
    } else {
        f64::INFINITY
    };
    (sum, bound)
}

fn initial_terms(s: Complex64, cfg: &EvalSettings) -> usize {
    let t = s.im.abs();
    if t > 25.0 {
        cfg.em_shift.max(t.ceil() as usize)
    } else {
        cfg.em_shift
    }
}

/// Runs `eval(N)` with growing `N` until its bound certifies the tolerance.
fn adaptive<F>(s: Complex64, cfg: &EvalSettings, mut eval: F) -> Evaluation
where
    F: FnMut(usize) -> (Complex64, f64),
{
    let mut n = initial_terms(s, cfg);
    loop {
        let (value, bound) = eval(n);
        let ok = bound <= cfg.target_abs_tol * value.norm().max(1.0);
        if ok || 2 * n > MAX_DIRECT_TERMS {
            let rounding = 4.0 * f64::EPSILON * n as f64 * value.norm().max(1.0);
            return Evaluation::new(value, bound + rounding, cfg);
        }
        n *= 2;
    }
}

/// `ζ(s,a)` by Euler–Maclaurin for any real `a > 0`.
///
/// Accurate for `re(s) ≥ −1`; further left the returned bound still holds
/// for the truncation but rounding in the direct sum dominates.
pub fn hurwitz_zeta_em(s: ComplexPoint, a: f64, cfg: &EvalSettings) -> Result<Evaluation> {
    check_finite(s)?;
    cfg.validate()?;
    if !(a > 0.0 && a.is_finite()) {
        return Err(ZetaError::domain(format!("shift a = {a} must be positive")));
    }
    if s == one() {
        return Err(ZetaError::pole(s));
    }
    Ok(adaptive(s, cfg, |n| {
        let x = n as f64 + a;
        let x_pow_s = (-s * x.ln()).exp();
        let (tail, bound) = em_tail(s, x, x_pow_s, cfg.em_order);
        let head = direct_sum(s, a, n);
        let value = head + x * x_pow_s / (s - 1.0) + x_pow_s * 0.5 + tail;
        (value, bound)
    }))
}

/// `ζ(s,a) − a^{1−s}/(s−1)`, entire in `s`, for `re(s) ≥ −1`.
pub(crate) fn hurwitz_regular(s: ComplexPoint, a: f64, cfg: &EvalSettings) -> Result<Evaluation> {
    check_finite(s)?;
    Ok(adaptive(s, cfg, |n| {
        let x = n as f64 + a;
        let x_pow_s = (-s * x.ln()).exp();
        let (tail, bound) = em_tail(s, x, x_pow_s, cfg.em_order);
        let head = direct_sum(s, a, n);
        // (x^{1−s} − a^{1−s})/(s−1) without the pole
        let ln_ratio = (x / a).ln();
        let w = one() - s;
        let bracket = -(w * a.ln()).exp() * ln_ratio * exprel(w * ln_ratio);
        (head + bracket + x_pow_s * 0.5 + tail, bound)
    }))
}

/// `ζ(s,a) − ζ(s,b)` for `re(s) ≥ −1`, entire in `s`, summed pairwise so
/// that nothing cancels when `b − a` is small. Every bracket is written as
/// `x^{−s}(1 − (y/x)^{−s}) = −x^{−s} expm1(−s log1p((y−x)/x))`.
pub(crate) fn hurwitz_difference_em(
    s: ComplexPoint,
    a: f64,
    b: f64,
    cfg: &EvalSettings,
) -> Result<Evaluation> {
    check_finite(s)?;
    cfg.validate()?;
    let gap = b - a;
    Ok(adaptive(s, cfg, |n| {
        let mut head = Complex64::new(0.0, 0.0);
        for k in 0..n {
            let x = k as f64 + a;
            let l = (gap / x).ln_1p();
            head -= (-s * x.ln()).exp() * expm1(-s * l);
        }
        let x = n as f64 + a;
        let l = (gap / x).ln_1p();
        let x_pow_s = (-s * x.ln()).exp();
        let w = one() - s;
        let integral = x * x_pow_s * l * exprel(w * l);
        let boundary = -x_pow_s * expm1(-s * l) * 0.5;

        let mut poch = s;
        let mut xpow = x_pow_s / x;
        let mut tail = Complex64::new(0.0, 0.0);
        let pairs = cfg.em_order / 2;
        for k in 1..=pairs {
            let m = (2 * k) as f64;
            let shift = s + (m - 1.0);
            tail -= poch * xpow * expm1(-shift * l) * bernoulli_over_factorial(k);
            poch *= shift * (s + m);
            xpow /= x * x;
        }
        let m = (2 * pairs + 1) as f64;
        let next = (poch * xpow * bernoulli_over_factorial(pairs + 1)).norm();
        let bound = if s.re + m > 0.0 {
            2.0 * next * (s + m).norm() / (s.re + m)
        } else {
            f64::INFINITY
        };
        (head + integral + boundary + tail, bound)
    }))
}

/// `Γ(w)(2π)^{−w}`.
fn gamma_two_pi(w: Complex64) -> Result<Complex64> {
    Ok(gamma_complex(w)? * (-w * (2.0 * PI).ln()).exp())
}

/// `ζ(s,a)` for `re(s) < −1` via the functional equation in `w = 1 − s`.
pub(crate) fn hurwitz_reflected(
    s: Complex64,
    a: &AlphaParam,
    cfg: &EvalSettings,
) -> Result<Evaluation> {
    let w = one() - s;
    let factor = gamma_two_pi(w)?;
    if a.exact() == Some((1, 1)) || a.value() == 1.0 {
        let z = hurwitz_zeta_em(w, 1.0, cfg)?;
        let c = cos_pi_c(w * 0.5);
        let value = factor * c * z.value * 2.0;
        let bound = (factor * c).norm() * 2.0 * z.error_bound;
        return Ok(Evaluation::new(value, bound + 1e-15 * value.norm(), cfg));
    }
    let plus = periodic_series(w, a, cfg)?;
    let minus = periodic_series(w, &a.complement()?, cfg)?;
    let e_minus = cis_pi(-w * 0.5);
    let e_plus = cis_pi(w * 0.5);
    let value = factor * (e_minus * plus.value + e_plus * minus.value);
    let bound =
        factor.norm() * (e_minus.norm() * plus.error_bound + e_plus.norm() * minus.error_bound);
    Ok(Evaluation::new(value, bound + 1e-15 * value.norm(), cfg))
}

/// `ζ(s,a)` with its truncation bound and accuracy warning.
pub fn hurwitz_zeta_eval(
    s: ComplexPoint,
    a: &AlphaParam,
    cfg: &EvalSettings,
) -> Result<Evaluation> {
    check_finite(s)?;
    cfg.validate()?;
    if s == one() {
        return Err(ZetaError::pole(s));
    }
    if s.re >= EM_SIGMA_FLOOR {
        hurwitz_zeta_em(s, a.value(), cfg)
    } else {
        hurwitz_reflected(s, a, cfg)
    }
}

/// `ζ(s,a) = Σ_{n≥0} (n+a)^{−s}`, analytically continued.
pub fn hurwitz_zeta(s: ComplexPoint, a: &AlphaParam, cfg: &EvalSettings) -> Result<ComplexPoint> {
    hurwitz_zeta_eval(s, a, cfg).map(|e| e.value)
}

/// `ζ(s) = ζ(s,1)`.
pub fn riemann_zeta(s: ComplexPoint, cfg: &EvalSettings) -> Result<ComplexPoint> {
    let one = AlphaParam::rational(1, 1)?;
    hurwitz_zeta(s, &one, cfg)
}
