//! Periodic zeta function `Li_s(e^{2πia}) = Σ_{n≥1} e^{2πina} n^{−s}`, `0 < a < 1`.
//!
//! Right of `series_sigma_threshold` the series is summed directly up to
//! `N` and the oscillating tail is replaced by Boole's summation formula
//!
//! ```text
//! Σ_{m≥0} z^{N+m} (N+m)^{−s} = z^N Σ_k c_k (−1)^k (s)_k N^{−s−k},
//! 1/(1 − z e^x) = Σ_k c_k x^k,
//! ```
//!
//! which converges geometrically once `N` exceeds `|s|/(2π min(a, 1−a))`.
//! Left of the threshold the functional equation in `w = 1 − s` is used,
//! with the `1/(w−1)` poles of the two Hurwitz terms cancelled analytically.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, ZetaError};
use crate::special_fns::elementary::{cis_pi, cos_pi_rational, exprel, sin_pi_rational};
use crate::special_fns::gamma::gamma_complex;
use crate::special_fns::hurwitz::hurwitz_regular;
use crate::types::{check_finite, AlphaParam, ComplexPoint, EvalSettings, Evaluation};

const MAX_BOOLE_TERMS: usize = 160;

fn check_alpha(a: &AlphaParam) -> Result<()> {
    let v = a.value();
    if v > 0.0 && v < 1.0 {
        Ok(())
    } else {
        Err(ZetaError::domain(format!(
            "periodic zeta needs 0 < a < 1, got {a}"
        )))
    }
}

/// Fractional part of `n·a`, exact for rational `a`.
fn frac_multiple(n: u64, a: &AlphaParam) -> f64 {
    match a.exact() {
        Some((r, q)) => (((n % q) * r) % q) as f64 / q as f64,
        None => (n as f64 * a.value()).fract(),
    }
}

/// `e^{2πi·frac(na)}`.
fn root_power(n: u64, a: &AlphaParam) -> Complex64 {
    cis_pi(Complex64::new(2.0 * frac_multiple(n, a), 0.0))
}

/// Direct sum plus Boole tail; valid for every `s`, well conditioned for
/// `re(s) > 0`.
pub(crate) fn periodic_series(
    s: Complex64,
    a: &AlphaParam,
    cfg: &EvalSettings,
) -> Result<Evaluation> {
    check_alpha(a)?;
    let d = a.value().min(1.0 - a.value());
    let need = ((45.0 + 2.0 * s.norm()) / (2.0 * PI * d)).ceil();
    let n_direct = (cfg.em_shift as f64).max(need) as u64;

    let mut head = Complex64::new(0.0, 0.0);
    for n in 1..n_direct {
        let ln_n = (n as f64).ln();
        let mag = (-s.re * ln_n).exp();
        let angle = 2.0 * PI * frac_multiple(n, a) - s.im * ln_n;
        head += Complex64::from_polar(mag, angle);
    }

    let z = root_power(1, a);
    let ratio = z / (Complex64::new(1.0, 0.0) - z);
    let nf = n_direct as f64;
    let mut inv_fact = vec![1.0f64];
    let mut coeffs = vec![Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - z)];
    let mut factor = Complex64::new(1.0, 0.0);
    let mut tail = coeffs[0];
    let mut bound = f64::INFINITY;
    let mut prev = tail.norm();
    let mut best = f64::INFINITY;
    for k in 1..MAX_BOOLE_TERMS {
        inv_fact.push(inv_fact[k - 1] / k as f64);
        let ck = ratio
            * (1..=k)
                .map(|j| coeffs[k - j] * inv_fact[j])
                .sum::<Complex64>();
        coeffs.push(ck);
        factor *= -(s + (k - 1) as f64) / nf;
        let term = ck * factor;
        let size = term.norm();
        // c_k vanishes for every other k when z = −1, so judge pairs
        let envelope = size.max(prev);
        if k > 8 && envelope > 2.0 * best {
            // the asymptotic expansion started to diverge
            bound = best;
            break;
        }
        tail += term;
        prev = size;
        best = best.min(envelope);
        if k > 1 && envelope <= 1e-17 * tail.norm() {
            bound = envelope;
            break;
        }
    }
    let scale = root_power(n_direct, a) * (-s * nf.ln()).exp();
    let value = head + scale * tail;
    let rounding = 4.0 * f64::EPSILON * (n_direct as f64) * value.norm().max(1.0);
    Ok(Evaluation::new(value, bound * scale.norm() + rounding, cfg))
}

/// `Li_0(e^{2πia}) = z/(1−z) = −1/2 + (i/2)·cot(πa)`.
fn value_at_zero(a: &AlphaParam) -> Complex64 {
    let cot = match a.exact() {
        Some((r, q)) => cos_pi_rational(r, q) / sin_pi_rational(r, q),
        None => 1.0 / (PI * a.value()).tan(),
    };
    Complex64::new(-0.5, 0.5 * cot)
}

/// The functional-equation path, usable for any `s` off the poles of
/// `Γ(1 − s)` at `s = 1, 2, 3, …`; the exact value is returned at `s = 0`.
pub fn periodic_zeta_feli(
    s: ComplexPoint,
    a: &AlphaParam,
    cfg: &EvalSettings,
) -> Result<Evaluation> {
    check_finite(s)?;
    check_alpha(a)?;
    cfg.validate()?;
    if s == Complex64::new(0.0, 0.0) {
        return Ok(Evaluation::new(value_at_zero(a), 0.0, cfg));
    }
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::i();
    let w = one - s;
    let av = a.value();
    let u = Complex64::new(av.ln(), -PI / 2.0);
    let v = Complex64::new((1.0 - av).ln(), PI / 2.0);
    let singular = -i * (s * v).exp() * (u - v) * exprel(s * (u - v));

    let r_a = hurwitz_regular(w, av, cfg)?;
    let r_b = hurwitz_regular(w, 1.0 - av, cfg)?;
    let e_plus = cis_pi(w * 0.5);
    let e_minus = cis_pi(-w * 0.5);
    let factor = gamma_complex(w)? * (-w * (2.0 * PI).ln()).exp();
    let value = factor * (singular + e_plus * r_a.value + e_minus * r_b.value);
    let bound = factor.norm()
        * (e_plus.norm() * r_a.error_bound + e_minus.norm() * r_b.error_bound)
        + 1e-15 * value.norm();
    Ok(Evaluation::new(value, bound, cfg))
}

/// `Li_s(e^{2πia})` with its error bound.
pub fn periodic_zeta_eval(
    s: ComplexPoint,
    a: &AlphaParam,
    cfg: &EvalSettings,
) -> Result<Evaluation> {
    check_finite(s)?;
    check_alpha(a)?;
    cfg.validate()?;
    if s.re > cfg.series_sigma_threshold {
        periodic_series(s, a, cfg)
    } else {
        periodic_zeta_feli(s, a, cfg)
    }
}

/// `Li_s(e^{2πia})`, entire in `s` for `0 < a < 1`.
pub fn periodic_zeta(s: ComplexPoint, a: &AlphaParam, cfg: &EvalSettings) -> Result<ComplexPoint> {
    periodic_zeta_eval(s, a, cfg).map(|e| e.value)
}
