//! Closed forms of the composed families at `a ∈ {1/2, 1/3, 1/4, 1/6}`.
//!
//! ```text
//! Z(s,1/2) = 2(2^s−1)ζ(s)            P(s,1/2) = 2(2^{1−s}−1)ζ(s)
//! Z(s,1/3) = (3^s−1)ζ(s)             P(s,1/3) = (3^{1−s}−1)ζ(s)
//! Z(s,1/4) = 2^s(2^s−1)ζ(s)          P(s,1/4) = 2^{1−s}(2^{1−s}−1)ζ(s)
//! Z(s,1/6) = (2^s−1)(3^s−1)ζ(s)      P(s,1/6) = (2^{1−s}−1)(3^{1−s}−1)ζ(s)
//!
//! Y(s,1/3) = 3^s L(s,χ₋₃)            O(s,1/3) = √3 L(s,χ₋₃)
//! Y(s,1/4) = 4^s L(s,χ₋₄)            O(s,1/4) = 2 L(s,χ₋₄)
//! Y(s,1/6) = (6^s+3^s) L(s,χ₋₃)      O(s,1/6) = √3(1+2^{1−s}) L(s,χ₋₃)
//! ```
//!
//! `X = Y + O`, and `Y, O, X` vanish identically at `a = 1/2`.

use num_complex::Complex64;

use super::characters::{chi_minus3, chi_minus4};
use super::l_function;
use crate::composites::{eval_family, FamilyId};
use crate::error::{Result, ZetaError};
use crate::special_fns::elementary::pow_pos;
use crate::special_fns::hurwitz::riemann_zeta;
use crate::types::{check_finite, AlphaParam, ComplexPoint, EvalSettings};

fn unsupported(fam: FamilyId, a: &AlphaParam) -> ZetaError {
    ZetaError::UnsupportedIdentity {
        family: fam.to_string(),
        a: a.to_string(),
    }
}

fn even_closed(fam: FamilyId, q: u64, s: Complex64, cfg: &EvalSettings) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    // Z uses powers of s, P the same expressions at 1 − s
    let e = if fam == FamilyId::Z { s } else { one - s };
    let two = pow_pos(2.0, e);
    let three = pow_pos(3.0, e);
    let factor = match q {
        2 => (two - 1.0) * 2.0,
        3 => three - 1.0,
        4 => two * (two - 1.0),
        6 => (two - 1.0) * (three - 1.0),
        _ => unreachable!(),
    };
    Ok(factor * riemann_zeta(s, cfg)?)
}

fn odd_closed(fam: FamilyId, q: u64, s: Complex64, cfg: &EvalSettings) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let sqrt3 = 3f64.sqrt();
    let (y, o, l) = match q {
        3 => (
            pow_pos(3.0, s),
            Complex64::new(sqrt3, 0.0),
            l_function(&chi_minus3(), s, cfg)?,
        ),
        4 => (
            pow_pos(4.0, s),
            Complex64::new(2.0, 0.0),
            l_function(&chi_minus4(), s, cfg)?,
        ),
        6 => (
            pow_pos(6.0, s) + pow_pos(3.0, s),
            (one + pow_pos(2.0, one - s)) * sqrt3,
            l_function(&chi_minus3(), s, cfg)?,
        ),
        _ => unreachable!(),
    };
    let factor = match fam {
        FamilyId::Y => y,
        FamilyId::O => o,
        _ => y + o,
    };
    Ok(factor * l)
}

/// `(family(s,a), closed form)` for the covered exact `a`.
pub fn closed_form_identity(
    fam: FamilyId,
    a: &AlphaParam,
    s: ComplexPoint,
    cfg: &EvalSettings,
) -> Result<(ComplexPoint, ComplexPoint)> {
    check_finite(s)?;
    let q = match a.exact() {
        Some((1, q)) if matches!(q, 2 | 3 | 4 | 6) => q,
        _ => return Err(unsupported(fam, a)),
    };
    let closed = match fam {
        FamilyId::Z | FamilyId::P => even_closed(fam, q, s, cfg)?,
        FamilyId::Y | FamilyId::O | FamilyId::X if q == 2 => Complex64::new(0.0, 0.0),
        FamilyId::Y | FamilyId::O | FamilyId::X => odd_closed(fam, q, s, cfg)?,
        _ => return Err(unsupported(fam, a)),
    };
    let direct = eval_family(fam, s, a, cfg)?;
    Ok((direct, closed))
}

/// `g(s) = (1 + 2^{1−s})/(1 + 2^s)`.
pub fn g_factor(s: ComplexPoint) -> Result<ComplexPoint> {
    check_finite(s)?;
    let one = Complex64::new(1.0, 0.0);
    let den = one + pow_pos(2.0, s);
    if den.norm() < 1e-12 {
        return Err(ZetaError::DenominatorZero(s));
    }
    Ok((one + pow_pos(2.0, one - s)) / den)
}

/// `f(s) = 3^s/√3`, the companion of [`g_factor`]: `X(s,1/6)` vanishes
/// exactly where `L(s,χ₋₃) = 0` or `f(s) = −g(s)`.
pub fn f_factor(s: ComplexPoint) -> ComplexPoint {
    pow_pos(3.0, s) / 3f64.sqrt()
}
