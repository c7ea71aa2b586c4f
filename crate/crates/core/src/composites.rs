//! The symmetric and antisymmetric combinations in `a ↔ 1 − a`:
//!
//! ```text
//! Z(s,a) = ζ(s,a) + ζ(s,1−a)          Y(s,a) = ζ(s,a) − ζ(s,1−a)
//! P(s,a) = Li_s(e^{2πia}) + Li_s(e^{−2πia})
//! O(s,a) = −i (Li_s(e^{2πia}) − Li_s(e^{−2πia}))
//! X(s,a) = Y(s,a) + O(s,a)
//! ```
//!
//! with their functional equations, closed-form special values and
//! derivatives in `a`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ZetaError};
use crate::special_fns::elementary::{cis_pi, cos_pi_c, sin_pi, sin_pi_c, sin_pi_rational};
use crate::special_fns::gamma::gamma_complex;
use crate::special_fns::hurwitz::{hurwitz_difference_em, hurwitz_zeta, riemann_zeta};
use crate::special_fns::periodic::{periodic_series, periodic_zeta, periodic_zeta_eval};
use crate::types::{check_finite, AlphaParam, ComplexPoint, EvalSettings};

/// Which function a computation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum FamilyId {
    Hurwitz,
    Periodic,
    Riemann,
    Z,
    P,
    Y,
    O,
    X,
    #[serde(rename = "L_CHI")]
    LChi,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::Hurwitz,
        FamilyId::Periodic,
        FamilyId::Riemann,
        FamilyId::Z,
        FamilyId::P,
        FamilyId::Y,
        FamilyId::O,
        FamilyId::X,
        FamilyId::LChi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Hurwitz => "HURWITZ",
            FamilyId::Periodic => "PERIODIC",
            FamilyId::Riemann => "RIEMANN",
            FamilyId::Z => "Z",
            FamilyId::P => "P",
            FamilyId::Y => "Y",
            FamilyId::O => "O",
            FamilyId::X => "X",
            FamilyId::LChi => "L_CHI",
        }
    }

    /// One of `Z, P, Y, O, X`.
    pub fn is_composed(self) -> bool {
        matches!(
            self,
            FamilyId::Z | FamilyId::P | FamilyId::Y | FamilyId::O | FamilyId::X
        )
    }

    /// Odd under `a ↦ 1 − a`, hence identically zero at `a = 1/2`.
    pub fn is_odd(self) -> bool {
        matches!(self, FamilyId::Y | FamilyId::O | FamilyId::X)
    }

    /// Whether `s = 1` is a pole.
    pub fn has_pole_at_one(self) -> bool {
        matches!(self, FamilyId::Hurwitz | FamilyId::Riemann | FamilyId::Z)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = ZetaError;

    fn from_str(text: &str) -> Result<Self> {
        let up = text.trim().to_ascii_uppercase();
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == up || (up == "LCHI" && *f == FamilyId::LChi))
            .ok_or_else(|| ZetaError::invalid(format!("unknown family {text:?}")))
    }
}

/// Exact values at `s = 0, 1` for a given `a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpecialValues {
    pub z_at_0: ComplexPoint,
    pub p_at_0: ComplexPoint,
    pub p_at_1: ComplexPoint,
    pub li_at_0: ComplexPoint,
}

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn check_composed_alpha(a: &AlphaParam) -> Result<()> {
    if a.value() <= 0.5 {
        Ok(())
    } else {
        Err(ZetaError::domain(format!(
            "composed families need 0 < a <= 1/2, got {a}"
        )))
    }
}

/// `Y(s,a)` with the pairwise sum on the Euler–Maclaurin side and the
/// difference of the reflected kernels further left.
fn y_kernel(s: Complex64, a: &AlphaParam, cfg: &EvalSettings) -> Result<Complex64> {
    let b = a.complement()?;
    if s.re >= -1.0 {
        return Ok(hurwitz_difference_em(s, a.value(), b.value(), cfg)?.value);
    }
    // ζ(s,a) − ζ(s,b) = Γ(w)(2π)^{−w} (e^{−πiw/2} − e^{πiw/2}) (Li_w(a) − Li_w(b))
    let w = Complex64::new(1.0, 0.0) - s;
    let diff = periodic_series(w, a, cfg)?.value - periodic_series(w, &b, cfg)?.value;
    let factor = gamma_complex(w)? * (-w * (2.0 * PI).ln()).exp();
    Ok(factor * (cis_pi(-w * 0.5) - cis_pi(w * 0.5)) * diff)
}

/// `Li_s(a)` and `Li_s(1−a)`; for real `s` the second is the conjugate.
fn periodic_pair(
    s: Complex64,
    a: &AlphaParam,
    cfg: &EvalSettings,
) -> Result<(Complex64, Complex64)> {
    let first = periodic_zeta_eval(s, a, cfg)?.value;
    if s.im == 0.0 {
        return Ok((first, first.conj()));
    }
    let second = periodic_zeta(s, &a.complement()?, cfg)?;
    Ok((first, second))
}

fn composed_value(
    fam: FamilyId,
    s: Complex64,
    a: &AlphaParam,
    cfg: &EvalSettings,
) -> Result<Complex64> {
    if fam.is_odd() && a.value() == 0.5 {
        return Ok(zero());
    }
    let value = match fam {
        FamilyId::Z => {
            if s == Complex64::new(1.0, 0.0) {
                return Err(ZetaError::Pole {
                    at: s,
                    limit_below: Some(f64::NEG_INFINITY),
                    limit_above: Some(f64::INFINITY),
                });
            }
            let b = a.complement()?;
            hurwitz_zeta(s, a, cfg)? + hurwitz_zeta(s, &b, cfg)?
        }
        FamilyId::P => {
            let (x, y) = periodic_pair(s, a, cfg)?;
            x + y
        }
        FamilyId::Y => y_kernel(s, a, cfg)?,
        FamilyId::O => {
            let (x, y) = periodic_pair(s, a, cfg)?;
            -Complex64::i() * (x - y)
        }
        FamilyId::X => {
            let (x, y) = periodic_pair(s, a, cfg)?;
            y_kernel(s, a, cfg)? - Complex64::i() * (x - y)
        }
        _ => unreachable!("not a composed family"),
    };
    // real on the real axis
    if s.im == 0.0 {
        Ok(Complex64::new(value.re, 0.0))
    } else {
        Ok(value)
    }
}

/// Evaluates any family except `L_CHI` (which needs a character; see
/// [`crate::dirichlet::l_function`]).
///
/// The composed families require `0 < a ≤ 1/2`; `Y, O, X` return exact
/// zero at `a = 1/2`.
pub fn eval_family(
    fam: FamilyId,
    s: ComplexPoint,
    a: &AlphaParam,
    cfg: &EvalSettings,
) -> Result<ComplexPoint> {
    check_finite(s)?;
    cfg.validate()?;
    match fam {
        FamilyId::Hurwitz => hurwitz_zeta(s, a, cfg),
        FamilyId::Periodic => periodic_zeta(s, a, cfg),
        FamilyId::Riemann => riemann_zeta(s, cfg),
        FamilyId::LChi => Err(ZetaError::invalid(
            "L_CHI is evaluated from a character, not from a",
        )),
        _ => {
            check_composed_alpha(a)?;
            composed_value(fam, s, a, cfg)
        }
    }
}

/// `(family(1−s,a), 2Γ(s)(2π)^{−s} trig(πs/2) partner(s,a))`.
///
/// Pairs are `Z↔P` and `P↔Z` with cosine, `Y↔O`, `O↔Y`, `X↔X` with sine.
pub fn functional_equation_pair(
    fam: FamilyId,
    s: ComplexPoint,
    a: &AlphaParam,
    cfg: &EvalSettings,
) -> Result<(ComplexPoint, ComplexPoint)> {
    check_finite(s)?;
    if !(s.re > 0.0) || s == Complex64::new(1.0, 0.0) {
        return Err(ZetaError::invalid(format!(
            "functional equation pair needs re(s) > 0 and s != 1, got {s}"
        )));
    }
    let (partner, trig) = match fam {
        FamilyId::Z => (FamilyId::P, cos_pi_c(s * 0.5)),
        FamilyId::P => (FamilyId::Z, cos_pi_c(s * 0.5)),
        FamilyId::Y => (FamilyId::O, sin_pi_c(s * 0.5)),
        FamilyId::O => (FamilyId::Y, sin_pi_c(s * 0.5)),
        FamilyId::X => (FamilyId::X, sin_pi_c(s * 0.5)),
        other => {
            return Err(ZetaError::invalid(format!(
                "no functional equation pair for {other}"
            )))
        }
    };
    let lhs = eval_family(fam, Complex64::new(1.0, 0.0) - s, a, cfg)?;
    let factor = gamma_complex(s)? * (-s * (2.0 * PI).ln()).exp() * 2.0;
    let rhs = factor * trig * eval_family(partner, s, a, cfg)?;
    Ok((lhs, rhs))
}

/// Exact values `Z(0,a) = 0`, `P(0,a) = −1`, `P(1,a) = −2 log(2 sin πa)`
/// and `Li_0(e^{2πia}) = −1/2 + (i/2) cot πa`.
pub fn special_values(a: &AlphaParam) -> Result<SpecialValues> {
    let v = a.value();
    if !(v > 0.0 && v < 1.0) {
        return Err(ZetaError::domain(format!(
            "special values need 0 < a < 1, got {a}"
        )));
    }
    let (sin, cos) = match a.exact() {
        Some((r, q)) => (sin_pi_rational(r, q), sin_pi_rational(2 * r + q, 2 * q)),
        None => (sin_pi(v), sin_pi(v + 0.5)),
    };
    Ok(SpecialValues {
        z_at_0: zero(),
        p_at_0: Complex64::new(-1.0, 0.0),
        p_at_1: Complex64::new(-2.0 * (2.0 * sin).ln(), 0.0),
        li_at_0: Complex64::new(-0.5, 0.5 * cos / sin),
    })
}

/// `∂/∂a` of `ζ(s,a)`, `Z(s,a)` or `P(s,a)`:
/// `−s ζ(s+1,a)`, `−s Y(s+1,a)` and `−2π O(s−1,a)` respectively.
pub fn partial_a(
    fam: FamilyId,
    s: ComplexPoint,
    a: &AlphaParam,
    cfg: &EvalSettings,
) -> Result<ComplexPoint> {
    check_finite(s)?;
    let one = Complex64::new(1.0, 0.0);
    match fam {
        FamilyId::Hurwitz => Ok(-s * hurwitz_zeta(s + one, a, cfg)?),
        FamilyId::Z => {
            if s == zero() {
                return Err(ZetaError::pole(s + one));
            }
            Ok(-s * eval_family(FamilyId::Y, s + one, a, cfg)?)
        }
        FamilyId::P => Ok(eval_family(FamilyId::O, s - one, a, cfg)? * (-2.0 * PI)),
        other => Err(ZetaError::invalid(format!(
            "partial_a is defined for HURWITZ, Z, P, not {other}"
        ))),
    }
}
