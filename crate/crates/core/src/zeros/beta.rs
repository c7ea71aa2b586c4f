use serde::{Deserialize, Serialize};

use crate::composites::{eval_family, FamilyId};
use crate::error::{Result, ZetaError};
use crate::special_fns::elementary::cos_pi;
use crate::special_fns::gamma::ln_gamma_complex;
use crate::types::{cpt, AlphaParam, EvalSettings};

use super::scan::BISECTION_WIDTH;

/// Give up growing the upper bracket beyond this.
const MAX_UPPER: f64 = 1024.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BetaCurvePoint {
    pub a: f64,
    pub family: FamilyId,
    pub beta: f64,
    pub asymptotic_prediction: f64,
    /// `beta − asymptotic_prediction`.
    pub deviation: f64,
}

fn alpha_of(a: f64) -> f64 {
    -cos_pi(2.0 * a).ln()
}

/// `α^{−σ} Γ(σ) P(σ,a)` with `α = −log cos 2πa`, strictly increasing in
/// `σ > 0` for `0 < a ≤ 1/4`. Overflows to `±∞` with the correct sign.
pub fn monotone_kernel(sigma: f64, a: &AlphaParam, cfg: &EvalSettings) -> Result<f64> {
    if !(sigma > 0.0) {
        return Err(ZetaError::domain(format!(
            "kernel needs sigma > 0, got {sigma}"
        )));
    }
    let v = a.value();
    if !(v > 0.0 && v < 0.25) {
        return Err(ZetaError::domain(format!(
            "kernel needs 0 < a < 1/4, got {a}"
        )));
    }
    let p = eval_family(FamilyId::P, cpt(sigma, 0.0), a, cfg)?.re;
    let scale = (ln_gamma_complex(cpt(sigma, 0.0))?.re - sigma * alpha_of(v).ln()).exp();
    Ok(if p == 0.0 { 0.0 } else { p * scale })
}

/// Main terms of the asymptotic formulas for `β_Z(a)` and `β_P(a)`.
///
/// For `a < 1/6` the small-`a` expansion `β_P ≈ 2a − 2a² log a`,
/// `β_Z ≈ 1 − 2a + 2a² log a`; from `1/6` on the expansion at `a → 1/4`,
/// `β_P ≈ −log(cos 2πa)/log 2`, `β_Z ≈ log(cos 2πa)/log 2 + 1` (which
/// equals the exact values `1`, `0` at `a = 1/6`).
pub fn asymptotic_prediction(fam: FamilyId, a: &AlphaParam) -> Result<f64> {
    let v = a.value();
    let beta_p =
        if a.exact().is_some_and(|(r, q)| 6 * r < q) || (a.exact().is_none() && v < 1.0 / 6.0) {
            2.0 * v - 2.0 * v * v * v.ln()
        } else {
            -cos_pi(2.0 * v).ln() / 2f64.ln()
        };
    match fam {
        FamilyId::P => Ok(beta_p),
        FamilyId::Z => Ok(1.0 - beta_p),
        other => Err(ZetaError::invalid(format!("no beta curve for {other}"))),
    }
}

fn bisect(a: &AlphaParam, cfg: &EvalSettings, mut lo: f64, mut hi: f64) -> Result<f64> {
    // the kernel is negative left of β_P and positive right of it
    while hi - lo >= BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let k = monotone_kernel(mid, a, cfg)?;
        if k == 0.0 {
            return Ok(mid);
        }
        if k < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn beta_p(a: &AlphaParam, cfg: &EvalSettings) -> Result<f64> {
    if a.is_exact(1, 6) {
        return Ok(1.0);
    }
    // sign of P(1,a) = −2 log(2 sin πa) decides the side of σ = 1
    let at_one = monotone_kernel(1.0, a, cfg)?;
    if at_one == 0.0 {
        return Ok(1.0);
    }
    if at_one > 0.0 {
        return bisect(a, cfg, 0.0, 1.0);
    }
    let mut lo = 1.0;
    let mut hi = 2.0;
    while monotone_kernel(hi, a, cfg)? <= 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > MAX_UPPER {
            return Err(ZetaError::domain(format!(
                "no sign change of P below sigma = {MAX_UPPER} at a = {a}"
            )));
        }
    }
    bisect(a, cfg, lo, hi)
}

/// The unique positive real zero `β_P(a)` of `P(σ,a)`, or `β_Z = 1 − β_P`,
/// for `0 < a < 1/4`.
///
/// `β_P ∈ (0,1)` for `a < 1/6` and `β_P > 1` for `a > 1/6`; the exact
/// `a = 1/6` gives `β_P = 1`, `β_Z = 0` without any evaluation.
pub fn beta_zero(fam: FamilyId, a: &AlphaParam, cfg: &EvalSettings) -> Result<BetaCurvePoint> {
    if !matches!(fam, FamilyId::Z | FamilyId::P) {
        return Err(ZetaError::invalid(format!("no beta curve for {fam}")));
    }
    let v = a.value();
    if !(v > 0.0 && v < 0.25) {
        return Err(ZetaError::domain(format!(
            "beta_zero needs 0 < a < 1/4, got {a}"
        )));
    }
    cfg.validate()?;
    let bp = beta_p(a, cfg)?;
    let beta = if fam == FamilyId::P { bp } else { 1.0 - bp };
    let prediction = asymptotic_prediction(fam, a)?;
    Ok(BetaCurvePoint {
        a: v,
        family: fam,
        beta,
        asymptotic_prediction: prediction,
        deviation: beta - prediction,
    })
}
