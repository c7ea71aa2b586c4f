//! Linear relations between `Z, P, Y, O` at `a = r/q` and `L(s,χ)`.
//!
//! Family to L (any `χ` mod `q`, `gcd(r,q) = 1`):
//!
//! ```text
//! Z(s,r/q) = q^s/φ(q) Σ_{χ mod q} (1+χ(−1)) χ̄(r) L(s,χ)
//! Y(s,r/q) = q^s/φ(q) Σ_{χ mod q} (1−χ(−1)) χ̄(r) L(s,χ)
//! P(s,r/q) = Σ_{d|q} d^{−s}/φ(q/d) Σ_{χ mod q/d}     (1+χ(−1)) χ(r) G(χ̄) L(s,χ)
//! O(s,r/q) = Σ_{d|q} d^{−s}/φ(q/d) Σ_{χ mod q/d} −i (1−χ(−1)) χ(r) G(χ̄) L(s,χ)
//! ```
//!
//! The divisor sum in the additive cases collects the terms `n` sharing a
//! factor `d` with `q`. L to family, summing over `0 < r ≤ q/2` (weight
//! 1/2 at `r = q/2`):
//!
//! ```text
//! χ even:            q^s L(s,χ) = Σ χ(r) Z(s,r/q)
//! χ odd:             q^s L(s,χ) = Σ χ(r) Y(s,r/q)
//! χ even, primitive:  G(χ̄) L(s,χ) = Σ χ̄(r) P(s,r/q)
//! χ odd, primitive: −iG(χ̄) L(s,χ) = Σ χ̄(r) O(s,r/q)
//! ```
//!
//! For imprimitive `χ` the Gauss-sum step `Σ_r χ̄(r) e^{2πinr/q} = χ(n) G(χ̄)`
//! fails at `gcd(n,q) > 1`, so the last two are only checked for primitive
//! characters.

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::characters::{characters_mod, gauss_sum, DirichletCharacter, MAX_MODULUS};
use super::l_function;
use crate::composites::{eval_family, FamilyId};
use crate::error::{Result, ZetaError};
use crate::types::{check_finite, AlphaParam, ComplexPoint, EvalSettings};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationDirection {
    /// Compare `family(s, r/q)` with its character expansion.
    FamilyToL,
    /// Compare `L(s,χ)`, for every character of matching parity, with its
    /// expansion in the family values at `r/q`.
    LToFamily,
}

fn pow_q(q: u64, s: Complex64) -> Complex64 {
    (s * (q as f64).ln()).exp()
}

fn phi(q: u64) -> f64 {
    (1..=q).filter(|n| n.gcd(&q) == 1).count() as f64
}

/// `family(s, r/q)` for any unit `r`, folding `r/q > 1/2` back by symmetry.
fn family_at(fam: FamilyId, r: u64, q: u64, s: Complex64, cfg: &EvalSettings) -> Result<Complex64> {
    let (rr, sign) = if 2 * r > q {
        (q - r, if fam.is_odd() { -1.0 } else { 1.0 })
    } else {
        (r, 1.0)
    };
    Ok(eval_family(fam, s, &AlphaParam::rational(rr, q)?, cfg)? * sign)
}

fn parity_weight(fam: FamilyId, chi: &DirichletCharacter) -> f64 {
    let p = chi.parity() as f64;
    match fam {
        FamilyId::Z | FamilyId::P => 1.0 + p,
        _ => 1.0 - p,
    }
}

fn multiplicative_side(
    fam: FamilyId,
    r: u64,
    q: u64,
    s: Complex64,
    cfg: &EvalSettings,
) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for chi in characters_mod(q)? {
        let w = parity_weight(fam, &chi);
        if w == 0.0 {
            continue;
        }
        sum += chi.value(r as i64).conj() * l_function(&chi, s, cfg)? * w;
    }
    Ok(pow_q(q, s) * sum / phi(q))
}

fn additive_side(
    fam: FamilyId,
    r: u64,
    q: u64,
    s: Complex64,
    cfg: &EvalSettings,
) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    for d in (1..=q).filter(|d| q % d == 0) {
        let qd = q / d;
        let mut inner = Complex64::new(0.0, 0.0);
        for chi in characters_mod(qd)? {
            let w = parity_weight(fam, &chi);
            if w == 0.0 {
                continue;
            }
            let g = gauss_sum(&chi.conj());
            inner += chi.value(r as i64) * g * l_function(&chi, s, cfg)? * w;
        }
        if fam == FamilyId::O {
            inner *= -Complex64::i();
        }
        total += pow_q(d, -s) * inner / phi(qd);
    }
    Ok(total)
}

fn family_to_l(fam: FamilyId, r: u64, q: u64, s: Complex64, cfg: &EvalSettings) -> Result<f64> {
    let lhs = family_at(fam, r, q, s, cfg)?;
    let rhs = match fam {
        FamilyId::Z | FamilyId::Y => multiplicative_side(fam, r, q, s, cfg)?,
        _ => additive_side(fam, r, q, s, cfg)?,
    };
    Ok((lhs - rhs).norm() / lhs.norm().max(1.0))
}

fn l_to_family(fam: FamilyId, q: u64, s: Complex64, cfg: &EvalSettings) -> Result<(f64, usize)> {
    let additive = matches!(fam, FamilyId::P | FamilyId::O);
    let mut worst: f64 = 0.0;
    let mut checked = 0;
    for chi in characters_mod(q)? {
        if parity_weight(fam, &chi) == 0.0 || (additive && !chi.is_primitive()) {
            continue;
        }
        let l = l_function(&chi, s, cfg)?;
        let lhs = match fam {
            FamilyId::Z | FamilyId::Y => pow_q(q, s) * l,
            FamilyId::P => gauss_sum(&chi.conj()) * l,
            _ => -Complex64::i() * gauss_sum(&chi.conj()) * l,
        };
        let mut rhs = Complex64::new(0.0, 0.0);
        for r in (1..=q / 2).filter(|r| r.gcd(&q) == 1) {
            let weight = if 2 * r == q { 0.5 } else { 1.0 };
            let c = chi.value(r as i64);
            let c = if additive { c.conj() } else { c };
            rhs += c * family_at(fam, r, q, s, cfg)? * weight;
        }
        worst = worst.max((lhs - rhs).norm() / lhs.norm().max(1.0));
        checked += 1;
    }
    Ok((worst, checked))
}

/// Scaled residual `|lhs − rhs| / max(1, |lhs|)` of a linear relation.
///
/// `fam` is one of `Z, P, Y, O`; `gcd(r,q) = 1`, `1 ≤ r < q ≤ 100` and
/// `2r < q` for `Y, O`. With [`RelationDirection::LToFamily`] the largest
/// residual over the characters of matching parity is returned (only
/// primitive ones for `P, O`; `r` is then only validated). When no
/// character qualifies the residual is 0.
pub fn linear_relation_residual(
    fam: FamilyId,
    r: u64,
    q: u64,
    s: ComplexPoint,
    direction: RelationDirection,
    cfg: &EvalSettings,
) -> Result<f64> {
    relation_check(fam, r, q, s, direction, cfg).map(|(res, _)| res)
}

/// Same as [`linear_relation_residual`], also returning how many
/// characters took part (1 for the family-to-L direction).
pub fn relation_check(
    fam: FamilyId,
    r: u64,
    q: u64,
    s: ComplexPoint,
    direction: RelationDirection,
    cfg: &EvalSettings,
) -> Result<(f64, usize)> {
    check_finite(s)?;
    if !matches!(fam, FamilyId::Z | FamilyId::P | FamilyId::Y | FamilyId::O) {
        return Err(ZetaError::invalid(format!("no linear relation for {fam}")));
    }
    if q < 2 || q > MAX_MODULUS {
        return Err(ZetaError::UnsupportedModulus(q));
    }
    if r == 0 || r >= q || r.gcd(&q) != 1 {
        return Err(ZetaError::invalid(format!(
            "need 1 <= r < q, gcd(r,q) = 1; got {r}/{q}"
        )));
    }
    if fam.is_odd() && 2 * r >= q {
        return Err(ZetaError::invalid(format!(
            "{fam} relation needs 2r < q; got {r}/{q}"
        )));
    }
    match direction {
        RelationDirection::FamilyToL => Ok((family_to_l(fam, r, q, s, cfg)?, 1)),
        RelationDirection::LToFamily => l_to_family(fam, q, s, cfg),
    }
}
