//! Dirichlet characters, Gauss sums and L-functions, the linear relations
//! between the composed families at rational `a = r/q` and `L(s,χ)`, and
//! the closed forms at `a ∈ {1/2, 1/3, 1/4, 1/6}`.

mod characters;
mod closed_forms;
mod relations;

pub use characters::{
    characters_mod, chi_minus3, chi_minus4, chi_minus6, gauss_sum, DirichletCharacter, MAX_MODULUS,
};
pub use closed_forms::{closed_form_identity, f_factor, g_factor};
pub use relations::{linear_relation_residual, relation_check, RelationDirection};

use num_complex::Complex64;

use crate::error::{Result, ZetaError};
use crate::special_fns::elementary::exprel;
use crate::special_fns::hurwitz::{hurwitz_regular, hurwitz_zeta};
use crate::types::{check_finite, AlphaParam, ComplexPoint, EvalSettings};

/// `L(s,χ) = q^{−s} Σ_{r=1}^{q} χ(r) ζ(s, r/q)`.
///
/// Near `s = 1` a non-principal character has `Σ χ(r) = 0`, and the poles
/// of the Hurwitz terms are cancelled analytically so `L(1,χ)` is finite.
pub fn l_function(
    chi: &DirichletCharacter,
    s: ComplexPoint,
    cfg: &EvalSettings,
) -> Result<ComplexPoint> {
    check_finite(s)?;
    cfg.validate()?;
    let q = chi.modulus();
    let one = Complex64::new(1.0, 0.0);
    if chi.is_principal() && s == one {
        return Err(ZetaError::pole(s));
    }
    let units = (1..=q).filter(|&r| chi.value(r as i64) != Complex64::new(0.0, 0.0));
    let mut sum = Complex64::new(0.0, 0.0);
    if !chi.is_principal() && (s - one).norm() < 0.5 {
        // ζ(s,a) = R(s,a) + a^{1−s}/(s−1) and Σχ(r)·1/(s−1) = 0, so the
        // singular parts contribute Σχ(r)(a^{1−s} − 1)/(s−1) = −Σχ(r) ℓ exprel((1−s)ℓ)
        for r in units {
            let a = r as f64 / q as f64;
            let ell = a.ln();
            let singular = -ell * exprel((one - s) * ell);
            sum += chi.value(r as i64) * (hurwitz_regular(s, a, cfg)?.value + singular);
        }
    } else {
        for r in units {
            let a = AlphaParam::rational(r, q)?;
            sum += chi.value(r as i64) * hurwitz_zeta(s, &a, cfg)?;
        }
    }
    Ok((-s * (q as f64).ln()).exp() * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::cpt;

    #[test]
    fn catalan_and_riemann() {
        let c = EvalSettings::default();
        let v = l_function(&chi_minus4(), cpt(2.0, 0.0), &c).unwrap();
        assert!((v.re - 0.915_965_594_177_219).abs() < 1e-13);
        let triv = &characters_mod(1).unwrap()[0];
        let v = l_function(triv, cpt(2.0, 0.0), &c).unwrap();
        assert!((v.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-13);
        assert!(l_function(triv, cpt(1.0, 0.0), &c).is_err());
    }

    #[test]
    fn value_at_one_is_finite() {
        // L(1, χ_{−4}) = π/4, L(1, χ_{−3}) = π/(3√3)
        let c = EvalSettings::default();
        let v = l_function(&chi_minus4(), cpt(1.0, 0.0), &c).unwrap();
        assert!((v.re - std::f64::consts::FRAC_PI_4).abs() < 1e-13 && v.im.abs() < 1e-14);
        let v = l_function(&chi_minus3(), cpt(1.0, 0.0), &c).unwrap();
        let want = std::f64::consts::PI / (3.0 * 3f64.sqrt());
        assert!((v.re - want).abs() < 1e-13);
        // both branches agree across |s − 1| = 0.5
        let a = l_function(&chi_minus3(), cpt(1.4999999, 0.0), &c).unwrap();
        let b = l_function(&chi_minus3(), cpt(1.5000001, 0.0), &c).unwrap();
        assert!((a - b).norm() < 1e-6);
    }
}
