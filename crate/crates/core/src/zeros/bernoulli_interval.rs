use std::cmp::Ordering;

use crate::error::{Result, ZetaError};
use crate::special_fns::bernoulli::{bernoulli_poly, bernoulli_poly_sign, MAX_EXACT_ORDER};
use crate::types::AlphaParam;

/// Whether `B_{−n−1}(a) B_{−n}(a) < 0` for `n ≤ −1`, i.e. whether
/// `ζ(σ,a)` has a real zero in `(n+1, n+2)`.
///
/// `n = −1` is the interval `(0,1)` with `B_0 B_1`; `n = −2` is `(−1,0)`
/// with `B_1 B_2`, and so on. Signs are exact for rational `a`.
pub fn bernoulli_interval_test(a: &AlphaParam, n: i64) -> Result<bool> {
    if n > -1 {
        return Err(ZetaError::invalid(format!("need n <= -1, got {n}")));
    }
    let k = (-n - 1) as usize;
    if k + 1 > MAX_EXACT_ORDER {
        return Err(ZetaError::UnsupportedOrder {
            n: k + 1,
            max: MAX_EXACT_ORDER,
        });
    }
    match a.exact() {
        Some((r, q)) => {
            let s0 = bernoulli_poly_sign(k, r, q)?;
            let s1 = bernoulli_poly_sign(k + 1, r, q)?;
            Ok(matches!(
                (s0, s1),
                (Ordering::Less, Ordering::Greater) | (Ordering::Greater, Ordering::Less)
            ))
        }
        None => {
            let x = a.value();
            Ok(bernoulli_poly(k, x)? * bernoulli_poly(k + 1, x)? < 0.0)
        }
    }
}
