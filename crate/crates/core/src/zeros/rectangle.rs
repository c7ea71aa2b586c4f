use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::composites::{eval_family, FamilyId};
use crate::error::{Result, ZetaError};
use crate::types::{check_finite, cpt, AlphaParam, ComplexPoint, EvalSettings};

/// Rejection threshold for `min |f|` on the boundary.
pub const BOUNDARY_THRESHOLD: f64 = 1e-6;
/// Minimum distance between the rectangle and the pole at `s = 1`.
pub const POLE_CLEARANCE: f64 = 0.01;

const MAX_SAMPLES: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RectangleCount {
    /// Lower-left and upper-right corners.
    pub corners: (ComplexPoint, ComplexPoint),
    pub count: u64,
    pub boundary_min_abs: f64,
    pub samples_used: usize,
}

struct Pass {
    winding: f64,
    max_step: f64,
    min_abs: f64,
}

/// Counter-clockwise boundary points, distributed by side length.
fn boundary(lo: ComplexPoint, hi: ComplexPoint, n: usize) -> Vec<ComplexPoint> {
    let corners = [lo, cpt(hi.re, lo.im), hi, cpt(lo.re, hi.im)];
    let w = hi.re - lo.re;
    let h = hi.im - lo.im;
    let perimeter = 2.0 * (w + h);
    let mut pts = Vec::with_capacity(n + 8);
    for i in 0..4 {
        let (p, q) = (corners[i], corners[(i + 1) % 4]);
        let len = if i % 2 == 0 { w } else { h };
        let m = ((n as f64 * len / perimeter).ceil() as usize).max(4);
        pts.extend((0..m).map(|k| p + (q - p) * (k as f64 / m as f64)));
    }
    pts
}

fn winding_pass(
    f: &(dyn Fn(ComplexPoint) -> Result<ComplexPoint> + Sync),
    pts: &[ComplexPoint],
) -> Result<Pass> {
    let vals = pts.par_iter().map(|&z| f(z)).collect::<Result<Vec<_>>>()?;
    let mut winding = 0.0;
    let mut max_step: f64 = 0.0;
    for k in 0..vals.len() {
        let d = (vals[(k + 1) % vals.len()] / vals[k]).arg();
        winding += d;
        max_step = max_step.max(d.abs());
    }
    let min_abs = vals.iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min);
    Ok(Pass {
        winding: winding / (2.0 * PI),
        max_step,
        min_abs,
    })
}

fn distance_to_rectangle(p: ComplexPoint, lo: ComplexPoint, hi: ComplexPoint) -> f64 {
    let dx = (lo.re - p.re).max(0.0).max(p.re - hi.re);
    let dy = (lo.im - p.im).max(0.0).max(p.im - hi.im);
    dx.hypot(dy)
}

/// Number of zeros of `fam(s,a)` inside the rectangle spanned by two
/// opposite corners, by the argument principle.
///
/// The boundary is sampled with `initial_samples` points, doubled until
/// every argument increment is below `π/2`, the winding number is within
/// `1e-3` of an integer, and one further doubling gives the same integer.
/// A boundary value below [`BOUNDARY_THRESHOLD`] is rejected with
/// [`ZetaError::RepositionRectangle`].
pub fn count_zeros_rectangle(
    fam: FamilyId,
    a: &AlphaParam,
    corners: (ComplexPoint, ComplexPoint),
    initial_samples: usize,
    cfg: &EvalSettings,
) -> Result<RectangleCount> {
    check_finite(corners.0)?;
    check_finite(corners.1)?;
    let lo = cpt(
        corners.0.re.min(corners.1.re),
        corners.0.im.min(corners.1.im),
    );
    let hi = cpt(
        corners.0.re.max(corners.1.re),
        corners.0.im.max(corners.1.im),
    );
    if !(hi.re > lo.re && hi.im > lo.im) {
        return Err(ZetaError::invalid("degenerate rectangle"));
    }
    if initial_samples < 8 {
        return Err(ZetaError::invalid("need at least 8 boundary samples"));
    }
    if fam == FamilyId::LChi {
        return Err(ZetaError::invalid("L_CHI cannot be counted from a"));
    }
    if fam.has_pole_at_one() && distance_to_rectangle(cpt(1.0, 0.0), lo, hi) < POLE_CLEARANCE {
        return Err(ZetaError::invalid(format!(
            "rectangle must stay {POLE_CLEARANCE} away from the pole at s = 1"
        )));
    }
    cfg.validate()?;
    let f = |z: ComplexPoint| eval_family(fam, z, a, cfg);

    let mut n = initial_samples;
    let mut previous: Option<i64> = None;
    loop {
        let pts = boundary(lo, hi, n);
        let pass = winding_pass(&f, &pts)?;
        if pass.min_abs < BOUNDARY_THRESHOLD {
            return Err(ZetaError::RepositionRectangle {
                min_abs: pass.min_abs,
            });
        }
        let nearest = pass.winding.round();
        let resolved = pass.max_step < FRAC_PI_2 && (pass.winding - nearest).abs() < 1e-3;
        if resolved {
            let k = nearest as i64;
            if previous == Some(k) {
                if k < 0 {
                    return Err(ZetaError::invalid(format!(
                        "negative winding {k}: pole inside rectangle"
                    )));
                }
                return Ok(RectangleCount {
                    corners: (lo, hi),
                    count: k as u64,
                    boundary_min_abs: pass.min_abs,
                    samples_used: pts.len(),
                });
            }
            previous = Some(k);
        } else {
            previous = None;
        }
        n *= 2;
        if n > MAX_SAMPLES {
            return Err(ZetaError::RefinementFailure { samples: pts.len() });
        }
    }
}
