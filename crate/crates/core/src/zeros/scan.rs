use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::composites::{eval_family, FamilyId};
use crate::error::{Result, ZetaError};
use crate::types::{cpt, AlphaParam, EvalSettings};

pub const DEFAULT_STEP: f64 = 0.05;
/// `|f|` below this at a local minimum without a sign change is reported
/// as an even-order touch.
pub const TOUCH_TOLERANCE: f64 = 1e-6;
pub const BISECTION_WIDTH: f64 = 1e-10;

/// Gap left on each side of `s = 1` when a scan interval contains the pole.
const POLE_GAP: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MultiplicityClass {
    SimpleSignChange,
    EvenTouch,
    Unresolved,
}

impl MultiplicityClass {
    pub fn name(self) -> &'static str {
        match self {
            MultiplicityClass::SimpleSignChange => "simple-sign-change",
            MultiplicityClass::EvenTouch => "even-touch",
            MultiplicityClass::Unresolved => "unresolved",
        }
    }
}

impl fmt::Display for MultiplicityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub location: f64,
    pub multiplicity_class: MultiplicityClass,
    pub bracket: (f64, f64),
    /// `|f(location)|`.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanWarning {
    pub at: f64,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ScanReport {
    /// Sorted by location.
    pub zeros: Vec<ZeroRecord>,
    pub warnings: Vec<ScanWarning>,
}

struct Scanner<'a> {
    fam: FamilyId,
    a: &'a AlphaParam,
    cfg: &'a EvalSettings,
}

impl Scanner<'_> {
    /// Real part on the real axis; `|f|` for the complex-valued periodic zeta.
    fn value(&self, x: f64) -> Result<f64> {
        let v = eval_family(self.fam, cpt(x, 0.0), self.a, self.cfg)?;
        Ok(if self.fam == FamilyId::Periodic {
            v.norm()
        } else {
            v.re
        })
    }

    fn bisect(&self, mut lo: f64, mut hi: f64, mut flo: f64) -> Result<(f64, f64)> {
        while hi - lo >= BISECTION_WIDTH {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = self.value(mid)?;
            if fm == 0.0 {
                return Ok((mid, mid));
            }
            if (fm < 0.0) == (flo < 0.0) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        Ok((lo, hi))
    }

    /// Golden-section minimisation of `|f|` on `[lo, hi]`.
    fn minimise(&self, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
        let r = 0.5 * (5f64.sqrt() - 1.0);
        let mut x1 = hi - r * (hi - lo);
        let mut x2 = lo + r * (hi - lo);
        let mut f1 = self.value(x1)?.abs();
        let mut f2 = self.value(x2)?.abs();
        while hi - lo > BISECTION_WIDTH {
            if f1 < f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - r * (hi - lo);
                f1 = self.value(x1)?.abs();
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + r * (hi - lo);
                f2 = self.value(x2)?.abs();
            }
        }
        Ok(if f1 < f2 { (x1, f1) } else { (x2, f2) })
    }

    fn sign_change(&self, x0: f64, x1: f64, f0: f64, f1: f64) -> Result<ZeroRecord> {
        let (lo, hi) = self.bisect(x0, x1, f0)?;
        let location = 0.5 * (lo + hi);
        let residual = self.value(location)?.abs();
        // a jump with a large value at the crossing is not a zero
        let class = if residual <= TOUCH_TOLERANCE * f0.abs().max(f1.abs()).max(1.0) {
            MultiplicityClass::SimpleSignChange
        } else {
            MultiplicityClass::Unresolved
        };
        Ok(ZeroRecord {
            location,
            multiplicity_class: class,
            bracket: (x0, x1),
            residual,
        })
    }

    fn touch(&self, x0: f64, x1: f64) -> Result<Option<ZeroRecord>> {
        let (location, residual) = self.minimise(x0, x1)?;
        if residual >= TOUCH_TOLERANCE {
            return Ok(None);
        }
        let class = if self.fam == FamilyId::Periodic {
            MultiplicityClass::Unresolved
        } else {
            MultiplicityClass::EvenTouch
        };
        Ok(Some(ZeroRecord {
            location,
            multiplicity_class: class,
            bracket: (x0, x1),
            residual,
        }))
    }

    fn scan_segment(&self, lo: f64, hi: f64, step: f64) -> Result<Vec<ZeroRecord>> {
        let n = ((hi - lo) / step).ceil().max(1.0) as usize;
        let xs: Vec<f64> = (0..=n)
            .map(|k| if k == n { hi } else { lo + k as f64 * step })
            .collect();
        let fs = xs
            .par_iter()
            .map(|&x| self.value(x))
            .collect::<Result<Vec<f64>>>()?;
        let signed = self.fam != FamilyId::Periodic;
        let crosses = |k: usize| {
            signed && fs[k] != 0.0 && fs[k + 1] != 0.0 && (fs[k] < 0.0) != (fs[k + 1] < 0.0)
        };

        enum Task {
            Cross(usize),
            Exact(usize),
            Touch(usize),
        }
        let mut tasks = Vec::new();
        for k in 0..=n {
            if signed && fs[k] == 0.0 {
                tasks.push(Task::Exact(k));
                continue;
            }
            if k < n && crosses(k) {
                tasks.push(Task::Cross(k));
            }
            if k == 0 || k == n {
                continue;
            }
            let local_min = fs[k].abs() <= fs[k - 1].abs() && fs[k].abs() <= fs[k + 1].abs();
            if local_min && !crosses(k - 1) && !crosses(k) && fs[k - 1] != 0.0 && fs[k + 1] != 0.0 {
                tasks.push(Task::Touch(k));
            }
        }

        let found = tasks
            .par_iter()
            .map(|task| -> Result<Option<ZeroRecord>> {
                match *task {
                    Task::Cross(k) => self
                        .sign_change(xs[k], xs[k + 1], fs[k], fs[k + 1])
                        .map(Some),
                    Task::Touch(k) => self.touch(xs[k - 1], xs[k + 1]),
                    Task::Exact(k) => {
                        let left = if k > 0 { fs[k - 1] } else { 0.0 };
                        let right = if k < n { fs[k + 1] } else { 0.0 };
                        let class = if left == 0.0 || right == 0.0 {
                            MultiplicityClass::Unresolved
                        } else if (left < 0.0) != (right < 0.0) {
                            MultiplicityClass::SimpleSignChange
                        } else {
                            MultiplicityClass::EvenTouch
                        };
                        Ok(Some(ZeroRecord {
                            location: xs[k],
                            multiplicity_class: class,
                            bracket: (xs[k.saturating_sub(1)], xs[(k + 1).min(n)]),
                            residual: 0.0,
                        }))
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(found.into_iter().flatten().collect())
    }
}

/// Real zeros of `fam(σ, a)` for `σ ∈ [lo, hi]`.
///
/// The grid `lo, lo + step, …, hi` is evaluated and every sign change is
/// bisected below [`BISECTION_WIDTH`]. A local minimum of `|f|` without a
/// sign change is refined by golden-section search and reported as an
/// even touch if it drops below [`TOUCH_TOLERANCE`]. The complex-valued
/// `PERIODIC` family is scanned only by `|f|` minima, reported as
/// unresolved.
///
/// When the family has a pole at `s = 1` inside the interval the scan is
/// split at `1 ± 1e-6` and a warning is attached.
pub fn scan_real_zeros(
    fam: FamilyId,
    a: &AlphaParam,
    lo: f64,
    hi: f64,
    step: f64,
    cfg: &EvalSettings,
) -> Result<ScanReport> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(ZetaError::invalid(format!(
            "need lo < hi, got [{lo}, {hi}]"
        )));
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(ZetaError::invalid(format!(
            "step must be positive, got {step}"
        )));
    }
    if fam == FamilyId::LChi {
        return Err(ZetaError::invalid("L_CHI cannot be scanned from a"));
    }
    if fam.is_odd() && a.value() == 0.5 {
        return Err(ZetaError::domain(format!(
            "{fam} vanishes identically at a = 1/2"
        )));
    }
    cfg.validate()?;
    let scanner = Scanner { fam, a, cfg };
    let mut report = ScanReport::default();
    let mut segments = vec![(lo, hi)];
    if fam.has_pole_at_one() && lo <= 1.0 && hi >= 1.0 {
        report.warnings.push(ScanWarning {
            at: 1.0,
            message: format!(
                "pole at s = 1; scanned [{lo}, {}] and [{}, {hi}]",
                1.0 - POLE_GAP,
                1.0 + POLE_GAP
            ),
        });
        segments = [(lo, 1.0 - POLE_GAP), (1.0 + POLE_GAP, hi)]
            .into_iter()
            .filter(|(l, h)| l < h)
            .collect();
    }
    for (l, h) in segments {
        report.zeros.extend(scanner.scan_segment(l, h, step)?);
    }
    report
        .zeros
        .sort_by(|x, y| x.location.total_cmp(&y.location));
    Ok(report)
}
