use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ZetaError};

/// A point `s = σ + it` of the complex plane.
pub type ComplexPoint = Complex64;

/// Shorthand constructor for a complex point.
#[inline]
pub fn cpt(re: f64, im: f64) -> ComplexPoint {
    Complex64::new(re, im)
}

pub(crate) fn check_finite(s: ComplexPoint) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(ZetaError::invalid(format!("non-finite point {s}")))
    }
}

/// The shift parameter `a ∈ (0, 1]`, optionally carried as an exact
/// reduced fraction `r/q`.
///
/// The exact form is what switches on the closed-form and character paths;
/// a decimal that happens to equal `1/4` in floating point is never
/// promoted to an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaParam {
    value: f64,
    exact: Option<(u64, u64)>,
}

impl AlphaParam {
    pub fn new(value: f64) -> Result<Self> {
        if !(value.is_finite() && value > 0.0 && value <= 1.0) {
            return Err(ZetaError::domain(format!("a = {value} not in (0, 1]")));
        }
        Ok(AlphaParam { value, exact: None })
    }

    /// Exact `r/q`, reduced to lowest terms.
    pub fn rational(r: u64, q: u64) -> Result<Self> {
        if q == 0 || r == 0 || r > q {
            return Err(ZetaError::domain(format!("a = {r}/{q} not in (0, 1]")));
        }
        let g = r.gcd(&q);
        let (r, q) = (r / g, q / g);
        Ok(AlphaParam {
            value: r as f64 / q as f64,
            exact: Some((r, q)),
        })
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.value
    }

    #[inline]
    pub fn exact(&self) -> Option<(u64, u64)> {
        self.exact
    }

    pub fn is_exact(&self, r: u64, q: u64) -> bool {
        self.exact == Some((r, q))
    }

    /// `1 − a`; fails for `a = 1`.
    pub fn complement(&self) -> Result<Self> {
        match self.exact {
            Some((r, q)) if r < q => AlphaParam::rational(q - r, q),
            Some(_) => Err(ZetaError::domain("1 - a = 0")),
            None => AlphaParam::new(1.0 - self.value),
        }
    }
}

impl fmt::Display for AlphaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some((r, q)) => write!(f, "{r}/{q}"),
            None => write!(f, "{}", self.value),
        }
    }
}

impl FromStr for AlphaParam {
    type Err = ZetaError;

    /// Accepts `r/q` (exact) or a decimal literal (inexact).
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let r: u64 = num
                .trim()
                .parse()
                .map_err(|_| ZetaError::invalid(format!("bad numerator in {text:?}")))?;
            let q: u64 = den
                .trim()
                .parse()
                .map_err(|_| ZetaError::invalid(format!("bad denominator in {text:?}")))?;
            AlphaParam::rational(r, q)
        } else {
            let v: f64 = text
                .parse()
                .map_err(|_| ZetaError::invalid(format!("cannot parse a = {text:?}")))?;
            AlphaParam::new(v)
        }
    }
}

/// Knobs for the Euler–Maclaurin and series kernels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalSettings {
    /// Terms summed directly before the Euler–Maclaurin tail.
    pub em_shift: usize,
    /// Number of Bernoulli correction terms (even, ≥ 2).
    pub em_order: usize,
    pub target_abs_tol: f64,
    /// Above this real part the periodic zeta is summed as a series,
    /// below it the functional equation is used.
    pub series_sigma_threshold: f64,
}

impl Default for EvalSettings {
    fn default() -> Self {
        EvalSettings {
            em_shift: 25,
            em_order: 12,
            target_abs_tol: 1e-12,
            series_sigma_threshold: 0.75,
        }
    }
}

impl EvalSettings {
    pub fn validate(&self) -> Result<()> {
        if self.em_shift < 1 {
            return Err(ZetaError::invalid("em_shift must be >= 1"));
        }
        if self.em_order < 2 || self.em_order % 2 != 0 {
            return Err(ZetaError::invalid("em_order must be even and >= 2"));
        }
        if !(self.target_abs_tol > 0.0) {
            return Err(ZetaError::invalid("target_abs_tol must be > 0"));
        }
        if !self.series_sigma_threshold.is_finite() {
            return Err(ZetaError::invalid("series_sigma_threshold must be finite"));
        }
        Ok(())
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.target_abs_tol = tol;
        self
    }
}

/// Raised when the internal remainder bound cannot certify the requested
/// tolerance. The value is still returned.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AccuracyWarning {
    pub requested: f64,
    pub bound: f64,
}

/// A kernel value together with its truncation bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: ComplexPoint,
    pub error_bound: f64,
    pub warning: Option<AccuracyWarning>,
}

impl Evaluation {
    pub(crate) fn new(value: ComplexPoint, error_bound: f64, cfg: &EvalSettings) -> Self {
        let warning = if error_bound <= cfg.target_abs_tol * value.norm().max(1.0) {
            None
        } else {
            Some(AccuracyWarning {
                requested: cfg.target_abs_tol,
                bound: error_bound,
            })
        };
        Evaluation {
            value,
            error_bound,
            warning,
        }
    }
}
