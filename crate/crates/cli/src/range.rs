use std::str::FromStr;

use crate::CliError;

const MAX_POINTS: usize = 1_000_000;

/// A single value or an inclusive grid `lo:hi:step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Range {
    Single(f64),
    Grid { lo: f64, hi: f64, step: f64 },
}

impl FromStr for Range {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let num = |x: &str| -> Result<f64, String> {
            let v: f64 = x
                .trim()
                .parse()
                .map_err(|_| format!("not a number: {x:?}"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("not finite: {x:?}"))
            }
        };
        let parts: Vec<&str> = text.split(':').collect();
        match parts.as_slice() {
            [x] => Ok(Range::Single(num(x)?)),
            [lo, hi, step] => {
                let (lo, hi, step) = (num(lo)?, num(hi)?, num(step)?);
                if !(step > 0.0) || hi < lo {
                    return Err(format!("need lo <= hi and step > 0 in {text:?}"));
                }
                Ok(Range::Grid { lo, hi, step })
            }
            _ => Err(format!("expected a value or lo:hi:step, got {text:?}")),
        }
    }
}

impl Range {
    /// Grid points `lo + k·step` up to `hi` (with a small slack for
    /// rounding), so `0:1:0.1` has 11 points.
    pub fn values(&self) -> Result<Vec<f64>, CliError> {
        match *self {
            Range::Single(x) => Ok(vec![x]),
            Range::Grid { lo, hi, step } => {
                let n = ((hi - lo) / step + 1e-9).floor() as usize + 1;
                if n > MAX_POINTS {
                    return Err(CliError::usage(format!(
                        "grid has {n} points (max {MAX_POINTS})"
                    )));
                }
                Ok((0..n).map(|k| lo + k as f64 * step).collect())
            }
        }
    }
}
