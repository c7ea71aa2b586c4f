//! Real zeros on an interval, the extra zeros `β_Z(a)`, `β_P(a)`, the
//! Bernoulli-sign interval criterion for `ζ(σ,a)` and zero counting in
//! rectangles by the argument principle.

mod bernoulli_interval;
mod beta;
mod rectangle;
mod scan;

pub use bernoulli_interval::bernoulli_interval_test;
pub use beta::{asymptotic_prediction, beta_zero, monotone_kernel, BetaCurvePoint};
pub use rectangle::{count_zeros_rectangle, RectangleCount, BOUNDARY_THRESHOLD, POLE_CLEARANCE};
pub use scan::{
    scan_real_zeros, MultiplicityClass, ScanReport, ScanWarning, ZeroRecord, BISECTION_WIDTH,
    DEFAULT_STEP, TOUCH_TOLERANCE,
};
