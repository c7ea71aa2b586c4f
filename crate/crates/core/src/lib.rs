//! Hurwitz, periodic and Riemann zeta functions, the symmetric and
//! antisymmetric combinations `Z, P, Y, O, X` of them in `a` and `1 − a`,
//! Dirichlet characters and L-functions, and real/complex zero location.

pub mod composites;
pub mod dirichlet;
pub mod error;
pub mod special_fns;
pub mod types;
pub mod zeros;

pub use composites::{eval_family, FamilyId};
pub use error::{Result, ZetaError};
pub use special_fns::{bernoulli_poly, gamma_complex, hurwitz_zeta, periodic_zeta, riemann_zeta};
pub use types::{cpt, AccuracyWarning, AlphaParam, ComplexPoint, EvalSettings, Evaluation};
