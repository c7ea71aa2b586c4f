//! Scalar special functions: Γ, Bernoulli data, Hurwitz, Riemann and
//! periodic zeta.

pub mod bernoulli;
pub mod elementary;
pub mod gamma;
pub mod hurwitz;
pub mod periodic;

pub use bernoulli::{bernoulli_number, bernoulli_poly, bernoulli_poly_exact, bernoulli_poly_sign};
pub use gamma::{gamma_complex, gamma_real, ln_gamma_complex};
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_em, hurwitz_zeta_eval, riemann_zeta};
pub use periodic::{periodic_zeta, periodic_zeta_eval, periodic_zeta_feli};
