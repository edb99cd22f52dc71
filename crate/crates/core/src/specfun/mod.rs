//! Numeric special functions on double precision: gamma, Hurwitz zeta and
//! the Barnes multiple zeta/gamma/sine functions of order 1 and 2.

mod gamma;
mod hurwitz;
mod multiple;

pub use gamma::{gamma_fn, gamma_real};
pub use hurwitz::{
    hurwitz_zeta, hurwitz_zeta_real, hurwitz_zeta_s0_derivative, hurwitz_zeta_scaled,
};
pub use multiple::{
    multi_gamma, multi_sine, multi_zeta, multi_zeta_s0_derivative, DerivativeScheme, OmegaVector,
};

pub use num_complex::Complex64 as ComplexValue;
