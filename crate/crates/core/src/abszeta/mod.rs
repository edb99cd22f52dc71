//! Absolute zeta functions of `ζ_{U_N}`: closed forms for the Kurokawa cases
//! `N ∈ {2, 4}`, the general-`N` series, and a Mellin-quadrature oracle.

mod bundle;
mod mellin;
mod psequence;
mod quadrature;
mod series;

pub use bundle::{
    absolute_z, absolute_zeta, epsilon_factor, functional_equation_residual, AbsoluteZetaBundle,
    FunctionalEquationCheck, Subset,
};
pub use mellin::{mellin_z_numeric, QuadratureValue, MELLIN_ABS_TARGET};
pub use psequence::{p_closed_form, p_recurrence, p_sequence, trace_of_roots, PSequence};
pub use series::{
    general_abszeta_truncated, general_z_series, BinomialWeight, ProductFactor, SeriesConfig,
    SeriesValue, TruncatedProduct,
};
