//! Exact and numeric analysis of the Grover matrix `U_N = R_D R_f`.
//!
//! * [`exact`]: big-rational matrices, polynomials and characteristic polynomials.
//! * [`cyclotomic`]: cyclotomic polynomials, factorization and periods.
//! * [`grover`]: the operators `R_D`, `R_f`, `U_N`, their spectra and periods.
//! * [`zeta_rational`]: the matrix zeta `det(I - uU_N)^{-1}` and its Kurokawa form.
//! * [`specfun`]: gamma, Hurwitz zeta, Barnes multiple zeta/gamma/sine.
//! * [`abszeta`]: absolute Hurwitz zeta, absolute zeta, functional equations,
//!   the general-`N` series and the Mellin quadrature oracle.

pub mod abszeta;
pub mod cyclotomic;
pub mod error;
pub mod exact;
pub mod grover;
pub mod specfun;
pub mod zeta_rational;

pub use cyclotomic::{CyclotomicFactorization, Period};
pub use error::{Error, Result};
pub use exact::{IntPolynomial, RatPolynomial, Rational, RationalMatrix};
pub use grover::{GroverOperators, PeriodMethod, SpectrumDescriptor};
pub use specfun::{ComplexValue, OmegaVector};
pub use zeta_rational::{KurokawaForm, MatrixZeta};
