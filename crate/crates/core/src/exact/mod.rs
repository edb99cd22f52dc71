//! Exact rationals, polynomials, dense matrices and characteristic polynomials.

mod charpoly;
mod matrix;
mod poly;

pub use charpoly::{char_poly, char_poly_with, poly_reverse_scale, CharPolyMethod};
pub use matrix::{mat_mul, mat_pow, RationalMatrix};
pub use poly::{IntPolynomial, Polynomial, RatPolynomial};

pub use num_bigint::BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}
