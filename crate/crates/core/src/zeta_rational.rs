//! The matrix zeta `ζ_{U_N}(u) = det(I - u U_N)^{-1}` as an exact rational function.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::cyclotomic::{cyclotomic_to_binomial_exponents, factor_into_cyclotomics};
use crate::error::{Error, Result};
use crate::exact::{char_poly, poly_reverse_scale, IntPolynomial, RatPolynomial, Rational};
use crate::grover;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixZeta {
    pub n: usize,
    /// `det(I - u U_N)`, ascending in `u`.
    pub denominator: RatPolynomial,
    /// Automorphy weight, `-N`.
    pub weight: i64,
    /// `(-1)^N det(U_N)`.
    pub sign_c: i8,
}

impl MatrixZeta {
    /// Canonical text form, e.g. `(den: [1, 0, 1])`.
    pub fn canonical_text(&self) -> String {
        let coeffs: Vec<String> = self
            .denominator
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect();
        format!("(den: [{}])", coeffs.join(", "))
    }

    pub fn as_rational_function(&self) -> RationalFunction {
        RationalFunction::new(RatPolynomial::one(), self.denominator.clone())
    }
}

impl fmt::Display for MatrixZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/({})", self.denominator.display_in("u"))
    }
}

/// `numerator / denominator` with rational coefficients; equality is cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub numerator: RatPolynomial,
    pub denominator: RatPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: RatPolynomial, denominator: RatPolynomial) -> Self {
        Self {
            numerator,
            denominator,
        }
    }

    pub fn equivalent(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

/// `f(x) = x^{ℓ/2} ∏(x^{m(i)} - 1) / ∏(x^{n(j)} - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KurokawaForm {
    pub ell: i64,
    pub m_list: Vec<u64>,
    pub n_list: Vec<u64>,
}

impl KurokawaForm {
    pub fn a(&self) -> usize {
        self.m_list.len()
    }

    pub fn b(&self) -> usize {
        self.n_list.len()
    }

    pub fn deg_f(&self) -> f64 {
        self.ell as f64 / 2.0 + self.sum_m() as f64 - self.sum_n() as f64
    }

    /// The functional-equation weight `D = ℓ + Σm - Σn`.
    pub fn weight_d(&self) -> i64 {
        self.ell + self.sum_m() - self.sum_n()
    }

    /// `C = (-1)^{a-b}`.
    pub fn sign_c(&self) -> i8 {
        if (self.a() + self.b()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    fn sum_m(&self) -> i64 {
        self.m_list.iter().sum::<u64>() as i64
    }

    fn sum_n(&self) -> i64 {
        self.n_list.iter().sum::<u64>() as i64
    }

    /// Exact reconstruction; only even `ℓ` has a polynomial representation.
    pub fn to_rational_function(&self) -> Result<RationalFunction> {
        if self.ell % 2 != 0 {
            return Err(Error::Domain(format!(
                "odd ℓ = {} has no rational-function form",
                self.ell
            )));
        }
        let mut num = self.m_list.iter().fold(IntPolynomial::one(), |acc, &m| {
            &acc * &IntPolynomial::binomial(m as usize)
        });
        let mut den = self.n_list.iter().fold(IntPolynomial::one(), |acc, &n| {
            &acc * &IntPolynomial::binomial(n as usize)
        });
        let half = (self.ell / 2).unsigned_abs() as usize;
        let shift = IntPolynomial::monomial(1.into(), half);
        if self.ell >= 0 {
            num = &num * &shift;
        } else {
            den = &den * &shift;
        }
        Ok(RationalFunction::new(num.to_rational(), den.to_rational()))
    }
}

pub fn matrix_zeta(n: usize) -> Result<MatrixZeta> {
    let ops = grover::build(n)?;
    let denominator = poly_reverse_scale(&char_poly(&ops.u), n)?;
    let closed = grover::closed_form_char_poly(n)?.reversed(n);
    if denominator != closed {
        return Err(Error::Inconsistent(format!(
            "det(I - uU_{n}) = {} disagrees with the closed form {}",
            denominator.display_in("u"),
            closed.display_in("u")
        )));
    }
    let det = ops.u.determinant();
    let signed = if n.is_multiple_of(2) { det } else { -det };
    let sign_c = if signed == Rational::one() {
        1
    } else if signed == -Rational::one() {
        -1
    } else {
        return Err(Error::Inconsistent(format!(
            "det(U_{n}) = {signed} is not ±1"
        )));
    };
    Ok(MatrixZeta {
        n,
        denominator,
        weight: -(n as i64),
        sign_c,
    })
}

/// Verifies `ζ(1/u) = C u^N ζ(u)` exactly, i.e. `u^N den(1/u) = C den(u)`.
pub fn check_automorphy(z: &MatrixZeta) -> Result<(i64, i8)> {
    if z.denominator.coeff(0) != Rational::one() || z.denominator.degree() != Some(z.n) {
        return Err(Error::AutomorphyFailed(z.n));
    }
    let reversed = z.denominator.reversed(z.n);
    let c = Rational::from_integer(z.sign_c.into());
    if reversed == z.denominator.scale(&c) {
        Ok((z.weight, z.sign_c))
    } else {
        Err(Error::AutomorphyFailed(z.n))
    }
}

/// Kurokawa form of `ζ_{U_N}`; only possible when the denominator is a
/// product of cyclotomic polynomials (finite period).
pub fn to_kurokawa_form(z: &MatrixZeta) -> Result<KurokawaForm> {
    let not_finite = || Error::NotFinitePeriod(z.n);
    let int_den = z.denominator.to_integer().ok_or_else(not_finite)?;
    let factorization = factor_into_cyclotomics(&int_den)?;
    if !factorization.complete {
        return Err(not_finite());
    }
    let signed: BTreeMap<u64, i64> = factorization
        .factors
        .iter()
        .map(|&(n, mult)| (n, -(mult as i64)))
        .collect();
    let mut m_list = Vec::new();
    let mut n_list = Vec::new();
    for (d, c) in cyclotomic_to_binomial_exponents(&signed) {
        let target = if c > 0 { &mut m_list } else { &mut n_list };
        target.extend(std::iter::repeat_n(d, c.unsigned_abs() as usize));
    }
    Ok(KurokawaForm {
        ell: 0,
        m_list,
        n_list,
    })
}

pub fn eval_matrix_zeta(z: &MatrixZeta, u: Complex64) -> Result<Complex64> {
    let coeffs = z.denominator.to_f64_coeffs();
    let den = coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * u + c);
    let scale = coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * u.norm() + c.abs());
    if den.norm() <= 1e-14 * scale.max(1.0) {
        return Err(Error::Pole(format!("ζ_U{} has a pole at u = {u}", z.n)));
    }
    Ok(den.inv())
}

/// Exact value `1/den(u)` at a rational point.
pub fn eval_matrix_zeta_exact(z: &MatrixZeta, u: &Rational) -> Result<Rational> {
    let den = z.denominator.eval(u);
    if den.is_zero() {
        return Err(Error::Pole(format!("ζ_U{} has a pole at u = {u}", z.n)));
    }
    Ok(den.recip())
}
