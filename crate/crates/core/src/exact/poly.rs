//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficients are stored in ascending degree and trailing zeros are always
//! trimmed, so structural equality is polynomial equality.

use std::fmt::Display;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<Rational>;

impl<T: Clone + Num> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x^k - 1`.
    pub fn binomial(k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[0] = T::zero() - T::one();
        coeffs[k] = T::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `u^n * p(1/u)` for a polynomial of degree at most `n`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[n - k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Division by a monic divisor, exact over any ring.
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        if !divisor.is_monic() {
            return Err(Error::NotMonic);
        }
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = rem[k + dd].clone();
            if q.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - q.clone() * d.clone();
            }
            quot[k] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn map<U: Clone + Num>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Clone + Num + Signed + Display> Polynomial<T> {
    /// Human-readable form in descending degree, e.g. `x^2 - 2/3*x + 1`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => out.push_str(&mag.to_string()),
                (_, true) => {}
                (_, false) => {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

impl<T: Clone + Num + ToPrimitive> Polynomial<T> {
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

impl IntPolynomial {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> RatPolynomial {
        self.map(|c| Rational::from_integer(c.clone()))
    }
}

impl RatPolynomial {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::from_i64(coeffs).to_rational()
    }

    /// The integer polynomial with the same coefficients, if every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    /// Splits `p = content * q` with `q` a primitive integer polynomial whose
    /// leading coefficient is positive.
    pub fn primitive_part(&self) -> (Rational, IntPolynomial) {
        if self.is_zero() {
            return (Rational::zero(), IntPolynomial::zero());
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut g = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if scaled.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let q = IntPolynomial::new(scaled.into_iter().map(|c| c / &g).collect());
        (Rational::new(g, den_lcm), q)
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::ZeroPolynomial)?.clone();
        let inv = lead.recip();
        let monic = divisor.scale(&inv);
        let (q, r) = self.div_rem_monic(&monic)?;
        Ok((q.scale(&inv), r))
    }
}

impl<T: Clone + Num> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Clone + Num> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Clone + Num> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Clone + Num> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| T::zero() - c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl<T: Clone + Num> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $f(self, rhs: Self) -> Polynomial<T> {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPolynomial::from_i64(&[0, 0]).is_zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn product_of_linear_factors() {
        let xm1 = IntPolynomial::from_i64(&[-1, 1]);
        let xp1 = IntPolynomial::from_i64(&[1, 1]);
        assert_eq!(&xm1 * &xp1.pow(2), IntPolynomial::from_i64(&[-1, -1, 1, 1]));
    }

    #[test]
    fn monic_division_is_exact() {
        let x6m1 = IntPolynomial::binomial(6);
        let x2m1 = IntPolynomial::binomial(2);
        let (q, rem) = x6m1.div_rem_monic(&x2m1).unwrap();
        assert!(rem.is_zero());
        assert_eq!(q, IntPolynomial::from_i64(&[1, 0, 1, 0, 1]));
        let non_monic = IntPolynomial::from_i64(&[1, 2]);
        assert_eq!(x6m1.div_rem_monic(&non_monic), Err(Error::NotMonic));
    }

    #[test]
    fn rational_division_and_primitive_part() {
        let p = RatPolynomial::new(vec![r(1, 1), r(-2, 3), r(1, 1)]);
        let (content, q) = p.primitive_part();
        assert_eq!(content, r(1, 3));
        assert_eq!(q, IntPolynomial::from_i64(&[3, -2, 3]));
        assert!(p.to_integer().is_none());

        let d = RatPolynomial::new(vec![r(1, 2), r(2, 1)]);
        let (quot, rem) = p.div_rem(&d).unwrap();
        assert_eq!(&(&quot * &d) + &rem, p);
        assert!(rem.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn display_is_descending() {
        let p = RatPolynomial::new(vec![r(1, 1), r(-2, 3), r(1, 1)]);
        assert_eq!(p.display_in("x"), "x^2 - 2/3*x + 1");
        assert_eq!(IntPolynomial::from_i64(&[0, -1]).display_in("u"), "-u");
        assert_eq!(IntPolynomial::zero().display_in("u"), "0");
    }

    #[test]
    fn reversal() {
        let p = IntPolynomial::from_i64(&[2, 0, 1]);
        assert_eq!(p.reversed(2), IntPolynomial::from_i64(&[1, 0, 2]));
        assert_eq!(p.reversed(3), IntPolynomial::from_i64(&[0, 1, 0, 2]));
    }
}
