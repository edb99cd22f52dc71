//! Hurwitz zeta `ζ_H(s, a) = Σ_{k≥0} (k + a)^{-s}` continued to all `s ≠ 1`
//! by Euler–Maclaurin summation.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `B_{2j} / (2j)!` for `j = 1..=10`.
pub(crate) const BERNOULLI_OVER_FACTORIAL: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3_617.0 / 10_670_622_842_880_000.0,
    43_867.0 / 5_109_094_217_170_944_000.0,
    -174_611.0 / 802_857_662_698_291_200_000.0,
];

/// Step for complex-step differentiation in `s`.
pub(crate) const COMPLEX_STEP: f64 = 1e-20;

/// `b^{-s}` for real `b > 0`.
pub(crate) fn pow_neg(b: f64, s: Complex64) -> Complex64 {
    (-s * b.ln()).exp()
}

fn shift_for(s: Complex64, a: f64) -> usize {
    let target = 8.0 + 4.0 * s.norm();
    (target - a).ceil().max(0.0) as usize
}

/// `Σ_{j=1}^{10} B_{2j}/(2j)! · s(s+1)⋯(s+2j-2) · b^{-s-2j+1}`.
pub(crate) fn bernoulli_correction(s: Complex64, b: f64) -> Complex64 {
    let mut rising = s;
    let mut power = pow_neg(b, s + 1.0);
    let inv_b2 = 1.0 / (b * b);
    let mut sum = Complex64::new(0.0, 0.0);
    for (j, &c) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        sum += rising * power * c;
        let k = 2.0 * (j + 1) as f64;
        rising *= (s + (k - 1.0)) * (s + k);
        power *= inv_b2;
    }
    sum
}

/// The Euler–Maclaurin coefficients split as `(c_1, [(j, c_j (s)_{2j-1})]_{j≥2})`,
/// where `(s)_k` is the rising factorial. The `j = 1` term is `c_1 · s`, kept
/// apart so callers can pair the factor `s` with a pole at `s + 1 = 1`.
pub(crate) fn bernoulli_correction_terms(s: Complex64) -> (f64, Vec<(usize, Complex64)>) {
    let mut rising = s * (s + 1.0) * (s + 2.0);
    let mut rest = Vec::with_capacity(BERNOULLI_OVER_FACTORIAL.len() - 1);
    for (idx, &c) in BERNOULLI_OVER_FACTORIAL.iter().enumerate().skip(1) {
        let j = idx + 1;
        rest.push((j, rising * c));
        let k = 2.0 * j as f64;
        rising *= (s + (k - 1.0)) * (s + k);
    }
    (BERNOULLI_OVER_FACTORIAL[0], rest)
}

struct Split {
    head: Complex64,
    b: f64,
}

fn split(s: Complex64, a: f64) -> Result<Split> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("Hurwitz zeta needs a > 0, got {a}")));
    }
    let m = shift_for(s, a);
    let head = (0..m).map(|k| pow_neg(k as f64 + a, s)).sum();
    Ok(Split {
        head,
        b: a + m as f64,
    })
}

fn finite(z: Complex64, what: &'static str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}

pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    if (s - 1.0).norm() < 1e-300 {
        return Err(Error::Pole("ζ_H(s, a) has a pole at s = 1".into()));
    }
    let Split { head, b } = split(s, a)?;
    let one_minus_s = Complex64::new(1.0, 0.0) - s;
    let value = head
        + pow_neg(b, -one_minus_s) / (s - 1.0)
        + pow_neg(b, s) * 0.5
        + bernoulli_correction(s, b);
    finite(value, "hurwitz_zeta")
}

/// `(s - 1) ζ_H(s, a)`, analytic through `s = 1` where it equals 1.
pub fn hurwitz_zeta_scaled(s: Complex64, a: f64) -> Result<Complex64> {
    let Split { head, b } = split(s, a)?;
    let one_minus_s = Complex64::new(1.0, 0.0) - s;
    let value = (s - 1.0) * (head + pow_neg(b, s) * 0.5 + bernoulli_correction(s, b))
        + pow_neg(b, -one_minus_s);
    finite(value, "hurwitz_zeta_scaled")
}

/// `∂/∂s ζ_H(s, a)` at `s = 0`, by complex-step differentiation of the
/// continuation. Lerch: equals `log Γ(a) - log(2π)/2`.
pub fn hurwitz_zeta_s0_derivative(a: f64) -> Result<f64> {
    let v = hurwitz_zeta(Complex64::new(0.0, COMPLEX_STEP), a)?;
    Ok(v.im / COMPLEX_STEP)
}

pub fn hurwitz_zeta_real(s: f64, a: f64) -> Result<f64> {
    hurwitz_zeta(Complex64::new(s, 0.0), a).map(|z| z.re)
}
