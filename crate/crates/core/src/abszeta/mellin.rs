//! Numeric oracle `Z(w, s) = Γ(w)^{-1} ∫_0^∞ ζ_{U_N}(e^t) e^{-st} t^{w-1} dt`.

use num_complex::Complex64;

use super::quadrature::integrate;
use crate::error::{Error, Result};
use crate::specfun::gamma_fn;
use crate::zeta_rational::matrix_zeta;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureValue {
    pub value: Complex64,
    pub error_estimate: f64,
}

/// Absolute error target; the quadrature itself aims far lower because the
/// values of interest can be as small as `1e-9`.
pub const MELLIN_ABS_TARGET: f64 = 1e-8;
const ABS_TOL: f64 = 1e-17;
const REL_TOL: f64 = 1e-12;

pub fn mellin_z_numeric(n: usize, w: Complex64, s: Complex64) -> Result<QuadratureValue> {
    if w.re.is_nan() || w.re <= 0.0 {
        return Err(Error::Domain(format!(
            "Mellin oracle needs Re w > 0, got w = {w}"
        )));
    }
    let decay = n as f64 + s.re;
    if decay.is_nan() || decay <= 0.0 {
        return Err(Error::Domain(format!(
            "Mellin oracle needs Re s > -{n}, got s = {s}"
        )));
    }
    // ζ_{U_N}(e^t) = e^{-Nt} / q(e^{-t}) with q(v) = v^N den(1/v).
    let den = matrix_zeta(n)?.denominator.to_f64_coeffs();
    let q = move |v: f64| den.iter().fold(0.0, |acc, &c| acc * v + c);
    let base = move |t: f64| (-(s + n as f64) * t).exp() / q((-t).exp());

    // [0, 1] with t = τ^{1/Re w}: t^{w-1} dt = τ^{i Im w / Re w} dτ / Re w.
    let wr = w.re;
    let twist = Complex64::new(0.0, w.im / wr);
    let near = integrate(
        |tau: f64| {
            let t = tau.powf(1.0 / wr);
            base(t) * (twist * tau.ln()).exp() / wr
        },
        0.0,
        1.0,
        4,
        ABS_TOL,
        REL_TOL,
    )?;

    // [1, T] with T past the point where e^{-λt} t^{Re w - 1} / λ < ABS_TOL.
    let tail_bound = |t: f64| (-decay * t + (wr - 1.0) * t.ln()).exp() / decay;
    let mut end = 2.0;
    while tail_bound(end) > ABS_TOL * 1e-2 || (wr - 1.0) / end > 0.5 * decay {
        end *= 1.5;
        if end > 1e6 {
            return Err(Error::Quadrature("integrand decays too slowly".into()));
        }
    }
    let far = integrate(
        |t: f64| base(t) * ((w - 1.0) * t.ln()).exp(),
        1.0,
        end,
        ((end - 1.0).ceil() as usize).min(256),
        ABS_TOL,
        REL_TOL,
    )?;

    let gamma = gamma_fn(w)?;
    let error = (near.error + far.error + tail_bound(end)) / gamma.norm();
    Ok(QuadratureValue {
        value: (near.value + far.value) / gamma,
        error_estimate: error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn matches_mpmath_quadrature() {
        // mpmath quad at 40 digits of Γ(w)^{-1} ∫ e^{-st} t^{w-1} / det(I - e^t U_N) dt
        let reference = [
            (2, 3.0, 4.0, 0.003_317_834_671_211_964),
            (3, 6.0, 5.0, 2.779_098_453_507_405e-6),
            (4, 6.0, 5.0, 1.070_128_392_117_468_6e-6),
            (5, 8.0, 6.0, 2.152_467_588_039_042e-9),
            (2, 2.0, 3.0, 0.027_076_705_288_330_13),
            (4, 2.0, 3.0, 0.008_092_611_417_705_005),
        ];
        for (n, w, s, expected) in reference {
            let got = mellin_z_numeric(n, c(w), c(s)).unwrap();
            assert!(
                rel(got.value.re, expected) < 1e-10,
                "({n}, {w}, {s}): {got:?}"
            );
            assert!(got.value.im.abs() < 1e-20);
            assert!(got.error_estimate < MELLIN_ABS_TARGET);
        }
    }

    #[test]
    fn fractional_and_complex_w() {
        // w = 1/2 exercises the substitution; compare against a w = 1/2 value
        // obtained from the closed form ζ_1(w, s+2, (4)) - ζ_1(w, s+4, (4)).
        use crate::specfun::hurwitz_zeta;
        for w in [c(0.5), c(1.5), Complex64::new(2.0, 0.7)] {
            let s = 1.0;
            let closed = (hurwitz_zeta(w, 0.75).unwrap() - hurwitz_zeta(w, 1.25).unwrap())
                * (-w * 4f64.ln()).exp();
            let got = mellin_z_numeric(2, w, c(s)).unwrap();
            assert!(
                (got.value - closed).norm() < 1e-10,
                "w = {w}: {got:?} vs {closed}"
            );
        }
    }

    #[test]
    fn domain_checks() {
        assert!(matches!(
            mellin_z_numeric(3, c(0.0), c(1.0)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            mellin_z_numeric(3, c(2.0), c(-3.0)),
            Err(Error::Domain(_))
        ));
        assert!(mellin_z_numeric(3, c(2.0), c(-2.5)).is_ok());
    }
}
