//! Globally adaptive Gauss–Kronrod (7, 15) quadrature for complex integrands.

#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights at the odd-indexed Kronrod nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Clone, Copy, Debug)]
pub(crate) struct Estimate {
    pub value: Complex64,
    pub error: f64,
}

#[derive(Clone, Copy)]
struct Piece {
    a: f64,
    b: f64,
    est: Estimate,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.est.error == other.est.error
    }
}

impl Eq for Piece {}

impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.est.error.total_cmp(&other.est.error)
    }
}

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Estimate {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let dx = half * XGK[i];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[i];
        if i % 2 == 1 {
            gauss += pair * WG[i / 2];
        }
    }
    Estimate {
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
    }
}

/// Integrates `f` over `[a, b]`, bisecting the worst piece until the summed
/// error estimate drops below `max(abs_tol, rel_tol |I|)`.
pub(crate) fn integrate<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    initial_pieces: usize,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<Estimate> {
    const MAX_PIECES: usize = 4000;
    let count = initial_pieces.max(1);
    let width = (b - a) / count as f64;
    let mut heap: BinaryHeap<Piece> = (0..count)
        .map(|k| {
            let lo = a + k as f64 * width;
            let hi = if k + 1 == count { b } else { lo + width };
            Piece {
                a: lo,
                b: hi,
                est: gk15(&f, lo, hi),
            }
        })
        .collect();
    loop {
        let value: Complex64 = heap.iter().map(|p| p.est.value).sum();
        let error: f64 = heap.iter().map(|p| p.est.error).sum();
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::Quadrature("integrand is not finite".into()));
        }
        if error <= abs_tol.max(rel_tol * value.norm()) {
            return Ok(Estimate { value, error });
        }
        if heap.len() >= MAX_PIECES {
            return Err(Error::Quadrature(format!(
                "no convergence after {MAX_PIECES} subintervals (error {error:e})"
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        heap.push(Piece {
            a: worst.a,
            b: mid,
            est: gk15(&f, worst.a, mid),
        });
        heap.push(Piece {
            a: mid,
            b: worst.b,
            est: gk15(&f, mid, worst.b),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(f: impl Fn(f64) -> f64) -> impl Fn(f64) -> Complex64 {
        move |x| Complex64::new(f(x), 0.0)
    }

    #[test]
    fn polynomials_are_exact() {
        let est = gk15(&real(|x| x.powi(13) + 3.0 * x * x), 0.0, 1.0);
        assert!((est.value.re - (1.0 / 14.0 + 1.0)).abs() < 1e-15);
    }

    #[test]
    fn gaussian_and_endpoint_singularity() {
        let g = integrate(real(|x| (-x * x).exp()), -10.0, 10.0, 4, 1e-14, 1e-14).unwrap();
        assert!((g.value.re - std::f64::consts::PI.sqrt()).abs() < 1e-13);
        let s = integrate(real(|x| x.sqrt()), 0.0, 1.0, 1, 1e-12, 1e-12).unwrap();
        assert!((s.value.re - 2.0 / 3.0).abs() < 1e-11);
    }

    #[test]
    fn oscillatory_complex() {
        let est = integrate(
            |x| Complex64::new(0.0, 7.0 * x).exp(),
            0.0,
            1.0,
            1,
            1e-14,
            0.0,
        )
        .unwrap();
        let exact = (Complex64::new(0.0, 7.0).exp() - 1.0) / Complex64::new(0.0, 7.0);
        assert!((est.value - exact).norm() < 1e-13);
    }

    #[test]
    fn reports_non_convergence() {
        let bad = integrate(real(|x| 1.0 / x), 0.0, 1.0, 1, 1e-14, 0.0);
        assert!(matches!(bad, Err(Error::Quadrature(_))));
    }
}
