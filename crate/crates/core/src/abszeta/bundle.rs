//! Closed forms attached to a Kurokawa form
//! `f(x) = x^{ℓ/2} ∏(x^{m(i)} - 1) / ∏(x^{n(j)} - 1)`.
//!
//! Every quantity is a signed combination over the subsets `I` of the
//! `m`-list, evaluated at the real shift `x_I = s - deg f + m(I)` with period
//! vector `n`:
//!
//! * `Z_f(w, s) = Σ_I (-1)^{|I|} ζ_b(w, x_I, n)`
//! * `ζ_f(s)    = ∏_I Γ_b(x_I, n)^{(-1)^{|I|}}`
//! * `ε_f(s)    = ∏_I S_b(x_I, n)^{(-1)^{|I|}}`
//!
//! and they satisfy `ζ_f(D - s)^C = ε_f(s) ζ_f(s)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::{multi_gamma, multi_zeta, OmegaVector};
use crate::zeta_rational::{matrix_zeta, to_kurokawa_form, KurokawaForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Subset {
    /// `m(I) = Σ_{i ∈ I} m(i)`.
    pub m_sum: u64,
    /// `(-1)^{|I|}`.
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AbsoluteZetaBundle {
    form: KurokawaForm,
    omega: OmegaVector,
    subsets: Vec<Subset>,
    deg_f: f64,
    weight_d: i64,
    sign_c: i8,
}

impl AbsoluteZetaBundle {
    pub fn new(form: KurokawaForm) -> Result<Self> {
        let periods: Vec<f64> = form.n_list.iter().map(|&n| n as f64).collect();
        if !(1..=2).contains(&periods.len()) {
            return Err(Error::Domain(format!(
                "closed forms need b ∈ {{1, 2}}, got b = {}",
                periods.len()
            )));
        }
        let omega = OmegaVector::new(&periods)?;
        let a = form.m_list.len();
        if a > 20 {
            return Err(Error::Domain(format!("a = {a} gives too many subsets")));
        }
        let subsets = (0u32..1 << a)
            .map(|mask| {
                let m_sum = (0..a)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| form.m_list[i])
                    .sum();
                let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                Subset { m_sum, sign }
            })
            .collect();
        Ok(Self {
            deg_f: form.deg_f(),
            weight_d: form.weight_d(),
            sign_c: form.sign_c(),
            form,
            omega,
            subsets,
        })
    }

    /// The bundle of `ζ_{U_N}`; fails with `NotFinitePeriod` unless `N ∈ {2, 4}`.
    pub fn for_grover(n: usize) -> Result<Self> {
        Self::new(to_kurokawa_form(&matrix_zeta(n)?)?)
    }

    pub fn form(&self) -> &KurokawaForm {
        &self.form
    }

    pub fn omega(&self) -> &OmegaVector {
        &self.omega
    }

    pub fn subsets(&self) -> &[Subset] {
        &self.subsets
    }

    pub fn deg_f(&self) -> f64 {
        self.deg_f
    }

    pub fn weight_d(&self) -> i64 {
        self.weight_d
    }

    pub fn sign_c(&self) -> i8 {
        self.sign_c
    }

    /// Fixed point of `s ↦ D - s`.
    pub fn central_point(&self) -> f64 {
        self.weight_d as f64 / 2.0
    }

    fn shifts(&self, s: f64) -> impl Iterator<Item = (f64, i8)> + '_ {
        self.subsets
            .iter()
            .map(move |sub| (s - self.deg_f + sub.m_sum as f64, sub.sign))
    }
}

///
/// Each `ζ_b(w, ·)` has simple poles at `w = 1, …, b`. Where their residues
/// cancel across the subsets the sum is analytic, and near such a point it is
/// evaluated by the Cauchy integral over a small circle around the pole.
pub fn absolute_z(bundle: &AbsoluteZetaBundle, w: Complex64, s: f64) -> Result<Complex64> {
    let order = bundle.omega().order();
    let near = (1..=order)
        .map(|k| Complex64::new(k as f64, 0.0))
        .find(|p| (w - p).norm() < POLE_NEIGHBOURHOOD);
    match near {
        Some(pole) => absolute_z_near_pole(bundle, w, pole, s),
        None => absolute_z_direct(bundle, w, s),
    }
}

/// Distance from a term pole inside which the contour formula is used.
const POLE_NEIGHBOURHOOD: f64 = 1e-3;
/// Contour radius; the next singularity is at distance 1.
const POLE_CIRCLE_RADIUS: f64 = 0.05;
const POLE_CIRCLE_POINTS: usize = 16;
/// Residues below this are treated as cancelled.
const RESIDUE_TOLERANCE: f64 = 1e-9;

fn absolute_z_direct(bundle: &AbsoluteZetaBundle, w: Complex64, s: f64) -> Result<Complex64> {
    bundle
        .shifts(s)
        .try_fold(Complex64::new(0.0, 0.0), |acc, (x, sign)| {
            Ok(acc + multi_zeta(w, x, bundle.omega())? * f64::from(sign))
        })
}

/// Trapezoidal Cauchy integrals on `|ζ - pole| = r`: the residue
/// `(1/M) Σ Z(ζ_k)(ζ_k - pole)` and the value `(1/M) Σ Z(ζ_k)(ζ_k - pole)/(ζ_k - w)`.
fn absolute_z_near_pole(
    bundle: &AbsoluteZetaBundle,
    w: Complex64,
    pole: Complex64,
    s: f64,
) -> Result<Complex64> {
    let mut residue = Complex64::new(0.0, 0.0);
    let mut value = Complex64::new(0.0, 0.0);
    for k in 0..POLE_CIRCLE_POINTS {
        let theta = std::f64::consts::TAU * (k as f64 + 0.5) / POLE_CIRCLE_POINTS as f64;
        let offset = Complex64::from_polar(POLE_CIRCLE_RADIUS, theta);
        let zeta = pole + offset;
        let z = absolute_z_direct(bundle, zeta, s)?;
        residue += z * offset;
        value += z * offset / (zeta - w);
    }
    let m = POLE_CIRCLE_POINTS as f64;
    if (residue / m).norm() > RESIDUE_TOLERANCE {
        return Err(Error::Pole(format!(
            "Z(w, s) has a pole at w = {}",
            pole.re
        )));
    }
    Ok(value / m)
}

/// `Γ_b(x)^{sign}`, where a negative power of a pole is zero.
fn gamma_power(x: f64, sign: i8, omega: &OmegaVector) -> Result<f64> {
    match (multi_gamma(x, omega), sign > 0) {
        (Ok(g), true) => Ok(g),
        (Ok(g), false) => Ok(1.0 / g),
        (Err(Error::Pole(_)), false) => Ok(0.0),
        (Err(e), _) => Err(e),
    }
}

/// Product of `Γ_b(x)^{±1}` factors; a zero factor wins only if no factor
/// is a genuine pole.
fn gamma_product(factors: impl Iterator<Item = (f64, i8)>, omega: &OmegaVector) -> Result<f64> {
    let mut value = 1.0;
    let mut first_pole = None;
    for (x, sign) in factors {
        match gamma_power(x, sign, omega) {
            Ok(v) => value *= v,
            Err(e @ Error::Pole(_)) => {
                first_pole.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    match first_pole {
        Some(e) => Err(e),
        None if value.is_finite() => Ok(value),
        None => Err(Error::NonFinite("gamma product")),
    }
}

pub fn absolute_zeta(bundle: &AbsoluteZetaBundle, s: f64) -> Result<f64> {
    gamma_product(bundle.shifts(s), bundle.omega())
}

/// `S_b(x)^σ = Γ_b(x)^{-σ} Γ_b(|ω| - x)^{σ(-1)^b}`, expanded into gammas so
/// that zeros and poles of the sines are tracked factor by factor.
pub fn epsilon_factor(bundle: &AbsoluteZetaBundle, s: f64) -> Result<f64> {
    let total = bundle.omega().total();
    let mirror_sign: i8 = if bundle.omega().order().is_multiple_of(2) {
        1
    } else {
        -1
    };
    let factors = bundle
        .shifts(s)
        .flat_map(|(x, sign)| [(x, -sign), (total - x, sign * mirror_sign)]);
    gamma_product(factors, bundle.omega())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FunctionalEquationCheck {
    pub s: f64,
    /// `ζ_f(D - s)^C`.
    pub lhs: f64,
    /// `ε_f(s) ζ_f(s)`.
    pub rhs: f64,
    /// `|lhs - rhs| / max(1, |ζ_f(s)|)`.
    pub residual: f64,
}

pub fn functional_equation_residual(
    bundle: &AbsoluteZetaBundle,
    s: f64,
) -> Result<FunctionalEquationCheck> {
    let reflected = absolute_zeta(bundle, bundle.weight_d() as f64 - s)?;
    let lhs = if bundle.sign_c() > 0 {
        reflected
    } else {
        1.0 / reflected
    };
    let zeta = absolute_zeta(bundle, s)?;
    let rhs = epsilon_factor(bundle, s)? * zeta;
    Ok(FunctionalEquationCheck {
        s,
        lhs,
        rhs,
        residual: (lhs - rhs).abs() / zeta.abs().max(1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{gamma_real, hurwitz_zeta};
    use std::f64::consts::PI;

    fn n2() -> AbsoluteZetaBundle {
        AbsoluteZetaBundle::for_grover(2).unwrap()
    }

    fn n4() -> AbsoluteZetaBundle {
        AbsoluteZetaBundle::for_grover(4).unwrap()
    }

    #[test]
    fn subsets_and_invariants() {
        let b = n4();
        let mut sums: Vec<(u64, i8)> = b.subsets().iter().map(|s| (s.m_sum, s.sign)).collect();
        sums.sort();
        assert_eq!(sums, vec![(0, 1), (1, -1), (3, -1), (4, 1)]);
        assert_eq!(
            b.subsets().iter().map(|s| i32::from(s.sign)).sum::<i32>(),
            0
        );
        assert_eq!((b.weight_d(), b.sign_c(), b.deg_f()), (-4, 1, -4.0));
        assert_eq!(b.central_point(), -2.0);
        assert_eq!(n2().central_point(), -1.0);
    }

    #[test]
    fn empty_m_list_is_single_term() {
        let form = KurokawaForm {
            ell: 0,
            m_list: vec![],
            n_list: vec![3],
        };
        let b = AbsoluteZetaBundle::new(form).unwrap();
        assert_eq!(b.subsets().len(), 1);
        let w = Complex64::new(2.0, 0.0);
        let z = absolute_z(&b, w, 1.0).unwrap();
        let direct = multi_zeta(w, 4.0, b.omega()).unwrap();
        assert_eq!(z, direct);
    }

    #[test]
    fn removable_term_poles() {
        // Mellin-quadrature reference for N = 4 at (w, s) = (2, 3).
        let z = absolute_z(&n4(), Complex64::new(2.0, 0.0), 3.0).unwrap();
        assert!((z.re - 0.008092611417705005).abs() < 1e-12, "{z}");
        assert!(z.im.abs() < 1e-14);
        // Just outside the contour neighbourhood the direct sum takes over.
        for (b, pole) in [(n2(), 1.0), (n4(), 1.0), (n4(), 2.0)] {
            let w = Complex64::new(pole + 2e-3, 1e-4);
            let direct = absolute_z(&b, w, 2.5).unwrap();
            let contour = absolute_z_near_pole(&b, w, Complex64::new(pole, 0.0), 2.5).unwrap();
            assert!(
                (direct - contour).norm() < 1e-9 * direct.norm().max(1.0),
                "{direct} {contour}"
            );
        }
    }

    #[test]
    fn genuine_pole_is_reported() {
        let form = KurokawaForm {
            ell: 0,
            m_list: vec![],
            n_list: vec![2, 6],
        };
        let b = AbsoluteZetaBundle::new(form).unwrap();
        let at = |w: f64| absolute_z(&b, Complex64::new(w, 0.0), 1.0);
        assert!(matches!(at(2.0), Err(Error::Pole(_))));
        assert!(matches!(at(1.0 + 1e-4), Err(Error::Pole(_))));
        assert!(at(3.0).is_ok());
    }

    #[test]
    fn rejects_unsupported_orders() {
        let form = KurokawaForm {
            ell: 0,
            m_list: vec![1],
            n_list: vec![2, 3, 4],
        };
        assert!(matches!(
            AbsoluteZetaBundle::new(form),
            Err(Error::Domain(_))
        ));
        assert_eq!(
            AbsoluteZetaBundle::for_grover(3).unwrap_err(),
            Error::NotFinitePeriod(3)
        );
    }

    #[test]
    fn n2_z_is_hurwitz_difference() {
        // ζ_1(w, x, (4)) = 4^{-w} ζ_H(w, x/4)
        let w = Complex64::new(3.0, 0.0);
        let s = 4.0;
        let expected = (hurwitz_zeta(w, 1.5).unwrap() - hurwitz_zeta(w, 2.0).unwrap()) / 64.0;
        assert!((absolute_z(&n2(), w, s).unwrap() - expected).norm() < 1e-16);
    }

    #[test]
    fn n2_central_value() {
        let expected = gamma_real(0.25).unwrap() / (2.0 * gamma_real(0.75).unwrap());
        let got = absolute_zeta(&n2(), -1.0).unwrap();
        assert!(
            ((got - expected) / expected).abs() < 1e-13,
            "{got} vs {expected}"
        );
        assert!((got - 1.479_337_559_594_319_4).abs() < 1e-13);
    }

    #[test]
    fn n4_central_value_regression() {
        // mpmath: Γ_2(2)Γ_2(6)/(Γ_2(3)Γ_2(5)) for ω = (2, 6)
        let got = absolute_zeta(&n4(), -2.0).unwrap();
        assert!((got - 1.076_407_145_802_991_9).abs() < 1e-11, "{got}");
    }

    #[test]
    fn n2_epsilon_is_minus_cot() {
        let b = n2();
        for k in 1..40 {
            let s = 0.1 * k as f64;
            let cot = 1.0 / (s * PI / 4.0).tan();
            assert!(
                (epsilon_factor(&b, s).unwrap() + cot).abs() < 1e-12,
                "s = {s}"
            );
        }
        assert!((epsilon_factor(&b, 1.0).unwrap() + 1.0).abs() < 1e-13);
        assert!(matches!(epsilon_factor(&b, 0.0), Err(Error::Pole(_))));
    }

    #[test]
    fn functional_equations() {
        for s in [-1.5, -1.0, -0.5, 0.5, 1.0, 2.7] {
            let r = functional_equation_residual(&n2(), s).unwrap();
            assert!(r.residual < 1e-12, "N = 2, s = {s}: {r:?}");
        }
        for s in [-2.0, -1.0, 0.5, 1.0, -3.3, 1.7] {
            let r = functional_equation_residual(&n4(), s).unwrap();
            assert!(r.residual < 1e-10, "N = 4, s = {s}: {r:?}");
        }
    }

    #[test]
    fn n4_trivial_zero_on_both_sides() {
        // ζ(-5) contains 1/Γ_2(0) and ε(1) contains 1/S_2(8) ∝ 1/Γ_2(0).
        let r = functional_equation_residual(&n4(), 1.0).unwrap();
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
    }

    #[test]
    fn fixed_points_agree_exactly_up_to_epsilon() {
        let r = functional_equation_residual(&n2(), -1.0).unwrap();
        assert!((r.lhs - 1.479_337_559_594_319_4).abs() < 1e-13);
        assert!((epsilon_factor(&n2(), -1.0).unwrap() - 1.0).abs() < 1e-13);
        let r = functional_equation_residual(&n4(), -2.0).unwrap();
        assert!(r.residual < 1e-12);
    }
}
