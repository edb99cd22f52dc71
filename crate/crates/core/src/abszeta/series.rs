//! The general-`N` expansion. With `c = 1 - 2/N` and
//! `ζ_{U_N}(x) = x^{-N} (1 + 1/x)^{-(N-2)} (1 - 2c/x + 1/x^2)^{-1}`,
//! expanding in `1/x` gives
//!
//! `Z(w, s) = (-1)^{N-2} Σ_{m, R, ℓ} (-1)^m C(N-2, m) C(R-1, N-3) P_ℓ (2R + ℓ + 2 - m + s)^{-w}`
//!
//! where `R = Σ_q (r_q + 1)` collapses the `N - 2` geometric series and
//! `C(R-1, N-3)` counts its compositions. For `N = 2` only `R = 0` occurs.
//! Formally `ζ_f(s) = ∏ (2R + ℓ + 2 - m + s)^{-(-1)^{N+m} C(N-2, m) C(R-1, N-3) P_ℓ}`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use super::psequence::{binomial, p_recurrence};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Whether the `m`-sum carries `C(N-2, m)`. Both conventions coincide for
/// `N ≤ 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BinomialWeight {
    #[default]
    Included,
    Omitted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesConfig {
    pub l_max: usize,
    pub r_max: usize,
    pub binomial: BinomialWeight,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            l_max: 400,
            r_max: 400,
            binomial: BinomialWeight::Included,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub truncation_estimate: f64,
    /// Fitted power-law decay of the `R`-shells (`None` for `N = 2`).
    pub r_decay_exponent: Option<f64>,
    /// Fitted power-law decay of the `ℓ`-columns.
    pub l_decay_exponent: f64,
}

/// `(-1)^{N-2} (-1)^m C(N-2, m)` (or without the binomial), `m = 0..=N-2`.
fn m_weights(n: usize, binomial_weight: BinomialWeight) -> Vec<f64> {
    let parts = n - 2;
    (0..=parts)
        .map(|m| {
            let sign = if (parts + m).is_multiple_of(2) {
                1.0
            } else {
                -1.0
            };
            match binomial_weight {
                BinomialWeight::Included => sign * binomial(parts, m).to_f64().unwrap_or(f64::MAX),
                BinomialWeight::Omitted => sign,
            }
        })
        .collect()
}

/// `(R, C(R-1, N-3))` over the truncation window.
fn r_shells(n: usize, r_max: usize) -> Result<Vec<(usize, f64)>> {
    let parts = n - 2;
    if parts == 0 {
        return Ok(vec![(0, 1.0)]);
    }
    if r_max < parts {
        return Err(Error::Domain(format!(
            "R_max = {r_max} is below N - 2 = {parts}"
        )));
    }
    Ok((parts..=r_max)
        .map(|r| (r, binomial(r - 1, parts - 1).to_f64().unwrap_or(f64::MAX)))
        .collect())
}

fn validate(n: usize, s_re: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidSize(n));
    }
    if s_re.is_nan() || s_re <= -(n as f64) {
        return Err(Error::Domain(format!(
            "series needs Re s > -{n}, got {s_re}"
        )));
    }
    Ok(())
}

/// Decay exponent `p` of `g(k) ≈ A k^{-p}` from samples at `k_lo < k_hi`.
fn power_law(g_lo: f64, g_hi: f64, k_lo: f64, k_hi: f64) -> f64 {
    if g_hi == 0.0 {
        return f64::INFINITY;
    }
    (g_lo / g_hi).ln() / (k_hi / k_lo).ln()
}

/// Tail `Σ_{k > K} A k^{-p} ≈ g(K) K / (p - 1)`.
fn power_tail(g_end: f64, end: f64, p: f64) -> f64 {
    if p.is_infinite() {
        0.0
    } else {
        g_end * end / (p - 1.0)
    }
}

pub fn general_z_series(
    n: usize,
    w: Complex64,
    s: Complex64,
    config: &SeriesConfig,
) -> Result<SeriesValue> {
    validate(n, s.re)?;
    let l_max = config.l_max.max(2);
    let weights = m_weights(n, config.binomial);
    let shells = r_shells(n, config.r_max)?;
    let p: Vec<f64> = p_recurrence(n, l_max)?
        .iter()
        .map(|v| v.to_f64().unwrap_or(f64::NAN))
        .collect();
    let p_bound = p.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    // Any block sum Σ_{a<ℓ≤b} P_ℓ is bounded by twice the largest prefix sum.
    let block_bound = 2.0
        * p.iter()
            .scan(0.0, |acc, v| {
                *acc += v;
                Some(f64::abs(*acc))
            })
            .fold(0.0f64, f64::max);
    // For real w and s every (e + s)^{-w} decreases in e, so Abel summation
    // bounds each ℓ-tail by block_bound times its first omitted term.
    let monotone = w.im == 0.0 && s.im == 0.0 && w.re > 0.0;

    // powers[e] = (e + s)^{-w} for every offset e in the window.
    let e_max = 2 * shells.last().map_or(0, |&(r, _)| r) + l_max + 3;
    let powers: Vec<Complex64> = (0..=e_max)
        .map(|e| (-w * (s + e as f64).ln()).exp())
        .collect();

    let mut value = Complex64::new(0.0, 0.0);
    let mut shell_size = Vec::with_capacity(shells.len());
    let mut column_hi = 0.0;
    let mut column_lo = 0.0;
    let mut abel_tail = 0.0;
    let l_lo = l_max / 2;
    for &(r, mult) in &shells {
        let mut shell_abs = 0.0;
        for (m, &wm) in weights.iter().enumerate() {
            let start = 2 * r + 2 - m;
            let mut inner = Complex64::new(0.0, 0.0);
            let mut inner_abs = 0.0;
            for (l, &pl) in p.iter().enumerate() {
                let term = powers[start + l];
                inner += term * pl;
                inner_abs += pl.abs() * term.norm();
            }
            value += inner * (wm * mult);
            shell_abs += inner_abs * (wm * mult).abs();
            let scale = (wm * mult).abs() * p_bound;
            column_hi += scale * powers[start + l_max].norm();
            column_lo += scale * powers[start + l_lo].norm();
            abel_tail += (wm * mult).abs() * block_bound * powers[start + l_max + 1].norm();
        }
        shell_size.push(shell_abs);
    }

    let l_exp = power_law(column_lo, column_hi, l_lo as f64, l_max as f64);
    if l_exp <= 1.0 {
        return Err(Error::Divergent(format!(
            "ℓ-columns decay like ℓ^-{l_exp:.3} for N = {n}, w = {w}"
        )));
    }
    let mut estimate = power_tail(column_hi, l_max as f64, l_exp);
    if monotone {
        estimate = estimate.min(abel_tail);
    }

    let mut r_exp = None;
    if n > 2 {
        let last = shells.len() - 1;
        let (r_hi, _) = shells[last];
        let lo_index = shells.iter().position(|&(r, _)| 2 * r >= r_hi).unwrap_or(0);
        let (r_lo, _) = shells[lo_index];
        if r_lo == r_hi {
            return Err(Error::Domain(format!(
                "R_max = {} is too small to estimate the tail",
                config.r_max
            )));
        }
        let exp = power_law(
            shell_size[lo_index],
            shell_size[last],
            r_lo as f64,
            r_hi as f64,
        );
        if exp <= 1.0 {
            return Err(Error::Divergent(format!(
                "R-shells decay like R^-{exp:.3} for N = {n}, w = {w}"
            )));
        }
        estimate += power_tail(shell_size[last], r_hi as f64, exp);
        r_exp = Some(exp);
    }

    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::NonFinite("general_z_series"));
    }
    Ok(SeriesValue {
        value,
        truncation_estimate: estimate,
        r_decay_exponent: r_exp,
        l_decay_exponent: l_exp,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProductFactor {
    /// The factor is `(offset + s)^{exponent}`.
    pub offset: u64,
    pub exponent: Rational,
}

/// A finite window of the formal product for `ζ_f(s)`. It is a diagnostic
/// view of a regularized product, never a converged value.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedProduct {
    pub value: f64,
    pub log_value: f64,
    /// Aggregated by offset, ascending; zero exponents are kept.
    pub factors: Vec<ProductFactor>,
    pub non_convergent: bool,
    pub caveat: String,
}

pub fn general_abszeta_truncated(
    n: usize,
    s: f64,
    config: &SeriesConfig,
) -> Result<TruncatedProduct> {
    validate(n, s)?;
    let parts = n - 2;
    let p = p_recurrence(n, config.l_max)?;
    let shells: Vec<(usize, Rational)> = if parts == 0 {
        vec![(0, Rational::from_integer(1.into()))]
    } else {
        if config.r_max < parts {
            return Err(Error::Domain(format!(
                "R_max = {} is below N - 2 = {parts}",
                config.r_max
            )));
        }
        (parts..=config.r_max)
            .map(|r| (r, Rational::from_integer(binomial(r - 1, parts - 1))))
            .collect()
    };
    let mut exponents: BTreeMap<u64, Rational> = BTreeMap::new();
    for m in 0..=parts {
        let weight = match config.binomial {
            BinomialWeight::Included => Rational::from_integer(binomial(parts, m)),
            BinomialWeight::Omitted => Rational::from_integer(1.into()),
        };
        // exponent = -(-1)^{N+m} · weight · mult · P_ℓ
        let signed = if (n + m).is_multiple_of(2) {
            -weight
        } else {
            weight
        };
        for (r, mult) in &shells {
            let factor = &signed * mult;
            for (l, pl) in p.iter().enumerate() {
                let offset = (2 * r + l + 2 - m) as u64;
                *exponents.entry(offset).or_insert_with(Rational::zero) += &factor * pl;
            }
        }
    }
    let mut log_value = 0.0;
    for (&offset, exponent) in &exponents {
        if exponent.is_zero() {
            continue;
        }
        let base = offset as f64 + s;
        if base <= 0.0 {
            return Err(Error::Domain(format!(
                "factor base {offset} + s = {base} is not positive"
            )));
        }
        log_value += exponent.to_f64().unwrap_or(f64::NAN) * base.ln();
    }
    let value = log_value.exp();
    if !value.is_finite() || value.is_nan() {
        return Err(Error::NonFinite("general_abszeta_truncated"));
    }
    let largest = exponents
        .values()
        .map(|e| e.abs())
        .max()
        .unwrap_or_default();
    Ok(TruncatedProduct {
        value,
        log_value,
        factors: exponents
            .into_iter()
            .map(|(offset, exponent)| ProductFactor { offset, exponent })
            .collect(),
        non_convergent: true,
        caveat: format!(
            "finite window ℓ ≤ {}, R ≤ {} of a zeta-regularized product; \
             the partial products do not converge (largest |exponent| {largest})",
            config.l_max, config.r_max
        ),
    })
}
