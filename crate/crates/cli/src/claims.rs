//! The ten acceptance criteria as runnable checks. Each reports its worst
//! measured error against its tolerance and its wall time against a budget.

use std::f64::consts::PI;
use std::time::Instant;

use grover_abszeta_core::abszeta::{
    absolute_z, absolute_zeta, epsilon_factor, functional_equation_residual, general_z_series,
    mellin_z_numeric, p_sequence, AbsoluteZetaBundle, SeriesConfig,
};
use grover_abszeta_core::exact::{char_poly, RatPolynomial};
use grover_abszeta_core::grover::{self, default_bruteforce_cutoff, PeriodMethod};
use grover_abszeta_core::specfun::{
    gamma_real, hurwitz_zeta, hurwitz_zeta_real, multi_gamma, multi_sine, multi_zeta, OmegaVector,
};
use grover_abszeta_core::zeta_rational::{
    check_automorphy, matrix_zeta, to_kurokawa_form, KurokawaForm, RationalFunction,
};
use grover_abszeta_core::{Error, Period, Rational};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Measurement {
    pub label: String,
    /// `None` for exact checks.
    pub measured: Option<f64>,
    pub tolerance: Option<f64>,
    pub passed: bool,
}

impl Measurement {
    fn exact(label: impl Into<String>, passed: bool) -> Self {
        Self {
            label: label.into(),
            measured: None,
            tolerance: None,
            passed,
        }
    }

    fn numeric(label: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        Self {
            label: label.into(),
            measured: Some(measured),
            tolerance: Some(tolerance),
            passed: measured <= tolerance,
        }
    }

    /// A numeric check whose evaluation failed outright.
    fn failed(label: impl Into<String>, tolerance: f64) -> Self {
        Self {
            label: label.into(),
            measured: Some(f64::INFINITY),
            tolerance: Some(tolerance),
            passed: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimOutcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub measurements: Vec<Measurement>,
    pub notes: Vec<String>,
    pub elapsed_s: f64,
    pub budget_s: f64,
}

impl ClaimOutcome {
    /// The measurement closest to (or furthest past) its tolerance.
    pub fn worst(&self) -> Option<&Measurement> {
        let ratio = |m: &Measurement| match (m.measured, m.tolerance) {
            (Some(x), Some(t)) => x / t,
            _ if m.passed => 0.0,
            _ => f64::INFINITY,
        };
        self.measurements
            .iter()
            .max_by(|a, b| ratio(a).total_cmp(&ratio(b)))
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let (measured, tol) = match self.worst() {
            Some(Measurement {
                measured: Some(x),
                tolerance: Some(t),
                ..
            }) => (format!("{x:.2e}"), format!("{t:.0e}")),
            _ => ("exact".into(), "exact".into()),
        };
        format!(
            "{status} {:>2} {:<44} measured {:>9} tol {:>6}  {:.2}s/{}s",
            self.id, self.title, measured, tol, self.elapsed_s, self.budget_s
        )
    }
}

struct Claim {
    id: usize,
    title: &'static str,
    budget_s: f64,
    run: fn(f64, &mut Vec<String>) -> Vec<Measurement>,
}

const CLAIMS: [Claim; 10] = [
    Claim {
        id: 1,
        title: "exact identities and char polys, N = 2..32",
        budget_s: 5.0,
        run: exact_identities,
    },
    Claim {
        id: 2,
        title: "periods 4, 6 and INFINITE, N = 2..64",
        budget_s: 10.0,
        run: periods,
    },
    Claim {
        id: 3,
        title: "matrix zeta automorphy, N = 2..32",
        budget_s: 5.0,
        run: automorphy,
    },
    Claim {
        id: 4,
        title: "Kurokawa forms for N = 2 and N = 4",
        budget_s: 1.0,
        run: kurokawa_forms,
    },
    Claim {
        id: 5,
        title: "closed-form Z against Mellin quadrature",
        budget_s: 60.0,
        run: closed_form_vs_mellin,
    },
    Claim {
        id: 6,
        title: "functional equations and ε = -cot(sπ/4)",
        budget_s: 30.0,
        run: functional_equations,
    },
    Claim {
        id: 7,
        title: "central value Γ(1/4)/(2Γ(3/4))",
        budget_s: 5.0,
        run: central_value,
    },
    Claim {
        id: 8,
        title: "P-sequence closed form, recurrence, periods",
        budget_s: 1.0,
        run: p_sequences,
    },
    Claim {
        id: 9,
        title: "general-N series against Mellin quadrature",
        budget_s: 120.0,
        run: general_series,
    },
    Claim {
        id: 10,
        title: "special-function property suite",
        budget_s: 60.0,
        run: special_functions,
    },
];

pub const CLAIM_COUNT: usize = CLAIMS.len();

pub fn claim_title(id: usize) -> Option<&'static str> {
    CLAIMS.iter().find(|c| c.id == id).map(|c| c.title)
}

/// Runs criterion `id` (1-based) with every numeric tolerance multiplied by
/// `scale`.
pub fn run_claim(id: usize, scale: f64) -> Option<ClaimOutcome> {
    let claim = CLAIMS.iter().find(|c| c.id == id)?;
    let mut notes = Vec::new();
    let start = Instant::now();
    let measurements = (claim.run)(scale, &mut notes);
    let elapsed_s = start.elapsed().as_secs_f64();
    let within_budget = elapsed_s <= claim.budget_s;
    if !within_budget {
        notes.push(format!("exceeded the {}s time budget", claim.budget_s));
    }
    Some(ClaimOutcome {
        id: claim.id,
        title: claim.title,
        passed: within_budget && !measurements.is_empty() && measurements.iter().all(|m| m.passed),
        measurements,
        notes,
        elapsed_s,
        budget_s: claim.budget_s,
    })
}

/// Runs the selected criteria (all when `only` is empty) one after another,
/// so that each timing is uncontended.
pub fn run_all(scale: f64, only: &[usize]) -> Vec<ClaimOutcome> {
    CLAIMS
        .iter()
        .filter(|c| only.is_empty() || only.contains(&c.id))
        .filter_map(|c| run_claim(c.id, scale))
        .collect()
}

fn exact_all<T: Sync>(
    label: &str,
    items: Vec<T>,
    notes: &mut Vec<String>,
    check: impl Fn(&T) -> Result<(), String> + Sync,
) -> Measurement {
    let failures: Vec<String> = items.par_iter().filter_map(|x| check(x).err()).collect();
    let passed = failures.is_empty();
    notes.extend(failures);
    Measurement::exact(label, passed)
}

fn exact_identities(_scale: f64, notes: &mut Vec<String>) -> Vec<Measurement> {
    let sizes: Vec<usize> = (2..=32).collect();
    vec![exact_all(
        "R_D² = R_f² = UᵀU = I, char poly = closed form",
        sizes,
        notes,
        |&n| {
            let ops = grover::build(n).map_err(|e| e.to_string())?;
            let square = |m: &grover_abszeta_core::RationalMatrix| {
                m.mul(m).map(|p| p.is_identity()).unwrap_or(false)
            };
            if !square(&ops.r_d) || !square(&ops.r_f) {
                return Err(format!("N = {n}: a reflection does not square to I"));
            }
            if !ops
                .u
                .transpose()
                .mul(&ops.u)
                .map(|p| p.is_identity())
                .unwrap_or(false)
            {
                return Err(format!("N = {n}: UᵀU ≠ I"));
            }
            let closed = grover::closed_form_char_poly(n).map_err(|e| e.to_string())?;
            if char_poly(&ops.u) != closed {
                return Err(format!("N = {n}: char poly differs from the closed form"));
            }
            Ok(())
        },
    )]
}

fn periods(_scale: f64, notes: &mut Vec<String>) -> Vec<Measurement> {
    let expect = |n: usize| match n {
        2 => Period::Finite(4),
        4 => Period::Finite(6),
        _ => Period::Infinite,
    };
    let cyclotomic = exact_all(
        "cyclotomic method, N = 2..64",
        (2..=64).collect(),
        notes,
        |&n| match grover::period(n, PeriodMethod::Cyclotomic) {
            Ok(p) if p == expect(n) => Ok(()),
            other => Err(format!("N = {n}: cyclotomic period {other:?}")),
        },
    );
    let fast = exact_all(
        "fast path agrees, N = 2..64",
        (2..=64).collect(),
        notes,
        |&n| match grover::period(n, PeriodMethod::QuadraticFastPath) {
            Ok(p) if p == expect(n) => Ok(()),
            other => Err(format!("N = {n}: fast-path period {other:?}")),
        },
    );
    let brute = exact_all("brute force, N = 2 and 4", vec![2usize, 4], notes, |&n| {
        let cutoff = default_bruteforce_cutoff(n);
        match grover::period(n, PeriodMethod::BruteForce { cutoff }) {
            Ok(p) if p == expect(n) => Ok(()),
            other => Err(format!("N = {n}: brute-force period {other:?}")),
        }
    });
    vec![cyclotomic, fast, brute]
}

fn automorphy(_scale: f64, notes: &mut Vec<String>) -> Vec<Measurement> {
    vec![exact_all(
        "ζ(1/u) = (-1)^N det(U) u^N ζ(u)",
        (2..=32).collect(),
        notes,
        |&n| {
            let z = matrix_zeta(n).map_err(|e| e.to_string())?;
            let det = grover::build(n).map_err(|e| e.to_string())?.u.determinant();
            let c = if n % 2 == 0 { det } else { -det };
            // ζ(1/u) = u^N / rev(den)(u) and C u^N ζ(u) = C u^N / den(u).
            let u_n = RatPolynomial::monomial(Rational::from_integer(1.into()), n);
            let lhs = RationalFunction::new(u_n.clone(), z.denominator.reversed(n));
            let rhs = RationalFunction::new(u_n.scale(&c), z.denominator.clone());
            if !lhs.equivalent(&rhs) {
                return Err(format!("N = {n}: automorphy identity fails"));
            }
            match check_automorphy(&z) {
                Ok((w, sign)) if w == -(n as i64) && Rational::from_integer(sign.into()) == c => {
                    Ok(())
                }
                other => Err(format!("N = {n}: weight/sign {other:?}")),
            }
        },
    )]
}

fn kurokawa_forms(_scale: f64, notes: &mut Vec<String>) -> Vec<Measurement> {
    let cases = vec![
        (
            2usize,
            KurokawaForm {
                ell: 0,
                m_list: vec![2],
                n_list: vec![4],
            },
            -2i64,
        ),
        (
            4,
            KurokawaForm {
                ell: 0,
                m_list: vec![1, 3],
                n_list: vec![2, 6],
            },
            -4,
        ),
    ];
    let mut out = vec![exact_all(
        "(ℓ, m, n, D, C) and exact reconstruction",
        cases,
        notes,
        |(n, want, d)| {
            let z = matrix_zeta(*n).map_err(|e| e.to_string())?;
            let form = to_kurokawa_form(&z).map_err(|e| e.to_string())?;
            if form != *want || form.weight_d() != *d || form.sign_c() != 1 {
                return Err(format!("N = {n}: got {form:?}"));
            }
            let back = form.to_rational_function().map_err(|e| e.to_string())?;
            if !back.equivalent(&z.as_rational_function()) {
                return Err(format!("N = {n}: reconstruction differs from ζ_U"));
            }
            Ok(())
        },
    )];
    let refused = matches!(
        to_kurokawa_form(&matrix_zeta(3).expect("N = 3")),
        Err(Error::NotFinitePeriod(3))
    );
    out.push(Measurement::exact("N = 3 has no Kurokawa form", refused));
    out
}

fn closed_form_vs_mellin(scale: f64, notes: &mut Vec<String>) -> Vec<Measurement> {
    let mut out = Vec::new();
    for (n, tol) in [(2usize, 1e-6), (4, 1e-5)] {
        let tol = tol * scale;
        let label = format!("N = {n}, w ∈ {{2,3,4}}, s ∈ {{1..5}}");
        let Ok(bundle) = AbsoluteZetaBundle::for_grover(n) else {
            out.push(Measurement::failed(label, tol));
            continue;
        };
        let grid: Vec<(f64, f64)> = [2.0, 3.0, 4.0]
            .iter()
            .flat_map(|&w| (1..=5).map(move |s| (w, s as f64)))
            .collect();
        let errors: Vec<Result<f64, String>> = grid
            .par_iter()
            .map(|&(w, s)| {
                let w = Complex64::new(w, 0.0);
                let closed = absolute_z(&bundle, w, s).map_err(|e| e.to_string())?;
                let quad =
                    mellin_z_numeric(n, w, Complex64::new(s, 0.0)).map_err(|e| e.to_string())?;
                Ok((closed - quad.value).norm())
            })
            .collect();
        out.push(worst_of(label, errors, tol, notes));
    }
    out
}

fn worst_of(
    label: String,
    errors: Vec<Result<f64, String>>,
    tol: f64,
    notes: &mut Vec<String>,
) -> Measurement {
    let mut worst: f64 = 0.0;
    for e in errors {
        match e {
            Ok(x) => worst = worst.max(x),
            Err(msg) => {
                notes.push(format!("{label}: {msg}"));
                return Measurement::failed(label, tol);
            }
        }
    }
    Measurement::numeric(label, worst, tol)
}

fn functional_equations(scale: f64, notes: &mut Vec<String>) -> Vec<Measurement> {
    let mut out = Vec::new();
    let grids: [(usize, &[f64], f64); 2] = [
        (2, &[-1.5, -1.0, -0.5, 0.5, 1.0, 2.7], 1e-6),
        (4, &[-2.0, -1.0, 0.5, 1.0], 1e-4),
    ];
    for (n, grid, tol) in grids {
        let tol = tol * scale;
        let label = format!("N = {n} residual on {grid:?}");
        let Ok(bundle) = AbsoluteZetaBundle::for_grover(n) else {
            out.push(Measurement::failed(label, tol));
            continue;
        };
        let errors = grid
            .par_iter()
            .map(|&s| {
                functional_equation_residual(&bundle, s)
                    .map(|c| c.residual)
                    .map_err(|e| e.to_string())
            })
            .collect();
        out.push(worst_of(label, errors, tol, notes));
    }
    let tol = 1e-8 * scale;
    let label = "N = 2: |ε(s) + cot(sπ/4)|, s = 0.01..3.99".to_string();
    match AbsoluteZetaBundle::for_grover(2) {
        Ok(bundle) => {
            let errors = (1..400)
                .into_par_iter()
                .map(|k| {
                    let s = k as f64 / 100.0;
                    let eps = epsilon_factor(&bundle, s).map_err(|e| e.to_string())?;
                    Ok((eps + 1.0 / (s * PI / 4.0).tan()).abs())
                })
                .collect();
            out.push(worst_of(label, errors, tol, notes));
        }
        Err(_) => out.push(Measurement::failed(label, tol)),
    }
    out
}

fn central_value(scale: f64, notes: &mut Vec<String>) -> Vec<Measurement> {
    let tol = 1e-7 * scale;
    let label = "relative error of ζ(-1) for N = 2";
    let value = AbsoluteZetaBundle::for_grover(2).and_then(|b| absolute_zeta(&b, -1.0));
    let reference = gamma_real(0.25).and_then(|a| Ok(a / (2.0 * gamma_real(0.75)?)));
    match (value, reference) {
        (Ok(v), Ok(r)) => {
            notes.push(format!("ζ(-1) = {v:.16}, Γ(1/4)/(2Γ(3/4)) = {r:.16}"));
            vec![Measurement::numeric(label, ((v - r) / r).abs(), tol)]
        }
        (v, r) => {
            notes.push(format!("evaluation failed: {v:?} / {r:?}"));
            vec![Measurement::failed(label, tol)]
        }
    }
}

fn p_sequences(_scale: f64, notes: &mut Vec<String>) -> Vec<Measurement> {
    let agree = exact_all(
        "closed form = recurrence, ℓ ≤ 200, n = 2..12",
        (2..=12).collect(),
        notes,
        |&n| p_sequence(n, 200).map(|_| ()).map_err(|e| e.to_string()),
    );
    let periodic = |n: usize, pattern: &[i64]| -> Result<(), String> {
        let p = p_sequence(n, 200).map_err(|e| e.to_string())?;
        for (l, v) in p.values.iter().enumerate() {
            if *v != Rational::from_integer(pattern[l % pattern.len()].into()) {
                return Err(format!("n = {n}: P_{l} = {v}"));
            }
        }
        Ok(())
    };
    let cases = vec![
        (4usize, vec![1i64, 1, 0, -1, -1, 0]),
        (2, vec![1, 0, -1, 0]),
    ];
    let patterns = exact_all(
        "n = 4 period 6, n = 2 period 4",
        cases,
        notes,
        |(n, pat)| periodic(*n, pat),
    );
    vec![agree, patterns]
}

fn general_series(scale: f64, notes: &mut Vec<String>) -> Vec<Measurement> {
    let cfg = SeriesConfig::default();
    let cases = [
        (2usize, 3.0, 4.0),
        (3, 6.0, 5.0),
        (4, 6.0, 5.0),
        (5, 8.0, 6.0),
    ];
    let results: Vec<_> = cases
        .par_iter()
        .map(|&(n, w, s)| {
            let (w, s) = (Complex64::new(w, 0.0), Complex64::new(s, 0.0));
            let series = general_z_series(n, w, s, &cfg)?;
            let quad = mellin_z_numeric(n, w, s)?;
            Ok::<_, Error>((series, quad))
        })
        .collect();
    let mut out = Vec::new();
    for (&(n, w, s), r) in cases.iter().zip(results) {
        let label = format!("(n, w, s) = ({n}, {w}, {s})");
        match r {
            Ok((series, quad)) => {
                let tol = (1e-5 * scale).max(series.truncation_estimate);
                let err = (series.value - quad.value).norm();
                notes.push(format!(
                    "{label}: series {:.12e}, quadrature {:.12e}, truncation {:.1e}",
                    series.value.re, quad.value.re, series.truncation_estimate
                ));
                out.push(Measurement::numeric(label, err, tol));
                if n == 2 {
                    // ζ_1(w, s+2, (4)) - ζ_1(w, s+4, (4)) = 4^{-w} (ζ_H(w, (s+2)/4) - ζ_H(w, (s+4)/4))
                    let w = Complex64::new(w, 0.0);
                    let closed = hurwitz_zeta(w, (s + 2.0) / 4.0)
                        .and_then(|a| Ok(a - hurwitz_zeta(w, (s + 4.0) / 4.0)?))
                        .map(|d| d * (-w * 4f64.ln()).exp());
                    let label = "N = 2 series against the ζ_1 difference".to_string();
                    match closed {
                        Ok(c) => {
                            out.push(Measurement::numeric(label, (series.value - c).norm(), tol))
                        }
                        Err(e) => {
                            notes.push(e.to_string());
                            out.push(Measurement::failed(label, tol));
                        }
                    }
                }
            }
            Err(e) => {
                notes.push(format!("{label}: {e}"));
                out.push(Measurement::failed(label, 1e-5 * scale));
            }
        }
    }
    out
}

/// `Σ_{k<K} (k+a)^{-s}` summed smallest-first, plus the Euler–Maclaurin
/// tail at `K` through the `B_4` term.
fn hurwitz_direct(s: f64, a: f64) -> f64 {
    const K: usize = 20_000;
    let head: f64 = (0..K).rev().map(|k| (k as f64 + a).powf(-s)).sum();
    let b = K as f64 + a;
    let tail = b.powf(1.0 - s) / (s - 1.0) + 0.5 * b.powf(-s) + s * b.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * b.powf(-s - 3.0) / 720.0;
    head + tail
}

fn special_functions(scale: f64, notes: &mut Vec<String>) -> Vec<Measurement> {
    let mut out = Vec::new();
    let run = |label: &str, tol: f64, values: Vec<Result<f64, Error>>, notes: &mut Vec<String>| {
        worst_of(
            label.to_string(),
            values
                .into_iter()
                .map(|r| r.map_err(|e| e.to_string()))
                .collect(),
            tol,
            notes,
        )
    };
    let omega1 = |w: f64| OmegaVector::new(&[w]).expect("positive period");

    // S_1(x, (ω)) = 2 sin(πx/ω) and S_1(x + ω) = -S_1(x)
    let mut sine = Vec::new();
    let mut anti = Vec::new();
    for w in [1.0, 2.5, 4.0] {
        let om = omega1(w);
        for k in 0..20 {
            let x = w * (0.05 + 0.1 * k as f64);
            sine.push(multi_sine(x, &om).map(|v| (v - 2.0 * (PI * x / w).sin()).abs()));
            if x < w {
                anti.push(multi_sine(x, &om).and_then(|a| Ok((multi_sine(x + w, &om)? + a).abs())));
            }
        }
    }
    out.push(run(
        "S_1 closed form 2 sin(πx/ω)",
        1e-8 * scale,
        sine,
        notes,
    ));
    out.push(run("S_1 antiperiodicity", 1e-8 * scale, anti, notes));

    // Γ_1(x, (ω)) = Γ(x/ω) ω^{x/ω - 1/2} / √(2π)
    let mut g1 = Vec::new();
    for w in [1.0, 2.0, 4.0, 6.0] {
        for x in [-1.3, -0.5, 0.3, 0.7, 1.5, 2.2, 4.1, 7.9] {
            g1.push(multi_gamma(x, &omega1(w)).and_then(|g| {
                let r = gamma_real(x / w)? * w.powf(x / w - 0.5) / (2.0 * PI).sqrt();
                Ok(((g - r) / r).abs())
            }));
        }
    }
    out.push(run("Γ_1 closed form (relative)", 1e-7 * scale, g1, notes));

    // ζ_2(s, x, (1, 1)) = ζ_H(s - 1, x) + (1 - x) ζ_H(s, x)
    let diag = OmegaVector::new(&[1.0, 1.0]).expect("positive periods");
    let mut barnes = Vec::new();
    for s in [-0.5, 0.5, 2.5, 3.0, 4.0] {
        for x in [0.5, 1.0, 2.3] {
            barnes.push(multi_zeta(Complex64::new(s, 0.0), x, &diag).and_then(|z| {
                let r = hurwitz_zeta_real(s - 1.0, x)? + (1.0 - x) * hurwitz_zeta_real(s, x)?;
                Ok((z.re - r).abs() / r.abs().max(1.0))
            }));
        }
    }
    out.push(run("Barnes diagonal identity", 1e-8 * scale, barnes, notes));

    // Γ_2(x + ω_1) = Γ_2(x) / Γ_1(x, (ω_2)) and the same with ω_1 ↔ ω_2
    let mut ladder = Vec::new();
    for (w1, w2) in [(2.0, 6.0), (1.0, 1.5), (1.0, 1.0)] {
        let om = OmegaVector::new(&[w1, w2]).expect("positive periods");
        for x in [0.4, 1.3, 2.5, 3.7] {
            for (step, other) in [(w1, w2), (w2, w1)] {
                ladder.push(multi_gamma(x + step, &om).and_then(|up| {
                    let r = multi_gamma(x, &om)? / multi_gamma(x, &omega1(other))?;
                    Ok(((up - r) / r).abs())
                }));
            }
        }
    }
    out.push(run(
        "Γ_2 ladder relations (relative)",
        1e-6 * scale,
        ladder,
        notes,
    ));

    let mut hz = Vec::new();
    for s in [3.0, 3.5, 4.0, 6.0] {
        for a in [0.25, 1.0, 2.7] {
            hz.push(hurwitz_zeta_real(s, a).map(|v| {
                let r = hurwitz_direct(s, a);
                ((v - r) / r).abs()
            }));
        }
    }
    out.push(run(
        "Hurwitz zeta against direct summation (relative)",
        1e-10 * scale,
        hz,
        notes,
    ));
    out
}
