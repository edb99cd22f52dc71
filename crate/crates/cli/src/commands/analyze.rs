use grover_abszeta_core::cyclotomic::{factor_into_cyclotomics, period_from_charpoly};
use grover_abszeta_core::exact::char_poly;
use grover_abszeta_core::grover::{self, default_bruteforce_cutoff, period_bruteforce};
use grover_abszeta_core::{Period, RatPolynomial, RationalMatrix};
use serde_json::{json, Value};

use crate::args::PeriodMethodArg;
use crate::config::Settings;
use crate::error::CliResult;
use crate::report::{exact_value, sig, Report};

/// Text output prints matrices only up to this size.
const MATRIX_TEXT_LIMIT: usize = 8;

/// Modular multiply-adds the default brute-force scan may spend.
const BRUTE_FORCE_WORK: u64 = 2_000_000_000;

fn cutoff_for(n: usize, settings: &Settings) -> u64 {
    settings.cutoff.unwrap_or_else(|| {
        let budget = (BRUTE_FORCE_WORK / (n as u64).pow(3)).max(1_000);
        default_bruteforce_cutoff(n).min(budget)
    })
}

fn matrix_json(m: &RationalMatrix) -> Value {
    json!({ "rows": m.to_string_rows(), "exact": true, "method": "exact" })
}

fn poly_json(p: &RatPolynomial, var: &str) -> Value {
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    json!({
        "coefficients_ascending": coeffs,
        "text": p.display_in(var),
        "exact": true,
        "method": "exact",
    })
}

fn factorization_text(p: &RatPolynomial) -> Option<String> {
    let f = factor_into_cyclotomics(&p.to_integer()?).ok()?;
    if !f.complete {
        return None;
    }
    let parts: Vec<String> = f
        .factors
        .iter()
        .map(|&(n, k)| {
            if k == 1 {
                format!("Φ_{n}")
            } else {
                format!("Φ_{n}^{k}")
            }
        })
        .collect();
    Some(parts.join("·"))
}

fn period_json(p: Period) -> Value {
    match p {
        Period::Finite(t) => {
            json!({ "value": t.to_string(), "finite": true, "exact": true, "method": "exact" })
        }
        Period::Infinite => {
            json!({ "value": "INFINITE", "finite": false, "exact": true, "method": "exact" })
        }
        Period::Unknown { cutoff } => {
            json!({ "value": format!("UNKNOWN({cutoff})"), "finite": null, "cutoff": cutoff, "exact": true, "method": "exact" })
        }
    }
}

pub fn analyze(n: usize, settings: &Settings) -> CliResult<Report> {
    let ops = grover::build(n)?;
    let mut report = Report::new("analyze", Some(n));
    report.line(format!("Grover matrix U_{n} = R_D R_f"));

    report.set(
        "matrices",
        json!({ "r_d": matrix_json(&ops.r_d), "r_f": matrix_json(&ops.r_f), "u": matrix_json(&ops.u) }),
    );
    if n <= MATRIX_TEXT_LIMIT {
        for (name, m) in [("R_D", &ops.r_d), ("R_f", &ops.r_f), ("U", &ops.u)] {
            report.line(format!("{name} ="));
            for row in m.to_string_rows() {
                report.line(format!("  [{}]", row.join(", ")));
            }
        }
    } else {
        report.line(format!("(matrices are {n}×{n}; use --json for entries)"));
    }

    let identity_checks = json!({
        "r_d_squared_is_identity": ops.r_d.mul(&ops.r_d)?.is_identity(),
        "r_f_squared_is_identity": ops.r_f.mul(&ops.r_f)?.is_identity(),
        "u_orthogonal": grover::check_orthogonal(&ops.u),
    });
    report.line(format!(
        "R_D^2 = I: {}, R_f^2 = I: {}, U^T U = I: {}",
        identity_checks["r_d_squared_is_identity"],
        identity_checks["r_f_squared_is_identity"],
        identity_checks["u_orthogonal"]
    ));
    report.set("identities", identity_checks);

    let p_u = char_poly(&ops.u);
    let closed = grover::closed_form_char_poly(n)?;
    let mut polys = serde_json::Map::new();
    for (name, m) in [("r_d", &ops.r_d), ("r_f", &ops.r_f)] {
        polys.insert(name.into(), poly_json(&char_poly(m), "λ"));
    }
    let mut u_json = poly_json(&p_u, "λ");
    u_json["matches_closed_form"] = json!(p_u == closed);
    if let Some(f) = factorization_text(&p_u) {
        u_json["cyclotomic_factorization"] = json!(f);
    }
    polys.insert("u".into(), u_json);
    report.line(format!("det(λI - U) = {}", p_u.display_in("λ")));
    report.line(format!(
        "  closed form (λ+1)^{}(λ^2 - 2(1-2/{n})λ + 1): {}",
        n - 2,
        if p_u == closed { "equal" } else { "DIFFERENT" }
    ));
    if let Some(f) = factorization_text(&p_u) {
        report.line(format!("  = {f}"));
    }
    report.set("char_polys", Value::Object(polys));

    let spec = grover::spectrum(n)?;
    let (re, im) = spec.unit_pair_f64();
    let xi_over_pi = im.atan2(re) / std::f64::consts::PI;
    report.set(
        "spectrum",
        json!({
            "minus_one_multiplicity": spec.minus_one_multiplicity,
            "cos_xi": exact_value(&spec.cos_xi),
            "unit_pair": { "re": re, "im": im, "error_estimate": 1e-16, "method": "closed-form" },
            "xi_over_pi": { "value": xi_over_pi, "error_estimate": 1e-15, "method": "closed-form" },
        }),
    );
    report.line(format!(
        "spectrum: -1 with multiplicity {}, e^{{±iξ}} with cos ξ = {} (ξ/π ≈ {})",
        spec.minus_one_multiplicity,
        spec.cos_xi,
        sig(xi_over_pi, settings.precision)
    ));

    let cutoff = cutoff_for(n, settings);
    let cyc = period_from_charpoly(&p_u);
    let fast = grover::period(n, grover::PeriodMethod::QuadraticFastPath)?;
    let brute = period_bruteforce(&ops.u, cutoff);
    report.set(
        "period",
        json!({
            "cyclotomic": period_json(cyc),
            "fast_path": period_json(fast),
            "brute_force": period_json(brute),
        }),
    );
    report.line(format!(
        "period: cyclotomic {cyc}, fast path {fast}, brute force {brute} (cutoff {cutoff})"
    ));
    Ok(report)
}

pub fn period(n: usize, method: PeriodMethodArg, settings: &Settings) -> CliResult<Report> {
    let mut report = Report::new("period", Some(n));
    let mut results = serde_json::Map::new();
    let wanted = |m: PeriodMethodArg| method == m || method == PeriodMethodArg::All;
    if wanted(PeriodMethodArg::Cyclotomic) {
        let p = grover::period(n, grover::PeriodMethod::Cyclotomic)?;
        report.line(format!("cyclotomic: {p}"));
        results.insert("cyclotomic".into(), period_json(p));
    }
    if wanted(PeriodMethodArg::Fast) {
        let p = grover::period(n, grover::PeriodMethod::QuadraticFastPath)?;
        report.line(format!("fast path: {p}"));
        results.insert("fast_path".into(), period_json(p));
    }
    if wanted(PeriodMethodArg::Bruteforce) {
        let cutoff = cutoff_for(n, settings);
        let p = grover::period(n, grover::PeriodMethod::BruteForce { cutoff })?;
        report.line(format!("brute force: {p} (cutoff {cutoff})"));
        let mut v = period_json(p);
        v["cutoff"] = json!(cutoff);
        results.insert("brute_force".into(), v);
    }
    report.set("period", Value::Object(results));
    Ok(report)
}
