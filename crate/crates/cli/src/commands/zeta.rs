use grover_abszeta_core::zeta_rational::{
    check_automorphy, eval_matrix_zeta, eval_matrix_zeta_exact, matrix_zeta, to_kurokawa_form,
};
use grover_abszeta_core::{Error, Rational};
use num_complex::Complex64;
use serde_json::json;

use crate::config::Settings;
use crate::error::{CliError, CliResult};
use crate::report::{exact_text, exact_value, sig, Method, Report};

pub fn zeta(n: usize, at: Option<&str>, settings: &Settings) -> CliResult<Report> {
    let z = matrix_zeta(n)?;
    let mut report = Report::new("zeta", Some(n));
    let coeffs: Vec<String> = z
        .denominator
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect();
    report.set(
        "zeta",
        json!({
            "text": z.to_string(),
            "canonical": z.canonical_text(),
            "denominator_ascending": coeffs,
            "weight": z.weight,
            "sign_c": z.sign_c,
            "exact": true,
            "method": Method::Exact,
        }),
    );
    report.line(format!("ζ_U{n}(u) = {z}"));
    report.line(format!("canonical: {}", z.canonical_text()));

    let automorphy = check_automorphy(&z);
    report.set("automorphy_holds", automorphy.is_ok());
    report.line(format!(
        "ζ(1/u) = C u^{n} ζ(u) with C = (-1)^N det U = {}: {}",
        z.sign_c,
        if automorphy.is_ok() {
            "holds exactly"
        } else {
            "FAILS"
        }
    ));

    match to_kurokawa_form(&z) {
        Ok(form) => {
            let equivalent = form
                .to_rational_function()?
                .equivalent(&z.as_rational_function());
            report.set(
                "kurokawa_form",
                json!({
                    "ell": form.ell,
                    "m": form.m_list,
                    "n": form.n_list,
                    "deg_f": exact_text(format!("{}", form.deg_f())),
                    "weight_d": form.weight_d(),
                    "sign_c": form.sign_c(),
                    "reconstruction_matches": equivalent,
                }),
            );
            report.line(format!(
                "Kurokawa form: ℓ = {}, m = {:?}, n = {:?}, D = {}, C = {}, deg f = {} (reconstruction {})",
                form.ell,
                form.m_list,
                form.n_list,
                form.weight_d(),
                form.sign_c(),
                form.deg_f(),
                if equivalent { "exact" } else { "MISMATCH" }
            ));
        }
        Err(Error::NotFinitePeriod(_)) => {
            report.set("kurokawa_form", serde_json::Value::Null);
            report.line("Kurokawa form: none (U_N has infinite period)");
        }
        Err(e) => return Err(e.into()),
    }

    if let Some(text) = at {
        if let Ok(u) = text.trim().parse::<Rational>() {
            let v = eval_matrix_zeta_exact(&z, &u)?;
            report.line(format!("ζ({u}) = {v}  [exact]"));
            report.set(
                "value",
                json!({ "u": u.to_string(), "result": exact_value(&v) }),
            );
        } else {
            let u: f64 = text.trim().parse().map_err(|_| {
                CliError::Usage(format!("--at expects p/q or a number, got {text:?}"))
            })?;
            let v = eval_matrix_zeta(&z, Complex64::new(u, 0.0))?;
            let err = 4.0 * f64::EPSILON * (n as f64) * v.norm();
            report.line(format!(
                "ζ({u}) = {}  [closed-form, err ≤ {}]",
                sig(v.re, settings.precision),
                sig(err, 2)
            ));
            report.set(
                "value",
                json!({ "u": u, "value_re": v.re, "value_im": v.im, "error_estimate": err, "method": Method::ClosedForm }),
            );
        }
    }
    Ok(report)
}
