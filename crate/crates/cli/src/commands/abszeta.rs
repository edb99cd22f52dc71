use grover_abszeta_core::abszeta::{
    absolute_z, absolute_zeta, epsilon_factor, functional_equation_residual,
    general_abszeta_truncated, general_z_series, mellin_z_numeric, AbsoluteZetaBundle,
};
use grover_abszeta_core::specfun::{gamma_real, multi_zeta};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{parse_grid, AbszetaArgs, SeriesArgs};
use crate::config::Settings;
use crate::error::{CliError, CliResult};
use crate::report::{sig, AbsZetaRecord, Method, Report};

/// Absolute error budget of one `log Γ_b` evaluation.
pub const LOG_GAMMA_ERROR: f64 = 1e-11;
/// Relative error budget of one multiple-zeta evaluation.
pub const MULTI_ZETA_ERROR: f64 = 1e-12;

fn default_grid(n: usize) -> &'static str {
    if n == 2 {
        "-1.5:2.5:0.5"
    } else {
        "-3:1:0.5"
    }
}

fn zeta_error(bundle: &AbsoluteZetaBundle, value: f64) -> f64 {
    value.abs() * bundle.subsets().len() as f64 * LOG_GAMMA_ERROR
}

fn closed_form_z(bundle: &AbsoluteZetaBundle, w: Complex64, s: f64) -> CliResult<(Complex64, f64)> {
    let value = absolute_z(bundle, w, s)?;
    let mut scale = 0.0;
    for sub in bundle.subsets() {
        let x = s - bundle.deg_f() + sub.m_sum as f64;
        scale += multi_zeta(w, x, bundle.omega())?.norm();
    }
    Ok((value, scale * MULTI_ZETA_ERROR))
}

fn push(report: &mut Report, records: &mut Vec<AbsZetaRecord>, rec: AbsZetaRecord, digits: usize) {
    report.line(rec.text(digits));
    records.push(rec);
}

pub fn abszeta(
    args: &AbszetaArgs,
    settings: &Settings,
    csv: &mut Option<String>,
) -> CliResult<Report> {
    let n = args.n;
    let digits = settings.precision;
    let mut report = Report::new("abszeta", Some(n));
    let mut records = Vec::new();

    if args.series {
        let (Some(w), Some(s)) = (args.w, args.s) else {
            return Err(CliError::Usage("--series needs --w and --s".into()));
        };
        series_with_mellin(
            n,
            Complex64::new(w, args.w_im),
            s,
            settings,
            &mut report,
            &mut records,
            true,
        )?;
        report.set("records", &records);
        return Ok(report);
    }

    let bundle = AbsoluteZetaBundle::for_grover(n)?;
    let form = bundle.form();
    report.set(
        "form",
        json!({
            "ell": form.ell, "m": form.m_list, "n": form.n_list,
            "weight_d": bundle.weight_d(), "sign_c": bundle.sign_c(),
            "deg_f": bundle.deg_f(), "exact": true, "method": Method::Exact,
        }),
    );
    report.line(format!(
        "ζ_U{n} Kurokawa form: m = {:?}, n = {:?}, D = {}, C = {}",
        form.m_list,
        form.n_list,
        bundle.weight_d(),
        bundle.sign_c()
    ));
    let nothing_requested = !args.central && !args.check_fe && args.s.is_none();

    if args.central || nothing_requested {
        let s0 = bundle.central_point();
        let v = absolute_zeta(&bundle, s0)?;
        push(
            &mut report,
            &mut records,
            AbsZetaRecord::real(
                n,
                "absolute_zeta",
                json!({ "s": s0, "central": true }),
                v,
                zeta_error(&bundle, v),
                Method::Continuation,
            ),
            digits,
        );
        if n == 2 {
            let g = gamma_real(0.25)? / (2.0 * gamma_real(0.75)?);
            push(
                &mut report,
                &mut records,
                AbsZetaRecord::real(
                    n,
                    "gamma_quarter_ratio",
                    json!({ "formula": "Γ(1/4)/(2Γ(3/4))" }),
                    g,
                    4.0 * f64::EPSILON * g,
                    Method::ClosedForm,
                ),
                digits,
            );
            let rel = ((v - g) / g).abs();
            report.line(format!("relative difference: {}", sig(rel, 3)));
            report.set("central_relative_difference", rel);
        }
    }

    if let Some(s) = args.s {
        if let Some(w) = args.w {
            let w = Complex64::new(w, args.w_im);
            let (z, err) = closed_form_z(&bundle, w, s)?;
            let params = json!({ "w_re": w.re, "w_im": w.im, "s": s });
            push(
                &mut report,
                &mut records,
                AbsZetaRecord::new(n, "absolute_Z", params.clone(), z, err, Method::ClosedForm),
                digits,
            );
            let q = mellin_z_numeric(n, w, Complex64::new(s, 0.0))?;
            push(
                &mut report,
                &mut records,
                AbsZetaRecord::new(
                    n,
                    "mellin_Z",
                    params,
                    q.value,
                    q.error_estimate,
                    Method::Quadrature,
                ),
                digits,
            );
            let delta = (z - q.value).norm();
            report.line(format!("|closed form - quadrature| = {}", sig(delta, 3)));
            report.set("delta", delta);
        } else {
            let v = absolute_zeta(&bundle, s)?;
            push(
                &mut report,
                &mut records,
                AbsZetaRecord::real(
                    n,
                    "absolute_zeta",
                    json!({ "s": s }),
                    v,
                    zeta_error(&bundle, v),
                    Method::Continuation,
                ),
                digits,
            );
            match epsilon_factor(&bundle, s) {
                Ok(e) => push(
                    &mut report,
                    &mut records,
                    AbsZetaRecord::real(
                        n,
                        "epsilon_factor",
                        json!({ "s": s }),
                        e,
                        2.0 * zeta_error(&bundle, e),
                        Method::Continuation,
                    ),
                    digits,
                ),
                Err(e) => report.line(format!("epsilon_factor(s={s}): {e}")),
            }
        }
    }

    if args.check_fe {
        let spec = args.grid.as_deref().unwrap_or(default_grid(n));
        let grid = parse_grid(spec).map_err(CliError::Usage)?;
        let rows: Vec<(f64, Result<_, String>)> = grid
            .par_iter()
            .map(|&s| {
                (
                    s,
                    functional_equation_residual(&bundle, s).map_err(|e| e.to_string()),
                )
            })
            .collect();
        let mut csv_text = String::from("s,lhs,rhs,residual\n");
        let mut json_rows = Vec::new();
        let mut max_residual: f64 = 0.0;
        report.line(format!(
            "functional equation ζ(D - s)^C = ε(s) ζ(s) on {spec}:"
        ));
        for (s, row) in &rows {
            match row {
                Ok(c) => {
                    max_residual = max_residual.max(c.residual);
                    csv_text.push_str(&format!("{s},{:e},{:e},{:e}\n", c.lhs, c.rhs, c.residual));
                    report.line(format!(
                        "  s = {s:>6}: lhs = {}, rhs = {}, residual = {}",
                        sig(c.lhs, digits),
                        sig(c.rhs, digits),
                        sig(c.residual, 2)
                    ));
                    json_rows.push(json!({
                        "s": s, "lhs": c.lhs, "rhs": c.rhs, "residual": c.residual,
                        "error_estimate": 2.0 * zeta_error(&bundle, c.lhs.abs().max(c.rhs.abs())),
                        "method": Method::Continuation,
                    }));
                }
                Err(msg) => {
                    csv_text.push_str(&format!("{s},nan,nan,nan\n"));
                    report.line(format!("  s = {s:>6}: not evaluable ({msg})"));
                    json_rows.push(json!({ "s": s, "error": msg }));
                }
            }
        }
        report.line(format!("max residual: {}", sig(max_residual, 3)));
        report.set(
            "functional_equation",
            json!({ "grid": spec, "rows": json_rows, "max_residual": max_residual }),
        );
        *csv = Some(csv_text);
    }

    report.set("records", &records);
    Ok(report)
}

fn series_with_mellin(
    n: usize,
    w: Complex64,
    s: f64,
    settings: &Settings,
    report: &mut Report,
    records: &mut Vec<AbsZetaRecord>,
    with_mellin: bool,
) -> CliResult<()> {
    let cfg = settings.series_config();
    let params =
        json!({ "w_re": w.re, "w_im": w.im, "s": s, "lmax": cfg.l_max, "rmax": cfg.r_max });
    let v = general_z_series(n, w, Complex64::new(s, 0.0), &cfg)?;
    push(
        report,
        records,
        AbsZetaRecord::new(
            n,
            "general_Z_series",
            params,
            v.value,
            v.truncation_estimate,
            Method::Series,
        ),
        settings.precision,
    );
    report.set(
        "convergence",
        json!({ "r_decay_exponent": v.r_decay_exponent, "l_decay_exponent": v.l_decay_exponent }),
    );
    if with_mellin {
        let q = mellin_z_numeric(n, w, Complex64::new(s, 0.0))?;
        let params = json!({ "w_re": w.re, "w_im": w.im, "s": s });
        push(
            report,
            records,
            AbsZetaRecord::new(
                n,
                "mellin_Z",
                params,
                q.value,
                q.error_estimate,
                Method::Quadrature,
            ),
            settings.precision,
        );
        let delta = (v.value - q.value).norm();
        report.line(format!(
            "|series - quadrature| = {} (allowed max(1e-5, truncation) = {})",
            sig(delta, 3),
            sig(v.truncation_estimate.max(1e-5), 3)
        ));
        report.set("delta", delta);
    }
    Ok(())
}

pub fn series(args: &SeriesArgs, settings: &Settings) -> CliResult<Report> {
    let n = args.n;
    let mut report = Report::new("series", Some(n));
    let mut records = Vec::new();
    if args.product {
        let cfg = settings.product_config();
        let t = general_abszeta_truncated(n, args.s, &cfg)?;
        let factors: Vec<Value> = t
            .factors
            .iter()
            .map(|f| json!({ "offset": f.offset, "exponent": f.exponent.to_string() }))
            .collect();
        report.set(
            "truncated_product",
            json!({
                "s": args.s, "lmax": cfg.l_max, "rmax": cfg.r_max,
                "value": t.value, "log_value": t.log_value,
                "method": Method::Series, "error_estimate": null,
                "non_convergent": t.non_convergent, "caveat": t.caveat,
                "factors": factors,
            }),
        );
        report.line(format!(
            "truncated product at s = {}: {}",
            args.s,
            sig(t.value, settings.precision)
        ));
        report.line(format!("caveat: {}", t.caveat));
        for f in t
            .factors
            .iter()
            .filter(|f| !is_zero_exponent(&f.exponent))
            .take(12)
        {
            report.line(format!("  ({} + s)^({})", f.offset, f.exponent));
        }
        return Ok(report);
    }
    let w = args
        .w
        .ok_or_else(|| CliError::Usage("series needs --w (or --product)".into()))?;
    series_with_mellin(
        n,
        Complex64::new(w, args.w_im),
        args.s,
        settings,
        &mut report,
        &mut records,
        args.mellin,
    )?;
    report.set("records", &records);
    Ok(report)
}

fn is_zero_exponent(q: &grover_abszeta_core::Rational) -> bool {
    *q.numer() == 0.into()
}
