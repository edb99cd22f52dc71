use serde_json::json;

use crate::claims::{run_all, CLAIM_COUNT};
use crate::config::Settings;
use crate::error::{CliError, CliResult, EXIT_ACCEPTANCE, EXIT_OK};
use crate::report::Report;

pub fn reproduce(only: &[usize], settings: &Settings) -> CliResult<Report> {
    if let Some(bad) = only.iter().find(|&&id| id == 0 || id > CLAIM_COUNT) {
        return Err(CliError::Usage(format!(
            "no acceptance criterion {bad}; valid ids are 1-{CLAIM_COUNT}"
        )));
    }
    let outcomes = run_all(settings.tolerance_scale, only);
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let all_passed = passed == outcomes.len();

    let mut report = Report::new("reproduce", None);
    report.set("tolerance_scale", settings.tolerance_scale);
    report.set("claims", &outcomes);
    report.set(
        "summary",
        json!({ "passed": passed, "total": outcomes.len(), "all_passed": all_passed }),
    );
    report.line(format!(
        "acceptance suite (tolerance scale {})",
        settings.tolerance_scale
    ));
    for outcome in &outcomes {
        report.line(outcome.summary_line());
        if !outcome.passed {
            for m in outcome.measurements.iter().filter(|m| !m.passed) {
                match (m.measured, m.tolerance) {
                    (Some(x), Some(t)) => {
                        report.line(format!("       {}: {x:.3e} > {t:.1e}", m.label))
                    }
                    _ => report.line(format!("       {}: failed", m.label)),
                }
            }
            for note in &outcome.notes {
                report.line(format!("       {note}"));
            }
        }
    }
    report.line(format!("{passed}/{} passed", outcomes.len()));
    report.exit_code = if all_passed { EXIT_OK } else { EXIT_ACCEPTANCE };
    Ok(report)
}
