//! Runs every acceptance criterion at tolerance scale 1 and prints one
//! pass/fail line per criterion. Exits nonzero if any criterion fails.

use grover_abszeta_cli::claims::{run_all, CLAIM_COUNT};

fn main() {
    println!("\nrunning {CLAIM_COUNT} acceptance criteria");
    let outcomes = run_all(1.0, &[]);
    for outcome in &outcomes {
        println!("{}", outcome.summary_line());
        if !outcome.passed {
            for m in outcome.measurements.iter().filter(|m| !m.passed) {
                println!(
                    "       {}: measured {:?}, tolerance {:?}",
                    m.label, m.measured, m.tolerance
                );
            }
            for note in &outcome.notes {
                println!("       {note}");
            }
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let result = if failed == 0 && outcomes.len() == CLAIM_COUNT {
        "ok"
    } else {
        "FAILED"
    };
    println!(
        "\nacceptance result: {result}. {} passed; {failed} failed\n",
        outcomes.len() - failed
    );
    if result != "ok" {
        std::process::exit(1);
    }
}
