//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use associahedra::verify::{run_criterion, VerifyOptions, CRITERIA};

fn main() -> ExitCode {
    let opts = VerifyOptions::default();
    let mut failed = 0;
    for id in 1..=CRITERIA {
        let start = Instant::now();
        let report = run_criterion(id, &opts);
        println!("{report} [{:.1}s]", start.elapsed().as_secs_f64());
        if !report.passed() {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {CRITERIA} criteria passed",
        CRITERIA - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
