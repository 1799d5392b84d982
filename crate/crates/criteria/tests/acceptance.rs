//! Runs every acceptance criterion and prints one line each. Exits
//! non-zero if any criterion fails.

use std::process::ExitCode;

use homdim_criteria::{report_line, CRITERIA};

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let outcome = (c.check)();
        failed += usize::from(outcome.is_err());
        println!("{}", report_line(c, &outcome));
    }
    println!(
        "acceptance: {} of {} criteria pass",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
