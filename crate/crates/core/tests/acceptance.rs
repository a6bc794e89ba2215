//! Runs the eleven acceptance criteria and prints one line per criterion.
//! Exits nonzero when any criterion fails.

use std::process::ExitCode;

use normcover::suite::{run_check, SuiteConfig, CRITERIA};

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut failed = 0;
    for (i, id) in CRITERIA.iter().enumerate() {
        let r = match run_check(id, &cfg) {
            Ok(r) => r,
            Err(e) => {
                println!("criterion {:>2} {id}: FAIL ({e})", i + 1);
                failed += 1;
                continue;
            }
        };
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {id}: {verdict} | {}", i + 1, r.record());
        for f in r.failures.iter().skip(1) {
            println!("    also: {f}");
        }
        if !r.passed {
            failed += 1;
        }
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
