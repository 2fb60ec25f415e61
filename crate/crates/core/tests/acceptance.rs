//! The acceptance criteria, one PASS/FAIL line each. Runs without the test
//! harness so the lines always appear in `cargo test` output.

use std::process::ExitCode;

use symdepth::claims::{run_criterion, CLAIMS};

fn main() -> ExitCode {
    let mut ids: Vec<&str> = CLAIMS.iter().map(|c| c.id).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), CLAIMS.len(), "duplicate claim ids");
    assert!(CLAIMS.iter().all(|c| (1..=13).contains(&c.criterion)));

    let mut failed = Vec::new();
    for criterion in 1..=13u8 {
        let reports = run_criterion(criterion);
        let ids: Vec<&str> = reports.iter().map(|r| r.id).collect();
        let passed = !reports.is_empty() && reports.iter().all(|r| r.passed());
        println!("{} criterion {criterion} ({})", if passed { "PASS" } else { "FAIL" }, ids.join(", "));
        for report in reports.iter().filter(|r| !r.passed()) {
            print!("{report}");
        }
        if !passed {
            failed.push(criterion);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 13 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
