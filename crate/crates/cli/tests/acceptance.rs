//! One PASS/FAIL line per acceptance check; exits nonzero if any fails.
//! Sample sizes and tolerances are pinned in `tangle_cli::criteria`.

use std::process::ExitCode;

use tangle_cli::criteria;

fn main() -> ExitCode {
    let results = criteria::run_all();
    for c in &results {
        println!("{c}");
    }
    let failed = results.iter().filter(|c| !c.passed).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
