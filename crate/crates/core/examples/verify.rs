//! Run the identity harness programmatically and print each outcome.

use simplex_grassmann::verify::{run_verification, VerifyOptions};

fn main() {
    let report = run_verification(&VerifyOptions {
        d_max: 3,
        r_max: 4,
        ..VerifyOptions::default()
    });
    for check in &report.checks {
        let status = if check.passed { "ok  " } else { "FAIL" };
        println!(
            "{status} {:<24} {:>5} cases",
            check.identity.name(),
            check.cases
        );
    }
    println!("all passed: {}", report.all_passed());
}
