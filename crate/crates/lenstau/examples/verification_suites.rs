//! Driving the check battery from code instead of the CLI: configure a
//! grid, run a suite, and inspect the deterministic report.
//!
//! ```bash
//! cargo run --example verification_suites
//! ```

use lenstau::verify::{run_suite, Suite, SuiteConfig};

fn main() {
    let mut cfg = SuiteConfig::new(Suite::Gauss);
    cfg.n_values = vec![2, 3];
    cfg.r_values = vec![5, 7];
    cfg.seed = 42;

    let report = run_suite(&cfg);
    println!(
        "{}: {} checks, {} passed, {} failed, {} skipped",
        report.suite,
        report.summary.total,
        report.summary.passed,
        report.summary.failed,
        report.summary.skipped
    );
    assert!(report.all_passed());

    // each record carries what was compared
    for record in report.records.iter().take(4) {
        println!(
            "  [{}] {} {:?} lhs = {}",
            if record.pass { "ok" } else { "FAIL" },
            record.check,
            record.params,
            record.lhs
        );
    }

    // reports are byte-stable for a fixed config and seed, so they can
    // be committed and diffed
    let again = run_suite(&cfg);
    assert_eq!(report.to_json(), again.to_json());
    println!("report JSON is deterministic ({} bytes)", report.to_json().len());

    // grid points outside a check's preconditions are skipped, not
    // failed: here r = 3 is not a valid level for sl_3
    cfg.r_values = vec![3, 7];
    let partial = run_suite(&cfg);
    println!(
        "with r = 3 in the grid: {} passed, {} skipped",
        partial.summary.passed, partial.summary.skipped
    );
    assert!(partial.all_passed());
    assert!(partial.summary.skipped > 0);

    // the congruence suite takes whole surgery presentations
    let mut cfg = SuiteConfig::new(Suite::Congruence);
    cfg.n_values = vec![2];
    cfg.r_values = vec![7, 11];
    cfg.framings = vec![vec![2], vec![3, -2], vec![2, 2, 3]];
    let report = run_suite(&cfg);
    println!(
        "congruence grid: {} checks, all passed = {}",
        report.summary.total,
        report.all_passed()
    );
    assert!(report.all_passed());
}
