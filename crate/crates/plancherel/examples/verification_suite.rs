//! Runs the full default verification suite and writes the JSON report.
//!
//! Run with: cargo run --release --example verification_suite

use plancherel::verify::{default_suite, reports_to_json, run_suite, SuiteOptions};

fn main() {
    let cases = default_suite();
    println!("running {} checks...", cases.len());
    let opts = SuiteOptions { jobs: 4, ..SuiteOptions::default() };
    let start = std::time::Instant::now();
    let reports = run_suite(&cases, &opts);
    let elapsed = start.elapsed();

    for r in &reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        println!("{:<4} {:<24} {}", r.id, format!("{:?}", r.case), status);
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("\n{passed} / {} passed in {elapsed:?}", reports.len());

    let path = std::env::temp_dir().join("plancherel_reports.json");
    std::fs::write(&path, reports_to_json(&reports) + "\n").unwrap();
    println!("full JSON report: {}", path.display());
}
