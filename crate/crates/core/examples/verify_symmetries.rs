//! Runs the exhaustive verification report.
//!
//! cargo run --release --example verify_symmetries -- 10

use lukasiewicz::verify::{run, VerifyConfig};

fn main() {
    let max_steps = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let report = run(VerifyConfig { max_steps, ..VerifyConfig::default() });
    for check in &report.checks {
        let mark = if check.passed { "ok " } else { "FAIL" };
        println!("{mark} {:<45} {:>7}", check.name, check.instances);
        if let Some(c) = &check.counterexample {
            println!("     counterexample: {c}");
        }
    }
    println!("overall: {}", report.overall);
}
