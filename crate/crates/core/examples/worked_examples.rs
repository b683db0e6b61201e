//! The built-in fixture suite, as run by `cishift verify-paper`.

use cishift::fixtures::{run_suite, SuiteConfig};

fn main() {
    let config = SuiteConfig::default();
    println!("seed {}", config.seed);
    let results = run_suite(&config);
    for r in &results {
        println!("{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
