//! Runs a verification suite and prints the per-check report in each output format.
//!
//! ```bash
//! cargo run -p finespec --example verification_suite -- identities
//! ```

use finespec::verify::{run_suite, Suite, SuiteConfig};

fn main() -> finespec::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("identities").parse()?;
    let mut cfg = SuiteConfig::new(suite);
    cfg.n = vec![3, 5];
    cfg.k_max = 12;
    let report = run_suite(&cfg)?;
    print!("{}", report.to_human());
    print!("{}", report.to_csv());
    println!("{}", report.to_json());
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
