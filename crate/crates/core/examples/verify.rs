//! Runs a verification suite in-process and prints its report.
//!
//! cargo run --example verify -- sandwich 7

use homlab::suites::{run_suite, Suite, VerifyConfig};

fn main() -> homlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let suite: Suite = args.next().as_deref().unwrap_or("prop53").parse()?;
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(0);
    let report = run_suite(suite, &VerifyConfig { seed, ..VerifyConfig::default() })?;
    print!("{report}");
    Ok(())
}
