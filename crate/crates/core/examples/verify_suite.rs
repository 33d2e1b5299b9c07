//! Run the verification suite and summarise it per selector.
//!
//!     cargo run --example verify_suite -- thresholds

use std::collections::BTreeMap;

use avgorder::report::Status;
use avgorder::suite::{run_suite, Suite};
use avgorder::Catalog;

fn main() -> avgorder::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("all").parse()?;
    let report = run_suite(suite, &Catalog::embedded());

    let mut tally: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
    for r in &report.records {
        let slot = match r.status {
            Status::Pass => 0,
            Status::Vacuous => 1,
            Status::Fail => 2,
        };
        tally.entry(r.suite).or_default()[slot] += 1;
    }
    for (name, [pass, vacuous, fail]) in &tally {
        println!("{name:20} {pass:4} pass {vacuous:4} vacuous {fail:3} fail");
    }
    for r in report.failures() {
        println!("FAILED {} {}", r.id, r.witness);
    }
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
