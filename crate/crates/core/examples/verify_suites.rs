// Runs every verification suite at n = 3, r = 2 and prints a summary per suite.

use std::collections::BTreeMap;
use std::fmt::Write;

use injective_words::poset::DEFAULT_BUDGET;
use injective_words::report::Status;
use injective_words::verify::{run, SuiteSelector};

pub fn run_example() -> injective_words::Result<String> {
    let report = run(SuiteSelector::All, 3, 2, DEFAULT_BUDGET)?;
    let mut per_suite: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for check in &report.checks {
        let suite = check.name.split(':').next().unwrap_or_default().to_string();
        let entry = per_suite.entry(suite).or_default();
        if check.status == Status::Pass {
            entry.0 += 1;
        } else {
            entry.1 += 1;
        }
    }
    let mut out = String::new();
    for (suite, (pass, other)) in per_suite {
        writeln!(out, "{suite:<24} {pass} passed, {other} not passed").unwrap();
    }
    writeln!(out, "failures: {}", report.count(Status::Fail)).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> injective_words::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
