//! Runs every registered multisum identity at its default instances.

use qzeta::report::all_pass;
use qzeta::rrsums::{rrsums_suite, RunSettings};

fn main() {
    let reports = rrsums_suite(None, &RunSettings::default()).expect("registry ids are valid");
    for r in &reports {
        println!("{}", r);
    }
    println!("{} checks, all pass: {}", reports.len(), all_pass(&reports));
}
