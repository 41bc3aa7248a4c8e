//! The zeta-level verification sweep: main theorem, bridges, interpolation,
//! reflections, cyclic sieving, rank-one rules and Coh stabilization.

use qzeta::report::all_pass;
use qzeta::zeta::zeta_suite;

fn main() {
    let reports = zeta_suite(3, 4);
    for r in &reports {
        println!("{}", r);
    }
    println!("{} checks, all pass: {}", reports.len(), all_pass(&reports));
}
