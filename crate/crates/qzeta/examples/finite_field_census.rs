//! Totally real and spanning submodules of (F_4[T]/T^m)^n over F_2, tabulated
//! by type and cotype, next to the closed-form fibre size.

use qzeta::oracle::{oracle_table, subspace_count_check};

fn main() {
    println!("{}", subspace_count_check(2, 4));
    let rows = oracle_table(2, 1, 2).expect("within enumeration caps");
    println!("{:<8} {:<8} {:>6} {:>6} {:>6} {:>6}  b", "lambda", "mu", "TR", "cTR", "pr1", "cpr1");
    for r in rows {
        let show = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
        println!(
            "{:<8} {:<8} {:>6} {:>6} {:>6} {:>6}  {}",
            r.lambda,
            r.mu,
            r.tr_grassmannian,
            r.ctr_grassmannian,
            show(r.tr_pr1_fiber),
            show(r.ctr_pr1_fiber),
            r.b_formula
        );
    }
}
