//! The infinite sum-product identities as truncated series, with the first
//! Rogers-Ramanujan identity compared to two partition counts.

use qzeta::rrsums::{ag_infinite_product, ag_infinite_sum, count_gap2, count_parts_pm1_mod5, to_order};

fn main() {
    let order = 30;
    for m in 1..=3 {
        let sum = to_order(order, |cap| ag_infinite_sum(m, cap)).expect("series");
        let product = to_order(order, |cap| ag_infinite_product(m, cap)).expect("series");
        println!("m = {}: sum == product to q^{}: {}", m, order, sum == product);
    }
    let sum = to_order(order, |cap| ag_infinite_sum(1, cap)).expect("series");
    println!("{:>3} {:>6} {:>10} {:>8}", "k", "coeff", "parts±1/5", "gaps>=2");
    for k in 0..=order {
        println!("{:>3} {:>6} {:>10} {:>8}", k, sum.coeffs[k], count_parts_pm1_mod5(k as u32), count_gap2(k as u32));
    }
}
