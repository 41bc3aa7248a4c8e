//! Hall polynomials and automorphism counts for modules over a DVR, checked
//! against direct enumeration over F_2.

use qzeta::exact::{Monomial, Var};
use qzeta::oracle::{aut_check, hall_check};
use qzeta::partitions::{at_q, aut_count, hall_g, partitions_in_rectangle, Partition};

fn main() {
    let q = Monomial::var(Var::Q);
    let lambda = Partition::rectangle(2, 2);
    println!("lambda = {}", lambda);
    let mut total = num_bigint::BigInt::from(0);
    for mu in partitions_in_rectangle(2, 2) {
        let g = hall_g(&lambda, &mu, q);
        total += at_q(&g, 2);
        println!("  g^lambda_{} = {}", mu, g);
    }
    println!("submodules over F_2[[T]]: {}", total);
    println!("|Aut| = {}", aut_count(&lambda, q));
    println!("{}", hall_check(2, &lambda));
    println!("{}", aut_check(2, &Partition::new(&[2, 1]).expect("partition")));
}
