//! Pochhammer symbols, Gaussian binomials, the classical summation and
//! transformation formulas, and the Bailey pairs.

use qzeta::exact::{Monomial, Term, Var};
use qzeta::qkit::{all_pairs, bailey_check, classical_points, poch_poly, qbinom, verify_classical, CLASSICAL_IDS};

fn main() {
    let q = Monomial::var(Var::Q);
    println!("(t; q)_3 = {}", poch_poly(&Term::var(Var::T), q, 3));
    println!("[5 choose 2]_q = {}", qbinom(5, 2, q));

    for id in CLASSICAL_IDS {
        let pts = classical_points(id, 7, 3);
        let reports: Vec<_> = pts.iter().map(|p| verify_classical(id, p, 20).expect("known identity")).collect();
        let ok = reports.iter().filter(|r| r.passed()).count();
        println!("{:<12} {}/{} points agree to q^20", id, ok, reports.len());
    }

    for pair in all_pairs() {
        println!("{}", bailey_check(&pair, 6));
    }
}
