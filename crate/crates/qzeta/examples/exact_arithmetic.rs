//! Sparse Laurent polynomials, rational functions and evaluation at roots of unity.

use qzeta::exact::{eval_cyclotomic, rf_equal, LaurentPoly, Monomial, RationalFn, Var};
use qzeta::qkit::qbinom;

fn main() {
    let q = LaurentPoly::var(Var::Q);
    let t = LaurentPoly::var(Var::T);
    let one = LaurentPoly::one();
    let p = &(&one - &(&t * &q)) * &(&one + &q.pow(2));
    println!("(1 - tq)(1 + q^2) = {}", p);

    // (1 - q^3) / (1 - q) cancels to 1 + q + q^2
    let num = RationalFn::from_poly(&one - &q.pow(3));
    let den = RationalFn::from_poly(&one - &q);
    let ratio = num.div(&den).expect("nonzero denominator");
    let expanded = RationalFn::from_poly(LaurentPoly::univariate(Var::Q, &[1, 1, 1]));
    println!("(1 - q^3)/(1 - q) = {}  equal to 1+q+q^2: {}", ratio, rf_equal(&ratio, &expanded));

    // q-Lucas: [4 choose 2]_q at q = -1 is (2 choose 1) = 2
    let g = qbinom(4, 2, Monomial::var(Var::Q));
    println!("[4 choose 2]_q = {}", g);
    for r in [2, 3, 4] {
        println!("  at q = exp(2 pi i / {}): {}", r, eval_cyclotomic(&g, Var::Q, r));
    }
}
