//! The trivariate master polynomial: integrality, reflection, and its values
//! at roots of unity against the closed form.

use qzeta::exact::{eval_cyclotomic, CycPoly, Var};
use qzeta::rrsums::{is_integral, master_poly, master_reflected, root_closed_form};

fn main() {
    let (m, n) = (1, 2);
    let z = master_poly(m, n);
    println!("Z_{{{},{}}}(u, t, z) = {}", m, n, z);
    println!("integral: {}", is_integral(&z));
    println!("reflection holds: {}", master_reflected(m, n, &z) == z);
    for r in [1, 2] {
        let at_root = eval_cyclotomic(&z, Var::Z, r as u32);
        let closed = CycPoly::from_poly(&root_closed_form(m, n, r).expect("r divides n"), r as u32);
        println!("z = exp(2 pi i / {}): {}  matches closed form: {}", r, at_root, at_root == closed);
    }
}
