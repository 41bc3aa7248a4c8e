//! Coefficient tables of zeta functions of quadratic orders, written as CSV
//! and read back.

use qzeta::zeta::{NuKind, OrderId, OrderKind, ZetaTable};

fn main() {
    for kind in OrderKind::ALL {
        let table = ZetaTable::compute(OrderId::new(kind, 1), 2, NuKind::Nu, 0).expect("table");
        println!("# nu, {:?}, m = 1, n = 2", kind);
        print!("{}", table.to_csv());
    }
    let coh = ZetaTable::compute(OrderId::new(OrderKind::Inert, 1), 2, NuKind::Coh, 4).expect("table");
    let back = ZetaTable::from_csv(&coh.to_csv(), coh.truncated_after).expect("round trip");
    println!("# Coh series to t^4, CSV round trip exact: {}", back.coefficients == coh.coefficients);
    println!("{}", coh.to_json());
}
