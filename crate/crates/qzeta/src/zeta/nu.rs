//! The normalized Quot zeta functions `nu` of `R~^n` ("tilde") and of `R^n`
//! ("order"), each computed along independent routes.

use super::{OrderId, OrderKind};
use crate::error::{Error, Result};
use crate::exact::{int, pochhammer, pochhammer_inv, LaurentPoly, Monomial, RationalFn, Term, Var};
use crate::partitions::{hall_g, partitions_in_rectangle, real_structure_count, B_count, Partition};
use crate::qkit::poch_poly;
use crate::rrsums::{ag_dagger, ag_finite, chains, master_poly};

fn mono(pairs: &[(Var, i32)]) -> Monomial {
    Monomial::from_pairs(pairs)
}

/// `q -> z^{-1}`.
pub fn q_to_z(p: &LaurentPoly) -> LaurentPoly {
    p.subst(&[(Var::Q, Term::mono(Monomial::var_pow(Var::Z, -1)))])
}

/// `Z(t, eps t, z)`.
pub fn nu_tilde_master(order: OrderId, n: i64) -> LaurentPoly {
    master_poly(order.m, n).subst(&[
        (Var::U, Term::var(Var::T)),
        (Var::T, Term::new(int(order.epsilon()), Monomial::var(Var::T))),
    ])
}

/// `Z(t^2, eps t, z)`.
pub fn nu_order_master(order: OrderId, n: i64) -> LaurentPoly {
    master_poly(order.m, n).subst(&[
        (Var::U, Term::mono(Monomial::var_pow(Var::T, 2))),
        (Var::T, Term::new(int(order.epsilon()), Monomial::var(Var::T))),
    ])
}

/// `sum t^{w (mn - sum n_i)} z^{-mn^2 + sum n_i^2} (z)_n (x; z)_n / (gaps (z)_{n_1} (x; z)_{n_1})`.
fn chain_display(m: usize, n: i64, w: i64, x: &RationalFn) -> Result<LaurentPoly> {
    let z = RationalFn::var(Var::Z);
    let (mi, ni) = (m as i64, n);
    let lead = pochhammer(&z, &z, n)?.mul(&pochhammer(x, &z, n)?);
    let mut terms = Vec::new();
    for ns in chains(m, n) {
        let s: i64 = ns.iter().sum();
        let sq: i64 = ns.iter().map(|k| k * k).sum();
        let mut term = lead
            .mul(&pochhammer_inv(&z, &z, ns[0])?)
            .mul(&pochhammer_inv(x, &z, ns[0])?)
            .mul_term(&Term::mono(mono(&[(Var::T, (w * (mi * ni - s)) as i32), (Var::Z, (-mi * ni * ni + sq) as i32)])));
        let mut hi = n;
        for &k in ns.iter().rev() {
            term = term.mul(&pochhammer_inv(&z, &z, hi - k)?);
            hi = k;
        }
        terms.push(term);
    }
    RationalFn::sum(terms.iter()).to_poly()
}

/// `nu` of `R~^n` from the explicit `m`-fold formulas (`AG`-dagger for the ramified order).
pub fn nu_tilde_display(order: OrderId, n: i64) -> Result<LaurentPoly> {
    let (m, ni) = (order.m as i32, n as i32);
    match order.kind {
        OrderKind::Ramified => {
            let tinv = RationalFn::mono(Monomial::var_pow(Var::T, -1));
            let ag = ag_dagger(order.m, n, &tinv, &RationalFn::var(Var::Z))?.to_poly()?;
            Ok(ag.mul_mono(&mono(&[(Var::T, m * ni), (Var::Z, -m * ni * ni)])))
        }
        OrderKind::Split | OrderKind::Inert => {
            let x = RationalFn::from_term(&Term::new(int(order.epsilon()), Monomial::var(Var::Z)));
            chain_display(order.m, n, 1, &x)
        }
    }
}

/// `nu` of `R^n` from the explicit formulas (`AG(t z^{-n}, z)` for the ramified order).
pub fn nu_order_display(order: OrderId, n: i64) -> Result<LaurentPoly> {
    match order.kind {
        OrderKind::Ramified => {
            let t = RationalFn::mono(mono(&[(Var::T, 1), (Var::Z, -(n as i32))]));
            ag_finite(order.m, n, &t, &RationalFn::var(Var::Z))?.to_poly()
        }
        OrderKind::Split | OrderKind::Inert => {
            let x = RationalFn::from_term(&Term::new(int(order.epsilon()), mono(&[(Var::T, -1), (Var::Z, 1)])));
            chain_display(order.m, n, 2, &x)
        }
    }
}

fn t_pow(e: i64) -> LaurentPoly {
    LaurentPoly::mono(Monomial::var_pow(Var::T, e as i32))
}

/// Inert only: `sum_lambda g^{(m^n)}_lambda(q^2) a_lambda(q^2)/a_lambda(q) t^{|lambda|}`.
pub fn nu_tilde_partition(m: usize, n: i64) -> Result<LaurentPoly> {
    let rect = Partition::rectangle(m as i64, n);
    let mut total = LaurentPoly::zero();
    for lam in partitions_in_rectangle(m as i64, n) {
        let g = hall_g(&rect, &lam, Monomial::var_pow(Var::Q, 2));
        total = total + g * real_structure_count(&lam)? * t_pow(lam.size());
    }
    Ok(q_to_z(&total))
}

/// Inert only: the double partition sum
/// `sum (t^2; q^2)_{mu'_1} g^{(m^n)}_mu(q) B(m, n, lambda, mu; q) t^{mn + |lambda| - 2|mu|}`.
pub fn nu_order_partition(m: usize, n: i64) -> Result<LaurentPoly> {
    let mi = m as i64;
    let rect = Partition::rectangle(mi, n);
    let parts = partitions_in_rectangle(mi, n);
    let mut total = LaurentPoly::zero();
    for mu in &parts {
        let g = hall_g(&rect, mu, Monomial::var(Var::Q));
        let width = mu.conjugate().part(1);
        let poch = poch_poly(&Term::mono(Monomial::var_pow(Var::T, 2)), Monomial::var_pow(Var::Q, 2), width);
        let outer = g * poch;
        for lam in &parts {
            let b = B_count(mi, n, lam, mu)?;
            if b.is_zero() {
                continue;
            }
            total = total + &outer * &b * t_pow(mi * n + lam.size() - 2 * mu.size());
        }
    }
    Ok(q_to_z(&total))
}

fn agree(what: &str, order: OrderId, n: i64, routes: &[(&str, LaurentPoly)]) -> Result<LaurentPoly> {
    let (name0, first) = &routes[0];
    for (name, p) in &routes[1..] {
        if p != first {
            return Err(Error::FormMismatch(format!(
                "{} for {} n={}: {} = {} but {} = {}",
                what, order, n, name0, first, name, p
            )));
        }
    }
    Ok(first.clone())
}

/// `nu` of `R~^n`, asserting that the master polynomial, the explicit formula
/// and (for the inert order) the partition sum all agree.
pub fn nu_tilde(order: OrderId, n: i64) -> Result<LaurentPoly> {
    let mut routes = vec![("master", nu_tilde_master(order, n)), ("display", nu_tilde_display(order, n)?)];
    if order.kind == OrderKind::Inert {
        routes.push(("partition", nu_tilde_partition(order.m, n)?));
    }
    agree("nu~", order, n, &routes)
}

/// `nu` of `R^n`, asserting agreement of all available routes.
pub fn nu_order(order: OrderId, n: i64) -> Result<LaurentPoly> {
    let mut routes = vec![("master", nu_order_master(order, n)), ("display", nu_order_display(order, n)?)];
    if order.kind == OrderKind::Inert {
        routes.push(("partition", nu_order_partition(order.m, n)?));
    }
    agree("nu", order, n, &routes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tz(pairs: &[(i64, i32, i32)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(c, t, z)| (mono(&[(Var::T, t), (Var::Z, z)]), int(c))))
    }

    #[test]
    fn inert_rank_one() {
        let o = OrderId::new(OrderKind::Inert, 1);
        // 1 + (z^{-1} + 1) t
        assert_eq!(nu_tilde(o, 1).unwrap(), tz(&[(1, 0, 0), (1, 1, -1), (1, 1, 0)]));
        // 1 + t + t^2 z^{-1}
        assert_eq!(nu_order(o, 1).unwrap(), tz(&[(1, 0, 0), (1, 1, 0), (1, 2, -1)]));
    }

    #[test]
    fn routes_agree() {
        for kind in OrderKind::ALL {
            for m in 1..=2 {
                for n in 0..=2 {
                    let o = OrderId::new(kind, m);
                    let a = nu_tilde(o, n).unwrap();
                    let b = nu_order(o, n).unwrap();
                    assert!(a.coeff_of(Var::T, 0).is_one() && b.coeff_of(Var::T, 0).is_one());
                }
            }
        }
    }
}
