//! Finitized Coh zeta functions and the two `2m`-fold multisums for them.

use super::tseries::TSeries;
use super::{OrderId, OrderKind};
use crate::error::Result;
use crate::exact::{int, pochhammer, pochhammer_inv, Monomial, RationalFn, Term, Var};
use crate::qkit::QAlg;
use crate::rrsums::{ag_finite, br_finite, rs_pairs, x_multisum, BrVariant};

fn z() -> RationalFn {
    RationalFn::var(Var::Z)
}

fn t() -> RationalFn {
    RationalFn::var(Var::T)
}

fn tz() -> RationalFn {
    RationalFn::mono(Monomial::from_pairs(&[(Var::T, 1), (Var::Z, 1)]))
}

/// `1 / (t^e; z^e)_n`, one Solomon factor of the zeta function of `F[[T]]^n`.
pub fn solomon_zeta(n: i64, e: i32) -> Result<RationalFn> {
    let te = RationalFn::mono(Monomial::var_pow(Var::T, e));
    let ze = RationalFn::mono(Monomial::var_pow(Var::Z, e));
    pochhammer_inv(&te, &ze, n)
}

/// `(tz; z)_n^{-1}` times `AG_n(t, z)`, `Br_n(-t, z)` or `Br_n(t, z)`.
pub fn coh_zeta_finitized(order: OrderId, n: i64) -> Result<RationalFn> {
    let sum = match order.kind {
        OrderKind::Ramified => ag_finite(order.m, n, &t(), &z())?,
        OrderKind::Split => br_finite(BrVariant::Plain, order.m, n, &t().neg(), &z())?,
        OrderKind::Inert => br_finite(BrVariant::Plain, order.m, n, &t(), &z())?,
    };
    Ok(sum.mul(&pochhammer_inv(&tz(), &z(), n)?))
}

fn r_gaps_inv(n: i64, r: &[i64]) -> Result<RationalFn> {
    let mut acc = RationalFn::one();
    let mut hi = n;
    for &k in r.iter().rev() {
        acc = acc.mul(&pochhammer_inv(&z(), &z(), hi - k)?);
        hi = k;
    }
    Ok(acc)
}

fn rs_weight(r: &[i64], s: &[i64]) -> Result<RationalFn> {
    let lin: i64 = r.iter().zip(s).map(|(ri, si)| 2 * ri - si).sum();
    let quad: i64 = r.iter().zip(s).map(|(ri, si)| ri * ri - ri * si + si * si).sum();
    let mut w = RationalFn::mono(Monomial::from_pairs(&[(Var::T, lin as i32), (Var::Z, quad as i32)]));
    for i in 1..r.len() {
        w = w.mul(&RationalFn::qbinom_in(&z(), r[i] - s[i - 1], r[i] - s[i]));
    }
    Ok(w.mul(&RationalFn::qbinom_in(&z(), r[0], r[0] - s[0])))
}

/// The `2m`-fold `(r, s)` multisum for the inert order.
pub fn zeta_new_multisum(m: usize, n: i64) -> Result<RationalFn> {
    let t2z2 = RationalFn::mono(Monomial::from_pairs(&[(Var::T, 2), (Var::Z, 2)]));
    let z2 = RationalFn::mono(Monomial::var_pow(Var::Z, 2));
    let mut terms = Vec::new();
    for (r, s) in rs_pairs(m, n) {
        let (r1, s1) = (r[0], s[0]);
        // (-z; z)_{r_1} / (-z; z)_{s_1} = (-z^{s_1 + 1}; z)_{r_1 - s_1}
        let ratio = pochhammer(&RationalFn::from_term(&Term::new(int(-1), Monomial::var_pow(Var::Z, s1 as i32 + 1))), &z(), r1 - s1)?;
        terms.push(
            rs_weight(&r, &s)?
                .mul(&r_gaps_inv(n, &r)?)
                .mul(&pochhammer_inv(&z(), &z(), r1)?)
                .mul(&pochhammer_inv(&t2z2, &z2, r1)?)
                .mul(&ratio),
        );
    }
    Ok(pochhammer(&z(), &z(), n)?.mul(&RationalFn::sum(terms.iter())))
}

/// The `2m`-fold multisum of the split order, without the `(z; z)_n` prefactor:
/// denominators `(tz; z)_{r_1}^2 (z; z)_{s_1}`.
pub fn split_multisum(m: usize, n: i64) -> Result<RationalFn> {
    let mut terms = Vec::new();
    for (r, s) in rs_pairs(m, n) {
        let inv_tz = pochhammer_inv(&tz(), &z(), r[0])?;
        terms.push(
            rs_weight(&r, &s)?
                .mul(&r_gaps_inv(n, &r)?)
                .mul(&inv_tz)
                .mul(&inv_tz)
                .mul(&pochhammer_inv(&z(), &z(), s[0])?),
        );
    }
    Ok(RationalFn::sum(terms.iter()))
}

/// `(z; z)_n (tz; z)_n^{-1} X_n(-1, -t, z)`.
pub fn x_bridge(m: usize, n: i64) -> Result<RationalFn> {
    let a = RationalFn::from_rational(int(-1));
    let x = x_multisum(m, n, &a, &t().neg(), &z())?;
    Ok(pochhammer(&z(), &z(), n)?.mul(&pochhammer_inv(&tz(), &z(), n)?).mul(&x))
}

/// `t`-expansion of the finitized Coh zeta function through `t^deg`.
pub fn coh_t_series(order: OrderId, n: i64, deg: usize) -> Result<TSeries> {
    TSeries::from_rational(&coh_zeta_finitized(order, n)?, deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rf_equal, LaurentPoly};

    #[test]
    fn small_orders() {
        for kind in OrderKind::ALL {
            let o = OrderId::new(kind, 1);
            assert!(rf_equal(&coh_zeta_finitized(o, 0).unwrap(), &RationalFn::one()));
        }
        assert!(rf_equal(&zeta_new_multisum(2, 0).unwrap(), &RationalFn::one()));
        let o = OrderId::new(OrderKind::Inert, 1);
        assert!(rf_equal(&zeta_new_multisum(1, 1).unwrap(), &coh_zeta_finitized(o, 1).unwrap()));
        let s = solomon_zeta(1, 1).unwrap();
        assert!(rf_equal(&s, &RationalFn::one_minus_term(&Term::var(Var::T)).inv().unwrap()));
    }

    #[test]
    fn series_leading_term() {
        let o = OrderId::new(OrderKind::Inert, 1);
        let s = coh_t_series(o, 2, 4).unwrap();
        assert!(s.coeff(0).is_one());
        // inert m = 1: the t^1 coefficient is z + ... + z^n
        assert_eq!(s.coeff(1), &LaurentPoly::univariate(Var::Z, &[0, 1, 1]));
    }
}
