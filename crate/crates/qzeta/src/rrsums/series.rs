//! Series-regime multisums. Parameters are monomials `c q^d` with `t` of
//! positive degree and `a` of nonnegative degree, so every denominator
//! Pochhammer is a unit power series and the sums converge `q`-adically.
//!
//! Each family enumerates indices up to a bound read off from the quadratic
//! part of the exponent, and skips any term whose exact valuation is at least
//! the working cap. Dropped terms are accounted for by marking the total as
//! known only to `O(q^cap)`.

use num_traits::One;

use super::finite::{c2, x_closed, x_multisum};
use super::index::{chains, decreasing};
use crate::error::{Error, Result};
use crate::exact::{Lser, QSeries, Rational};
use crate::qkit::{poch_inf, poch_inv_series, poch_series, poch_val, QAlg, QMono};

/// Evaluates `f(cap)` to `order`, doubling the cap while precision runs out.
pub fn to_order<F: Fn(i64) -> Result<Lser>>(order: usize, f: F) -> Result<QSeries> {
    let base = order as i64 + 1;
    let mut cap = base + 4;
    loop {
        match f(cap).and_then(|s| s.to_qseries(order)) {
            Err(Error::PrecisionLoss { .. }) if cap < 16 * base => cap *= 2,
            r => return r,
        }
    }
}

/// `sum_{j >= 0} max(0, -(d + j))`: how far `(c q^d; q)_n` can pull the valuation down.
pub fn neg_depth(d: i64) -> i64 {
    if d >= 0 {
        0
    } else {
        (-d) * (-d + 1) / 2
    }
}

fn check_params(a: Option<&QMono>, t: &QMono) -> Result<()> {
    if t.d < 1 {
        return Err(Error::DivergentSpec(format!("t = {} must have positive q-degree", t)));
    }
    if let Some(a) = a {
        if a.is_zero() || a.d < 0 {
            return Err(Error::DivergentSpec(format!("a = {} must be nonzero of nonnegative q-degree", a)));
        }
    }
    Ok(())
}

fn known_to(s: Lser, cap: i64) -> Lser {
    s.add(&Lser::from_coeffs(0, Vec::new(), cap, cap))
}

fn qb(n: i64, k: i64, cap: i64) -> Lser {
    Lser::qbinom_in(&Lser::monomial(Rational::one(), 1, cap), n, k)
}

fn inv_q(n: i64, cap: i64) -> Result<Lser> {
    poch_inv_series(&QMono::q(1), 1, n, cap)
}

fn sign_mono(e: i64) -> QMono {
    if e.rem_euclid(2) == 0 {
        QMono::q(0)
    } else {
        QMono::q(0).neg()
    }
}

/// `(aq)_inf (t^2 q)_inf / ((tq)_inf (a t q^{N+1})_inf)`.
fn x_prefactor(a: &QMono, t: &QMono, big_n: i64, cap: i64) -> Result<Lser> {
    let t2q = t.pow(2).shift(1);
    Ok(poch_inf(&a.shift(1), 1, cap)?
        .mul(&poch_inf(&t2q, 1, cap)?)
        .mul(&poch_inf(&t.shift(1), 1, cap)?.inv()?)
        .mul(&poch_inf(&a.mul(t).shift(big_n + 1), 1, cap)?.inv()?))
}

/// Shared `u/v` summand of the `X` reformulation and of `V`; `with_t2q`
/// switches the `(t^2 q)_{N + v_m}` denominator on.
fn uv_sum(m: usize, big_n: i64, a: &QMono, t: &QMono, with_t2q: bool, cap: i64) -> Result<Lser> {
    let at = t.div(a);
    let depth = neg_depth(at.d);
    let vmax = (cap + depth) / (1 + a.d) + 1;
    let t2q = t.pow(2).shift(1);
    let mut total = Lser::zero(cap);
    let us = chains(m, big_n);
    for v in decreasing(m, vmax) {
        let v1 = v[0];
        let Some(pv1) = poch_val(t, v1) else { continue };
        let Some(pv2) = poch_val(&at, v1) else { continue };
        let sv: i64 = v.iter().sum();
        for u in &us {
            let su: i64 = u.iter().sum();
            let um = u[m - 1];
            let quad: i64 = u.iter().zip(&v).map(|(ui, vi)| ui * ui + ui * vi + vi * vi).sum();
            let mono = a
                .pow(v1 + su)
                .mul(&t.pow(-2 * v1 + su + 2 * sv))
                .mul(&QMono::q(-v1 * v1 + v1 + quad));
            if mono.d + pv1 + pv2 >= cap {
                continue;
            }
            let mut term = mono
                .lser(cap)
                .mul(&poch_series(t, 1, v1, cap)?)
                .mul(&poch_series(&at, 1, v1, cap)?)
                .mul(&inv_q(big_n - um, cap)?)
                .mul(&inv_q(um, cap)?)
                .mul(&poch_inv_series(&a.shift(1), 1, u[0], cap)?)
                .mul(&inv_q(v1, cap)?);
            if with_t2q {
                term = term.mul(&poch_inv_series(&t2q, 1, big_n + v[m - 1], cap)?);
            }
            for i in 1..m {
                term = term.mul(&qb(u[i], u[i - 1], cap)).mul(&qb(v[i - 1], v[i], cap));
            }
            total = total.add(&term);
        }
    }
    Ok(known_to(total, cap))
}

/// `X_N^{(m)}(a, t, q)` through its `u/v` reformulation with infinite-product prefactor.
pub fn x_new(m: usize, big_n: i64, a: &QMono, t: &QMono, cap: i64) -> Result<Lser> {
    check_params(Some(a), t)?;
    Ok(x_prefactor(a, t, big_n, cap)?.mul(&uv_sum(m, big_n, a, t, true, cap)?))
}

/// The auxiliary series `V_N^{(m)}(a, t, q)` from its `2m`-fold definition.
pub fn v_multisum(m: usize, big_n: i64, a: &QMono, t: &QMono, cap: i64) -> Result<Lser> {
    check_params(Some(a), t)?;
    uv_sum(m, big_n, a, t, false, cap)
}

/// Outer `(u, v)` layer shared by the `V` and `X` recursions.
fn rec_layer(m: usize, big_n: i64, a: &QMono, t: &QMono, with_t2q: bool, cap: i64) -> Result<Lser> {
    assert!(m >= 2);
    let at = t.div(a);
    let depth = neg_depth(at.d);
    let t2q = t.pow(2).shift(1);
    let mm = m as i64;
    let mut total = Lser::zero(cap);
    let mut v = 0;
    loop {
        // v-part of the exponent grows at least like (1 + e_a) v + (m - 1) v^2;
        // both (a^{-1}t)_v and the inner V can each pull it down by `depth`.
        if (1 + a.d) * v + (mm - 1) * v * v - 2 * depth >= cap {
            break;
        }
        if let (Some(pv1), Some(pv2)) = (poch_val(t, v), poch_val(&at, v)) {
            for u in 0..=big_n {
                let mono = a
                    .pow(u + v)
                    .mul(&t.pow(u + 2 * (mm - 1) * v))
                    .mul(&QMono::q(u * u + (u + 1) * v + (mm - 1) * v * v));
                let low = mono.d + pv1 + pv2 - neg_depth(t.shift(v).div(a).d);
                if low >= cap {
                    continue;
                }
                let inner_cap = cap - (mono.d + pv1 + pv2).min(0) + depth;
                let inner = v_multisum(m - 1, u, a, &t.shift(v), inner_cap)?;
                let mut term = mono
                    .lser(cap)
                    .mul(&poch_series(t, 1, v, cap)?)
                    .mul(&poch_series(&at, 1, v, cap)?)
                    .mul(&inv_q(big_n - u, cap)?)
                    .mul(&inv_q(v, cap)?)
                    .mul(&inner);
                if with_t2q {
                    term = term.mul(&poch_inv_series(&t2q, 1, big_n + v, cap)?);
                }
                total = total.add(&term);
            }
        }
        v += 1;
    }
    Ok(known_to(total, cap))
}

/// `V_N^{(m)}` through its recursion in `m` (needs `m >= 2`).
pub fn v_rec(m: usize, big_n: i64, a: &QMono, t: &QMono, cap: i64) -> Result<Lser> {
    check_params(Some(a), t)?;
    if m < 2 {
        return Err(Error::Config("the V recursion needs m >= 2".into()));
    }
    rec_layer(m, big_n, a, t, false, cap)
}

/// `X_N^{(m)}` through the same recursion with the `X` prefactor (needs `m >= 2`).
pub fn x_rec(m: usize, big_n: i64, a: &QMono, t: &QMono, cap: i64) -> Result<Lser> {
    check_params(Some(a), t)?;
    if m < 2 {
        return Err(Error::Config("the X recursion needs m >= 2".into()));
    }
    Ok(x_prefactor(a, t, big_n, cap)?.mul(&rec_layer(m, big_n, a, t, true, cap)?))
}

/// Largest `n` with `e_t n + n(n+1)/2 < cap`, the bound for the signed chain sums.
fn chain_top(et: i64, cap: i64) -> i64 {
    let mut n = 0;
    while et * (n + 1) + (n + 1) * (n + 2) / 2 < cap {
        n += 1;
    }
    n
}

/// Summand of the signed chain sums
/// `(-1)^{n_m} t^{-n_m + 2 sum n} q^{-C(n_m,2) + sum n^2} (t)_{n_m} / (q)_{n_m} * prod [n_i, n_{i-1}]`.
fn signed_chain_term(ns: &[i64], t: &QMono, cap: i64) -> Result<Option<Lser>> {
    let nm = *ns.last().expect("m >= 1");
    let s: i64 = ns.iter().sum();
    let sq: i64 = ns.iter().map(|x| x * x).sum();
    let mono = sign_mono(nm).mul(&t.pow(-nm + 2 * s)).mul(&QMono::q(-c2(nm) + sq));
    let Some(pv) = poch_val(t, nm) else { return Ok(None) };
    if mono.d + pv >= cap {
        return Ok(None);
    }
    let mut term = mono.lser(cap).mul(&poch_series(t, 1, nm, cap)?).mul(&inv_q(nm, cap)?);
    for i in 1..ns.len() {
        term = term.mul(&qb(ns[i], ns[i - 1], cap));
    }
    Ok(Some(term))
}

/// The `m`-fold form of `V_N^{(m)}`.
pub fn v_expression(m: usize, big_n: i64, a: &QMono, t: &QMono, cap: i64) -> Result<Lser> {
    check_params(Some(a), t)?;
    let atq = a.mul(t).shift(1);
    let mut total = Lser::zero(cap);
    for ns in chains(m, chain_top(t.d, cap)) {
        if let Some(term) = signed_chain_term(&ns, t, cap)? {
            total = total.add(&term.mul(&poch_inv_series(&atq, 1, big_n + ns[0], cap)?));
        }
    }
    let pre = poch_inf(&atq, 1, cap)?.mul(&poch_inf(&a.shift(1), 1, cap)?.inv()?).mul(&inv_q(big_n, cap)?);
    Ok(pre.mul(&known_to(total, cap)))
}

/// The `a`-free signed sum of `X_N^{(m)}` without its prefactor, `m >= 2`:
/// denominators `(t^2 q)_{N + n_2} (q)_{N - n_1}`.
pub fn x_exp2_sum(m: usize, big_n: i64, t: &QMono, cap: i64) -> Result<Lser> {
    check_params(None, t)?;
    if m < 2 {
        return Err(Error::Config("this expansion needs m >= 2".into()));
    }
    let t2q = t.pow(2).shift(1);
    let mut total = Lser::zero(cap);
    for ns in chains(m, chain_top(t.d, cap)) {
        if ns[0] > big_n {
            continue;
        }
        if let Some(term) = signed_chain_term(&ns, t, cap)? {
            total = total.add(
                &term
                    .mul(&poch_inv_series(&t2q, 1, big_n + ns[1], cap)?)
                    .mul(&inv_q(big_n - ns[0], cap)?),
            );
        }
    }
    Ok(known_to(total, cap))
}

/// `X_N^{(m)}` from its `a`-free signed expansion, `m >= 2`.
pub fn x_exp2(m: usize, big_n: i64, t: &QMono, cap: i64) -> Result<Lser> {
    let t2q = t.pow(2).shift(1);
    let pre = poch_inf(&t2q, 1, cap)?.mul(&poch_inf(&t.shift(1), 1, cap)?.inv()?);
    Ok(pre.mul(&x_exp2_sum(m, big_n, t, cap)?))
}

/// The companion signed sum with `(t^2 q)_{N + n_1}` and no `(q)_{N - n_1}`, `m >= 2`.
pub fn x_exp2_companion_sum(m: usize, big_n: i64, t: &QMono, cap: i64) -> Result<Lser> {
    check_params(None, t)?;
    if m < 2 {
        return Err(Error::Config("this expansion needs m >= 2".into()));
    }
    let t2q = t.pow(2).shift(1);
    let mut total = Lser::zero(cap);
    for ns in chains(m, chain_top(t.d, cap)) {
        if let Some(term) = signed_chain_term(&ns, t, cap)? {
            total = total.add(&term.mul(&poch_inv_series(&t2q, 1, big_n + ns[0], cap)?));
        }
    }
    Ok(known_to(total, cap))
}

/// `x_closed` times `(tq)_inf / (t^2 q)_inf`, the right side of both corollaries
/// (the second one additionally carries `(q)_N`).
pub fn x_closed_scaled(m: usize, big_n: i64, t: &QMono, with_qn: bool, cap: i64) -> Result<Lser> {
    let q = Lser::monomial(Rational::one(), 1, cap);
    let t2q = t.pow(2).shift(1);
    let mut s = x_closed(m, big_n, &t.lser(cap), &q)?
        .mul(&poch_inf(&t.shift(1), 1, cap)?)
        .mul(&poch_inf(&t2q, 1, cap)?.inv()?);
    if with_qn {
        s = s.mul(&poch_series(&QMono::q(1), 1, big_n, cap)?);
    }
    Ok(s)
}

/// The finite `2m`-fold definition of `X` evaluated as a series.
pub fn x_multisum_series(m: usize, big_n: i64, a: &QMono, t: &QMono, cap: i64) -> Result<Lser> {
    let q = Lser::monomial(Rational::one(), 1, cap);
    x_multisum(m, big_n, &a.lser(cap), &t.lser(cap), &q)
}

/// Left side of the two-index transformation: a finite sum in `n <= N`.
pub fn trans2_lhs(mm: i64, big_n: i64, a: &QMono, t: &QMono, cap: i64) -> Result<Lser> {
    check_params(Some(a), t)?;
    let mut total = Lser::zero(cap);
    for n in 0..=big_n {
        let term = t
            .pow(2 * n)
            .shift(n * n + mm * n)
            .lser(cap)
            .mul(&poch_series(&a.shift(1), 1, mm + n, cap)?)
            .mul(&inv_q(big_n - n, cap)?)
            .mul(&inv_q(n, cap)?)
            .mul(&poch_inv_series(&t.shift(1), 1, mm + n, cap)?)
            .mul(&poch_inv_series(&a.mul(t).shift(1), 1, mm + n, cap)?);
        total = total.add(&term);
    }
    Ok(total)
}

/// Right side of the two-index transformation: infinite products times an
/// unbounded sum with `val >= (e_a + M + 1) n - depth`.
pub fn trans2_rhs(mm: i64, big_n: i64, a: &QMono, t: &QMono, cap: i64) -> Result<Lser> {
    check_params(Some(a), t)?;
    let at = t.div(a);
    let t2q = t.pow(2).shift(1);
    let depth = neg_depth(at.d);
    let mut total = Lser::zero(cap);
    let mut n = 0;
    while (a.d + mm + 1) * n - depth < cap {
        if let (Some(p1), Some(p2)) = (poch_val(t, n), poch_val(&at, n)) {
            let mono = a.pow(n).shift((mm + 1) * n);
            if mono.d + p1 + p2 < cap {
                total = total.add(
                    &mono
                        .lser(cap)
                        .mul(&poch_series(t, 1, n, cap)?)
                        .mul(&poch_series(&at, 1, n, cap)?)
                        .mul(&inv_q(n, cap)?)
                        .mul(&poch_inv_series(&t2q, 1, mm + big_n + n, cap)?),
                );
            }
        }
        n += 1;
    }
    let pre = poch_inf(&a.shift(1), 1, cap)?
        .mul(&poch_inf(&t2q, 1, cap)?)
        .mul(&poch_inf(&t.shift(1), 1, cap)?.inv()?)
        .mul(&poch_inf(&a.mul(t).shift(1), 1, cap)?.inv()?)
        .mul(&inv_q(big_n, cap)?);
    Ok(pre.mul(&known_to(total, cap)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    const ORDER: usize = 18;

    fn same<F: Fn(i64) -> Result<Lser>, G: Fn(i64) -> Result<Lser>>(f: F, g: G) {
        let l = to_order(ORDER, f).unwrap();
        let r = to_order(ORDER, g).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn depth_values() {
        assert_eq!(neg_depth(3), 0);
        assert_eq!(neg_depth(-1), 1);
        assert_eq!(neg_depth(-3), 6);
    }

    #[test]
    fn x_new_matches_definition() {
        let (a, t) = (QMono::new(int(2), 1), QMono::new(int(-1), 1));
        same(|c| x_new(1, 1, &a, &t, c), |c| x_multisum_series(1, 1, &a, &t, c));
        let (a, t) = (QMono::q(2), QMono::q(1));
        same(|c| x_new(2, 1, &a, &t, c), |c| x_multisum_series(2, 1, &a, &t, c));
    }

    #[test]
    fn v_forms_agree() {
        let (a, t) = (QMono::new(rat(1, 2), 0), QMono::new(int(3), 1));
        same(|c| v_multisum(1, 2, &a, &t, c), |c| v_expression(1, 2, &a, &t, c));
        same(|c| v_multisum(2, 1, &a, &t, c), |c| v_rec(2, 1, &a, &t, c));
    }

    #[test]
    fn trans2_instance() {
        let (a, t) = (QMono::q(1), QMono::q(1));
        same(|c| trans2_lhs(1, 2, &a, &t, c), |c| trans2_rhs(1, 2, &a, &t, c));
    }

    #[test]
    fn exp2_against_closed_form() {
        let t = QMono::q(2);
        same(|c| x_exp2(2, 2, &t, c), |c| x_closed_scaled(2, 2, &t, false, c).map(|s| {
            let t2q = t.pow(2).shift(1);
            s.mul(&poch_inf(&t2q, 1, c).unwrap()).mul(&poch_inf(&t.shift(1), 1, c).unwrap().inv().unwrap())
        }));
        same(|c| x_exp2_companion_sum(2, 1, &t, c), |c| x_closed_scaled(2, 1, &t, true, c));
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(matches!(x_new(1, 1, &QMono::q(1), &QMono::q(0), 20), Err(Error::DivergentSpec(_))));
        assert!(matches!(x_exp2(1, 1, &QMono::q(1), 20), Err(Error::Config(_))));
    }
}
