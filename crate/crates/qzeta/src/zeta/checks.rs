//! Verifications at the zeta level, each producing a [`CheckReport`].

use rayon::prelude::*;
use serde::Serialize;

use super::coh::{coh_t_series, coh_zeta_finitized, split_multisum, x_bridge, zeta_new_multisum};
use super::nu::{nu_order, nu_order_display, nu_order_master, nu_tilde, nu_tilde_display, nu_tilde_master};
use super::{OrderId, OrderKind};
use crate::error::{Error, Result};
use crate::exact::{eval_cyclotomic, int, pochhammer, pochhammer_inv, rf_equal, CycPoly, Monomial, RationalFn, Term, Var};
use crate::report::{sort_reports, CheckReport, Regime, Status};
use crate::rrsums::{br_finite, cy_zh, cy_zh_rank_one, master_poly, root_closed_form, BrVariant};

fn mono(pairs: &[(Var, i32)]) -> Monomial {
    Monomial::from_pairs(pairs)
}

fn z() -> RationalFn {
    RationalFn::var(Var::Z)
}

/// Turns an error into a failed report, keeping the message as a witness.
fn guard<F: FnOnce() -> Result<CheckReport>>(base: CheckReport, f: F) -> CheckReport {
    CheckReport::timed(|| match f() {
        Ok(r) => r,
        Err(Error::PoleAtPoint) => base.with_status(Status::SkippedPole),
        Err(Error::TooLarge { .. }) => base.with_status(Status::SkippedTooLarge),
        Err(e) => base.fail(format!("error: {}", e), "(no value)"),
    })
}

fn compare_rf(r: CheckReport, lhs: &RationalFn, rhs: &RationalFn) -> CheckReport {
    if rf_equal(lhs, rhs) {
        r
    } else {
        r.fail(lhs, rhs)
    }
}

fn order_report(id: &str, source: &str, regime: Regime, order: OrderId, n: i64) -> CheckReport {
    CheckReport::new(id, source, regime).param("order", order.kind).param("m", order.m).param("n", n)
}

/// Inert multisum against `(tz; z)_n^{-1} Br_n(t, z)`.
pub fn main_chain(m: usize, n: i64) -> CheckReport {
    let base = CheckReport::new("main-theorem", "inert Coh zeta multisum equals the Bressoud quotient", Regime::Symbolic)
        .param("m", m)
        .param("n", n);
    guard(base.clone(), || {
        let lhs = zeta_new_multisum(m, n)?;
        let rhs = coh_zeta_finitized(OrderId::new(OrderKind::Inert, m), n)?;
        Ok(compare_rf(base, &lhs, &rhs))
    })
}

/// `(z; z)_n (tz; z)_n^{-1} X_n(-1, -t, z)` against the inert multisum.
pub fn bridge_check(m: usize, n: i64) -> CheckReport {
    let base = CheckReport::new("x-bridge", "X at a = -1, t -> -t gives the inert multisum", Regime::Symbolic)
        .param("m", m)
        .param("n", n);
    guard(base.clone(), || Ok(compare_rf(base, &x_bridge(m, n)?, &zeta_new_multisum(m, n)?)))
}

/// `(z; z)_n` times the split multisum against `(tz; z)_n^{-1} Br_n(-t, z)`, plus the
/// `t -> -t` link `zeta_split(t) (tz; z)_n = zeta_inert(-t) (-tz; z)_n`.
pub fn split_check(m: usize, n: i64) -> CheckReport {
    let base = CheckReport::new("split-multisum", "split Coh zeta multisum", Regime::Symbolic)
        .param("m", m)
        .param("n", n)
        .note("compared after multiplying the multisum by (z;z)_n");
    guard(base.clone(), || {
        let split = OrderId::new(OrderKind::Split, m);
        let inert = OrderId::new(OrderKind::Inert, m);
        let lhs = pochhammer(&z(), &z(), n)?.mul(&split_multisum(m, n)?);
        let coh_split = coh_zeta_finitized(split, n)?;
        let r = compare_rf(base, &lhs, &coh_split);
        let tz = RationalFn::mono(mono(&[(Var::T, 1), (Var::Z, 1)]));
        let a = coh_split.mul(&pochhammer(&tz, &z(), n)?);
        let neg_t = [(Var::T, Term::new(int(-1), Monomial::var(Var::T)))];
        let b = coh_zeta_finitized(inert, n)?.subst(&neg_t)?.mul(&pochhammer(&tz.neg(), &z(), n)?);
        Ok(compare_rf(r, &a, &b))
    })
}

/// Both `nu` functions along every route (master polynomial, explicit formula,
/// partition sums for the inert order).
pub fn interpolation_check(order: OrderId, n: i64) -> CheckReport {
    let base = order_report("interpolation", "master polynomial specializes to both nu functions", Regime::Symbolic, order, n);
    guard(base.clone(), || {
        let a = nu_tilde(order, n)?;
        let b = nu_order(order, n)?;
        let mut r = base;
        for p in [&a, &b] {
            if !p.coeff_of(Var::T, 0).is_one() {
                r = r.fail(p, "t^0 coefficient 1");
            }
        }
        Ok(r)
    })
}

/// `z^{mn^2} nu~(1) / (z^2; z^2)_n = Br_n(1, z) / (z; z)_n` for the inert order.
pub fn s0_normalization(m: usize, n: i64) -> CheckReport {
    let base = CheckReport::new("s0-normalization", "inert Coh zeta at s = 0 from the normalization", Regime::Symbolic)
        .param("m", m)
        .param("n", n);
    guard(base.clone(), || {
        let nu = nu_tilde(OrderId::new(OrderKind::Inert, m), n)?.subst_values(&[(Var::T, int(1))])?;
        let z2 = RationalFn::mono(Monomial::var_pow(Var::Z, 2));
        let lhs = RationalFn::from_poly(nu.mul_mono(&Monomial::var_pow(Var::Z, (m as i64 * n * n) as i32)))
            .mul(&pochhammer_inv(&z2, &z2, n)?);
        let br = br_finite(BrVariant::Plain, m, n, &RationalFn::one(), &z())?;
        let rhs = br.mul(&pochhammer_inv(&z(), &z(), n)?);
        Ok(compare_rf(base, &lhs, &rhs))
    })
}

/// `(tz;z)_n`, `(tz;z)_n^2` or `(t^2 z^2; z^2)_n`: the zeta function of the normalization at `s + n`.
fn normalization(kind: OrderKind, n: i64) -> Result<RationalFn> {
    let tz = RationalFn::mono(mono(&[(Var::T, 1), (Var::Z, 1)]));
    Ok(match kind {
        OrderKind::Ramified => pochhammer(&tz, &z(), n)?,
        OrderKind::Split => pochhammer(&tz, &z(), n)?.pow(2)?,
        OrderKind::Inert => {
            let z2 = RationalFn::mono(Monomial::var_pow(Var::Z, 2));
            pochhammer(&tz.mul(&tz), &z2, n)?
        }
    })
}

/// Finitized Coh zeta function as `nu` at `s + n` over the normalization's zeta factor.
pub fn shift_consistency(order: OrderId, n: i64) -> CheckReport {
    let base = order_report("shift-consistency", "Coh zeta as shifted nu over the normalization", Regime::Symbolic, order, n);
    guard(base.clone(), || {
        let shifted = nu_order(order, n)?.subst(&[(Var::T, Term::mono(mono(&[(Var::T, 1), (Var::Z, n as i32)])))]);
        let rhs = RationalFn::from_poly(shifted).div(&normalization(order.kind, n)?)?;
        Ok(compare_rf(base, &coh_zeta_finitized(order, n)?, &rhs))
    })
}

/// `nu(t) = z^{-mn^2} t^{2mn} nu(t^{-1} z^n)`, the reflection `s -> n - s`.
pub fn geo_reflection(order: OrderId, n: i64) -> CheckReport {
    let base = order_report("geo-reflection", "reflection principle for nu", Regime::Symbolic, order, n);
    guard(base.clone(), || {
        let (m, ni) = (order.m as i32, n as i32);
        let nu = nu_order(order, n)?;
        let rhs = nu
            .subst(&[(Var::T, Term::mono(mono(&[(Var::T, -1), (Var::Z, ni)])))])
            .mul_mono(&mono(&[(Var::T, 2 * m * ni), (Var::Z, -m * ni * ni)]));
        Ok(base.compare(&nu, &rhs))
    })
}

/// `cyZh(u, t, q) = u^{mn} q^{mn^2} cyZh(u^{-1} q^{-2n}, u^{-1} t q^{-n}, q)`.
pub fn fine_reflection(order: OrderId, n: i64) -> CheckReport {
    let base = order_report("fine-reflection", "refined reflection for the specialized master polynomial", Regime::Symbolic, order, n);
    guard(base.clone(), || {
        let (d, ni) = (order.delta() as i32, n as i32);
        let c = cy_zh(order.epsilon(), &master_poly(order.m, n));
        let rhs = c
            .subst(&[
                (Var::U, Term::mono(mono(&[(Var::U, -1), (Var::Q, -2 * ni)]))),
                (Var::T, Term::mono(mono(&[(Var::U, -1), (Var::T, 1), (Var::Q, -ni)]))),
            ])
            .mul_mono(&mono(&[(Var::U, d * ni), (Var::Q, d * ni * ni)]));
        Ok(base.compare(&c, &rhs))
    })
}

/// Rank one: `nu` of `R` is `nu` of `R~` with `q -> tq`.
pub fn hilb_quot_rank1(order: OrderId) -> CheckReport {
    let base = CheckReport::new("hilb-quot-rank1", "rank-one Hilb-vs-Quot relation", Regime::Symbolic)
        .param("order", order.kind)
        .param("m", order.m);
    guard(base.clone(), || {
        let c = cy_zh(order.epsilon(), &master_poly(order.m, 1));
        let r = base.compare(&c, &cy_zh_rank_one(order.epsilon(), order.m));
        let at = |u: Term| c.subst(&[(Var::U, u)]);
        let lhs = at(Term::mono(Monomial::var_pow(Var::T, 2)));
        let rhs = at(Term::var(Var::T)).subst(&[(Var::Q, Term::mono(mono(&[(Var::T, 1), (Var::Q, 1)])))]);
        Ok(r.compare(&lhs, &rhs))
    })
}

/// Ramified order: `nu` of `R^n` is `nu` of `R~^n` with `t -> t^2`.
pub fn ramified_rank_rule(m: usize, n: i64) -> CheckReport {
    let base = CheckReport::new("ramified-t-squared", "ramified t -> t^2 rule", Regime::Symbolic)
        .param("m", m)
        .param("n", n);
    guard(base.clone(), || {
        let order = OrderId::new(OrderKind::Ramified, m);
        let c = cy_zh(0, &master_poly(m, n));
        let mut r = base;
        if !c.is_free_of(Var::T) {
            r = r.fail(&c, "free of t");
        }
        let lhs = nu_order_display(order, n)?;
        let rhs = nu_tilde_display(order, n)?.subst(&[(Var::T, Term::mono(Monomial::var_pow(Var::T, 2)))]);
        Ok(r.compare(&lhs, &rhs))
    })
}

/// `nu(E^n)` at `q = zeta_r` against `(nu(E)(t -> t^r) at q = 1)^{n/r}`, with
/// `E` the normalization (`tilde`) or the order itself; also checks the
/// closed form through the master polynomial at a root of unity.
pub fn nu_cyclic_sieving(order: OrderId, tilde: bool, n: i64, r: i64) -> CheckReport {
    let base = order_report("nu-cyclic-sieving", "cyclic sieving for nu", Regime::Cyclotomic, order, n)
        .param("r", r)
        .param("module", if tilde { "normalization" } else { "order" });
    guard(base.clone(), || {
        let (nu_n, nu_1) = if tilde {
            (nu_tilde_master(order, n), nu_tilde_master(order, 1))
        } else {
            (nu_order_master(order, n), nu_order_master(order, 1))
        };
        let lhs = eval_cyclotomic(&nu_n, Var::Z, r as u32);
        let u = if tilde { Monomial::var(Var::T) } else { Monomial::var_pow(Var::T, 2) };
        let eps_t = Term::new(int(order.epsilon()), Monomial::var(Var::T));
        // rank one at q = 1 with the rescaling t -> t^r taken in the master variables,
        // so the sign eps is raised to the r-th power along with t
        let one = master_poly(order.m, 1)
            .subst(&[(Var::U, Term::mono(u.pow(r as i32))), (Var::T, eps_t.pow(r as i32).expect("r >= 1"))])
            .subst_values(&[(Var::Z, int(1))])?;
        let predicted = CycPoly::from_poly(&one.pow((n / r) as u32), r as u32);
        let closed = root_closed_form(order.m, n, r)?.subst(&[(Var::U, Term::mono(u)), (Var::T, eps_t)]);
        let closed = CycPoly::from_poly(&closed, r as u32);
        // the same rescaling applied to nu itself, i.e. after eps is substituted
        let literal = nu_1
            .subst(&[(Var::T, Term::mono(Monomial::var_pow(Var::T, r as i32)))])
            .subst_values(&[(Var::Z, int(1))])?;
        let literal = CycPoly::from_poly(&literal.pow((n / r) as u32), r as u32);
        let mut rep = if lhs == predicted { base } else { base.fail(&lhs, &predicted) };
        if literal != lhs {
            rep = rep.note(format!("t -> t^r after eps = {} gives {} instead", order.epsilon(), literal));
        }
        Ok(if lhs == closed { rep } else { rep.fail(&lhs, &closed) })
    })
}

/// Where the `t^k` coefficient of the finitized Coh zeta function settles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stabilization {
    pub k: usize,
    pub n_max: i64,
    /// Least `n` from which every later coefficient agrees with it modulo `z^{n+1}`.
    pub n0: Option<i64>,
}

/// Coefficient-wise convergence of the finitized Coh zeta function, read
/// `z`-adically: `c_{k,n} = c_{k,n'} mod z^{n+1}` for all `n0 <= n <= n' <= n_max`.
/// Passes when such an `n0 < n_max` exists.
pub fn coh_stabilization(order: OrderId, k: usize, n_max: i64) -> (CheckReport, Stabilization) {
    let base = CheckReport::new("coh-stabilization", "coefficient-wise limit of the finitized Coh zeta", Regime::Symbolic)
        .param("order", order.kind)
        .param("m", order.m)
        .param("k", k)
        .param("n_max", n_max);
    let mut st = Stabilization { k, n_max, n0: None };
    let rep = guard(base.clone(), || {
        let mut series = Vec::new();
        for n in 1..=n_max {
            series.push(coh_t_series(order, n, k)?);
        }
        let agrees = |n: i64| {
            let cut = n as i32 + 1;
            let here = series[(n - 1) as usize].coeff_below(k, cut);
            ((n + 1)..=n_max).all(|n2| series[(n2 - 1) as usize].coeff_below(k, cut) == here)
        };
        let mut n0 = None;
        for n in (1..n_max).rev() {
            if agrees(n) {
                n0 = Some(n);
            } else {
                break;
            }
        }
        st.n0 = n0;
        Ok(match n0 {
            Some(n0) => base.param("n0", n0),
            None => base.fail("no agreement before n_max", format!("k={}", k)),
        })
    });
    (rep, st)
}

/// Every zeta-level check over `m <= m_max`, `n <= n_max` (smaller ranges where noted).
pub fn zeta_suite(m_max: usize, n_max: i64) -> Vec<CheckReport> {
    let mut jobs: Vec<Box<dyn Fn() -> CheckReport + Send + Sync>> = Vec::new();
    for m in 1..=m_max {
        for n in 0..=n_max {
            jobs.push(Box::new(move || main_chain(m, n)));
            if m <= 2 && n <= 3 {
                jobs.push(Box::new(move || bridge_check(m, n)));
                jobs.push(Box::new(move || split_check(m, n)));
            }
            if n <= 3 {
                jobs.push(Box::new(move || s0_normalization(m, n)));
                jobs.push(Box::new(move || ramified_rank_rule(m, n)));
            }
            for kind in OrderKind::ALL {
                let o = OrderId::new(kind, m);
                if n <= 3 {
                    jobs.push(Box::new(move || interpolation_check(o, n)));
                }
                if m <= 2 && n <= 3 {
                    jobs.push(Box::new(move || shift_consistency(o, n)));
                    jobs.push(Box::new(move || geo_reflection(o, n)));
                    jobs.push(Box::new(move || fine_reflection(o, n)));
                }
                for r in 1..=n.max(1) {
                    if n >= 1 && n % r == 0 {
                        jobs.push(Box::new(move || nu_cyclic_sieving(o, true, n, r)));
                        jobs.push(Box::new(move || nu_cyclic_sieving(o, false, n, r)));
                    }
                }
            }
        }
        for kind in OrderKind::ALL {
            let o = OrderId::new(kind, m);
            jobs.push(Box::new(move || hilb_quot_rank1(o)));
        }
    }
    for m in 1..=m_max.min(2) {
        for k in 0..=3 {
            jobs.push(Box::new(move || coh_stabilization(OrderId::new(OrderKind::Inert, m), k, 6).0));
        }
    }
    let mut out: Vec<CheckReport> = jobs.par_iter().map(|j| j()).collect();
    sort_reports(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_checks_pass() {
        for m in 1..=2 {
            for n in 0..=2 {
                assert!(main_chain(m, n).passed());
                assert!(bridge_check(m, n).passed());
                assert!(split_check(m, n).passed(), "{}", split_check(m, n));
                assert!(s0_normalization(m, n).passed());
                assert!(ramified_rank_rule(m, n).passed());
                for kind in OrderKind::ALL {
                    let o = OrderId::new(kind, m);
                    assert!(interpolation_check(o, n).passed(), "{}", interpolation_check(o, n));
                    assert!(shift_consistency(o, n).passed(), "{}", shift_consistency(o, n));
                    assert!(geo_reflection(o, n).passed());
                    assert!(fine_reflection(o, n).passed());
                    if n >= 1 {
                        for r in 1..=n {
                            if n % r == 0 {
                                let c = nu_cyclic_sieving(o, true, n, r); assert!(c.passed(), "{}", c);
                                assert!(nu_cyclic_sieving(o, false, n, r).passed());
                            }
                        }
                    }
                }
            }
        }
        for kind in OrderKind::ALL {
            assert!(hilb_quot_rank1(OrderId::new(kind, 2)).passed());
        }
    }

    #[test]
    fn stabilization_small() {
        let (r, st) = coh_stabilization(OrderId::new(OrderKind::Inert, 1), 1, 4);
        assert!(r.passed(), "{}", r);
        assert_eq!(st.n0, Some(1));
    }
}
