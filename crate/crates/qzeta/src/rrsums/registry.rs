//! Named identities over the sum families, each checked in a fixed regime.

use rayon::prelude::*;

use super::finite::{ag_dagger, ag_finite, br_finite, single_sum, x_closed, x_multisum, BrVariant, SingleVariant};
use super::infinite::{ag_infinite_product, ag_infinite_sum, br_infinite_product, br_infinite_sum, count_gap2, count_parts_pm1_mod5};
use super::keys::{a_indep_key, induction_key, remark_one_fold, x1_key, z1z2_full};
use super::master::{cy_zh, cy_zh_rank_one, is_integral, master_poly, master_rational, master_reflected, sieve_sides};
use super::series::{
    to_order, trans2_lhs, trans2_rhs, v_expression, v_multisum, v_rec, x_closed_scaled, x_exp2, x_exp2_companion_sum,
    x_exp2_sum, x_multisum_series, x_new, x_rec,
};
use crate::error::{Error, Result};
use crate::exact::{int, Alg, pochhammer_inv, rat, rf_equal, Lser, Monomial, PointSampler, Rational, RationalFn, Term, Var};
use crate::qkit::QMono;
use crate::report::{sort_reports, CheckReport, Regime, Status};

/// Every registered identity: id, what it asserts, regime.
pub const IDENTITIES: &[(&str, &str, Regime)] = &[
    ("ag-dagger-t2", "AG(t, q) = AG-dagger(t^2, q)", Regime::Symbolic),
    ("ag-single", "AG-dagger as a single Bailey sum", Regime::Symbolic),
    ("br-dagger-single", "Br-dagger as a single Bailey sum", Regime::Symbolic),
    ("ddbr-closed", "Br-ddagger = 1 / (-tq; q)_n", Regime::Symbolic),
    ("ag-reflection", "AG reflection under t -> t^{-1} q^{-n}", Regime::Symbolic),
    ("ag-dagger-reflection", "AG-dagger reflection under t -> t^{-1} q^{-2n}", Regime::Symbolic),
    ("br-reflection", "Br reflection under t -> t^{-1} q^{-n}", Regime::Symbolic),
    ("br-dagger-at-one", "Br-dagger(1, q) = Br(1, q)", Regime::Symbolic),
    ("x-closed-at-zero", "X at a = 0 equals the m-fold closed form", Regime::Symbolic),
    ("x-a-indep", "X is independent of a", Regime::RationalPoint),
    ("x1-key", "key identity for X with m = 1", Regime::Symbolic),
    ("induction-key", "key identity for the induction on m", Regime::Symbolic),
    ("a-indep-key", "key identity for the a-independence", Regime::Symbolic),
    ("z1z2-full", "finite transformation between L and M", Regime::Symbolic),
    ("remark-rtilde-1fold", "one-fold Chu-Vandermonde evaluation", Regime::Symbolic),
    ("x-new", "u/v reformulation of X", Regime::Series),
    ("v-rec", "recursion of V in m", Regime::Series),
    ("v-expression", "m-fold expression of V", Regime::Series),
    ("x-rec", "recursion of X in m", Regime::Series),
    ("trans-2", "two-index transformation", Regime::Series),
    ("x-exp-2", "a-free signed expansion of X", Regime::Series),
    ("x-exp2-corollary-i", "signed chain sum against the closed form", Regime::Series),
    ("x-exp2-corollary-ii", "companion signed sum against (q)_N times the closed form", Regime::Series),
    ("ag-infinite", "central Andrews-Gordon identity", Regime::Series),
    ("br-infinite", "central Bressoud identity", Regime::Series),
    ("rr-partition-count", "Rogers-Ramanujan sum against partition counts", Regime::Series),
    ("master-integrality", "master polynomial lies in Z[u, t, z^{-1}]", Regime::Symbolic),
    ("master-reflection", "master polynomial reflection", Regime::Symbolic),
    ("master-relations", "master polynomial specializes to the five deformations", Regime::Symbolic),
    ("master-rank-one", "rank-one master polynomial", Regime::Symbolic),
    ("sieve", "master polynomial at roots of unity", Regime::Cyclotomic),
];

/// Parameters of one instance. `k` is the identity's auxiliary index
/// (`l_1`, `L`, `M`, `s_1` or `r`); `a` and `t` are used in the series regime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub m: usize,
    pub n: i64,
    pub k: i64,
    pub a: QMono,
    pub t: QMono,
}

impl Instance {
    pub fn new(m: usize, n: i64) -> Self {
        Instance { m, n, k: 0, a: QMono::q(1), t: QMono::q(1) }
    }

    pub fn k(mut self, k: i64) -> Self {
        self.k = k;
        self
    }

    pub fn at(mut self, a: QMono, t: QMono) -> Self {
        self.a = a;
        self.t = t;
        self
    }
}

/// Settings shared by one run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunSettings {
    /// Series order for the series regime.
    pub order: usize,
    pub seed: u64,
    /// Sampled points per rational-point instance.
    pub points: usize,
}

impl Default for RunSettings {
    fn default() -> Self {
        RunSettings { order: 25, seed: 20240601, points: 5 }
    }
}

fn lookup(id: &str) -> Result<(&'static str, &'static str, Regime)> {
    IDENTITIES.iter().copied().find(|e| e.0 == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn tv() -> RationalFn {
    RationalFn::var(Var::T)
}

fn qv() -> RationalFn {
    RationalFn::var(Var::Q)
}

fn mono_rf(pairs: &[(Var, i32)]) -> RationalFn {
    RationalFn::mono(Monomial::from_pairs(pairs))
}

fn rf_pair(r: CheckReport, (l, rhs): (RationalFn, RationalFn)) -> CheckReport {
    if rf_equal(&l, &rhs) {
        r
    } else {
        r.fail(&l, &rhs)
    }
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn symbolic(id: &str, inst: &Instance) -> Result<(RationalFn, RationalFn)> {
    let (m, n, k) = (inst.m, inst.n, inst.k);
    let (mi, ni) = (m as i32, n as i32);
    let (t, q) = (tv(), qv());
    Ok(match id {
        "ag-dagger-t2" => (ag_finite(m, n, &t, &q)?, ag_dagger(m, n, &t.mul(&t), &q)?),
        "ag-single" => (single_sum(SingleVariant::AgSingle, m, n, &t, &q)?, ag_dagger(m, n, &t, &q)?),
        "br-dagger-single" => (single_sum(SingleVariant::BrDaggerSingle, m, n, &t, &q)?, br_finite(BrVariant::Dagger, m, n, &t, &q)?),
        "ddbr-closed" => (br_finite(BrVariant::Ddagger, m, n, &t, &q)?, pochhammer_inv(&t.mul(&q).neg(), &q, n)?),
        "ag-reflection" => {
            let refl = ag_finite(m, n, &mono_rf(&[(Var::T, -1), (Var::Q, -ni)]), &q)?;
            (ag_finite(m, n, &t, &q)?, refl.mul(&mono_rf(&[(Var::T, 2 * mi * ni), (Var::Q, mi * ni * ni)])))
        }
        "ag-dagger-reflection" => {
            let refl = ag_dagger(m, n, &mono_rf(&[(Var::T, -1), (Var::Q, -2 * ni)]), &q)?;
            (ag_dagger(m, n, &t, &q)?, refl.mul(&mono_rf(&[(Var::T, mi * ni), (Var::Q, mi * ni * ni)])))
        }
        "br-reflection" => {
            let refl = br_finite(BrVariant::Plain, m, n, &mono_rf(&[(Var::T, -1), (Var::Q, -ni)]), &q)?;
            let e = (binom2(n + 1) + (m as i64 - 1) * n * n) as i32;
            let pre = mono_rf(&[(Var::T, (2 * mi - 1) * ni), (Var::Q, e)])
                .mul(&Alg::one_plus(&t))
                .div(&Alg::one_plus(&mono_rf(&[(Var::T, 1), (Var::Q, ni)])))?;
            (br_finite(BrVariant::Plain, m, n, &t, &q)?, pre.mul(&refl))
        }
        "br-dagger-at-one" => {
            let one = RationalFn::one();
            (br_finite(BrVariant::Dagger, m, n, &one, &q)?, br_finite(BrVariant::Plain, m, n, &one, &q)?)
        }
        "x-closed-at-zero" => (x_multisum(m, n, &RationalFn::zero(), &t, &q)?, x_closed(m, n, &t, &q)?),
        "x1-key" => x1_key(n, &RationalFn::var(Var::A), &t, &q)?,
        "induction-key" => induction_key(n, k, &RationalFn::var(Var::A), &t, &q)?,
        "a-indep-key" => a_indep_key(n, k, &RationalFn::var(Var::A), &t, &q)?,
        "z1z2-full" => z1z2_full(k, n, &RationalFn::var(Var::A), &t, &q)?,
        "remark-rtilde-1fold" => remark_one_fold(n, k, &q)?,
        _ => unreachable!("not a symbolic identity: {}", id),
    })
}

/// The five deformations read off the master polynomial at `z = q`.
fn master_relations(r: CheckReport, m: usize, n: i64) -> Result<CheckReport> {
    let (mi, ni) = (m as i32, n as i32);
    let p = master_poly(m, n);
    let spec = |u: Term, t: Term| RationalFn::from_poly(p.subst(&[(Var::U, u), (Var::T, t), (Var::Z, Term::var(Var::Q))]));
    let tpow = |e: i32| Term::mono(Monomial::var_pow(Var::T, e));
    let neg = |x: Term| Term::new(-x.coeff, x.mono);
    let (t, q) = (tv(), qv());
    let neg_tq = pochhammer_inv(&t.mul(&q).neg(), &q, n)?;
    let neg_q = pochhammer_inv(&q.neg(), &q, n)?;
    let zero_t = Term::new(int(0), Monomial::ONE);
    let pre = |et: i32, sign: i64| RationalFn::mono(Monomial::from_pairs(&[(Var::T, et), (Var::Q, mi * ni * ni)])).mul(&RationalFn::from_rational(int(sign)));
    let ddsign = if (m as i64 * n) % 2 == 0 { 1 } else { -1 };
    let cases = [
        ("AG", ag_finite(m, n, &t, &q)?, pre(2 * mi * ni, 1).mul(&spec(tpow(-2), zero_t.clone()))),
        ("AG-dagger", ag_dagger(m, n, &t, &q)?, pre(mi * ni, 1).mul(&spec(tpow(-1), zero_t))),
        ("Br", br_finite(BrVariant::Plain, m, n, &t, &q)?, pre(2 * mi * ni, 1).mul(&neg_tq).mul(&spec(tpow(-2), neg(tpow(-1))))),
        ("Br-dagger", br_finite(BrVariant::Dagger, m, n, &t, &q)?, pre(mi * ni, 1).mul(&neg_q).mul(&spec(tpow(-1), neg(tpow(-1))))),
        ("Br-ddagger", br_finite(BrVariant::Ddagger, m, n, &t, &q)?, pre(mi * ni, ddsign).mul(&neg_tq).mul(&spec(neg(tpow(-1)), Term::mono(Monomial::ONE)))),
    ];
    let mut r = r;
    for (name, l, rhs) in cases {
        if !rf_equal(&l, &rhs) {
            r = r.fail(format!("{}: {}", name, l), &rhs);
        }
    }
    Ok(r)
}

fn series_sides(id: &str, inst: &Instance, cap: i64) -> Result<(Lser, Lser)> {
    let (m, n, a, t) = (inst.m, inst.n, &inst.a, &inst.t);
    Ok(match id {
        "x-new" => (x_new(m, n, a, t, cap)?, x_multisum_series(m, n, a, t, cap)?),
        "v-rec" => (v_multisum(m, n, a, t, cap)?, v_rec(m, n, a, t, cap)?),
        "v-expression" => (v_multisum(m, n, a, t, cap)?, v_expression(m, n, a, t, cap)?),
        "x-rec" => (x_rec(m, n, a, t, cap)?, x_multisum_series(m, n, a, t, cap)?),
        "trans-2" => (trans2_lhs(inst.k, n, a, t, cap)?, trans2_rhs(inst.k, n, a, t, cap)?),
        "x-exp-2" => (x_exp2(m, n, t, cap)?, x_multisum_series(m, n, a, t, cap)?),
        "x-exp2-corollary-i" => (x_exp2_sum(m, n, t, cap)?, x_closed_scaled(m, n, t, false, cap)?),
        "x-exp2-corollary-ii" => (x_exp2_companion_sum(m, n, t, cap)?, x_closed_scaled(m, n, t, true, cap)?),
        "ag-infinite" => (ag_infinite_sum(m, cap)?, ag_infinite_product(m, cap)?),
        "br-infinite" => (br_infinite_sum(m, cap)?, br_infinite_product(m, cap)?),
        _ => unreachable!("not a series identity: {}", id),
    })
}

fn x_a_independence(r: CheckReport, inst: &Instance, settings: &RunSettings) -> Result<CheckReport> {
    let (m, n) = (inst.m, inst.n);
    let avals = [int(0), int(1), int(-1), int(2), rat(1, 2)];
    let mut pts: Vec<(Rational, Rational)> = vec![(rat(1, 3), rat(1, 2))];
    let mut sampler = PointSampler::new(settings.seed ^ ((m as u64) << 32) ^ n as u64);
    while pts.len() < settings.points.max(5) + 1 {
        // the sampled point must avoid the poles of every side for every a
        let (p, _) = sampler.sample_with(&[Var::T, Var::Q], |p| {
            let (t, q) = (p[0].1.clone(), p[1].1.clone());
            x_closed(m, n, &t, &q)?;
            for a in &avals {
                x_multisum(m, n, a, &t, &q)?;
            }
            Ok(())
        })?;
        pts.push((p[0].1.clone(), p[1].1.clone()));
    }
    let mut r = r.param("points", pts.len());
    for (t, q) in &pts {
        let want = x_closed(m, n, t, q)?;
        for a in &avals {
            let got = x_multisum(m, n, a, t, q)?;
            if got != want {
                r = r.fail(format!("X({}, {}, {}) = {}", a, t, q, got), &want);
            }
        }
    }
    if m == 1 && n == 1 {
        let anchor = x_closed(1, 1, &rat(1, 3), &rat(1, 2))?;
        if anchor != rat(32, 15) {
            r = r.fail(format!("X_1(1/3, 1/2) = {}", anchor), "32/15");
        }
    }
    Ok(r)
}

fn rr_partition_count(r: CheckReport, order: usize) -> Result<CheckReport> {
    let s = to_order(order, |c| ag_infinite_sum(1, c))?;
    let coeff = |k: usize| s.coeffs[k].clone();
    let mut r = r;
    let head = [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6];
    for k in 0..=order {
        let c = coeff(k);
        let a = int(count_parts_pm1_mod5(k as u32) as i64);
        let b = int(count_gap2(k as u32) as i64);
        if c != a || c != b {
            r = r.fail(format!("q^{}: {}", k, c), format!("{} / {}", a, b));
        }
        if k < head.len() && c != int(head[k]) {
            r = r.fail(format!("q^{}: {}", k, c), head[k]);
        }
    }
    Ok(r)
}

fn master_checks(id: &str, r: CheckReport, inst: &Instance) -> Result<CheckReport> {
    let (m, n) = (inst.m, inst.n);
    let p = master_poly(m, n);
    Ok(match id {
        "master-integrality" => {
            let via_rational = master_rational(m, n)?.to_poly()?;
            let r = r.compare(&p, &via_rational);
            if is_integral(&p) {
                r
            } else {
                r.fail(&p, "integral polynomial in u, t, z^{-1}")
            }
        }
        "master-reflection" => r.compare(&p, &master_reflected(m, n, &p)),
        "master-relations" => master_relations(r, m, n)?,
        "master-rank-one" => {
            let mut r = r;
            for eps in [-1, 0, 1] {
                r = r.compare(&cy_zh(eps, &master_poly(m, 1)), &cy_zh_rank_one(eps, m));
            }
            r
        }
        "sieve" => {
            let (l, rhs) = sieve_sides(m, n, inst.k)?;
            r.compare(&l, &rhs)
        }
        _ => unreachable!(),
    })
}

fn params_for(r: CheckReport, id: &str, regime: Regime, inst: &Instance, settings: &RunSettings) -> CheckReport {
    let r = r.param("m", inst.m);
    let r = match id {
        "trans-2" => r.param("M", inst.k).param("N", inst.n),
        "induction-key" | "a-indep-key" => r.param("N", inst.n).param("l1", inst.k),
        "z1z2-full" => r.param("L", inst.k).param("M", inst.n),
        "remark-rtilde-1fold" => r.param("n", inst.n).param("s1", inst.k),
        "sieve" => r.param("n", inst.n).param("r", inst.k),
        "x1-key" => r.param("N", inst.n),
        "ag-infinite" | "br-infinite" | "rr-partition-count" | "master-rank-one" => r,
        _ => r.param("n", inst.n),
    };
    match regime {
        Regime::Series => {
            let r = r.param("Q", settings.order);
            if matches!(id, "ag-infinite" | "br-infinite" | "rr-partition-count") {
                r
            } else if id.starts_with("x-exp2-corollary") || id == "x-exp-2" {
                r.param("t", &inst.t)
            } else {
                r.param("a", &inst.a).param("t", &inst.t)
            }
        }
        _ => r,
    }
}

/// Checks one identity at one instance.
pub fn check_identity(id: &str, inst: &Instance, settings: &RunSettings) -> Result<CheckReport> {
    let (id, source, regime) = lookup(id)?;
    let base = params_for(CheckReport::new(id, source, regime), id, regime, inst, settings);
    Ok(CheckReport::timed(|| {
        let res = match (id, regime) {
            ("x-a-indep", _) => x_a_independence(base.clone(), inst, settings),
            ("rr-partition-count", _) => rr_partition_count(base.clone(), settings.order),
            (_, Regime::Symbolic | Regime::Cyclotomic) if id.starts_with("master") || id == "sieve" => {
                master_checks(id, base.clone(), inst)
            }
            (_, Regime::Symbolic) => symbolic(id, inst).map(|s| rf_pair(base.clone(), s)),
            (_, Regime::Series) => to_order(settings.order, |c| Ok(series_sides(id, inst, c)?.0)).and_then(|l| {
                let r = to_order(settings.order, |c| Ok(series_sides(id, inst, c)?.1))?;
                Ok(base.clone().compare(&l, &r))
            }),
            _ => unreachable!(),
        };
        match res {
            Ok(r) => r,
            Err(Error::PoleAtPoint) => base.with_status(Status::SkippedPole),
            Err(e) => base.fail(format!("error: {}", e), "(no value)"),
        }
    }))
}

fn q(d: i64) -> QMono {
    QMono::q(d)
}

fn c(n: i64, dd: i64, d: i64) -> QMono {
    QMono::new(rat(n, dd), d)
}

/// The instances a default run covers for `id`.
pub fn default_instances(id: &str) -> Result<Vec<Instance>> {
    lookup(id)?;
    let grid = |ms: std::ops::RangeInclusive<usize>, ns: std::ops::RangeInclusive<i64>| -> Vec<Instance> {
        ms.flat_map(|m| ns.clone().map(move |n| Instance::new(m, n))).collect()
    };
    let series = |v: &[(usize, i64, i64, QMono, QMono)]| -> Vec<Instance> {
        v.iter().map(|(m, n, k, a, t)| Instance::new(*m, *n).k(*k).at(a.clone(), t.clone())).collect()
    };
    Ok(match id {
        "ag-dagger-t2" | "ag-single" | "br-dagger-single" | "ddbr-closed" | "ag-reflection" | "br-reflection" => grid(1..=3, 0..=4),
        "ag-dagger-reflection" => grid(1..=3, 0..=4),
        "br-dagger-at-one" => grid(1..=3, 0..=5),
        "x-closed-at-zero" => grid(1..=2, 0..=3),
        "x-a-indep" => grid(1..=3, 0..=4),
        "x1-key" => (0..=3).map(|n| Instance::new(1, n)).collect(),
        "induction-key" | "a-indep-key" => {
            (0..=2).flat_map(|n| (0..=2).map(move |l| Instance::new(1, n).k(l))).collect()
        }
        "z1z2-full" => (0..=3).flat_map(|mm| (0..=mm).map(move |l| Instance::new(1, mm).k(l))).collect(),
        "remark-rtilde-1fold" => (0..=4).flat_map(|n| (-n..=n).map(move |s| Instance::new(1, n).k(s))).collect(),
        "x-new" => series(&[
            (1, 1, 0, q(1), q(1)),
            (2, 2, 0, q(2), q(1)),
            (1, 1, 0, c(2, 1, 1), c(-1, 1, 1)),
            (1, 2, 0, c(-1, 2, 0), q(2)),
        ]),
        "v-rec" => series(&[(2, 2, 0, q(1), q(1)), (2, 1, 0, c(-1, 2, 0), q(2)), (3, 1, 0, q(1), q(1))]),
        "v-expression" => series(&[(1, 2, 0, q(1), q(1)), (1, 1, 0, c(-1, 2, 0), q(2)), (2, 2, 0, q(2), q(1))]),
        "x-rec" => series(&[(2, 1, 0, q(1), q(1)), (2, 2, 0, q(2), q(1)), (3, 1, 0, c(2, 1, 1), c(-1, 1, 1))]),
        "trans-2" => series(&[(1, 2, 1, q(1), q(1)), (1, 1, 2, q(2), q(1)), (1, 2, 0, c(-1, 2, 0), q(2))]),
        "x-exp-2" => series(&[(2, 0, 0, q(1), q(1)), (2, 2, 0, q(1), q(2)), (3, 1, 0, c(-1, 2, 0), q(1))]),
        "x-exp2-corollary-i" | "x-exp2-corollary-ii" => series(&[
            (2, 0, 0, q(1), q(1)),
            (2, 2, 0, q(1), q(2)),
            (3, 1, 0, q(1), q(1)),
            (3, 2, 0, q(1), c(-1, 1, 1)),
        ]),
        "ag-infinite" | "br-infinite" => (1..=3).map(|m| Instance::new(m, 0)).collect(),
        "rr-partition-count" => vec![Instance::new(1, 0)],
        "master-integrality" | "master-reflection" => grid(1..=3, 0..=4),
        "master-relations" => grid(1..=2, 0..=3),
        "master-rank-one" => (1..=3).map(|m| Instance::new(m, 1)).collect(),
        "sieve" => sieve_instances(3, 6),
        _ => unreachable!(),
    })
}

/// `(m, n, r)` for every `r | n`, `1 <= n <= n_max`.
pub fn sieve_instances(m_max: usize, n_max: i64) -> Vec<Instance> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        for n in 1..=n_max {
            for r in (1..=n).filter(|r| n % r == 0) {
                out.push(Instance::new(m, n).k(r));
            }
        }
    }
    out
}

/// Series order used for one id: the infinite products get at least 40.
fn order_for(id: &str, settings: &RunSettings) -> RunSettings {
    let mut s = *settings;
    if matches!(id, "ag-infinite" | "br-infinite" | "rr-partition-count") {
        s.order = s.order.max(40);
    }
    s
}

/// Every registered identity (or only `ids`) at its default instances, run in parallel.
pub fn rrsums_suite(ids: Option<&[&str]>, settings: &RunSettings) -> Result<Vec<CheckReport>> {
    let chosen: Vec<&str> = match ids {
        Some(v) => v.to_vec(),
        None => IDENTITIES.iter().map(|e| e.0).filter(|&id| id != "sieve").collect(),
    };
    let mut jobs = Vec::new();
    for id in chosen {
        for inst in default_instances(id)? {
            jobs.push((id, inst));
        }
    }
    let mut out = jobs
        .par_iter()
        .map(|(id, inst)| check_identity(id, inst, &order_for(id, settings)))
        .collect::<Result<Vec<_>>>()?;
    sort_reports(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(id: &str, inst: Instance) -> CheckReport {
        check_identity(id, &inst, &RunSettings { order: 20, ..Default::default() }).unwrap()
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(check_identity("nope", &Instance::new(1, 1), &RunSettings::default()), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn registry_is_consistent() {
        for (id, _, _) in IDENTITIES {
            assert!(default_instances(id).unwrap().len() >= 1, "{}", id);
        }
    }

    #[test]
    fn symbolic_samples() {
        for id in ["ag-dagger-t2", "ag-single", "br-dagger-single", "ddbr-closed", "ag-reflection", "ag-dagger-reflection", "br-reflection", "br-dagger-at-one", "x-closed-at-zero"] {
            let r = run(id, Instance::new(2, 2));
            assert!(r.passed(), "{}", r);
        }
        let r = run("z1z2-full", Instance::new(1, 2).k(1));
        assert!(r.passed(), "{}", r);
    }

    #[test]
    fn master_samples() {
        for id in ["master-integrality", "master-reflection", "master-relations", "master-rank-one"] {
            let r = run(id, Instance::new(2, 2));
            assert!(r.passed(), "{}", r);
        }
        let r = run("sieve", Instance::new(1, 2).k(2));
        assert!(r.passed(), "{}", r);
    }

    #[test]
    fn a_independence_anchor() {
        let r = run("x-a-indep", Instance::new(1, 1));
        assert!(r.passed(), "{}", r);
    }

    #[test]
    fn series_samples() {
        let r = run("trans-2", Instance::new(1, 2).k(1));
        assert!(r.passed(), "{}", r);
        let r = run("x-exp2-corollary-i", Instance::new(2, 1).at(q(1), q(1)));
        assert!(r.passed(), "{}", r);
        let r = run("rr-partition-count", Instance::new(1, 0));
        assert!(r.passed(), "{}", r);
    }
}
