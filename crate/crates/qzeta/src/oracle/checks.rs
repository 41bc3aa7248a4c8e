//! Enumeration checks of the counting formulas against the oracle.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::field::{build_field, SmallField};
use super::linalg::all_subspaces;
use super::module::FqModule;
use super::real::{orbit_count, theta_choices, RealCensus, Reality, Side};
use crate::error::{Error, Result};
use crate::exact::{Monomial, Var};
use crate::partitions::{
    aut_count, at_q, complement_in_rectangle, hall_g, partitions_in_rectangle, real_structure_count,
    tr_grassmannian_count, Partition, B_count,
};
use crate::qkit::qbinom;
use crate::report::{CheckReport, Regime, Status};

/// `F_q` for `q` in {2, 3, 4, 9}.
pub fn field_for(q: u64) -> Result<SmallField> {
    match q {
        2 => build_field(2, 1),
        3 => build_field(3, 1),
        4 => build_field(2, 2),
        9 => build_field(3, 2),
        _ => Err(Error::UnsupportedField { p: q as u32, k: 1 }),
    }
}

fn qv() -> Monomial {
    Monomial::var(Var::Q)
}

/// Partitions of size at most `k`.
pub fn partitions_up_to(k: i64) -> Vec<Partition> {
    partitions_in_rectangle(k, k).into_iter().filter(|p| p.size() <= k).collect()
}

/// Runs `body`; `TooLarge` becomes a skip and any other error a failure.
fn guarded(rep: CheckReport, body: impl FnOnce(CheckReport) -> Result<CheckReport>) -> CheckReport {
    let fallback = rep.clone();
    CheckReport::timed(|| match body(rep) {
        Ok(r) => r,
        Err(e @ Error::TooLarge { .. }) => fallback.with_status(Status::SkippedTooLarge).note(e.to_string()),
        Err(e) => fallback.fail(e.to_string(), "no error"),
    })
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// Subspaces of `F_q^N` of each dimension against `[N choose k]_q`.
pub fn subspace_count_check(q: u64, n: usize) -> CheckReport {
    let rep = CheckReport::new("oracle-subspace-count", "Gaussian binomial counts subspaces", Regime::Enumeration)
        .param("q", q)
        .param("N", n);
    guarded(rep, |mut rep| {
        let f = field_for(q)?;
        let cap = super::module::enumeration_cap(f.size());
        if n > cap {
            return Err(Error::TooLarge { dim: n, q: q as u32, cap });
        }
        let mut by_dim = vec![0u64; n + 1];
        all_subspaces(&f, n, |s| by_dim[s.dim()] += 1);
        for (k, &c) in by_dim.iter().enumerate() {
            rep = rep.compare(&big(c), &at_q(&qbinom(n as i64, k as i64, qv()), q as i64));
        }
        Ok(rep)
    })
}

/// Type-`mu` and cotype-`mu` submodule counts of `M(lambda)` against `g^lambda_mu(q)`.
pub fn hall_check(q: u64, lambda: &Partition) -> CheckReport {
    let rep = CheckReport::new("oracle-hall", "coarse Hall polynomial", Regime::Enumeration)
        .param("q", q)
        .param("lambda", lambda);
    guarded(rep, |mut rep| {
        let f = field_for(q)?;
        let m = FqModule::of_type(&f, lambda);
        let mut by_type: BTreeMap<Partition, u64> = BTreeMap::new();
        let mut by_cotype: BTreeMap<Partition, u64> = BTreeMap::new();
        for w in m.submodules()? {
            *by_type.entry(m.module_type(&w)?).or_default() += 1;
            *by_cotype.entry(m.cotype(&w)?).or_default() += 1;
        }
        for mu in partitions_in_rectangle(lambda.largest(), lambda.len()) {
            let want = at_q(&hall_g(lambda, &mu, qv()), q as i64);
            rep = rep.compare(&big(by_type.get(&mu).copied().unwrap_or(0)), &want);
            rep = rep.compare(&big(by_cotype.get(&mu).copied().unwrap_or(0)), &want);
        }
        Ok(rep)
    })
}

pub fn aut_check(q: u64, lambda: &Partition) -> CheckReport {
    let rep = CheckReport::new("oracle-aut", "automorphism count of a DVR module", Regime::Enumeration)
        .param("q", q)
        .param("lambda", lambda);
    guarded(rep, |rep| {
        let m = FqModule::of_type(&field_for(q)?, lambda);
        Ok(rep.compare(&big(m.count_automorphisms()?), &at_q(&aut_count(lambda, qv()), q as i64)))
    })
}

/// Real structures of `M_Ã(lambda)` against `a_lambda(q^2)/a_lambda(q)`, for both `Theta`.
pub fn real_structure_check(p: u8, lambda: &Partition) -> CheckReport {
    let rep = CheckReport::new("oracle-real-structures", "number of real structures", Regime::Enumeration)
        .param("q", p)
        .param("lambda", lambda);
    guarded(rep, |mut rep| {
        let want = at_q(&real_structure_count(lambda)?, p as i64);
        for theta in theta_choices(p) {
            let v = FqModule::tilde_of_type(p, lambda, theta)?;
            let mut n = 0u64;
            for w in v.submodules()? {
                if super::real::is_totally_real(&v, &w) && &v.module_type(&w)? == lambda {
                    n += 1;
                }
            }
            rep = rep.compare(&big(n), &want);
        }
        Ok(rep)
    })
}

/// In a module of type `(m^n)` every submodule of type `mu` has cotype `(m^n) - mu`.
pub fn rectangular_check(q: u64, m: i64, n: i64) -> CheckReport {
    let rep = CheckReport::new("oracle-rectangular-complement", "unique cotype in a rectangle", Regime::Enumeration)
        .param("q", q)
        .param("m", m)
        .param("n", n);
    guarded(rep, |mut rep| {
        let module = FqModule::of_type(&field_for(q)?, &Partition::rectangle(m, n));
        let mut cotypes: BTreeMap<Partition, BTreeSet<Partition>> = BTreeMap::new();
        for w in module.submodules()? {
            cotypes.entry(module.module_type(&w)?).or_default().insert(module.cotype(&w)?);
        }
        for mu in partitions_in_rectangle(m, n) {
            let want: BTreeSet<Partition> = [complement_in_rectangle(&mu, m, n)?].into();
            let got = cotypes.get(&mu).cloned().unwrap_or_default();
            rep = rep.compare(&fmt_set(&got), &fmt_set(&want));
        }
        Ok(rep)
    })
}

fn fmt_set(s: &BTreeSet<Partition>) -> String {
    let v: Vec<String> = s.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", v.join(" "))
}

fn census_pair(p: u8, m: i64, n: i64) -> Result<[RealCensus; 2]> {
    let [a, b] = theta_choices(p);
    Ok([RealCensus::new(p, m, n, a)?, RealCensus::new(p, m, n, b)?])
}

fn kind_name(kind: Reality) -> &'static str {
    match kind {
        Reality::Tr => "tr",
        Reality::Ctr => "ctr",
    }
}

/// Grassmannian sizes, both fibre statements, `Theta`-independence and the
/// sub-real remark for `Ṽ = Ã^n` over `F_p`.
pub fn tr_ctr_checks(p: u8, m: i64, n: i64) -> Vec<CheckReport> {
    let q = p as i64;
    let base = |id: &str, what: &str| {
        CheckReport::new(id, what, Regime::Enumeration).param("q", p).param("m", m).param("n", n)
    };
    let censuses = match census_pair(p, m, n) {
        Ok(c) => c,
        Err(e) => {
            let st = if matches!(e, Error::TooLarge { .. }) { Status::SkippedTooLarge } else { Status::Fail };
            return vec![base("oracle-tr-ctr", "totally real census").with_status(st).note(e.to_string())];
        }
    };
    let rect = partitions_in_rectangle(m, n);
    let mut out = Vec::new();
    for kind in [Reality::Tr, Reality::Ctr] {
        let k = kind_name(kind);
        let mut grass = base(&format!("oracle-{}-grassmannian", k), "size of the totally real Grassmannian");
        let mut pr2 = base(&format!("oracle-{}-pr2-fibers", k), "fibres of the second projection");
        let mut pr1 = base(&format!("oracle-{}-pr1-fibers", k), "fibres of the first projection");
        let mut indep = base(&format!("oracle-{}-theta-independence", k), "independence of the choice of Theta");
        for lambda in &rect {
            let want = match tr_grassmannian_count(m, n, lambda) {
                Ok(w) => at_q(&w, q),
                Err(e) => return vec![grass.fail(e.to_string(), "no error")],
            };
            let counts: Vec<u64> = censuses.iter().map(|c| c.grassmannian(kind, lambda).len() as u64).collect();
            for &c in &counts {
                grass = grass.compare(&big(c), &want);
            }
            indep = indep.compare(&counts[0], &counts[1]);
            for mu in &rect {
                let g = at_q(&hall_g(lambda, mu, qv()), q);
                let b = match B_count(m, n, lambda, mu) {
                    Ok(b) => at_q(&b, q),
                    Err(e) => return vec![pr1.fail(e.to_string(), "no error")],
                };
                let mut fibre_sets = Vec::new();
                for c in &censuses {
                    for (_, size) in c.flag_fibers(kind, lambda, mu, Side::Pr2) {
                        pr2 = pr2.compare(&big(size), &g);
                    }
                    let f1 = c.flag_fibers(kind, lambda, mu, Side::Pr1);
                    for (_, size) in &f1 {
                        pr1 = pr1.compare(&big(*size), &b);
                    }
                    let mut sizes: Vec<u64> = f1.iter().map(|x| x.1).collect();
                    sizes.sort();
                    fibre_sets.push(sizes);
                }
                indep = indep.compare(&format!("{:?}", fibre_sets[0]), &format!("{:?}", fibre_sets[1]));
            }
        }
        out.extend([grass, pr2, pr1, indep]);
    }
    let mut sub = base("oracle-sub-real", "submodules of totally real modules are totally real");
    for c in &censuses {
        let f = &c.module.field;
        for w in c.subs.iter().filter(|s| s.tr) {
            for w2 in &c.subs {
                if w.space.contains_space(f, &w2.space) && !w2.tr {
                    sub = sub.fail(format!("{:?}", w2.space.rows), "totally real");
                }
            }
        }
    }
    out.push(sub);
    out
}

/// The boundary-lattice invariants for every `A`-submodule `W_b` of `A^n ⊆ Ã^n`.
pub fn boundary_invariants_check(p: u8, m: i64, n: i64) -> CheckReport {
    let rep = CheckReport::new("oracle-boundary-invariants", "boundary lattice invariants", Regime::Enumeration)
        .param("q", p)
        .param("m", m)
        .param("n", n);
    guarded(rep, |mut rep| {
        let v = FqModule::tilde_free(p, m as usize, n as usize, theta_choices(p)[0])?;
        let f = &v.field;
        let real = v.real_part();
        for wb in v.submodules()?.into_iter().filter(|w| real.contains_space(f, w)) {
            let lambda = v.quotient_type(&real, &wb)?;
            let comp = complement_in_rectangle(&lambda, m, n)?;
            let span = v.tilde_span(&wb);
            // (a)
            rep = rep.compare(&span.intersection(f, &real), &wb);
            // (b)
            rep = rep.compare(&v.quotient_type(&span, &wb)?, &comp);
            // (c), with the rank along the single branch
            let tt = v.tilde_type(&span)?;
            rep = rep.compare(&tt, &comp);
            rep = rep.compare(&tt.len(), &(n - lambda.conjugate().part(m)));
        }
        Ok(rep)
    })
}

/// `Aut_Ã(Ṽ)` acts transitively on Ã-submodules of a fixed type and on the
/// TR and cTR Grassmannians.
pub fn transitivity_check(p: u8, m: i64, n: i64) -> CheckReport {
    let rep = CheckReport::new("oracle-transitivity", "transitive automorphism action", Regime::Enumeration)
        .param("q", p)
        .param("m", m)
        .param("n", n);
    guarded(rep, |mut rep| {
        let census = RealCensus::new(p, m, n, theta_choices(p)[0])?;
        let v = &census.module;
        let group = v.automorphisms()?;
        let mut classes: BTreeMap<(u8, Partition), Vec<_>> = BTreeMap::new();
        for s in &census.subs {
            if v.is_tilde_submodule(&s.space) {
                classes.entry((0, v.tilde_type(&s.space)?)).or_default().push(s.space.clone());
            }
            if s.tr {
                classes.entry((1, s.ty.clone())).or_default().push(s.space.clone());
            }
            if s.ctr {
                classes.entry((2, s.cotype.clone())).or_default().push(s.space.clone());
            }
        }
        for set in classes.values() {
            rep = rep.compare(&orbit_count(v, &group, set), &1);
        }
        Ok(rep.note(format!("|Aut| = {}", group.len())))
    })
}

/// The full oracle battery.
/// The enumeration census, restricted to instances inside the size caps so
/// that a full run has no skips.
pub fn oracle_suite() -> Vec<CheckReport> {
    use super::module::{automorphism_cap, enumeration_cap};
    let fits = |q: u64, size: usize, cap: fn(usize) -> usize| size <= cap(q as usize);
    let mut jobs: Vec<Box<dyn Fn() -> Vec<CheckReport> + Send + Sync>> = Vec::new();
    for q in [2u64, 3, 4] {
        for nn in 0..=4 {
            jobs.push(Box::new(move || vec![subspace_count_check(q, nn)]));
        }
        for lambda in partitions_up_to(6).into_iter().filter(|l| fits(q, l.size() as usize, enumeration_cap)) {
            jobs.push(Box::new(move || vec![hall_check(q, &lambda)]));
        }
    }
    for q in [2u64, 3] {
        for lambda in partitions_up_to(4).into_iter().filter(|l| fits(q, l.size() as usize, automorphism_cap)) {
            jobs.push(Box::new(move || vec![aut_check(q, &lambda)]));
        }
    }
    for p in [2u8, 3] {
        let real_fits = |l: &Partition| fits(p as u64, 2 * l.size() as usize, enumeration_cap);
        for lambda in partitions_up_to(3).into_iter().filter(real_fits) {
            jobs.push(Box::new(move || vec![real_structure_check(p, &lambda)]));
        }
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            jobs.push(Box::new(move || vec![rectangular_check(p as u64, m, n)]));
        }
        for (m, n) in [(1, 1), (1, 2), (2, 1)] {
            jobs.push(Box::new(move || tr_ctr_checks(p, m, n)));
            jobs.push(Box::new(move || vec![boundary_invariants_check(p, m, n)]));
        }
    }
    for (m, n) in [(1, 1), (1, 2), (2, 1)] {
        jobs.push(Box::new(move || vec![transitivity_check(2, m, n)]));
    }
    let mut out: Vec<CheckReport> = jobs.par_iter().flat_map(|j| j()).collect();
    crate::report::sort_reports(&mut out);
    out
}

/// One row of the `oracle` census table.
#[derive(Debug, Clone, Serialize)]
pub struct OracleRow {
    pub q: u64,
    pub m: i64,
    pub n: i64,
    pub lambda: String,
    pub mu: String,
    pub tr_grassmannian: u64,
    pub ctr_grassmannian: u64,
    /// Common pr1 fibre size, or `None` if fibres differ or the base is empty.
    pub tr_pr1_fiber: Option<u64>,
    pub ctr_pr1_fiber: Option<u64>,
    pub b_formula: String,
}

fn constant(xs: &[(super::linalg::Subspace, u64)]) -> Option<u64> {
    let first = xs.first()?.1;
    xs.iter().all(|x| x.1 == first).then_some(first)
}

pub fn oracle_table(p: u8, m: i64, n: i64) -> Result<Vec<OracleRow>> {
    let c = RealCensus::new(p, m, n, theta_choices(p)[0])?;
    let rect = partitions_in_rectangle(m, n);
    let mut rows = Vec::new();
    for lambda in &rect {
        for mu in &rect {
            rows.push(OracleRow {
                q: p as u64,
                m,
                n,
                lambda: lambda.to_string(),
                mu: mu.to_string(),
                tr_grassmannian: c.count_tr_grassmannian(lambda),
                ctr_grassmannian: c.count_ctr_grassmannian(lambda),
                tr_pr1_fiber: constant(&c.flag_fibers(Reality::Tr, lambda, mu, Side::Pr1)),
                ctr_pr1_fiber: constant(&c.flag_fibers(Reality::Ctr, lambda, mu, Side::Pr1)),
                b_formula: at_q(&B_count(m, n, lambda, mu)?, p as i64).to_string(),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(xs: &[i64]) -> Partition {
        Partition::new(xs).unwrap()
    }

    #[test]
    fn small_checks_pass() {
        assert!(hall_check(2, &pt(&[2, 1])).passed());
        assert!(aut_check(2, &pt(&[2, 1])).passed());
        assert!(real_structure_check(2, &pt(&[1])).passed());
        assert!(rectangular_check(2, 2, 2).passed());
        assert!(boundary_invariants_check(2, 2, 1).passed());
        for r in tr_ctr_checks(2, 1, 2) {
            assert!(r.passed(), "{}", r);
        }
        assert!(transitivity_check(2, 1, 2).passed());
    }

    #[test]
    fn caps_give_skips() {
        assert_eq!(hall_check(3, &pt(&[3, 3])).status, Status::SkippedTooLarge);
        assert_eq!(aut_check(3, &pt(&[2, 2])).status, Status::SkippedTooLarge);
    }

    #[test]
    fn table_rows() {
        let rows = oracle_table(2, 1, 1).unwrap();
        assert_eq!(rows.len(), 4);
        let r = rows.iter().find(|r| r.lambda == "(1)" && r.mu == "()").unwrap();
        assert_eq!(r.tr_pr1_fiber, Some(3));
        assert_eq!(r.b_formula, "3");
    }
}
