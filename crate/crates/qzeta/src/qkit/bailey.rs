use crate::error::Result;
use crate::exact::{int, pochhammer, rf_equal, Alg, Monomial, RationalFn, Term, Var};
use crate::report::{CheckReport, Regime};

type Seq = Box<dyn Fn(i64) -> Result<RationalFn> + Send + Sync>;

/// A pair `(alpha, beta)` relative to `(a, q)`:
/// `beta_n = sum_{k<=n} alpha_k / ((q;q)_{n-k} (aq;q)_{n+k})`.
pub struct BaileyPair {
    pub name: &'static str,
    pub source: &'static str,
    pub alpha: Seq,
    pub beta: Seq,
    pub rel_param: Term,
}

fn q() -> RationalFn {
    RationalFn::var(Var::Q)
}

fn t() -> RationalFn {
    RationalFn::var(Var::T)
}

fn qp(k: i64) -> RationalFn {
    RationalFn::mono(Monomial::var_pow(Var::Q, k as i32))
}

fn sign(k: i64) -> RationalFn {
    RationalFn::from_rational(int(if k % 2 == 0 { 1 } else { -1 }))
}

/// `alpha_k = (-1)^k q^{k(k-1)/2} (1 - t q^{2k}) (t)_k / ((1-t)(q)_k)`, `beta = delta_0`.
pub fn ag_pair() -> BaileyPair {
    BaileyPair {
        name: "ag-pair",
        source: "Bailey pair for the dagger AG sum",
        alpha: Box::new(|k| {
            let num = sign(k)
                .mul(&qp(k * (k - 1) / 2))
                .mul(&t().mul(&qp(2 * k)).one_minus())
                .mul(&pochhammer(&t(), &q(), k)?);
            num.div(&t().one_minus().mul(&pochhammer(&q(), &q(), k)?))
        }),
        beta: Box::new(|k| Ok(if k == 0 { RationalFn::one() } else { RationalFn::zero() })),
        rel_param: Term::var(Var::T),
    }
}

/// `alpha = delta_0`, `beta_k = 1/((q)_k (-tq)_k)`, relative to `(-t, q)`.
pub fn trivial_pair() -> BaileyPair {
    BaileyPair {
        name: "trivial-pair",
        source: "trivial Bailey pair",
        alpha: Box::new(|k| Ok(if k == 0 { RationalFn::one() } else { RationalFn::zero() })),
        beta: Box::new(|k| {
            let mtq = t().mul(&q()).neg();
            pochhammer(&q(), &q(), k)?.mul(&pochhammer(&mtq, &q(), k)?).inv()
        }),
        rel_param: Term::new(int(-1), Monomial::var(Var::T)),
    }
}

/// `alpha_k = (-1)^k q^{k^2} (1 - t q^{2k}) (t^2;q^2)_k / ((1-t)(q^2;q^2)_k)`, `beta_k = 1/(q^2;q^2)_k`.
pub fn dbr_pair() -> BaileyPair {
    BaileyPair {
        name: "dbr-pair",
        source: "Bailey pair for the dagger Bressoud sum",
        alpha: Box::new(|k| {
            let q2 = qp(2);
            let t2 = t().mul(&t());
            let num = sign(k)
                .mul(&qp(k * k))
                .mul(&t().mul(&qp(2 * k)).one_minus())
                .mul(&pochhammer(&t2, &q2, k)?);
            num.div(&t().one_minus().mul(&pochhammer(&q2, &q2, k)?))
        }),
        beta: Box::new(|k| pochhammer(&qp(2), &qp(2), k)?.inv()),
        rel_param: Term::var(Var::T),
    }
}

pub fn all_pairs() -> Vec<BaileyPair> {
    vec![ag_pair(), trivial_pair(), dbr_pair()]
}

/// Verifies the defining relation symbolically for `0 <= n <= n_max`.
pub fn bailey_check(pair: &BaileyPair, n_max: i64) -> CheckReport {
    CheckReport::timed(|| {
        let rep = CheckReport::new(pair.name, pair.source, Regime::Symbolic)
            .param("n_max", n_max)
            .param("a", &pair.rel_param)
            .note("convention: standard Bailey relation");
        let aq = RationalFn::from_term(&pair.rel_param.mul(&Term::var(Var::Q)));
        for n in 0..=n_max {
            let res: Result<(RationalFn, RationalFn)> = (|| {
                let mut terms = Vec::new();
                for k in 0..=n {
                    let den = pochhammer(&q(), &q(), n - k)?.mul(&pochhammer(&aq, &q(), n + k)?);
                    terms.push((pair.alpha)(k)?.div(&den)?);
                }
                Ok(((pair.beta)(n)?, RationalFn::sum(terms.iter())))
            })();
            match res {
                Ok((lhs, rhs)) => {
                    if !rf_equal(&lhs, &rhs) {
                        return rep.param("n", n).fail(lhs, rhs);
                    }
                }
                Err(e) => return rep.param("n", n).fail(format!("error: {}", e), "-"),
            }
        }
        rep
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_pairs_hold() {
        for p in all_pairs() {
            let r = bailey_check(&p, 6);
            assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn a_broken_pair_fails() {
        let mut p = dbr_pair();
        p.beta = Box::new(|k| pochhammer(&q(), &q(), k)?.inv());
        assert!(!bailey_check(&p, 3).passed());
    }
}
