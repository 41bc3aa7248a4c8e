//! Finite multisums, written once over [`QAlg`] so the same definition gives
//! exact rational functions, values at rational points and truncated series.

use super::index::{chains, rs_pairs};
use crate::error::Result;
use crate::exact::{pochhammer, pochhammer_inv, Alg};
use crate::qkit::QAlg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum BrVariant {
    Plain,
    Dagger,
    Ddagger,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum SingleVariant {
    AgSingle,
    BrDaggerSingle,
}

pub(crate) fn sign<A: Alg>(like: &A, e: i64) -> A {
    if e.rem_euclid(2) == 0 {
        like.one_like()
    } else {
        like.one_like().neg()
    }
}

pub(crate) fn c2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `(q)_n / ((q)_{n - n_m} (q)_{n_m - n_{m-1}} ... (q)_{n_1})` as a product of
/// Gaussian binomials.
pub(crate) fn chain_multinom<A: QAlg>(q: &A, n: i64, ns: &[i64]) -> A {
    let mut acc = q.one_like();
    let mut top = n;
    for &k in ns.iter().rev() {
        acc = acc.mul(&A::qbinom_in(q, top, k));
        top = k;
    }
    acc
}

/// `1 / ((q)_{top - n_m} (q)_{n_m - n_{m-1}} ... (q)_{n_2 - n_1})`, omitting `(q)_{n_1}`.
pub(crate) fn gaps_inv<A: Alg>(q: &A, top: i64, ns: &[i64]) -> Result<A> {
    let mut acc = q.one_like();
    let mut hi = top;
    for &k in ns.iter().rev() {
        acc = acc.mul(&pochhammer_inv(q, q, hi - k)?);
        hi = k;
    }
    Ok(acc)
}

fn sq(ns: &[i64]) -> i64 {
    ns.iter().map(|x| x * x).sum()
}

/// The deformed finite Andrews-Gordon sum `AG_n^{(2m+3)}(t, q)`.
pub fn ag_finite<A: QAlg>(m: usize, n: i64, t: &A, q: &A) -> Result<A> {
    let mut terms = Vec::new();
    for ns in chains(m, n) {
        let s: i64 = ns.iter().sum();
        terms.push(chain_multinom(q, n, &ns).mul(&t.powi(2 * s)?).mul(&q.powi(sq(&ns))?));
    }
    Ok(q.sum_all(&terms))
}

/// `AG_n` with `t^{sum n_i}` in place of `t^{2 sum n_i}`.
pub fn ag_dagger<A: QAlg>(m: usize, n: i64, t: &A, q: &A) -> Result<A> {
    let mut terms = Vec::new();
    for ns in chains(m, n) {
        let s: i64 = ns.iter().sum();
        terms.push(chain_multinom(q, n, &ns).mul(&t.powi(s)?).mul(&q.powi(sq(&ns))?));
    }
    Ok(q.sum_all(&terms))
}

/// The Bressoud family `Br_n^{(2m+2)}` and its two variants.
pub fn br_finite<A: QAlg>(variant: BrVariant, m: usize, n: i64, t: &A, q: &A) -> Result<A> {
    let mut terms = Vec::new();
    let q2 = q.mul(q);
    for ns in chains(m, n) {
        let s: i64 = ns.iter().sum();
        let n1 = ns[0];
        let base = chain_multinom(q, n, &ns).mul(&q.powi(sq(&ns))?);
        let term = match variant {
            BrVariant::Plain => base
                .mul(&t.powi(2 * s)?)
                .mul(&pochhammer_inv(&t.mul(q).neg(), q, n1)?),
            // (q)_{n_1} / (q^2;q^2)_{n_1}
            BrVariant::Dagger => base
                .mul(&t.powi(s)?)
                .mul(&pochhammer(q, q, n1)?)
                .mul(&pochhammer_inv(&q2, &q2, n1)?),
            BrVariant::Ddagger => base
                .mul(&t.neg().powi(s)?)
                .mul(&pochhammer_inv(&t.mul(q).neg(), q, n1)?),
        };
        terms.push(term);
    }
    Ok(q.sum_all(&terms))
}

/// The one-fold forms of the dagger sums.
pub fn single_sum<A: QAlg>(variant: SingleVariant, m: usize, n: i64, t: &A, q: &A) -> Result<A> {
    let m = m as i64;
    let q2 = q.mul(q);
    let tq = t.mul(q);
    let mut terms = Vec::new();
    for r in 0..=n {
        let common = sign(q, r)
            .mul(&q.powi(2 * r)?.mul(t).one_minus())
            .div(&t.one_minus())?
            .mul(&pochhammer_inv(&tq, q, n + r)?)
            .mul(&pochhammer_inv(q, q, n - r)?);
        let term = match variant {
            SingleVariant::AgSingle => common
                .mul(&t.powi((m + 1) * r)?)
                .mul(&q.powi(c2(r) + (m + 1) * r * r)?)
                .mul(&pochhammer(t, q, r)?)
                .mul(&pochhammer_inv(q, q, r)?),
            SingleVariant::BrDaggerSingle => common
                .mul(&t.powi(m * r)?)
                .mul(&q.powi((m + 1) * r * r)?)
                .mul(&pochhammer(&t.mul(t), &q2, r)?)
                .mul(&pochhammer_inv(&q2, &q2, r)?),
        };
        terms.push(term);
    }
    Ok(pochhammer(q, q, n)?.mul(&q.sum_all(&terms)))
}

/// The `2m`-fold sum `X_N^{(m)}(a, t, q)` over pairs of index chains.
pub fn x_multisum<A: QAlg>(m: usize, big_n: i64, a: &A, t: &A, q: &A) -> Result<A> {
    let aq = a.mul(q);
    let tq = t.mul(q);
    let atq = a.mul(&tq);
    let mut terms = Vec::new();
    for (r, s) in rs_pairs(m, big_n) {
        let sum_s: i64 = s.iter().sum();
        let sum_r: i64 = r.iter().sum();
        let quad: i64 = r.iter().zip(&s).map(|(ri, si)| ri * ri - ri * si + si * si).sum();
        let (r1, s1) = (r[0], s[0]);
        let mut term = a
            .powi(sum_s)?
            .mul(&t.powi(2 * sum_r - sum_s)?)
            .mul(&q.powi(quad)?)
            // (aq)_{r_1} / (aq)_{s_1}, kept free of the removable pole at aq^j = 1
            .mul(&pochhammer(&aq.mul(&q.powi(s1)?), q, r1 - s1)?)
            .mul(&gaps_inv(q, big_n, &r)?)
            .mul(&pochhammer_inv(q, q, r1)?)
            .mul(&pochhammer_inv(&tq, q, r1)?)
            .mul(&pochhammer_inv(&atq, q, r1)?);
        for i in 1..m {
            term = term.mul(&A::qbinom_in(q, r[i] - s[i - 1], r[i] - s[i]));
        }
        term = term.mul(&A::qbinom_in(q, r1, r1 - s1));
        terms.push(term);
    }
    Ok(pochhammer(&atq, q, big_n)?.mul(&q.sum_all(&terms)))
}

/// The `a`-free `m`-fold form of `X_N^{(m)}`.
pub fn x_closed<A: QAlg>(m: usize, big_n: i64, t: &A, q: &A) -> Result<A> {
    let tq = t.mul(q);
    let mut terms = Vec::new();
    for ns in chains(m, big_n) {
        let s: i64 = ns.iter().sum();
        terms.push(
            t.powi(2 * s)?
                .mul(&q.powi(sq(&ns))?)
                .mul(&gaps_inv(q, big_n, &ns)?)
                .mul(&pochhammer_inv(q, q, ns[0])?)
                .mul(&pochhammer_inv(&tq, q, ns[0])?),
        );
    }
    Ok(q.sum_all(&terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, rf_equal, Monomial, Rational, RationalFn, Var};

    fn tq() -> (RationalFn, RationalFn) {
        (RationalFn::var(Var::T), RationalFn::var(Var::Q))
    }

    #[test]
    fn empty_sums_are_one() {
        let (t, q) = tq();
        for m in 1..=3 {
            assert!(ag_finite(m, 0, &t, &q).unwrap().to_poly().unwrap().is_one());
            for v in [BrVariant::Plain, BrVariant::Dagger, BrVariant::Ddagger] {
                assert!(rf_equal(&br_finite(v, m, 0, &t, &q).unwrap(), &RationalFn::one()));
            }
            assert!(rf_equal(&single_sum(SingleVariant::AgSingle, m, 0, &t, &q).unwrap(), &RationalFn::one()));
            assert!(rf_equal(&x_closed(m, 0, &t, &q).unwrap(), &RationalFn::one()));
            let a = RationalFn::var(Var::A);
            assert!(rf_equal(&x_multisum(m, 0, &a, &t, &q).unwrap(), &RationalFn::one()));
        }
    }

    #[test]
    fn small_values() {
        let (t, q) = tq();
        // AG_1^{(5)} = 1 + t^2 q
        let ag = ag_finite(1, 1, &t, &q).unwrap().to_poly().unwrap();
        let want = crate::exact::LaurentPoly::one()
            + crate::exact::LaurentPoly::mono(Monomial::from_pairs(&[(Var::T, 2), (Var::Q, 1)]));
        assert_eq!(ag, want);
        // x_closed(1, 1) = (1 - tq + t^2 q) / ((1 - q)(1 - tq))
        let x = x_closed(1, 1, &t, &q).unwrap();
        let one = RationalFn::one();
        let tqv = t.mul(&q);
        let num = one.sub(&tqv).add(&t.mul(&t).mul(&q));
        let den = one.sub(&q).mul(&one.sub(&tqv));
        assert!(rf_equal(&x, &num.div(&den).unwrap()));
    }

    #[test]
    fn x_anchor_at_a_point() {
        // X_1^{(1)}(a, 1/3, 1/2) = 32/15 whatever a is
        let t = rat(1, 3);
        let q = rat(1, 2);
        for a in [int(0), int(1), int(-1), int(2), rat(1, 2)] {
            assert_eq!(x_multisum(1, 1, &a, &t, &q).unwrap(), rat(32, 15), "a = {}", a);
        }
        assert_eq!(x_closed::<Rational>(1, 1, &t, &q).unwrap(), rat(32, 15));
    }
}
