//! Integer partitions, the coarse Hall polynomial, automorphism counts of
//! modules over a DVR, and the counting polynomial `B(m, n, lambda, mu; q)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, LaurentPoly, Monomial, Term, Var};
use crate::qkit::qbinom;

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Accepts trailing zeros; rejects increasing or negative entries.
    pub fn new(parts: &[i64]) -> Option<Self> {
        let mut v: Vec<i64> = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.iter().any(|&x| x < 1) || v.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition { parts: v })
    }

    /// `(m^n)`.
    pub fn rectangle(m: i64, n: i64) -> Self {
        if m == 0 {
            return Self::empty();
        }
        Partition { parts: vec![m; n as usize] }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> i64 {
        self.parts.len() as i64
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i`, 1-indexed, zero past the end.
    pub fn part(&self, i: i64) -> i64 {
        if i >= 1 && (i as usize) <= self.parts.len() {
            self.parts[i as usize - 1]
        } else {
            0
        }
    }

    pub fn largest(&self) -> i64 {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.largest();
        Partition { parts: (1..=m).map(|j| self.parts.iter().filter(|&&p| p >= j).count() as i64).collect() }
    }

    /// `self ⊆ other` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }

    pub fn in_rectangle(&self, m: i64, n: i64) -> bool {
        self.len() <= n && self.largest() <= m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `nu_i = m - mu_{n+1-i}`.
pub fn complement_in_rectangle(mu: &Partition, m: i64, n: i64) -> Result<Partition> {
    if !mu.in_rectangle(m, n) {
        return Err(Error::NotInRectangle(format!("{} in ({}^{})", mu, m, n)));
    }
    let parts: Vec<i64> = (1..=n).map(|i| m - mu.part(n + 1 - i)).collect();
    Ok(Partition::new(&parts).expect("complement is a partition"))
}

/// Every partition inside `(m^n)`, in lexicographic order of part sequences.
pub fn partitions_in_rectangle(m: i64, n: i64) -> Vec<Partition> {
    fn rec(max: i64, slots: i64, prefix: &mut Vec<i64>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: prefix.clone() });
        if slots == 0 {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            rec(p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m.max(0), n.max(0), &mut Vec::new(), &mut out);
    out
}

fn q_pow(e: i64) -> LaurentPoly {
    LaurentPoly::mono(Monomial::var_pow(Var::Q, e as i32))
}

fn retarget(p: LaurentPoly, step: Monomial) -> LaurentPoly {
    if step == Monomial::var(Var::Q) {
        p
    } else {
        p.subst_monomial(Var::Q, &Term::mono(step))
    }
}

fn assert_polynomial(p: &LaurentPoly, what: &str) -> Result<()> {
    if p.min_exp(Var::Q).is_some_and(|e| e < 0) {
        return Err(Error::NonExactDivision(format!("{} is not a polynomial: {}", what, p)));
    }
    Ok(())
}

/// `[n, k]` in `q^{-1}`, as a Laurent polynomial in `q`.
fn qbinom_inv(n: i64, k: i64) -> LaurentPoly {
    if k < 0 || k > n {
        return LaurentPoly::zero();
    }
    q_pow(-k * (n - k)) * qbinom(n, k, Monomial::var(Var::Q))
}

/// Coarse Hall polynomial `g^lambda_mu` in the variable `step`.
pub fn hall_g(lambda: &Partition, mu: &Partition, step: Monomial) -> LaurentPoly {
    if !mu.is_contained_in(lambda) {
        return LaurentPoly::zero();
    }
    let (lc, mc) = (lambda.conjugate(), mu.conjugate());
    let top = lambda.largest();
    let e: i64 = (1..=top).map(|i| mc.part(i) * (lc.part(i) - mc.part(i))).sum();
    let mut g = q_pow(e);
    for i in 1..=top {
        g = g * qbinom_inv(lc.part(i) - mc.part(i + 1), lc.part(i) - mc.part(i));
    }
    assert_polynomial(&g, "Hall polynomial").expect("Hall polynomials are polynomials");
    retarget(g, step)
}

/// `|Aut|` of the module of type `lambda` over a DVR with residue field of size `step`.
pub fn aut_count(lambda: &Partition, step: Monomial) -> LaurentPoly {
    let lc = lambda.conjugate();
    let top = lambda.largest();
    let e: i64 = (1..=top).map(|i| lc.part(i) * lc.part(i)).sum();
    let mut a = q_pow(e);
    for i in 1..=top {
        for j in 1..=(lc.part(i) - lc.part(i + 1)) {
            a = a * (LaurentPoly::one() - q_pow(-j));
        }
    }
    assert_polynomial(&a, "automorphism count").expect("automorphism counts are polynomials");
    retarget(a, step)
}

fn q2() -> Monomial {
    Monomial::var_pow(Var::Q, 2)
}

/// Number of real structures of an `F_{q^2}[[T]]`-module of type `lambda`: `a(q^2)/a(q)`.
pub fn real_structure_count(lambda: &Partition) -> Result<LaurentPoly> {
    aut_count(lambda, q2()).exact_div(&aut_count(lambda, Monomial::var(Var::Q)))
}

/// `|Gr^TR(lambda)| = g^{(m^n)}_lambda(q^2) a_lambda(q^2)/a_lambda(q)`.
pub fn tr_grassmannian_count(m: i64, n: i64, lambda: &Partition) -> Result<LaurentPoly> {
    Ok(hall_g(&Partition::rectangle(m, n), lambda, q2()) * real_structure_count(lambda)?)
}

/// `B(m, n, lambda, mu; q)` from the quotient formula.
pub fn b_count_quotient(m: i64, n: i64, lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    for p in [lambda, mu] {
        if !p.in_rectangle(m, n) {
            return Err(Error::NotInRectangle(format!("{} in ({}^{})", p, m, n)));
        }
    }
    let g = hall_g(lambda, mu, Monomial::var(Var::Q));
    if g.is_zero() {
        return Ok(g);
    }
    let num = tr_grassmannian_count(m, n, lambda)? * g;
    num.exact_div(&tr_grassmannian_count(m, n, mu)?)
}

/// `B(m, n, lambda, mu; q)` from the product simplification.
pub fn b_count_simplified(m: i64, n: i64, lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    for p in [lambda, mu] {
        if !p.in_rectangle(m, n) {
            return Err(Error::NotInRectangle(format!("{} in ({}^{})", p, m, n)));
        }
    }
    if !mu.is_contained_in(lambda) {
        return Ok(LaurentPoly::zero());
    }
    let (lc, mc) = (lambda.conjugate(), mu.conjugate());
    let top = m.max(1);
    let e: i64 = (1..=top).map(|i| (2 * n - lc.part(i)) * (lc.part(i) - mc.part(i))).sum();
    let mut b = q_pow(e);
    for j in 1..=(lc.part(1) - mc.part(1)) {
        b = b * (LaurentPoly::one() + q_pow(-j));
    }
    let (top_n, top_k) = (n - mc.part(1), n - lc.part(1));
    if top_k < 0 || top_k > top_n {
        return Ok(LaurentPoly::zero());
    }
    b = b * q_pow(-2 * top_k * (top_n - top_k)) * qbinom(top_n, top_k, q2());
    for i in 1..=top {
        b = b * qbinom_inv(lc.part(i) - mc.part(i + 1), lc.part(i) - lc.part(i + 1));
    }
    Ok(b)
}

/// `B(m, n, lambda, mu; q)`, computed both ways; `FormMismatch` if they differ.
#[allow(non_snake_case)]
pub fn B_count(m: i64, n: i64, lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    let a = b_count_quotient(m, n, lambda, mu)?;
    let b = b_count_simplified(m, n, lambda, mu)?;
    if a != b {
        return Err(Error::FormMismatch(format!(
            "B({}, {}, {}, {}): quotient {} vs product {}",
            m, n, lambda, mu, a, b
        )));
    }
    if a.terms().any(|(mono, c)| mono.exp(Var::Q) < 0 || *c < int(0) || !c.is_integer()) {
        return Err(Error::FormMismatch(format!("B({}, {}, {}, {}) = {} is not in N[q]", m, n, lambda, mu, a)));
    }
    Ok(a)
}

/// Value of a polynomial in `q` at an integer.
pub fn at_q(p: &LaurentPoly, q: i64) -> num_bigint::BigInt {
    let v = p.eval(&[(Var::Q, int(q))]).expect("polynomial in q");
    assert!(v.is_integer());
    v.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(xs: &[i64]) -> Partition {
        Partition::new(xs).unwrap()
    }

    fn q() -> Monomial {
        Monomial::var(Var::Q)
    }

    fn uni(c: &[i64]) -> LaurentPoly {
        LaurentPoly::univariate(Var::Q, c)
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for lam in partitions_in_rectangle(4, 4) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate().largest(), lam.len());
        }
        assert!(Partition::new(&[1, 2]).is_none());
    }

    #[test]
    fn complements() {
        assert_eq!(complement_in_rectangle(&p(&[1]), 2, 2).unwrap(), p(&[2, 1]));
        assert_eq!(complement_in_rectangle(&Partition::empty(), 3, 2).unwrap(), Partition::rectangle(3, 2));
        assert_eq!(complement_in_rectangle(&Partition::rectangle(3, 2), 3, 2).unwrap(), Partition::empty());
        assert!(matches!(complement_in_rectangle(&p(&[3]), 2, 2), Err(Error::NotInRectangle(_))));
        for mu in partitions_in_rectangle(3, 3) {
            let nu = complement_in_rectangle(&mu, 3, 3).unwrap();
            assert_eq!(complement_in_rectangle(&nu, 3, 3).unwrap(), mu);
        }
    }

    #[test]
    fn rectangle_listing() {
        assert_eq!(partitions_in_rectangle(1, 1), vec![Partition::empty(), p(&[1])]);
        assert_eq!(partitions_in_rectangle(2, 1), vec![Partition::empty(), p(&[1]), p(&[2])]);
        assert_eq!(partitions_in_rectangle(2, 2).len(), 6);
        for m in 0..5 {
            for n in 0..5 {
                let want = crate::qkit::binomial(m + n, n);
                assert_eq!(num_bigint::BigInt::from(partitions_in_rectangle(m, n).len()), want);
            }
        }
    }

    #[test]
    fn hall_examples() {
        assert_eq!(hall_g(&p(&[1, 1]), &p(&[1]), q()), uni(&[1, 1]));
        assert!(hall_g(&p(&[2]), &p(&[1]), q()).is_one());
        assert!(hall_g(&p(&[3, 1]), &Partition::empty(), q()).is_one());
        assert!(hall_g(&p(&[1]), &p(&[2]), q()).is_zero());
        // sum over mu of g^lambda_mu at q = 2 counts all submodules; (1,1) has 5
        let total: i64 = partitions_in_rectangle(2, 2)
            .iter()
            .map(|mu| i64::try_from(at_q(&hall_g(&p(&[1, 1]), mu, q()), 2)).unwrap())
            .sum::<i64>();
        assert_eq!(total, 5);
    }

    #[test]
    fn aut_examples() {
        assert_eq!(aut_count(&p(&[1]), q()), uni(&[-1, 1]));
        assert_eq!(aut_count(&p(&[1, 1]), q()), uni(&[-1, 0, 1]) * uni(&[0, -1, 1]));
        assert_eq!(aut_count(&p(&[2]), q()), uni(&[0, -1, 1]));
        assert_eq!(at_q(&aut_count(&p(&[1, 1]), q()), 2), 6.into());
    }

    #[test]
    fn real_structures() {
        assert_eq!(real_structure_count(&p(&[1])).unwrap(), uni(&[1, 1]));
        assert!(real_structure_count(&Partition::empty()).unwrap().is_one());
        // (q^4-1)(q^4-q^2) / ((q^2-1)(q^2-q)) at q = 2 is 180/6
        assert_eq!(at_q(&real_structure_count(&p(&[1, 1])).unwrap(), 2), 30.into());
    }

    #[test]
    fn b_examples() {
        for lam in partitions_in_rectangle(2, 2) {
            assert!(B_count(2, 2, &lam, &lam).unwrap().is_one());
        }
        assert_eq!(B_count(1, 1, &p(&[1]), &Partition::empty()).unwrap(), uni(&[1, 1]));
    }

    #[test]
    fn b_forms_agree_in_three_by_three() {
        for lam in partitions_in_rectangle(3, 3) {
            for mu in partitions_in_rectangle(3, 3) {
                B_count(3, 3, &lam, &mu).unwrap();
            }
        }
    }
}
