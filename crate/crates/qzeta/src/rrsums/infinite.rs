//! The `n -> infinity` sums at `t = 1` against their product sides, and a
//! partition-counting oracle for the Rogers-Ramanujan case.

use num_traits::One;

use super::finite::gaps_inv;
use super::index::chains;
use crate::error::Result;
use crate::exact::{pochhammer_inv, Lser, Rational};
use crate::qkit::{poch_inf, QMono};

fn chain_sum(m: usize, cap: i64, bressoud: bool) -> Result<Lser> {
    let q = Lser::monomial(Rational::one(), 1, cap);
    let mut top = 0;
    while (top + 1) * (top + 1) < cap {
        top += 1;
    }
    let mut total = Lser::zero(cap);
    for ns in chains(m, top) {
        let sq: i64 = ns.iter().map(|x| x * x).sum();
        if sq >= cap {
            continue;
        }
        let nm = ns[m - 1];
        let mut term = Lser::monomial(Rational::one(), sq, cap)
            .mul(&gaps_inv(&q, nm, &ns)?)
            .mul(&pochhammer_inv(&q, &q, ns[0])?);
        if bressoud {
            term = term.mul(&pochhammer_inv(&q.neg(), &q, ns[0])?);
        }
        total = total.add(&term);
    }
    Ok(total.add(&Lser::from_coeffs(0, Vec::new(), cap, cap)))
}

/// `AG_inf^{(2m+3)}(1, q)` as the chain sum.
pub fn ag_infinite_sum(m: usize, cap: i64) -> Result<Lser> {
    chain_sum(m, cap, false)
}

/// `(q^{m+1}, q^{m+2}, q^{2m+3}; q^{2m+3})_inf / (q)_inf`.
pub fn ag_infinite_product(m: usize, cap: i64) -> Result<Lser> {
    let k = 2 * m as i64 + 3;
    let mut p = Lser::one(cap);
    for d in [m as i64 + 1, m as i64 + 2, k] {
        p = p.mul(&poch_inf(&QMono::q(d), k, cap)?);
    }
    Ok(p.mul(&poch_inf(&QMono::q(1), 1, cap)?.inv()?))
}

/// `Br_inf^{(2m+2)}(1, q)` as the chain sum.
pub fn br_infinite_sum(m: usize, cap: i64) -> Result<Lser> {
    chain_sum(m, cap, true)
}

/// `(q^{m+1}, q^{m+1}, q^{2m+2}; q^{2m+2})_inf / (q)_inf`.
pub fn br_infinite_product(m: usize, cap: i64) -> Result<Lser> {
    let k = 2 * m as i64 + 2;
    let mut p = Lser::one(cap);
    for d in [m as i64 + 1, m as i64 + 1, k] {
        p = p.mul(&poch_inf(&QMono::q(d), k, cap)?);
    }
    Ok(p.mul(&poch_inf(&QMono::q(1), 1, cap)?.inv()?))
}

fn count_partitions<F: Fn(&[u32]) -> bool>(k: u32, keep: &F) -> u64 {
    fn go<F: Fn(&[u32]) -> bool>(rest: u32, max: u32, cur: &mut Vec<u32>, keep: &F) -> u64 {
        if rest == 0 {
            return keep(cur) as u64;
        }
        let mut n = 0;
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            n += go(rest - p, p, cur, keep);
            cur.pop();
        }
        n
    }
    go(k, k, &mut Vec::new(), keep)
}

/// Partitions of `k` into parts congruent to 1 or 4 mod 5.
pub fn count_parts_pm1_mod5(k: u32) -> u64 {
    count_partitions(k, &|p: &[u32]| p.iter().all(|x| x % 5 == 1 || x % 5 == 4))
}

/// Partitions of `k` whose consecutive parts differ by at least 2.
pub fn count_gap2(k: u32) -> u64 {
    count_partitions(k, &|p: &[u32]| p.windows(2).all(|w| w[0] >= w[1] + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QSeries;
    use crate::rrsums::to_order;

    #[test]
    fn rogers_ramanujan_counts() {
        let want: [i64; 11] = [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(count_parts_pm1_mod5(k as u32) as i64, *w);
            assert_eq!(count_gap2(k as u32) as i64, *w);
        }
        let s = to_order(10, |c| ag_infinite_sum(1, c)).unwrap();
        assert_eq!(s, QSeries::from_ints(10, &want));
    }

    #[test]
    fn products_match_sums() {
        for m in 1..=2 {
            assert_eq!(
                to_order(20, |c| ag_infinite_sum(m, c)).unwrap(),
                to_order(20, |c| ag_infinite_product(m, c)).unwrap()
            );
            assert_eq!(
                to_order(20, |c| br_infinite_sum(m, c)).unwrap(),
                to_order(20, |c| br_infinite_product(m, c)).unwrap()
            );
        }
    }
}
