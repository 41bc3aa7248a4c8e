//! Index sets of the multisums.

/// Weakly increasing chains `0 <= n_1 <= ... <= n_m <= top`.
pub fn chains(m: usize, top: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn go(m: usize, lo: i64, top: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in lo..=top {
            cur.push(v);
            go(m, v, top, cur, out);
            cur.pop();
        }
    }
    if top >= 0 {
        go(m, 0, top, &mut cur, &mut out);
    }
    out
}

/// Weakly decreasing chains `top >= v_1 >= ... >= v_m >= 0`.
pub fn decreasing(m: usize, top: i64) -> Vec<Vec<i64>> {
    chains(m, top)
        .into_iter()
        .map(|mut c| {
            c.reverse();
            c
        })
        .collect()
}

/// Pairs `(r, s)` with `r` a chain bounded by `top` and
/// `s_{i-1} <= s_i <= r_i` (`s_0 = 0`), the support of the `(r, s)` multisums.
pub fn rs_pairs(m: usize, top: i64) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for r in chains(m, top) {
        let mut s = Vec::with_capacity(m);
        fn go(r: &[i64], lo: i64, s: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            let i = s.len();
            if i == r.len() {
                out.push(s.clone());
                return;
            }
            for v in lo..=r[i] {
                s.push(v);
                go(r, v, s, out);
                s.pop();
            }
        }
        let mut ss = Vec::new();
        go(&r, 0, &mut s, &mut ss);
        for s in ss {
            out.push((r.clone(), s));
        }
    }
    out
}

/// Compositions `k_0 + ... + k_m = n` into `m + 1` nonnegative parts.
pub fn compositions(n: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkit::binomial;

    #[test]
    fn chain_counts() {
        for m in 1..=3 {
            for n in 0..=5 {
                let c = chains(m, n);
                assert_eq!(c.len() as i64, i64::try_from(binomial(n + m as i64, m as i64)).unwrap());
                assert!(c.iter().all(|x| x.windows(2).all(|w| w[0] <= w[1]) && x[m - 1] <= n));
            }
        }
        assert!(chains(2, -1).is_empty());
        assert_eq!(decreasing(2, 1), vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn rs_support() {
        // m = 1: pairs 0 <= s <= r <= N
        assert_eq!(rs_pairs(1, 2).len(), 6);
        for (r, s) in rs_pairs(2, 3) {
            assert!(s[0] <= s[1] && s[0] <= r[0] && s[1] <= r[1] && r[0] <= r[1]);
        }
        assert_eq!(compositions(2, 3).len(), 6);
    }
}
