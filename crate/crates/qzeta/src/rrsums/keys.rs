//! Finite lemmas used on the way to `a`-independence and the master reflection,
//! each as a pair of sides over any [`QAlg`].

use super::finite::{c2, sign};
use crate::error::Result;
use crate::exact::{pochhammer, pochhammer_inv};
use crate::qkit::QAlg;

fn pinv<A: QAlg>(x: &A, q: &A, n: i64) -> Result<A> {
    pochhammer_inv(x, q, n)
}

/// `(-1)^v (at)^{u+v} q^{u^2 + uv + C(v+1, 2)} (a^{-1} t)_v`, the numerator shared by the three keys.
fn uv_numerator<A: QAlg>(u: i64, v: i64, a: &A, t: &A, q: &A) -> Result<A> {
    Ok(sign(q, v)
        .mul(&a.mul(t).powi(u + v)?)
        .mul(&q.powi(u * u + u * v + c2(v + 1))?)
        .mul(&pochhammer(&t.div(a)?, q, v)?))
}

/// Both sides of the one-parameter key behind `X^{(1)}`.
pub fn x1_key<A: QAlg>(big_n: i64, a: &A, t: &A, q: &A) -> Result<(A, A)> {
    let tq = t.mul(q);
    let mut lhs = Vec::new();
    for u in 0..=big_n {
        for v in 0..=big_n - u {
            lhs.push(
                uv_numerator(u, v, a, t, q)?
                    .mul(&pinv(q, q, big_n - u - v)?)
                    .mul(&pinv(q, q, u)?)
                    .mul(&pinv(q, q, v)?)
                    .mul(&pinv(&tq, q, u + v)?),
            );
        }
    }
    let mut rhs = Vec::new();
    for n in 0..=big_n {
        rhs.push(
            t.powi(2 * n)?
                .mul(&q.powi(n * n)?)
                .mul(&pinv(q, q, big_n - n)?)
                .mul(&pinv(q, q, n)?)
                .mul(&pinv(&tq, q, n)?),
        );
    }
    Ok((q.sum_all(&lhs), q.sum_all(&rhs)))
}

/// Both sides of the induction step for the `V` expression, indexed by `N` and `l_1`.
pub fn induction_key<A: QAlg>(big_n: i64, l1: i64, a: &A, t: &A, q: &A) -> Result<(A, A)> {
    let atq = a.mul(t).mul(q);
    let mut lhs = Vec::new();
    for u in 0..=big_n {
        for v in 0..=l1 {
            lhs.push(
                uv_numerator(u, v, a, t, q)?
                    .mul(&pinv(q, q, big_n - u)?)
                    .mul(&pinv(q, q, l1 - v)?)
                    .mul(&pinv(&atq, q, l1 + u)?)
                    .mul(&pinv(q, q, u)?)
                    .mul(&pinv(q, q, v)?),
            );
        }
    }
    let mut rhs = Vec::new();
    for l0 in 0..=l1 {
        rhs.push(
            t.powi(2 * l0)?
                .mul(&q.powi(l0 * l0)?)
                .mul(&pinv(q, q, l1 - l0)?)
                .mul(&pinv(q, q, l0)?)
                .mul(&pinv(&atq, q, big_n + l0)?),
        );
    }
    Ok((q.sum_all(&lhs), pinv(q, q, big_n)?.mul(&q.sum_all(&rhs))))
}

/// Both sides of the key reducing `a`-independence of `X^{(m)}` to a finite statement.
pub fn a_indep_key<A: QAlg>(big_n: i64, l1: i64, a: &A, t: &A, q: &A) -> Result<(A, A)> {
    let atq = a.mul(t).mul(q);
    let t2q = t.mul(t).mul(q);
    let mut lhs = Vec::new();
    for u in 0..=big_n {
        for v in 0..=l1 {
            lhs.push(
                uv_numerator(u, v, a, t, q)?
                    .mul(&pinv(q, q, big_n - u)?)
                    .mul(&pinv(&t2q, q, big_n + v)?)
                    .mul(&pinv(q, q, l1 - v)?)
                    .mul(&pinv(&atq, q, l1 + u)?)
                    .mul(&pinv(q, q, u)?)
                    .mul(&pinv(q, q, v)?),
            );
        }
    }
    let mut rhs = Vec::new();
    for l0 in 0..=big_n.min(l1) {
        rhs.push(
            t.powi(2 * l0)?
                .mul(&q.powi(l0 * l0)?)
                .mul(&pinv(q, q, big_n - l0)?)
                .mul(&pinv(q, q, l1 - l0)?)
                .mul(&pinv(q, q, l0)?),
        );
    }
    Ok((
        pochhammer(&atq, q, big_n)?.mul(&q.sum_all(&lhs)),
        pinv(&t2q, q, big_n + l1)?.mul(&q.sum_all(&rhs)),
    ))
}

/// Both sides of the `L <= n <= M` transformation used for the master reflection.
pub fn z1z2_full<A: QAlg>(l: i64, mm: i64, b: &A, t: &A, q: &A) -> Result<(A, A)> {
    let btq = t.mul(q).div(b)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for n in l..=mm {
        let g = pinv(q, q, mm - n)?.mul(&pinv(q, q, n - l)?);
        lhs.push(btq.neg().powi(n)?.mul(&q.powi(c2(n))?).mul(&pochhammer(b, q, n)?).mul(&g));
        rhs.push(t.powi(n)?.mul(&q.powi(n * n)?).mul(&pinv(&btq, q, n)?).mul(&g));
    }
    let pre = b
        .inv()?
        .neg()
        .powi(l)?
        .mul(&q.powi(-c2(l))?)
        .mul(&pochhammer(b, q, l)?)
        .mul(&pochhammer(&btq, q, mm)?);
    Ok((q.sum_all(&lhs), pre.mul(&q.sum_all(&rhs))))
}

/// Both sides of the one-fold Chu-Vandermonde evaluation; for `s_1 >= 1` the
/// right side vanishes through `1 / (q^2; q^2)_{-s_1} = 0`.
pub fn remark_one_fold<A: QAlg>(n: i64, s1: i64, q: &A) -> Result<(A, A)> {
    let q2 = q.mul(q);
    let mut lhs = Vec::new();
    for r in 0..=n {
        lhs.push(
            sign(q, r)
                .mul(&q.powi(r * r + (1 - 2 * s1) * r)?)
                .mul(&pochhammer(q, q, 2 * n - 2 * r)?)
                .mul(&pinv(&q2, &q2, r)?)
                .mul(&pinv(&q2, &q2, n - r)?)
                .mul(&pinv(q, q, n + s1 - 2 * r)?),
        );
    }
    let rhs = pochhammer(q, q, n - s1)?.mul(&pinv(q, q, n + s1)?).mul(&pinv(&q2, &q2, -s1)?);
    Ok((q.sum_all(&lhs), rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, rf_equal, RationalFn, Var};

    #[test]
    fn keys_hold_symbolically() {
        let (a, t, q) = (RationalFn::var(Var::A), RationalFn::var(Var::T), RationalFn::var(Var::Q));
        for n in 0..=2 {
            let (l, r) = x1_key(n, &a, &t, &q).unwrap();
            assert!(rf_equal(&l, &r), "x1 N={}", n);
            for l1 in 0..=2 {
                let (l, r) = induction_key(n, l1, &a, &t, &q).unwrap();
                assert!(rf_equal(&l, &r), "induction N={} l1={}", n, l1);
                let (l, r) = a_indep_key(n, l1, &a, &t, &q).unwrap();
                assert!(rf_equal(&l, &r), "a-indep N={} l1={}", n, l1);
                let (l, r) = z1z2_full(n.min(l1), n.max(l1), &a, &t, &q).unwrap();
                assert!(rf_equal(&l, &r), "z1z2 L={} M={}", n, l1);
            }
        }
    }

    #[test]
    fn remark_at_a_point() {
        let q = rat(1, 3);
        for n in 0..=4 {
            for s1 in -n..=n {
                let (l, r) = remark_one_fold(n, s1, &q).unwrap();
                assert_eq!(l, r, "n={} s1={}", n, s1);
                if s1 >= 1 {
                    assert_eq!(r, int(0));
                }
            }
        }
    }
}
