use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{pochhammer, Alg, LaurentPoly, Lser, Monomial, Rational, RationalFn, Term, Var};

/// Gaussian binomial `[n, k]` in `q`, by exact division of Pochhammer products.
/// Out-of-range arguments give 0.
pub fn qbinom(n: i64, k: i64, step: Monomial) -> LaurentPoly {
    let base = gaussian(n, k);
    if step == Monomial::var(Var::Q) {
        (*base).clone()
    } else {
        base.subst_monomial(Var::Q, &Term::mono(step))
    }
}

fn gaussian(n: i64, k: i64) -> Arc<LaurentPoly> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), Arc<LaurentPoly>>>> = OnceLock::new();
    if k < 0 || k > n {
        return Arc::new(LaurentPoly::zero());
    }
    let k = k.min(n - k);
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&(n, k)) {
        return p.clone();
    }
    let q = RationalFn::var(Var::Q);
    let f = |m| pochhammer(&q, &q, m).expect("finite Pochhammer");
    let ratio = f(n).mul(&f(k).mul(&f(n - k)).inv().expect("nonzero"));
    let p = Arc::new(ratio.to_poly().expect("Gaussian binomials are polynomials"));
    cache.lock().unwrap().insert((n, k), p.clone());
    p
}

/// `(q;q)_N / prod (q;q)_{N_i}`.
pub fn qmultinom(n: i64, parts: &[i64], step: Monomial) -> Result<LaurentPoly> {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return Err(Error::InvalidComposition { n, parts: parts.to_vec() });
    }
    let mut acc = LaurentPoly::one();
    let mut rest = n;
    for &p in parts {
        acc = &acc * &*gaussian(rest, p);
        rest -= p;
    }
    if step != Monomial::var(Var::Q) {
        acc = acc.subst_monomial(Var::Q, &Term::mono(step));
    }
    Ok(acc)
}

/// Value of the q-multinomial at a primitive `r`-th root of unity, `r | N`:
/// the ordinary multinomial of the parts divided by `r` when `r` divides every
/// part, and 0 otherwise.
pub fn qmultinom_at_root(n: i64, parts: &[i64], r: i64) -> Result<BigInt> {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return Err(Error::InvalidComposition { n, parts: parts.to_vec() });
    }
    assert!(r >= 1 && n % r == 0, "r must divide N");
    if parts.iter().any(|&p| p % r != 0) {
        return Ok(BigInt::zero());
    }
    let mut acc = BigInt::one();
    let mut rest = n / r;
    for &p in parts {
        acc *= binomial(rest, p / r);
        rest -= p / r;
    }
    Ok(acc)
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Algebras with a fast Gaussian binomial in a given step.
pub trait QAlg: Alg {
    fn qbinom_in(step: &Self, n: i64, k: i64) -> Self {
        if k < 0 || k > n {
            return step.zero_like();
        }
        let mut acc = step.one_like();
        for j in 1..=k {
            let num = step.powi(n - k + j).expect("nonnegative power").one_minus();
            let den = step.powi(j).expect("nonnegative power").one_minus();
            acc = acc.mul(&num).div(&den).expect("q-binomial denominator vanishes");
        }
        acc
    }
}

impl QAlg for Rational {}

impl QAlg for RationalFn {
    fn qbinom_in(step: &Self, n: i64, k: i64) -> Self {
        match step.as_term() {
            Some(t) if t.coeff.is_one() => RationalFn::from_poly(qbinom(n, k, t.mono)),
            _ => {
                if k < 0 || k > n {
                    return RationalFn::zero();
                }
                let f = |m| pochhammer(step, step, m).expect("finite");
                f(n).div(&f(k).mul(&f(n - k))).expect("nonzero")
            }
        }
    }
}

impl QAlg for Lser {
    fn qbinom_in(step: &Self, n: i64, k: i64) -> Self {
        let cap = step.cap();
        let mono = (step.is_exact() && step.val() >= 1 && step.coeff(step.val()).is_one()
            && Lser::monomial(Rational::one(), step.val(), cap) == *step)
            .then(|| step.val());
        match mono {
            Some(d) => {
                if k < 0 || k > n {
                    return step.zero_like();
                }
                let p = gaussian(n, k);
                let mut coeffs = Vec::new();
                for (m, c) in p.terms() {
                    let e = m.exp(Var::Q) as i64 * d;
                    if e >= cap {
                        continue;
                    }
                    if coeffs.len() <= e as usize {
                        coeffs.resize(e as usize + 1, Rational::zero());
                    }
                    coeffs[e as usize] = c.clone();
                }
                let prec = if k * (n - k) * d < cap { crate::exact::EXACT } else { cap };
                Lser::from_coeffs(0, coeffs, prec, cap)
            }
            None => {
                if k < 0 || k > n {
                    return step.zero_like();
                }
                let f = |m| pochhammer(step, step, m).expect("finite");
                f(n).div(&f(k).mul(&f(n - k))).expect("unit denominators")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{eval_cyclotomic, int};

    fn q() -> Monomial {
        Monomial::var(Var::Q)
    }

    #[test]
    fn reference_examples() {
        let b = qbinom(4, 2, q());
        assert_eq!(b, LaurentPoly::univariate(Var::Q, &[1, 1, 2, 1, 1]));
        assert_eq!(b.eval(&[(Var::Q, int(2))]).unwrap(), int(35));
        for n in 0..5 {
            assert!(qbinom(n, 0, q()).is_one());
        }
        assert!(qbinom(2, 3, q()).is_zero());
        assert_eq!(qmultinom(2, &[1, 1], q()).unwrap(), LaurentPoly::univariate(Var::Q, &[1, 1]));
        assert!(qmultinom(3, &[3], q()).unwrap().is_one());
        assert_eq!(qmultinom(4, &[2, 1, 1], q()).unwrap().eval(&[(Var::Q, int(1))]).unwrap(), int(12));
        assert!(matches!(qmultinom(4, &[2, 1], q()), Err(Error::InvalidComposition { .. })));
        assert_eq!(qmultinom_at_root(4, &[2, 2], 2).unwrap(), BigInt::from(2));
        assert_eq!(qmultinom_at_root(4, &[3, 1], 2).unwrap(), BigInt::zero());
        assert_eq!(qmultinom_at_root(3, &[3], 3).unwrap(), BigInt::one());
    }

    #[test]
    fn symmetry_and_pascal() {
        for n in 0..=12 {
            for m in 0..=n {
                assert_eq!(qbinom(n, m, q()), qbinom(n, n - m, q()));
                if n >= 1 {
                    let qm = LaurentPoly::mono(Monomial::var_pow(Var::Q, m as i32));
                    let qnm = LaurentPoly::mono(Monomial::var_pow(Var::Q, (n - m) as i32));
                    let a = qbinom(n - 1, m - 1, q()) + qm * qbinom(n - 1, m, q());
                    let b = qnm * qbinom(n - 1, m - 1, q()) + qbinom(n - 1, m, q());
                    assert_eq!(qbinom(n, m, q()), a);
                    assert_eq!(qbinom(n, m, q()), b);
                }
            }
        }
    }

    fn compositions(n: i64, k: usize) -> Vec<Vec<i64>> {
        if k == 1 {
            return vec![vec![n]];
        }
        let mut out = Vec::new();
        for first in 0..=n {
            for mut rest in compositions(n - first, k - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn multinomials_at_roots_of_unity() {
        for n in 1..=8i64 {
            for k in 1..=3usize {
                for parts in compositions(n, k) {
                    let p = qmultinom(n, &parts, q()).unwrap();
                    for r in 1..=n {
                        if n % r != 0 {
                            continue;
                        }
                        let got = eval_cyclotomic(&p, Var::Q, r as u32).to_rational_poly().unwrap();
                        let want = qmultinom_at_root(n, &parts, r).unwrap();
                        assert_eq!(got.constant_term(), Rational::from_integer(want), "{:?} r={}", parts, r);
                    }
                }
            }
        }
    }

    #[test]
    fn alg_binomials_agree() {
        let x = int(1) / int(3);
        for n in 0..7 {
            for k in -1..=n + 1 {
                let want = qbinom(n, k, q()).eval(&[(Var::Q, x.clone())]).unwrap();
                assert_eq!(Rational::qbinom_in(&x, n, k), want);
                let s = Lser::monomial(int(1), 2, 30);
                let got = Lser::qbinom_in(&s, n, k).to_qseries(20).unwrap();
                let want = crate::exact::series_from_poly(&qbinom(n, k, Monomial::var_pow(Var::Q, 2)), &[], 20).unwrap();
                assert_eq!(got, want);
            }
        }
    }
}
