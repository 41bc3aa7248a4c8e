//! The master polynomial `Z_{m,n}(u, t, z)` and its specializations.

use super::index::chains;
use crate::error::Result;
use crate::exact::{int, pochhammer, pochhammer_inv, CycPoly, LaurentPoly, Monomial, RationalFn, Term, Var};
use crate::qkit::qbinom;

fn mono(pairs: &[(Var, i32)]) -> Monomial {
    Monomial::from_pairs(pairs)
}

fn z_multinom(n: i64, ns: &[i64]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    let mut top = n;
    for &k in ns.iter().rev() {
        acc = &acc * &qbinom(top, k, Monomial::var(Var::Z));
        top = k;
    }
    acc
}

/// `Z_{m,n}` with the quotient `(u^{-1} t z; z)_n / (u^{-1} t z; z)_{n_1}`
/// written as the polynomial `prod_{j=n_1}^{n-1} (1 - u^{-1} t z^{j+1})`.
pub fn master_poly(m: usize, n: i64) -> LaurentPoly {
    let mi = m as i32;
    let ni = n as i32;
    let mut total = LaurentPoly::zero();
    for ns in chains(m, n) {
        let s: i32 = ns.iter().map(|&x| x as i32).sum();
        let sq: i32 = ns.iter().map(|&x| (x * x) as i32).sum();
        let mut term = z_multinom(n, &ns).mul_mono(&mono(&[(Var::U, mi * ni - s), (Var::Z, -mi * ni * ni + sq)]));
        for j in ns[0] as i32..ni {
            let f = LaurentPoly::one() - LaurentPoly::mono(mono(&[(Var::U, -1), (Var::T, 1), (Var::Z, j + 1)]));
            term = &term * &f;
        }
        total = &total + &term;
    }
    total
}

/// The same sum built as a rational function straight from Pochhammer quotients.
pub fn master_rational(m: usize, n: i64) -> Result<RationalFn> {
    let mi = m as i32;
    let ni = n as i32;
    let z = RationalFn::var(Var::Z);
    let x = RationalFn::mono(mono(&[(Var::U, -1), (Var::T, 1), (Var::Z, 1)]));
    let zn = pochhammer(&z, &z, n)?;
    let xn = pochhammer(&x, &z, n)?;
    let mut terms = Vec::new();
    for ns in chains(m, n) {
        let s: i32 = ns.iter().map(|&k| k as i32).sum();
        let sq: i32 = ns.iter().map(|&k| (k * k) as i32).sum();
        let mut term = zn
            .mul(&xn)
            .mul(&pochhammer_inv(&x, &z, ns[0])?)
            .mul(&pochhammer_inv(&z, &z, ns[0])?)
            .mul_term(&Term::mono(mono(&[(Var::U, mi * ni - s), (Var::Z, -mi * ni * ni + sq)])));
        let mut hi = n;
        for &k in ns.iter().rev() {
            term = term.mul(&pochhammer_inv(&z, &z, hi - k)?);
            hi = k;
        }
        terms.push(term);
    }
    Ok(RationalFn::sum(terms.iter()))
}

/// Integer coefficients, `u` and `t` exponents nonnegative, `z` exponents nonpositive.
pub fn is_integral(p: &LaurentPoly) -> bool {
    p.terms().all(|(m, c)| c.is_integer() && m.exp(Var::U) >= 0 && m.exp(Var::T) >= 0 && m.exp(Var::Z) <= 0)
}

/// `u^{mn} z^{-mn^2} Z(u^{-1} z^{2n}, u^{-1} t z^n, z)`.
pub fn master_reflected(m: usize, n: i64, p: &LaurentPoly) -> LaurentPoly {
    let (mi, ni) = (m as i32, n as i32);
    p.subst(&[
        (Var::U, Term::mono(mono(&[(Var::U, -1), (Var::Z, 2 * ni)]))),
        (Var::T, Term::mono(mono(&[(Var::U, -1), (Var::T, 1), (Var::Z, ni)]))),
    ])
    .mul_mono(&mono(&[(Var::U, mi * ni), (Var::Z, -mi * ni * ni)]))
}

/// `cyZh(u, t, q) = Z(u, eps t, q^{-1})`, a polynomial in `u, t, q`.
pub fn cy_zh(eps: i64, p: &LaurentPoly) -> LaurentPoly {
    p.subst(&[
        (Var::T, Term::new(int(eps), Monomial::var(Var::T))),
        (Var::Z, Term::mono(Monomial::var_pow(Var::Q, -1))),
    ])
}

/// `1 + (1 - eps t (uq)^{-1}) sum_{r=1}^m (uq)^r`, the rank-one value.
pub fn cy_zh_rank_one(eps: i64, m: usize) -> LaurentPoly {
    let mut geo = LaurentPoly::zero();
    for r in 1..=m as i32 {
        geo = geo + LaurentPoly::mono(mono(&[(Var::U, r), (Var::Q, r)]));
    }
    let f = LaurentPoly::one() - LaurentPoly::term(int(eps), mono(&[(Var::T, 1), (Var::U, -1), (Var::Q, -1)]));
    LaurentPoly::one() + &f * &geo
}

/// `((1 - t^r + u^{mr} t^r - u^{(m+1)r}) / (1 - u^r))^{n/r}`.
pub fn root_closed_form(m: usize, n: i64, r: i64) -> Result<LaurentPoly> {
    let (mi, ri) = (m as i32, r as i32);
    let num = LaurentPoly::one() - LaurentPoly::mono(Monomial::var_pow(Var::T, ri))
        + LaurentPoly::mono(mono(&[(Var::U, mi * ri), (Var::T, ri)]))
        - LaurentPoly::mono(Monomial::var_pow(Var::U, (mi + 1) * ri));
    let den = LaurentPoly::one() - LaurentPoly::mono(Monomial::var_pow(Var::U, ri));
    Ok(num.exact_div(&den)?.pow((n / r) as u32))
}

/// `Z_{m,n}` at `z = zeta_r` against the closed form, both in the `r`-th cyclotomic field.
pub fn sieve_sides(m: usize, n: i64, r: i64) -> Result<(CycPoly, CycPoly)> {
    assert!(r >= 1 && n % r == 0, "r must divide n");
    let lhs = crate::exact::eval_cyclotomic(&master_poly(m, n), Var::Z, r as u32);
    let rhs = CycPoly::from_poly(&root_closed_form(m, n, r)?, r as u32);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &[(i64, &[(Var, i32)])]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (c, ps) in s {
            out = out + LaurentPoly::term(int(*c), mono(ps));
        }
        out
    }

    #[test]
    fn small_cases() {
        assert!(master_poly(2, 0).is_one());
        let want = p(&[(1, &[]), (-1, &[(Var::T, 1)]), (1, &[(Var::U, 1), (Var::Z, -1)])]);
        assert_eq!(master_poly(1, 1), want);
        assert_eq!(master_reflected(1, 1, &want), want);
    }

    #[test]
    fn routes_agree_and_are_integral() {
        for m in 1..=2 {
            for n in 0..=3 {
                let a = master_poly(m, n);
                assert_eq!(master_rational(m, n).unwrap().to_poly().unwrap(), a);
                assert!(is_integral(&a));
            }
        }
    }

    #[test]
    fn rank_one_and_roots() {
        for eps in [-1, 0, 1] {
            for m in 1..=3 {
                assert_eq!(cy_zh(eps, &master_poly(m, 1)), cy_zh_rank_one(eps, m));
            }
        }
        // (m, n, r) = (1, 2, 2): 1 + u^2 - t^2
        let want = p(&[(1, &[]), (1, &[(Var::U, 2)]), (-1, &[(Var::T, 2)])]);
        assert_eq!(root_closed_form(1, 2, 2).unwrap(), want);
        let (l, r) = sieve_sides(1, 2, 2).unwrap();
        assert_eq!(l, r);
    }
}
