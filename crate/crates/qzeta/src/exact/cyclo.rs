use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use super::{LaurentPoly, Monomial, Rational, Var};

/// Integer coefficients of the `d`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_coeffs(d: u32) -> Vec<i64> {
    assert!(d >= 1, "cyclotomic index must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&d) {
        return c.clone();
    }
    // x^d - 1 divided by every Phi_e with e | d, e < d
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in 1..d {
        if d % e == 0 {
            num = div_monic(&num, &cyclotomic_coeffs(e));
        }
    }
    cache.lock().unwrap().insert(d, num.clone());
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; num.len() - dn];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dn];
        quo[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quo
}

pub fn euler_phi(r: u32) -> usize {
    cyclotomic_coeffs(r).len() - 1
}

/// Element of the `r`-th cyclotomic field: a polynomial in `zeta_r` of degree below `phi(r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElt {
    pub r: u32,
    pub coeffs: Vec<Rational>,
}

impl CyclotomicElt {
    pub fn zero(r: u32) -> Self {
        CyclotomicElt { r, coeffs: vec![Rational::zero(); euler_phi(r)] }
    }

    pub fn from_rational(r: u32, c: Rational) -> Self {
        let mut e = Self::zero(r);
        e.coeffs[0] = c;
        e
    }

    pub fn one(r: u32) -> Self {
        Self::from_rational(r, Rational::one())
    }

    /// `zeta_r^k` for any integer `k`.
    pub fn root_power(r: u32, k: i64) -> Self {
        let k = k.rem_euclid(r as i64) as usize;
        let mut raw = vec![Rational::zero(); k + 1];
        raw[k] = Rational::one();
        Self::reduce(r, raw)
    }

    /// Reduces an arbitrary-length coefficient vector modulo `Phi_r`.
    pub fn reduce(r: u32, mut raw: Vec<Rational>) -> Self {
        let phi = cyclotomic_coeffs(r);
        let d = phi.len() - 1;
        while raw.len() > d {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = raw.len() - d;
            for (j, &pc) in phi.iter().take(d).enumerate() {
                if pc != 0 {
                    raw[shift + j] -= &top * Rational::from_integer(pc.into());
                }
            }
        }
        raw.resize(d, Rational::zero());
        CyclotomicElt { r, coeffs: raw }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.r, o.r);
        CyclotomicElt { r: self.r, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn neg(&self) -> Self {
        CyclotomicElt { r: self.r, coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CyclotomicElt { r: self.r, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.r, o.r);
        let n = self.coeffs.len();
        let mut raw = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        Self::reduce(self.r, raw)
    }
}

impl fmt::Display for CyclotomicElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*w", c)?,
                _ => write!(f, "{}*w^{}", c, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Laurent polynomial whose coefficients lie in the `r`-th cyclotomic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycPoly {
    pub r: u32,
    pub terms: BTreeMap<Monomial, CyclotomicElt>,
}

impl CycPoly {
    pub fn zero(r: u32) -> Self {
        CycPoly { r, terms: BTreeMap::new() }
    }

    /// Embeds a rational-coefficient polynomial.
    pub fn from_poly(p: &LaurentPoly, r: u32) -> Self {
        let mut out = Self::zero(r);
        for (m, c) in p.terms() {
            out.add_term(*m, CyclotomicElt::from_rational(r, c.clone()));
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: CyclotomicElt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(|| CyclotomicElt::zero(c.r));
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.neg());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.r);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    /// The rational-coefficient polynomial when every coefficient is rational.
    pub fn to_rational_poly(&self) -> Option<LaurentPoly> {
        let mut items = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            items.push((*m, c.as_rational()?));
        }
        Some(LaurentPoly::from_terms(items))
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({})*{}", c, m)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Substitutes `var -> zeta_r`, reducing exponents mod `r` and then mod `Phi_r`.
/// The other variables stay symbolic.
pub fn eval_cyclotomic(x: &LaurentPoly, var: Var, r: u32) -> CycPoly {
    let mut out = CycPoly::zero(r);
    for (m, c) in x.terms() {
        let e = m.exp(var) as i64;
        out.add_term(m.without(var), CyclotomicElt::root_power(r, e).scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_coeffs(1), vec![-1, 1]);
        assert_eq!(cyclotomic_coeffs(2), vec![1, 1]);
        assert_eq!(cyclotomic_coeffs(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_coeffs(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_coeffs(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_coeffs(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(105), 48);
        // Phi_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_coeffs(105).contains(&-2));
    }

    #[test]
    fn reference_examples() {
        let zi = LaurentPoly::mono(Monomial::var_pow(Var::Z, -1));
        let got = eval_cyclotomic(&zi, Var::Z, 1);
        assert_eq!(got.to_rational_poly().unwrap(), LaurentPoly::one());

        let m = LaurentPoly::one() - LaurentPoly::var(Var::T)
            + LaurentPoly::mono(Monomial::from_pairs(&[(Var::U, 1), (Var::Z, -1)]));
        let want = LaurentPoly::one() - LaurentPoly::var(Var::T) + LaurentPoly::var(Var::U);
        assert_eq!(eval_cyclotomic(&m, Var::Z, 1).to_rational_poly().unwrap(), want);

        let p = LaurentPoly::univariate(Var::Z, &[1, 1, 1]);
        assert!(eval_cyclotomic(&p, Var::Z, 3).is_zero());
    }

    #[test]
    fn root_powers_multiply() {
        for r in 1..=12u32 {
            for a in -5..5i64 {
                for b in -5..5i64 {
                    let lhs = CyclotomicElt::root_power(r, a).mul(&CyclotomicElt::root_power(r, b));
                    assert_eq!(lhs, CyclotomicElt::root_power(r, a + b));
                }
            }
        }
    }

    #[test]
    fn sum_of_roots_vanishes() {
        for r in 2..=12u32 {
            let mut acc = CyclotomicElt::zero(r);
            for k in 0..r as i64 {
                acc = acc.add(&CyclotomicElt::root_power(r, k));
            }
            assert!(acc.is_zero(), "r = {}", r);
        }
        assert_eq!(CyclotomicElt::root_power(1, 7).as_rational(), Some(int(1)));
    }
}
