use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat_pow, Monomial, Rational, Term, Var};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial over the rationals in `q, z, t, u, a`.
/// No zero coefficient is ever stored, so structural equality is equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(super::int(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn mono(m: Monomial) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_term(t: &Term) -> Self {
        Self::term(t.coeff.clone(), t.mono)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    /// Univariate polynomial `sum_i coeffs[i] * v^i`.
    pub fn univariate(v: Var, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs.iter().enumerate().map(|(i, &c)| (Monomial::var_pow(v, i as i32), super::int(c))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::ONE)
    }

    /// The single term when this is a nonzero monomial.
    pub fn as_term(&self) -> Option<Term> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some(Term::new(c.clone(), *m))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        self.as_term().filter(|t| t.mono.is_one()).map(|t| t.coeff)
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<(Monomial, Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))
    }

    /// Lexicographically smallest term.
    pub fn trailing(&self) -> Option<(Monomial, Rational)> {
        self.terms.iter().next().map(|(m, c)| (*m, c.clone()))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_term(&self, t: &Term) -> Self {
        if t.coeff.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (m.mul(&t.mono), x * &t.coeff)).collect(),
        }
    }

    pub fn mul_mono(&self, mono: &Monomial) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (m.mul(mono), x.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Per-variable (min, max) exponents; `None` for the zero polynomial.
    pub fn exponent_bounds(&self) -> Option<([i32; 5], [i32; 5])> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (mut lo, mut hi) = (first.0, first.0);
        for m in it {
            for i in 0..5 {
                lo[i] = lo[i].min(m.0[i]);
                hi[i] = hi[i].max(m.0[i]);
            }
        }
        Some((lo, hi))
    }

    pub fn min_exp(&self, v: Var) -> Option<i32> {
        self.exponent_bounds().map(|(lo, _)| lo[v.index()])
    }

    pub fn max_exp(&self, v: Var) -> Option<i32> {
        self.exponent_bounds().map(|(_, hi)| hi[v.index()])
    }

    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exp(v) == 0)
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == k)
                .map(|(m, c)| (m.without(v), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / y`. Fails with `NonExactDivision` when `y` does not
    /// divide `self` in the Laurent ring.
    ///
    /// Division runs on lexicographic leading terms. For an exact quotient the
    /// exponent of every variable is confined to `[min_x - min_y, max_x - max_y]`,
    /// and quotient terms come out strictly decreasing, so leaving that box
    /// certifies non-divisibility and guarantees termination.
    pub fn exact_div(&self, y: &LaurentPoly) -> Result<LaurentPoly> {
        if y.is_zero() {
            return Err(Error::NonExactDivision("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(t) = y.as_term() {
            let inv = Term::new(t.coeff.recip(), t.mono.inv());
            return Ok(self.mul_term(&inv));
        }
        let (xlo, xhi) = self.exponent_bounds().unwrap();
        let (ylo, yhi) = y.exponent_bounds().unwrap();
        let mut lo = [0; 5];
        let mut hi = [0; 5];
        for i in 0..5 {
            lo[i] = xlo[i] - ylo[i];
            hi[i] = xhi[i] - yhi[i];
            if lo[i] > hi[i] {
                return Err(non_exact(self, y));
            }
        }
        let (ylm, ylc) = y.leading().unwrap();
        let mut rem = self.clone();
        let mut quo = LaurentPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(&ylm);
            if (0..5).any(|i| qm.0[i] < lo[i] || qm.0[i] > hi[i]) {
                return Err(non_exact(self, y));
            }
            let qc = c / &ylc;
            for (ym, yc) in y.terms.iter() {
                rem.add_term(ym.mul(&qm), -(yc * &qc));
            }
            quo.add_term(qm, qc);
        }
        Ok(quo)
    }

    /// Simultaneous substitution of variables by monomials with coefficients.
    /// Panics if a zero coefficient meets a negative exponent; use
    /// [`LaurentPoly::try_subst`] when that can happen.
    pub fn subst(&self, rules: &[(Var, Term)]) -> Self {
        self.try_subst(rules).expect("substitution of zero into a negative power")
    }

    pub fn try_subst(&self, rules: &[(Var, Term)]) -> Result<Self> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let (coeff, mono) = subst_monomial_parts(m, rules)?;
            out.add_term(mono, c * coeff);
        }
        Ok(out)
    }

    /// Single-variable substitution `var -> value`.
    pub fn subst_monomial(&self, var: Var, value: &Term) -> Self {
        self.subst(&[(var, value.clone())])
    }

    /// Substitutes rational values for some variables, leaving the others symbolic.
    pub fn subst_values(&self, point: &[(Var, Rational)]) -> Result<Self> {
        let rules: Vec<(Var, Term)> =
            point.iter().map(|(v, x)| (*v, Term::constant(x.clone()))).collect();
        self.try_subst(&rules)
    }

    /// Full evaluation; every variable present must be assigned.
    pub fn eval(&self, point: &[(Var, Rational)]) -> Result<Rational> {
        let p = self.subst_values(point)?;
        p.as_constant().ok_or_else(|| {
            Error::Config(format!("evaluation point leaves variables unassigned in {}", p))
        })
    }

    pub fn map_coeffs<F: Fn(&Rational) -> Rational>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

pub(crate) fn subst_monomial_parts(m: &Monomial, rules: &[(Var, Term)]) -> Result<(Rational, Monomial)> {
    let mut coeff = Rational::one();
    // strip every substituted variable first so the rules act simultaneously
    let mut mono = rules.iter().fold(*m, |acc, (v, _)| acc.without(*v));
    for (v, val) in rules {
        let e = m.exp(*v);
        if e == 0 {
            continue;
        }
        coeff *= rat_pow(&val.coeff, e as i64).ok_or(Error::PoleAtPoint)?;
        mono = mono.mul(&val.mono.pow(e));
    }
    Ok((coeff, mono))
}

fn non_exact(x: &LaurentPoly, y: &LaurentPoly) -> Error {
    let show = |p: &LaurentPoly| {
        let s = p.to_string();
        if s.len() > 120 {
            format!("{}... ({} terms)", &s[..120], p.len())
        } else {
            s
        }
    };
    Error::NonExactDivision(format!("({}) / ({})", show(x), show(y)))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let t = Term::new(c.clone(), *m).to_string();
            if i == 0 {
                write!(f, "{}", t)?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", t)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some(t) = o.as_term() {
            return self.mul_term(&t);
        }
        if let Some(t) = self.as_term() {
            return o.mul_term(&t);
        }
        let mut acc: std::collections::HashMap<Monomial, Rational> =
            std::collections::HashMap::with_capacity(self.len() * o.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let e = acc.entry(m1.mul(m2)).or_insert_with(Rational::zero);
                *e += c1 * c2;
            }
        }
        LaurentPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: &LaurentPoly) -> LaurentPoly {
                (&self).$f(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn q() -> LaurentPoly {
        LaurentPoly::var(Var::Q)
    }

    fn one_minus(p: &LaurentPoly) -> LaurentPoly {
        &LaurentPoly::one() - p
    }

    fn qfact(n: i32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for j in 1..=n {
            acc = acc * one_minus(&LaurentPoly::mono(Monomial::var_pow(Var::Q, j)));
        }
        acc
    }

    #[test]
    fn difference_of_squares() {
        let p = one_minus(&q()) * (LaurentPoly::one() + q());
        assert_eq!(p, one_minus(&(q() * q())));
    }

    #[test]
    fn additive_identity() {
        let x = q() + LaurentPoly::var(Var::T);
        assert_eq!(&x + &LaurentPoly::zero(), x);
    }

    #[test]
    fn laurent_exponent_cancellation() {
        let uzi = LaurentPoly::mono(Monomial::from_pairs(&[(Var::U, 1), (Var::Z, -1)]));
        assert_eq!(uzi * LaurentPoly::var(Var::Z), LaurentPoly::var(Var::U));
    }

    #[test]
    fn exact_div_simple() {
        let num = one_minus(&(q() * q()));
        let got = num.exact_div(&one_minus(&q())).unwrap();
        assert_eq!(got, LaurentPoly::one() + q());
    }

    #[test]
    fn exact_div_gaussian_binomial() {
        let b = qfact(4).exact_div(&(qfact(2) * qfact(2))).unwrap();
        assert_eq!(b, LaurentPoly::univariate(Var::Q, &[1, 1, 2, 1, 1]));
        assert_eq!(b.eval(&[(Var::Q, int(2))]).unwrap(), int(35));
    }

    #[test]
    fn exact_div_rejects() {
        let num = one_minus(&LaurentPoly::mono(Monomial::var_pow(Var::Q, 3)));
        let den = one_minus(&LaurentPoly::mono(Monomial::var_pow(Var::Q, 2)));
        assert!(matches!(num.exact_div(&den), Err(Error::NonExactDivision(_))));
    }

    #[test]
    fn exact_div_multivariate_laurent() {
        let a = LaurentPoly::var(Var::T) - LaurentPoly::mono(Monomial::from_pairs(&[(Var::Z, -2)]));
        let b = LaurentPoly::one() + LaurentPoly::mono(Monomial::from_pairs(&[(Var::U, 1), (Var::Z, 3)]));
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
    }

    #[test]
    fn substitutions() {
        let p = LaurentPoly::one() + q();
        let tq = Term::mono(Monomial::from_pairs(&[(Var::T, 1), (Var::Q, 1)]));
        assert_eq!(p.subst_monomial(Var::Q, &tq), LaurentPoly::one() + LaurentPoly::from_term(&tq));
        let n = 3;
        let p = LaurentPoly::mono(Monomial::from_pairs(&[(Var::T, 2), (Var::Z, 1)]));
        let rule = Term::mono(Monomial::from_pairs(&[(Var::T, 1), (Var::Z, n)]));
        assert_eq!(
            p.subst_monomial(Var::T, &rule),
            LaurentPoly::mono(Monomial::from_pairs(&[(Var::T, 2), (Var::Z, 2 * n + 1)]))
        );
        let p = LaurentPoly::mono(Monomial::from_pairs(&[(Var::A, 1), (Var::T, 2)]));
        let got = p.subst_monomial(Var::A, &Term::constant(int(-1)));
        assert_eq!(got, -LaurentPoly::mono(Monomial::var_pow(Var::T, 2)));
    }

    #[test]
    fn simultaneous_substitution() {
        // u -> t, t -> u swaps rather than collapsing
        let p = LaurentPoly::var(Var::U) + LaurentPoly::var(Var::T).scale(&int(2));
        let got = p.subst(&[(Var::U, Term::var(Var::T)), (Var::T, Term::var(Var::U))]);
        assert_eq!(got, LaurentPoly::var(Var::T) + LaurentPoly::var(Var::U).scale(&int(2)));
        // u -> t^2, t -> -t on u*t keeps both contributions
        let ut = LaurentPoly::mono(Monomial::from_pairs(&[(Var::U, 1), (Var::T, 1)]));
        let got = ut.subst(&[
            (Var::U, Term::mono(Monomial::var_pow(Var::T, 2))),
            (Var::T, Term::new(int(-1), Monomial::var(Var::T))),
        ]);
        assert_eq!(got, -LaurentPoly::mono(Monomial::var_pow(Var::T, 3)));
    }

    #[test]
    fn evaluation() {
        let p = LaurentPoly::univariate(Var::Q, &[1, -3, 2]);
        assert_eq!(p.eval(&[(Var::Q, rat(1, 2))]).unwrap(), int(0));
        let inv = LaurentPoly::mono(Monomial::var_pow(Var::Q, -1));
        assert_eq!(inv.eval(&[(Var::Q, int(0))]), Err(Error::PoleAtPoint));
    }
}
