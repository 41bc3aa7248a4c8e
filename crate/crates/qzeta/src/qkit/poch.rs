use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{pochhammer, pochhammer_inv, rat_pow, Alg, LaurentPoly, Lser, Monomial, QSeries, Rational, RationalFn, Term, Var};

/// A series-regime parameter `c * q^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QMono {
    pub c: Rational,
    pub d: i64,
}

impl QMono {
    pub fn new(c: Rational, d: i64) -> Self {
        QMono { c, d }
    }

    pub fn q(d: i64) -> Self {
        QMono { c: Rational::one(), d }
    }

    pub fn constant(c: Rational) -> Self {
        QMono { c, d: 0 }
    }

    pub fn zero() -> Self {
        QMono { c: Rational::zero(), d: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn mul(&self, o: &QMono) -> QMono {
        QMono { c: &self.c * &o.c, d: self.d + o.d }
    }

    pub fn div(&self, o: &QMono) -> QMono {
        QMono { c: &self.c / &o.c, d: self.d - o.d }
    }

    pub fn inv(&self) -> QMono {
        QMono { c: self.c.recip(), d: -self.d }
    }

    pub fn neg(&self) -> QMono {
        QMono { c: -self.c.clone(), d: self.d }
    }

    pub fn pow(&self, e: i64) -> QMono {
        QMono { c: rat_pow(&self.c, e).expect("zero parameter to a negative power"), d: self.d * e }
    }

    pub fn shift(&self, k: i64) -> QMono {
        QMono { c: self.c.clone(), d: self.d + k }
    }

    pub fn lser(&self, cap: i64) -> Lser {
        Lser::monomial(self.c.clone(), self.d, cap)
    }

    pub fn term(&self) -> Term {
        Term::new(self.c.clone(), Monomial::var_pow(Var::Q, self.d as i32))
    }

    /// Reads back a term that only involves `q`.
    pub fn from_term(t: &Term) -> Option<QMono> {
        if Var::ALL.iter().any(|&v| v != Var::Q && t.mono.exp(v) != 0) {
            return None;
        }
        Some(QMono { c: t.coeff.clone(), d: t.mono.exp(Var::Q) as i64 })
    }

    /// Whether `1 - self` vanishes.
    pub fn is_one(&self) -> bool {
        self.d == 0 && self.c.is_one()
    }
}

impl fmt::Display for QMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c.is_one(), self.d) {
            (_, 0) => write!(f, "{}", self.c),
            (true, 1) => write!(f, "q"),
            (true, d) => write!(f, "q^{}", d),
            (false, 1) => write!(f, "{}*q", self.c),
            (false, d) => write!(f, "{}*q^{}", self.c, d),
        }
    }
}

/// Length of a Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Length {
    Finite(i64),
    Infinite,
}

/// `(base; step)_length`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PochhammerSpec {
    pub base: Term,
    pub step: Monomial,
    pub length: Length,
}

impl PochhammerSpec {
    pub fn new(base: Term, step: Monomial, length: Length) -> Self {
        PochhammerSpec { base, step, length }
    }

    /// Finite symbols as exact rational functions (a polynomial for length >= 0).
    pub fn symbolic(&self) -> Result<RationalFn> {
        let Length::Finite(n) = self.length else {
            return Err(Error::DivergentSpec("infinite Pochhammer symbol outside the series regime".into()));
        };
        pochhammer(&RationalFn::from_term(&self.base), &RationalFn::mono(self.step), n)
    }

    /// The symbol as a power series in `q`, truncated after `q^order`.
    pub fn series(&self, order: usize) -> Result<QSeries> {
        let base = QMono::from_term(&self.base)
            .ok_or_else(|| Error::Config("series Pochhammer base must only involve q".into()))?;
        let step = QMono::from_term(&Term::mono(self.step))
            .ok_or_else(|| Error::Config("series Pochhammer step must be a power of q".into()))?;
        if step.d < 1 {
            return Err(Error::DivergentSpec("series Pochhammer step must have positive q-degree".into()));
        }
        let mut cap = order as i64 + 1;
        loop {
            let s = match self.length {
                Length::Finite(n) => poch_series(&base, step.d, n, cap)?,
                Length::Infinite => poch_inf(&base, step.d, cap)?,
            };
            match s.to_qseries(order) {
                Err(Error::PrecisionLoss { .. }) if cap < 8 * (order as i64 + 1) => cap *= 2,
                r => return r,
            }
        }
    }
}

/// `(c q^d; q^e)_n` as a series; negative `n` by the standard convention.
pub fn poch_series(a: &QMono, e: i64, n: i64, cap: i64) -> Result<Lser> {
    let step = Lser::monomial(Rational::one(), e, cap);
    pochhammer(&a.lser(cap), &step, n)
}

/// `1 / (c q^d; q^e)_n` as a series.
pub fn poch_inv_series(a: &QMono, e: i64, n: i64, cap: i64) -> Result<Lser> {
    let step = Lser::monomial(Rational::one(), e, cap);
    pochhammer_inv(&a.lser(cap), &step, n).map_err(|err| match err {
        Error::NonUnitSeries => Error::PoleAtPoint,
        other => other,
    })
}

/// `(c q^d; q^e)_inf` truncated: factors `1 - c q^{d+je}` with `d + je >= cap` are 1.
pub fn poch_inf(a: &QMono, e: i64, cap: i64) -> Result<Lser> {
    let mut acc = Lser::one(cap);
    if a.is_zero() {
        return Ok(acc);
    }
    let mut j = 0;
    while a.d + j * e < cap {
        acc = acc.mul(&a.shift(j * e).lser(cap).one_minus());
        j += 1;
    }
    Ok(acc)
}

pub fn poch_inf_inv(a: &QMono, e: i64, cap: i64) -> Result<Lser> {
    poch_inf(a, e, cap)?.inv().map_err(|_| Error::PoleAtPoint)
}

/// Exact q-valuation of `(c q^d; q)_n` for `n >= 0`; `None` when the product vanishes.
pub fn poch_val(a: &QMono, n: i64) -> Option<i64> {
    if a.is_zero() {
        return Some(0);
    }
    let mut v = 0;
    for j in 0..n {
        let k = a.d + j;
        if k == 0 && a.c.is_one() {
            return None;
        }
        v += k.min(0);
    }
    Some(v)
}

/// `(base; step)_n` for symbolic bases, as a polynomial.
pub fn poch_poly(base: &Term, step: Monomial, n: i64) -> LaurentPoly {
    assert!(n >= 0);
    let mut acc = LaurentPoly::one();
    let mut x = base.clone();
    for _ in 0..n {
        acc = &acc * &(LaurentPoly::one() - LaurentPoly::from_term(&x));
        x = x.mul(&Term::mono(step));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, QSeries};

    #[test]
    fn reference_examples() {
        let tq = Term::mono(Monomial::from_pairs(&[(Var::T, 1), (Var::Q, 1)]));
        let p = PochhammerSpec::new(tq.clone(), Monomial::var(Var::Q), Length::Finite(2)).symbolic().unwrap();
        let one = LaurentPoly::one();
        let want = (&one - &LaurentPoly::from_term(&tq))
            * (&one - &LaurentPoly::mono(Monomial::from_pairs(&[(Var::T, 1), (Var::Q, 2)])));
        assert_eq!(p.to_poly().unwrap(), want);
        let e = PochhammerSpec::new(Term::var(Var::A), Monomial::var(Var::Q), Length::Finite(0)).symbolic().unwrap();
        assert_eq!(e.to_poly().unwrap(), LaurentPoly::one());
        // 1/(q^2;q^2)_{-1} = (1;q^2)_1 = 0
        let q2 = RationalFn::mono(Monomial::var_pow(Var::Q, 2));
        assert!(pochhammer_inv(&q2, &q2, -1).unwrap().is_zero());
    }

    #[test]
    fn euler_product_series() {
        // (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - ...
        let s = PochhammerSpec::new(Term::var(Var::Q), Monomial::var(Var::Q), Length::Infinite).series(12).unwrap();
        assert_eq!(s, QSeries::from_ints(12, &[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]));
    }

    #[test]
    fn valuations() {
        assert_eq!(poch_val(&QMono::q(-2), 2), Some(-3));
        assert_eq!(poch_val(&QMono::q(-2), 3), None);
        assert_eq!(poch_val(&QMono::new(int(2), -2), 3), Some(-3));
        assert_eq!(poch_val(&QMono::q(1), 5), Some(0));
    }
}
