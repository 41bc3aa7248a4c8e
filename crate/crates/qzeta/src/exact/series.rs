use std::fmt;

use num_traits::{One, Zero};

use super::{LaurentPoly, Rational, Term, Var};
use crate::error::{Error, Result};

/// Absolute precision of an exactly known series.
pub const EXACT: i64 = i64::MAX;

/// Truncated Laurent series in `q` with tracked absolute precision: the value is
/// known modulo `O(q^prec)`. Results never carry terms at or beyond `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lser {
    val: i64,
    coeffs: Vec<Rational>,
    prec: i64,
    cap: i64,
}

fn sat_add(a: i64, b: i64) -> i64 {
    if a == EXACT || b == EXACT {
        EXACT
    } else {
        a.saturating_add(b)
    }
}

impl Lser {
    pub fn zero(cap: i64) -> Self {
        Lser { val: 0, coeffs: Vec::new(), prec: EXACT, cap }
    }

    pub fn one(cap: i64) -> Self {
        Self::constant(Rational::one(), cap)
    }

    pub fn constant(c: Rational, cap: i64) -> Self {
        Self::monomial(c, 0, cap)
    }

    /// `c * q^d`.
    pub fn monomial(c: Rational, d: i64, cap: i64) -> Self {
        Self::from_coeffs(d, vec![c], EXACT, cap)
    }

    /// Series whose coefficient of `q^(val+i)` is `coeffs[i]`, known to `O(q^prec)`.
    pub fn from_coeffs(val: i64, coeffs: Vec<Rational>, prec: i64, cap: i64) -> Self {
        let mut s = Lser { val, coeffs, prec, cap };
        s.normalize();
        s
    }

    /// A polynomial in `q` alone.
    pub fn from_poly(p: &LaurentPoly, cap: i64) -> Result<Self> {
        let Some((lo, hi)) = p.exponent_bounds() else {
            return Ok(Self::zero(cap));
        };
        for v in Var::ALL {
            if v != Var::Q && (lo[v.index()] != 0 || hi[v.index()] != 0) {
                return Err(Error::Config(format!("series operand still depends on {}", v.name())));
            }
        }
        let val = lo[0] as i64;
        let mut coeffs = vec![Rational::zero(); (hi[0] - lo[0]) as usize + 1];
        for (m, c) in p.terms() {
            coeffs[(m.exp(Var::Q) - lo[0]) as usize] = c.clone();
        }
        Ok(Self::from_coeffs(val, coeffs, EXACT, cap))
    }

    pub fn from_term(t: &Term, cap: i64) -> Result<Self> {
        Self::from_poly(&LaurentPoly::from_term(t), cap)
    }

    fn normalize(&mut self) {
        let limit = self.prec.min(self.cap);
        if limit != EXACT {
            let keep = (limit - self.val).max(0) as usize;
            if self.coeffs.len() > keep {
                self.coeffs.truncate(keep);
            }
        }
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.val = 0;
            }
            Some(i) => {
                self.coeffs.drain(..i);
                self.val += i as i64;
                while self.coeffs.last().is_some_and(|c| c.is_zero()) {
                    self.coeffs.pop();
                }
            }
        }
        if self.prec == EXACT && self.max_exp().is_some_and(|e| e >= self.cap) {
            self.prec = self.cap;
            self.normalize();
        }
    }

    fn max_exp(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.val + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec == EXACT
    }

    /// Valuation; for a zero series this is its precision.
    pub fn val(&self) -> i64 {
        if self.coeffs.is_empty() {
            self.prec
        } else {
            self.val
        }
    }

    /// Zero to the known precision.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> Rational {
        if k < self.val || k >= self.val + self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[(k - self.val) as usize].clone()
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() && self.prec == EXACT {
            return o.with_cap(self.cap.min(o.cap));
        }
        if o.is_zero() && o.prec == EXACT {
            return self.with_cap(self.cap.min(o.cap));
        }
        let cap = self.cap.min(o.cap);
        let prec = self.prec.min(o.prec);
        let lo = self.val().min(o.val()).min(prec.min(cap));
        let hi = [self.max_exp(), o.max_exp()].into_iter().flatten().max().unwrap_or(lo);
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1).max(0) as usize];
        for s in [self, o] {
            for (i, c) in s.coeffs.iter().enumerate() {
                let k = s.val + i as i64;
                if k < prec.min(cap) {
                    coeffs[(k - lo) as usize] += c;
                }
            }
        }
        Self::from_coeffs(lo, coeffs, prec, cap)
    }

    fn with_cap(&self, cap: i64) -> Self {
        let mut s = self.clone();
        s.cap = cap;
        s.normalize();
        s
    }

    pub fn neg(&self) -> Self {
        Lser { val: self.val, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(), prec: self.prec, cap: self.cap }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Lser { val: 0, coeffs: Vec::new(), prec: self.prec, cap: self.cap };
        }
        Lser { val: self.val, coeffs: self.coeffs.iter().map(|x| x * c).collect(), prec: self.prec, cap: self.cap }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cap = self.cap.min(o.cap);
        let prec = sat_add(self.prec, o.val()).min(sat_add(o.prec, self.val()));
        if self.is_zero() || o.is_zero() {
            return Lser { val: 0, coeffs: Vec::new(), prec, cap };
        }
        let val = self.val + o.val;
        let limit = prec.min(cap);
        let n = ((self.coeffs.len() + o.coeffs.len() - 1) as i64).min((limit - val).max(0)) as usize;
        let mut coeffs = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= n {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(val, coeffs, prec, cap)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NonUnitSeries);
        }
        let v = self.val;
        if self.coeffs.len() == 1 && self.prec == EXACT {
            return Ok(Self::monomial(self.coeffs[0].recip(), -v, self.cap));
        }
        let prec = if self.prec == EXACT { self.cap } else { (self.prec - 2 * v).min(self.cap) };
        let n = (prec + v).max(0) as usize;
        let c0inv = self.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = if k == 0 { Rational::one() } else { Rational::zero() };
            for j in 1..=k.min(self.coeffs.len() - 1) {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc -= a * &out[k - j];
                }
            }
            out.push(acc * &c0inv);
        }
        Ok(Self::from_coeffs(-v, out, prec, self.cap))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::one(self.cap);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Coefficients of `q^lo..=q^hi`, failing if the precision does not reach `hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Result<Vec<Rational>> {
        if self.prec <= hi {
            return Err(Error::PrecisionLoss { known: self.prec, needed: hi + 1 });
        }
        Ok((lo..=hi).map(|k| self.coeff(k)).collect())
    }

    /// Coefficients of `q^0..=q^order`; fails if a negative power survives or
    /// the precision does not reach `order`.
    pub fn to_qseries(&self, order: usize) -> Result<QSeries> {
        if !self.is_zero() && self.val < 0 {
            return Err(Error::NegativeExponent(self.val));
        }
        if self.prec <= order as i64 {
            return Err(Error::PrecisionLoss { known: self.prec, needed: order as i64 + 1 });
        }
        Ok(QSeries::from_fn(order, |k| self.coeff(k as i64)))
    }
}

impl fmt::Display for Lser {
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
            write!(f, "{}*q^{}", c, self.val + i as i64)?;
        }
        if first {
            write!(f, "0")?;
        }
        if self.prec != EXACT {
            write!(f, " + O(q^{})", self.prec)?;
        }
        Ok(())
    }
}

/// Power series in `q` truncated after `q^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    pub order: usize,
    pub coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { order, coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn from_fn<F: FnMut(usize) -> Rational>(order: usize, f: F) -> Self {
        QSeries { order, coeffs: (0..=order).map(f).collect() }
    }

    /// Integer coefficients, padded or cut to `order`.
    pub fn from_ints(order: usize, xs: &[i64]) -> Self {
        Self::from_fn(order, |k| xs.get(k).map(|&x| super::int(x)).unwrap_or_else(Rational::zero))
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        Self::from_fn(order, |k| &self.coeffs[k] + &o.coeffs[k])
    }

    pub fn sub(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        Self::from_fn(order, |k| &self.coeffs[k] - &o.coeffs[k])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out.coeffs[i + j] += &self.coeffs[i] * &o.coeffs[j];
            }
        }
        out
    }

    pub fn to_lser(&self) -> Lser {
        Lser::from_coeffs(0, self.coeffs.clone(), self.order as i64 + 1, self.order as i64 + 1)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Substitutes `params` (non-`q` variables to terms in `q`) and truncates at `order`.
pub fn series_from_poly(x: &LaurentPoly, params: &[(Var, Term)], order: usize) -> Result<QSeries> {
    let p = x.try_subst(params)?;
    let s = Lser::from_poly(&p, EXACT)?;
    if !s.is_zero() && s.val() < 0 {
        return Err(Error::NegativeExponent(s.val()));
    }
    Ok(QSeries::from_fn(order, |k| s.coeff(k as i64)))
}

pub fn series_invert(x: &QSeries) -> Result<QSeries> {
    if x.coeffs[0].is_zero() {
        return Err(Error::NonUnitSeries);
    }
    x.to_lser().inv()?.to_qseries(x.order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Monomial};

    #[test]
    fn series_from_poly_examples() {
        let p = LaurentPoly::one() + LaurentPoly::mono(Monomial::from_pairs(&[(Var::T, 1), (Var::Q, 1)]));
        let s = series_from_poly(&p, &[(Var::T, Term::constant(int(3)))], 5).unwrap();
        assert_eq!(s, QSeries::from_ints(5, &[1, 3, 0, 0, 0, 0]));

        let p = LaurentPoly::mono(Monomial::from_pairs(&[(Var::U, 1), (Var::Z, -1)]));
        let s = series_from_poly(
            &p,
            &[(Var::Z, Term::var(Var::Q)), (Var::U, Term::mono(Monomial::var_pow(Var::Q, 2)))],
            4,
        )
        .unwrap();
        assert_eq!(s, QSeries::from_ints(4, &[0, 1]));

        let p = LaurentPoly::mono(Monomial::from_pairs(&[(Var::T, 2), (Var::Z, -1)]));
        let r = series_from_poly(&p, &[(Var::T, Term::constant(int(1))), (Var::Z, Term::var(Var::Q))], 4);
        assert_eq!(r, Err(Error::NegativeExponent(-1)));
    }

    #[test]
    fn invert_examples() {
        let x = QSeries::from_ints(3, &[1, -1]);
        assert_eq!(series_invert(&x).unwrap(), QSeries::from_ints(3, &[1, 1, 1, 1]));
        assert_eq!(series_invert(&QSeries::one(3)).unwrap(), QSeries::one(3));
        assert_eq!(series_invert(&QSeries::from_ints(3, &[0, 1])), Err(Error::NonUnitSeries));
    }

    #[test]
    fn precision_tracking() {
        let cap = 20;
        // q^-3 * (1/(1-q)) loses nothing relative to the cap bookkeeping
        let g = Lser::from_coeffs(0, vec![int(1), int(-1)], EXACT, cap).inv().unwrap();
        assert_eq!(g.prec(), cap);
        let shifted = g.mul(&Lser::monomial(int(1), -3, cap));
        assert_eq!(shifted.prec(), cap - 3);
        assert_eq!(shifted.coeff(-3), int(1));
        assert!(matches!(shifted.to_qseries(5), Err(Error::NegativeExponent(-3))));
        let back = shifted.mul(&Lser::monomial(int(1), 3, cap));
        assert_eq!(back.prec(), cap);
        assert_eq!(back.to_qseries(10).unwrap(), QSeries::from_ints(10, &[1; 11]));
        assert!(matches!(back.to_qseries(25), Err(Error::PrecisionLoss { .. })));
    }

    #[test]
    fn inverse_of_non_monomial_with_valuation() {
        let cap = 12;
        let x = Lser::from_coeffs(2, vec![int(1), int(-1)], EXACT, cap);
        let y = x.inv().unwrap();
        let one = x.mul(&y);
        assert_eq!(one.coeff(0), int(1));
        for k in 1..one.prec() {
            assert_eq!(one.coeff(k), int(0));
        }
    }
}
