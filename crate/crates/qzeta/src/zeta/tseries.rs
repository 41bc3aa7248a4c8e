use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, Monomial, RationalFn, Var};

/// Power series in `t` truncated after `t^deg`, with Laurent-polynomial coefficients in `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSeries {
    pub deg: usize,
    pub coeffs: Vec<LaurentPoly>,
}

impl TSeries {
    pub fn one(deg: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); deg + 1];
        coeffs[0] = LaurentPoly::one();
        TSeries { deg, coeffs }
    }

    /// Splits a polynomial in `t, z` by powers of `t`.
    pub fn from_poly(p: &LaurentPoly, deg: usize) -> Result<Self> {
        let mut coeffs = vec![LaurentPoly::zero(); deg + 1];
        for (m, c) in p.terms() {
            if [Var::Q, Var::U, Var::A].iter().any(|&v| m.exp(v) != 0) {
                return Err(Error::Config(format!("t-series coefficients must only involve z, got {}", p)));
            }
            let k = m.exp(Var::T);
            if k < 0 {
                return Err(Error::NegativeExponent(k as i64));
            }
            if (k as usize) <= deg {
                coeffs[k as usize].add_term(m.without(Var::T), c.clone());
            }
        }
        Ok(TSeries { deg, coeffs })
    }

    /// Expands a rational function whose denominator has a unit monomial as its `t^0` part.
    pub fn from_rational(f: &RationalFn, deg: usize) -> Result<Self> {
        let num = Self::from_poly(&f.numerator(), deg)?;
        let den = Self::from_poly(&f.denominator(), deg)?;
        Ok(num.mul(&den.inv()?))
    }

    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let deg = self.deg.min(o.deg);
        let mut coeffs = vec![LaurentPoly::zero(); deg + 1];
        for i in 0..=deg {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=deg - i {
                coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &o.coeffs[j]);
            }
        }
        TSeries { deg, coeffs }
    }

    pub fn inv(&self) -> Result<Self> {
        let c0 = self.coeffs[0].as_term().filter(|t| crate::exact::is_unit_sign(&t.coeff)).ok_or(Error::NonUnitSeries)?;
        let c0_inv = LaurentPoly::term(c0.coeff.recip(), c0.mono.pow(-1));
        let mut out = vec![LaurentPoly::zero(); self.deg + 1];
        out[0] = c0_inv.clone();
        for k in 1..=self.deg {
            let mut acc = LaurentPoly::zero();
            for j in 1..=k {
                acc = &acc + &(&self.coeffs[j] * &out[k - j]);
            }
            out[k] = -(&c0_inv * &acc);
        }
        Ok(TSeries { deg: self.deg, coeffs: out })
    }

    /// Drops every `z^e` with `e >= e_max`.
    pub fn coeff_below(&self, k: usize, e_max: i32) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs[k].terms().filter(|(m, _)| m.exp(Var::Z) < e_max).map(|(m, c)| (*m, c.clone())),
        )
    }
}

pub(crate) fn z_pow(e: i32) -> Monomial {
    Monomial::var_pow(Var::Z, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Term;

    #[test]
    fn geometric_inverse() {
        // 1 / (1 - t z) = sum t^k z^k
        let f = LaurentPoly::one() - LaurentPoly::mono(Monomial::from_pairs(&[(Var::T, 1), (Var::Z, 1)]));
        let s = TSeries::from_poly(&f, 5).unwrap().inv().unwrap();
        for k in 0..=5 {
            assert_eq!(s.coeff(k), &LaurentPoly::mono(z_pow(k as i32)));
        }
        let r = RationalFn::one_minus_term(&Term::mono(Monomial::var(Var::T))).inv().unwrap();
        let s = TSeries::from_rational(&r, 3).unwrap();
        assert!(s.coeffs.iter().all(|c| c.is_one()));
    }
}
