use num_traits::{One, Zero};

use super::{Lser, Rational, RationalFn};
use crate::error::{Error, Result};

/// The arithmetic the finite sum families are written against, so one
/// definition serves rational points, truncated series and exact rational
/// functions alike.
pub trait Alg: Clone + Sized {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rational_like(&self, c: Rational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn is_zero_elt(&self) -> bool;

    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    fn one_minus(&self) -> Self {
        self.one_like().sub(self)
    }

    fn one_plus(&self) -> Self {
        self.neg().one_minus()
    }

    fn powi(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.powi(-e);
        }
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    fn scale_int(&self, k: i64) -> Self {
        self.mul(&self.from_rational_like(super::int(k)))
    }

    /// Sum of a batch; implementations may find a shared denominator once.
    fn sum_all(&self, items: &[Self]) -> Self {
        items.iter().fold(self.zero_like(), |acc, x| acc.add(x))
    }
}

impl Alg for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_rational_like(&self, c: Rational) -> Self {
        c
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::PoleAtPoint)
        } else {
            Ok(self.recip())
        }
    }
    fn is_zero_elt(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Alg for Lser {
    fn zero_like(&self) -> Self {
        Lser::zero(self.cap())
    }
    fn one_like(&self) -> Self {
        Lser::one(self.cap())
    }
    fn from_rational_like(&self, c: Rational) -> Self {
        Lser::constant(c, self.cap())
    }
    fn add(&self, o: &Self) -> Self {
        Lser::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Lser::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Lser::mul(self, o)
    }
    fn neg(&self) -> Self {
        Lser::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        Lser::inv(self)
    }
    fn is_zero_elt(&self) -> bool {
        Lser::is_zero(self)
    }
}

impl Alg for RationalFn {
    fn zero_like(&self) -> Self {
        RationalFn::zero()
    }
    fn one_like(&self) -> Self {
        RationalFn::one()
    }
    fn from_rational_like(&self, c: Rational) -> Self {
        RationalFn::from_rational(c)
    }
    fn add(&self, o: &Self) -> Self {
        RationalFn::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RationalFn::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RationalFn::mul(self, o)
    }
    fn neg(&self) -> Self {
        RationalFn::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        RationalFn::inv(self)
    }
    fn is_zero_elt(&self) -> bool {
        RationalFn::is_zero(self)
    }
    fn one_minus(&self) -> Self {
        match self.as_term() {
            Some(t) => RationalFn::one_minus_term(&t),
            None => RationalFn::one().sub(self),
        }
    }
    fn powi(&self, e: i64) -> Result<Self> {
        self.pow(e as i32)
    }
    fn sum_all(&self, items: &[Self]) -> Self {
        RationalFn::sum(items.iter())
    }
}

/// `(a; step)_n = prod_{j<n} (1 - a step^j)`; for `n < 0` this is
/// `1 / (a step^n; step)_{|n|}`, which fails if that product vanishes.
pub fn pochhammer<A: Alg>(a: &A, step: &A, n: i64) -> Result<A> {
    if n >= 0 {
        let mut acc = a.one_like();
        let mut x = a.clone();
        for j in 0..n {
            acc = acc.mul(&x.one_minus());
            if j + 1 < n {
                x = x.mul(step);
            }
        }
        Ok(acc)
    } else {
        let shifted = a.mul(&step.powi(n)?);
        pochhammer(&shifted, step, -n)?.inv()
    }
}

/// `1 / (a; step)_n`. For `n < 0` this is the finite product
/// `(a step^n; step)_{|n|}`, so `1/(q;q)_{-k} = 0` for `k >= 1` comes out naturally.
pub fn pochhammer_inv<A: Alg>(a: &A, step: &A, n: i64) -> Result<A> {
    if n >= 0 {
        pochhammer(a, step, n)?.inv()
    } else {
        let shifted = a.mul(&step.powi(n)?);
        pochhammer(&shifted, step, -n)
    }
}
