//! Exact arithmetic kernel.
//!
//! Everything here is exact: rationals are `BigRational`, polynomials are sparse
//! Laurent polynomials in the fixed variables `q, z, t, u, a`, and rational
//! functions keep their denominators as products of cyclotomic-style factors so
//! that sums can be put over a common denominator without gcd computations.

mod alg;
mod cyclo;
mod monomial;
mod points;
mod poly;
mod ratfn;
mod series;

pub use alg::{Alg, pochhammer, pochhammer_inv};
pub use cyclo::{cyclotomic_coeffs, eval_cyclotomic, CycPoly, CyclotomicElt};
pub use monomial::{Monomial, Term, Var};
pub use points::PointSampler;
pub use poly::LaurentPoly;
pub use ratfn::{rf_equal, Atom, RationalFn};
pub use series::{series_from_poly, series_invert, Lser, QSeries, EXACT};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `x^e` for a rational `x` and any integer `e`; `None` when `x = 0` and `e < 0`.
pub fn rat_pow(x: &Rational, e: i64) -> Option<Rational> {
    if e == 0 {
        return Some(Rational::one());
    }
    if x.is_zero() {
        return if e > 0 { Some(Rational::zero()) } else { None };
    }
    let base = if e < 0 { x.recip() } else { x.clone() };
    Some(num_traits::pow::pow(base, e.unsigned_abs() as usize))
}

/// Decimal numerator and denominator strings, the wire format for rationals.
pub fn rat_strings(x: &Rational) -> (String, String) {
    (x.numer().to_string(), x.denom().to_string())
}

pub fn parse_rat(num: &str, den: &str) -> Option<Rational> {
    let n: BigInt = num.trim().parse().ok()?;
    let d: BigInt = den.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Parses `"3"`, `"-1/2"` style literals.
pub fn parse_rat_literal(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => parse_rat(n, d),
        None => parse_rat(s, "1"),
    }
}

pub(crate) fn is_unit_sign(x: &Rational) -> bool {
    x.is_integer() && x.numer().abs().is_one()
}
