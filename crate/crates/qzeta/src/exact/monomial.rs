use std::fmt;

use num_traits::{One, Zero};

use super::{rat_pow, Rational};

/// The fixed variable universe. `z` is an independent symbol; the identification
/// `z = q^{-1}` only ever happens through an explicit substitution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q = 0,
    Z = 1,
    T = 2,
    U = 3,
    A = 4,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::Q, Var::Z, Var::T, Var::U, Var::A];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::Z => "z",
            Var::T => "t",
            Var::U => "u",
            Var::A => "a",
        }
    }

    pub fn parse(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

/// Exponent vector over `(q, z, t, u, a)`; ordered lexicographically in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub [i32; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        let mut m = [0; 5];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn from_pairs(pairs: &[(Var, i32)]) -> Self {
        let mut m = [0; 5];
        for &(v, e) in pairs {
            m[v.index()] += e;
        }
        Monomial(m)
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(o.0) {
            *x += y;
        }
        Monomial(m)
    }

    pub fn div(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(o.0) {
            *x -= y;
        }
        Monomial(m)
    }

    pub fn pow(&self, e: i32) -> Monomial {
        Monomial(self.0.map(|x| x * e))
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    pub fn without(&self, v: Var) -> Monomial {
        let mut m = self.0;
        m[v.index()] = 0;
        Monomial(m)
    }

    /// Total degree, used for weighted bookkeeping only.
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// Writes `self = P^k` with `P` primitive and its first nonzero exponent positive.
    /// Returns `None` for the trivial monomial.
    pub fn primitive_root(&self) -> Option<(Monomial, i32)> {
        let g = self.0.iter().fold(0i32, |g, &e| gcd(g, e.abs()));
        if g == 0 {
            return None;
        }
        let p = Monomial(self.0.map(|e| e / g));
        let first = p.0.iter().copied().find(|&e| e != 0).unwrap_or(0);
        if first < 0 {
            Some((p.inv(), -g))
        } else {
            Some((p, g))
        }
    }
}

fn gcd(a: i32, b: i32) -> i32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

/// A monomial with a rational coefficient, `c * m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Rational, mono: Monomial) -> Self {
        Term { coeff, mono }
    }

    pub fn mono(mono: Monomial) -> Self {
        Term { coeff: Rational::one(), mono }
    }

    pub fn var(v: Var) -> Self {
        Term::mono(Monomial::var(v))
    }

    pub fn constant(c: Rational) -> Self {
        Term { coeff: c, mono: Monomial::ONE }
    }

    pub fn mul(&self, o: &Term) -> Term {
        Term { coeff: &self.coeff * &o.coeff, mono: self.mono.mul(&o.mono) }
    }

    /// `self^e`; `None` for a zero coefficient raised to a negative power.
    pub fn pow(&self, e: i32) -> Option<Term> {
        Some(Term { coeff: rat_pow(&self.coeff, e as i64)?, mono: self.mono.pow(e) })
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "{}", self.mono)
        } else if (-self.coeff.clone()).is_one() {
            write!(f, "-{}", self.mono)
        } else {
            write!(f, "{}*{}", self.coeff, self.mono)
        }
    }
}
