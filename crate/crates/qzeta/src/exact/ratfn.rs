use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use super::{cyclotomic_coeffs, int, is_unit_sign, LaurentPoly, Monomial, Rational, Term, Var};
use crate::error::{Error, Result};

/// An irreducible-ish factor kept unexpanded in a [`RationalFn`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `Phi_d(base)` with `base` primitive and its first nonzero exponent positive.
    Cyc { d: u32, base: Monomial },
    /// Any other nonzero polynomial, scaled so its lexicographically smallest term is `1`.
    Gen(LaurentPoly),
}

impl Atom {
    pub fn expand(&self) -> LaurentPoly {
        match self {
            Atom::Cyc { d, base } => LaurentPoly::from_terms(
                cyclotomic_coeffs(*d)
                    .into_iter()
                    .enumerate()
                    .map(|(i, c)| (base.pow(i as i32), int(c))),
            ),
            Atom::Gen(p) => p.clone(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyc { d, base } => write!(f, "Phi{}({})", d, base),
            Atom::Gen(p) => write!(f, "({})", p),
        }
    }
}

/// Rational function stored as `poly * prod atom^e` with signed exponents.
///
/// Pochhammer-style factors `1 - c*M` with `c = ±1` are split into cyclotomic
/// atoms on construction, so products of Pochhammer symbols cancel by exponent
/// arithmetic and sums find a common denominator by taking minimal exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn {
    poly: LaurentPoly,
    atoms: BTreeMap<Atom, i32>,
}

pub fn rf_equal(x: &RationalFn, y: &RationalFn) -> bool {
    x.sub(y).is_zero()
}

impl RationalFn {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(poly: LaurentPoly) -> Self {
        RationalFn { poly, atoms: BTreeMap::new() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_term(t: &Term) -> Self {
        Self::from_poly(LaurentPoly::from_term(t))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn mono(m: Monomial) -> Self {
        Self::from_poly(LaurentPoly::mono(m))
    }

    /// A polynomial, factored into atoms where it is recognisably cyclotomic.
    pub fn from_factored(p: &LaurentPoly) -> Self {
        let (poly, atoms) = factor_poly(p);
        let mut out = RationalFn { poly, atoms: BTreeMap::new() };
        for (a, e) in atoms {
            out.push_atom(a, e);
        }
        out
    }

    /// `1 - c*M`, factored.
    pub fn one_minus_term(t: &Term) -> Self {
        if t.is_zero() {
            return Self::one();
        }
        if t.mono.is_one() {
            return Self::from_rational(Rational::one() - &t.coeff);
        }
        if !is_unit_sign(&t.coeff) {
            return Self::from_factored(&(LaurentPoly::one() - LaurentPoly::from_term(t)));
        }
        let (unit, atoms) = binomial_atoms(&t.coeff, &t.mono);
        let mut out = RationalFn::from_term(&unit);
        for (a, e) in atoms {
            out.push_atom(a, e);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn poly_part(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&Atom, &i32)> {
        self.atoms.iter()
    }

    /// The single term when this is `c*M` with no atoms.
    pub fn as_term(&self) -> Option<Term> {
        if self.atoms.is_empty() {
            self.poly.as_term()
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.atoms.is_empty() {
            self.poly.as_constant()
        } else {
            None
        }
    }

    fn push_atom(&mut self, a: Atom, e: i32) {
        if e == 0 {
            return;
        }
        let slot = self.atoms.entry(a.clone()).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.atoms.remove(&a);
        }
    }

    /// Numerator polynomial: the stored polynomial times all positive atom powers.
    pub fn numerator(&self) -> LaurentPoly {
        let mut p = self.poly.clone();
        for (a, &e) in &self.atoms {
            if e > 0 {
                p = p * a.expand().pow(e as u32);
            }
        }
        p
    }

    /// Denominator polynomial: the product of all negative atom powers.
    pub fn denominator(&self) -> LaurentPoly {
        let mut p = LaurentPoly::one();
        for (a, &e) in &self.atoms {
            if e < 0 {
                p = p * a.expand().pow((-e) as u32);
            }
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = RationalFn { poly: &self.poly * &o.poly, atoms: self.atoms.clone() };
        for (a, &e) in &o.atoms {
            out.push_atom(a.clone(), e);
        }
        out
    }

    pub fn neg(&self) -> Self {
        RationalFn { poly: -&self.poly, atoms: self.atoms.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFn { poly: self.poly.scale(c), atoms: self.atoms.clone() }
    }

    pub fn mul_term(&self, t: &Term) -> Self {
        if t.is_zero() {
            return Self::zero();
        }
        RationalFn { poly: self.poly.mul_term(t), atoms: self.atoms.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NonExactDivision("inverse of zero".into()));
        }
        let (poly, factors) = factor_poly(&self.poly);
        let unit = poly.as_term().expect("factor_poly leaves a unit");
        let inv_unit = Term::new(unit.coeff.recip(), unit.mono.inv());
        let mut out = RationalFn::from_term(&inv_unit);
        for (a, &e) in &self.atoms {
            out.push_atom(a.clone(), -e);
        }
        for (a, e) in factors {
            out.push_atom(a, -e);
        }
        Ok(out)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut out = RationalFn { poly: self.poly.pow(e as u32), atoms: BTreeMap::new() };
        if out.poly.is_zero() {
            return Ok(out);
        }
        for (a, &k) in &self.atoms {
            out.push_atom(a.clone(), k * e);
        }
        Ok(out)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::sum([self, o])
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::sum([self, &o.neg()])
    }

    /// Sum over a common denominator built from minimal atom exponents.
    pub fn sum<'a, I: IntoIterator<Item = &'a RationalFn>>(items: I) -> Self {
        let items: Vec<&RationalFn> = items.into_iter().filter(|x| !x.is_zero()).collect();
        match items.len() {
            0 => return Self::zero(),
            1 => return items[0].clone(),
            _ => {}
        }
        let mut common: BTreeMap<Atom, i32> = BTreeMap::new();
        let mut seen: BTreeMap<&Atom, usize> = BTreeMap::new();
        for it in &items {
            for (a, &e) in &it.atoms {
                *seen.entry(a).or_insert(0) += 1;
                let c = common.entry(a.clone()).or_insert(0);
                *c = (*c).min(e);
            }
        }
        // an atom missing from some summand has exponent 0 there
        for (a, c) in common.iter_mut() {
            if seen[a] < items.len() {
                *c = (*c).min(0);
            }
        }
        let mut powers: HashMap<(Atom, i32), LaurentPoly> = HashMap::new();
        let mut total = LaurentPoly::zero();
        for it in &items {
            let mut p = it.poly.clone();
            for (a, &c) in &common {
                let e = it.atoms.get(a).copied().unwrap_or(0) - c;
                if e > 0 {
                    let f = powers.entry((a.clone(), e)).or_insert_with(|| a.expand().pow(e as u32));
                    p = &p * &*f;
                }
            }
            total = total + p;
        }
        let mut out = RationalFn { poly: total, atoms: BTreeMap::new() };
        if out.poly.is_zero() {
            return out;
        }
        for (a, c) in common {
            out.push_atom(a, c);
        }
        out
    }

    /// Cancels denominator atoms that divide the stored polynomial.
    pub fn reduce(&self) -> Self {
        let mut out = self.clone();
        if out.is_zero() {
            out.atoms.clear();
            return out;
        }
        let negs: Vec<(Atom, i32)> =
            out.atoms.iter().filter(|(_, &e)| e < 0).map(|(a, &e)| (a.clone(), e)).collect();
        for (a, e) in negs {
            let f = a.expand();
            for _ in 0..(-e) {
                match out.poly.exact_div(&f) {
                    Ok(q) => {
                        out.poly = q;
                        out.push_atom(a.clone(), 1);
                    }
                    Err(_) => break,
                }
            }
        }
        out
    }

    /// The Laurent polynomial this function equals; `NonExactDivision` otherwise.
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        let mut p = self.poly.clone();
        for (a, &e) in &self.atoms {
            if e > 0 {
                p = p * a.expand().pow(e as u32);
            }
        }
        for (a, &e) in &self.atoms {
            if e < 0 {
                let f = a.expand();
                for _ in 0..(-e) {
                    p = p.exact_div(&f)?;
                }
            }
        }
        Ok(p)
    }

    /// Simultaneous substitution of variables by terms.
    pub fn subst(&self, rules: &[(Var, Term)]) -> Result<Self> {
        let mut out = RationalFn::from_poly(self.poly.try_subst(rules)?);
        let mut vanishing_num = out.poly.is_zero();
        for (a, &e) in &self.atoms {
            let p = a.expand().try_subst(rules)?;
            if p.is_zero() {
                if e < 0 {
                    return Err(Error::PoleAtPoint);
                }
                vanishing_num = true;
                continue;
            }
            let (unit, factors) = factor_poly(&p);
            let unit = RationalFn::from_poly(unit).pow(e)?;
            out = out.mul(&unit);
            for (b, k) in factors {
                out.push_atom(b, k * e);
            }
        }
        if vanishing_num {
            return Ok(Self::zero());
        }
        Ok(out)
    }

    pub fn subst_monomial(&self, var: Var, value: &Term) -> Result<Self> {
        self.subst(&[(var, value.clone())])
    }

    /// Exact value at a point assigning every variable that occurs.
    pub fn eval(&self, point: &[(Var, Rational)]) -> Result<Rational> {
        let rules: Vec<(Var, Term)> =
            point.iter().map(|(v, x)| (*v, Term::constant(x.clone()))).collect();
        let s = self.subst(&rules)?;
        s.as_constant().ok_or_else(|| {
            Error::Config(format!("evaluation point leaves variables unassigned in {}", s))
        })
    }

    pub fn is_free_of(&self, v: Var) -> bool {
        self.poly.is_free_of(v)
            && self.atoms.keys().all(|a| match a {
                Atom::Cyc { base, .. } => base.exp(v) == 0,
                Atom::Gen(p) => p.is_free_of(v),
            })
    }
}

/// Atoms for `1 - c*M` with `c = ±1` and `M != 1`, together with the leftover unit.
fn binomial_atoms(c: &Rational, m: &Monomial) -> (Term, Vec<(Atom, i32)>) {
    let (p, k) = m.primitive_root().expect("nontrivial monomial");
    let plus = c.is_one();
    if k < 0 {
        // 1 - cP^k = -cP^k (1 - cP^{|k|}) since c^2 = 1
        let unit = Term::new(-c.clone(), p.pow(k));
        let (u2, atoms) = binomial_atoms(c, &p.pow(-k));
        return (unit.mul(&u2), atoms);
    }
    let k = k as u32;
    let mut atoms = Vec::new();
    if plus {
        // 1 - P^k = -prod_{d | k} Phi_d(P)
        for d in 1..=k {
            if k % d == 0 {
                atoms.push((Atom::Cyc { d, base: p }, 1));
            }
        }
        (Term::constant(int(-1)), atoms)
    } else {
        // 1 + P^k = prod_{d | 2k, d does not divide k} Phi_d(P)
        for d in 1..=2 * k {
            if (2 * k) % d == 0 && k % d != 0 {
                atoms.push((Atom::Cyc { d, base: p }, 1));
            }
        }
        (Term::constant(int(1)), atoms)
    }
}

/// Splits a nonzero polynomial into a unit term and atoms. Recognises binomials
/// and polynomials in a single primitive monomial, where cyclotomic factors are
/// found by trial division; anything else becomes one general atom.
fn factor_poly(p: &LaurentPoly) -> (LaurentPoly, Vec<(Atom, i32)>) {
    assert!(!p.is_zero(), "factor_poly of zero");
    if p.len() == 1 {
        return (p.clone(), Vec::new());
    }
    let (m0, c0) = p.trailing().unwrap();
    let unit = Term::new(c0.clone(), m0);
    let inv_unit = Term::new(c0.recip(), m0.inv());
    let normed = p.mul_term(&inv_unit);
    if normed.len() == 2 {
        let (m1, c1) = normed.leading().unwrap();
        let neg_c = -c1;
        if is_unit_sign(&neg_c) {
            let (u, atoms) = binomial_atoms(&neg_c, &m1);
            return (LaurentPoly::from_term(&unit.mul(&u)), atoms);
        }
    }
    if let Some((base, coeffs)) = as_univariate(&normed) {
        let (rest, mut atoms) = trial_cyclotomic(coeffs, base);
        let rest_poly = LaurentPoly::from_terms(
            rest.iter().enumerate().map(|(i, c)| (base.pow(i as i32), c.clone())),
        );
        // rest has constant term 1 after division by monic-with-unit-constant factors
        let lead = rest_poly.trailing().unwrap().1;
        let unit = unit.mul(&Term::constant(lead.clone()));
        let rest_poly = rest_poly.scale(&lead.recip());
        if !rest_poly.is_one() {
            atoms.push((Atom::Gen(rest_poly), 1));
        }
        return (LaurentPoly::from_term(&unit), atoms);
    }
    (LaurentPoly::from_term(&unit), vec![(Atom::Gen(normed), 1)])
}

/// Writes `p` (with trailing term 1) as `f(B)` for a primitive monomial `B`.
fn as_univariate(p: &LaurentPoly) -> Option<(Monomial, Vec<Rational>)> {
    let mut base: Option<(Monomial, i32)> = None;
    for (m, _) in p.terms() {
        if m.is_one() {
            continue;
        }
        let (b, k) = m.primitive_root()?;
        match base {
            None => base = Some((b, k)),
            Some((b0, _)) if b0 != b => return None,
            _ => {}
        }
    }
    let (b, _) = base?;
    let mut coeffs = Vec::new();
    for (m, c) in p.terms() {
        let k = if m.is_one() { 0 } else { m.primitive_root()?.1 };
        if k < 0 {
            return None;
        }
        let k = k as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        coeffs[k] = c.clone();
    }
    Some((b, coeffs))
}

fn trial_cyclotomic(mut f: Vec<Rational>, base: Monomial) -> (Vec<Rational>, Vec<(Atom, i32)>) {
    let mut found: Vec<(u32, i32)> = Vec::new();
    let mut d = 1u32;
    loop {
        let deg = f.len() - 1;
        if deg == 0 {
            break;
        }
        let phi = cyclotomic_coeffs(d);
        if phi.len() - 1 <= deg {
            let mut k = 0;
            while let Some(q) = div_exact_univariate(&f, &phi) {
                f = q;
                k += 1;
            }
            if k > 0 {
                found.push((d, k));
            }
        }
        d += 1;
        // phi(d) >= sqrt(d/2)
        if (d as usize) > 2 * deg * deg + 2 {
            break;
        }
    }
    let atoms = found.into_iter().map(|(d, k)| (Atom::Cyc { d, base }, k)).collect();
    (f, atoms)
}

fn div_exact_univariate(f: &[Rational], g: &[i64]) -> Option<Vec<Rational>> {
    let dg = g.len() - 1;
    if f.len() - 1 < dg {
        return None;
    }
    let mut rem = f.to_vec();
    let mut quo = vec![Rational::zero(); f.len() - dg];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dg].clone();
        if c.is_zero() {
            continue;
        }
        for (j, &gc) in g.iter().enumerate() {
            if gc != 0 {
                rem[i + j] -= &c * int(gc);
            }
        }
        quo[i] = c;
    }
    if rem.iter().all(|x| x.is_zero()) {
        Some(quo)
    } else {
        None
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.poly)?;
        for (a, e) in &self.atoms {
            write!(f, " * {}^{}", a, e)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{pochhammer, rat, Alg};

    fn q() -> RationalFn {
        RationalFn::var(Var::Q)
    }

    fn qpow(k: i32) -> RationalFn {
        RationalFn::mono(Monomial::var_pow(Var::Q, k))
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let a = q().one_minus().inv().unwrap();
        let b = q().one_plus().div(&qpow(2).one_minus()).unwrap();
        assert!(rf_equal(&a, &b));
        let c = qpow(2).one_minus().inv().unwrap();
        assert!(!rf_equal(&a, &c));
    }

    #[test]
    fn evaluation_and_poles() {
        let a = q().one_minus().inv().unwrap();
        assert_eq!(a.eval(&[(Var::Q, rat(1, 2))]).unwrap(), int(2));
        assert_eq!(a.eval(&[(Var::Q, int(1))]), Err(Error::PoleAtPoint));
    }

    #[test]
    fn two_term_anchor() {
        // 1/(1-q) + t^2 q/((1-q)(1-tq)) at q = 1/2, t = 1/3
        let t = RationalFn::var(Var::T);
        let tq = RationalFn::mono(Monomial::from_pairs(&[(Var::T, 1), (Var::Q, 1)]));
        let first = q().one_minus().inv().unwrap();
        let second = t.mul(&t).mul(&q()).div(&q().one_minus().mul(&tq.one_minus())).unwrap();
        let total = first.add(&second);
        assert_eq!(total.eval(&[(Var::Q, rat(1, 2)), (Var::T, rat(1, 3))]).unwrap(), rat(32, 15));
    }

    #[test]
    fn pochhammer_quotient_is_polynomial() {
        let f = |n| pochhammer(&q(), &q(), n).unwrap();
        let b = f(4).div(&f(2).mul(&f(2))).unwrap();
        assert_eq!(b.to_poly().unwrap(), LaurentPoly::univariate(Var::Q, &[1, 1, 2, 1, 1]));
        let bad = qpow(3).one_minus().div(&qpow(2).one_minus()).unwrap();
        assert!(matches!(bad.to_poly(), Err(Error::NonExactDivision(_))));
    }

    #[test]
    fn substitution_refactors_atoms() {
        let a = q().one_minus().inv().unwrap();
        let b = a.subst_monomial(Var::Q, &Term::mono(Monomial::var_pow(Var::Q, 2))).unwrap();
        assert!(rf_equal(&b, &qpow(2).one_minus().inv().unwrap()));
        // 1 + q^3 = Phi_2 Phi_6, sent through q -> -q gives 1 - q^3
        let c = qpow(3).one_plus();
        let d = c.subst_monomial(Var::Q, &Term::new(int(-1), Monomial::var(Var::Q))).unwrap();
        assert!(rf_equal(&d, &qpow(3).one_minus()));
        assert_eq!(d.atoms().count(), 2);
        // negative exponents flip orientation
        let z = RationalFn::mono(Monomial::var_pow(Var::Z, -2)).one_minus();
        assert_eq!(z.to_poly().unwrap(), LaurentPoly::one() - LaurentPoly::mono(Monomial::var_pow(Var::Z, -2)));
    }

    #[test]
    fn generic_inverse_factors() {
        let p = LaurentPoly::univariate(Var::Q, &[1, 0, 0, 0, 0, 0, -1]); // 1 - q^6
        let r = RationalFn::from_poly(p.clone()).inv().unwrap();
        assert_eq!(r.atoms().count(), 4);
        let s = RationalFn::from_poly(LaurentPoly::univariate(Var::Q, &[1, -3, 1])).inv().unwrap();
        assert!(rf_equal(&s.mul(&RationalFn::from_poly(LaurentPoly::univariate(Var::Q, &[1, -3, 1]))), &RationalFn::one()));
        assert!(rf_equal(&r.mul(&RationalFn::from_poly(p)), &RationalFn::one()));
    }

    #[test]
    fn substitution_into_a_pole() {
        let a = q().one_minus().inv().unwrap();
        assert_eq!(a.subst_monomial(Var::Q, &Term::constant(int(1))), Err(Error::PoleAtPoint));
        let b = q().one_minus();
        assert!(b.subst_monomial(Var::Q, &Term::constant(int(1))).unwrap().is_zero());
    }

    #[test]
    fn reduce_cancels() {
        let f = |n| pochhammer(&q(), &q(), n).unwrap();
        let b = f(4).div(&f(2).mul(&f(2))).unwrap();
        let sum = RationalFn::sum([&b, &b.neg(), &b]);
        let r = sum.reduce();
        assert!(r.atoms().all(|(_, &e)| e >= 0));
    }
}
