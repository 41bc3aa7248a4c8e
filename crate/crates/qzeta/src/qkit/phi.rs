use num_traits::One;

use super::QMono;
use crate::error::{Error, Result};
use crate::exact::{Alg, Lser, QSeries, Rational};

/// `{}_r phi_s (upper; lower; q, argument)` with series-regime parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiSeriesSpec {
    pub upper: Vec<QMono>,
    pub lower: Vec<QMono>,
    pub argument: QMono,
}

impl PhiSeriesSpec {
    pub fn new(upper: Vec<QMono>, lower: Vec<QMono>, argument: QMono) -> Self {
        PhiSeriesSpec { upper, lower, argument }
    }
}

/// Evaluates the basic hypergeometric series to order `order`.
pub fn phi_eval(spec: &PhiSeriesSpec, order: usize) -> Result<QSeries> {
    let mut cap = order as i64 + 1;
    loop {
        match phi_lser(spec, cap)?.to_qseries(order) {
            Err(Error::PrecisionLoss { .. }) if cap < 16 * (order as i64 + 1) => cap *= 2,
            r => return r,
        }
    }
}

/// Truncated value with precision tracking. Summation stops at a vanishing
/// numerator factor (a `q^{-N}` parameter) or once every remaining term has
/// q-valuation at least `cap`; the valuation of each term is computed exactly
/// from the parameters, so no term that matters is dropped.
pub fn phi_lser(spec: &PhiSeriesSpec, cap: i64) -> Result<Lser> {
    let r = spec.upper.len() as i64;
    let s = spec.lower.len() as i64;
    let w = s - r + 1;
    let z = &spec.argument;
    if z.is_zero() {
        return Ok(Lser::one(cap));
    }
    let zero_at = |p: &QMono| (p.c.is_one() && p.d <= 0).then_some(-p.d);
    let n_term = spec.upper.iter().filter_map(zero_at).min();
    let n_pole = spec.lower.iter().filter_map(zero_at).min();
    let n0 = spec
        .upper
        .iter()
        .chain(&spec.lower)
        .map(|p| (-p.d).max(0))
        .max()
        .unwrap_or(0)
        + 1;
    if n_term.is_none() && (w < 0 || (w == 0 && z.d <= 0)) {
        return Err(Error::DivergentSpec(format!(
            "term valuations do not grow (s-r+1 = {}, argument degree {})",
            w, z.d
        )));
    }
    let mut total = Lser::zero(cap);
    let mut term = Lser::one(cap);
    let mut val: i64 = 0;
    let mut n: i64 = 0;
    loop {
        if val < cap {
            total = total.add(&term);
        }
        // term n+1 from term n
        let next = n + 1;
        if n_term.is_some_and(|t| next > t) {
            break;
        }
        if n_pole.is_some_and(|p| next > p) {
            return Err(Error::PoleAtPoint);
        }
        let dv_num: i64 = spec.upper.iter().map(|a| (a.d + n).min(0)).sum();
        let dv_den: i64 = spec.lower.iter().map(|b| (b.d + n).min(0)).sum();
        let dv = dv_num - dv_den + w * n + z.d;
        let new_val = val + dv;
        if n >= n0 && new_val >= cap && w * n + z.d >= 1 && n_term.is_none() {
            break;
        }
        if next > 1_000_000 {
            return Err(Error::DivergentSpec("summation bound exceeded".into()));
        }
        let mut factor = z.lser(cap);
        for a in &spec.upper {
            factor = factor.mul(&a.shift(n).lser(cap).one_minus());
        }
        let mut den = QMono::q(next).lser(cap).one_minus();
        for b in &spec.lower {
            den = den.mul(&b.shift(n).lser(cap).one_minus());
        }
        factor = factor.mul(&den.inv().map_err(|_| Error::PoleAtPoint)?);
        let sign = if (n * w).rem_euclid(2) == 1 { -Rational::one() } else { Rational::one() };
        factor = factor.mul(&Lser::monomial(sign, n * w, cap));
        term = term.mul(&factor);
        val = new_val;
        n = next;
        if term.is_zero() && term.prec() == crate::exact::EXACT {
            break;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::qkit::poch::{poch_inf, poch_series};

    #[test]
    fn empty_series_with_zero_argument() {
        let s = phi_eval(&PhiSeriesSpec::new(vec![], vec![], QMono::zero()), 10).unwrap();
        assert_eq!(s, QSeries::one(10));
    }

    #[test]
    fn q_binomial_theorem_instance() {
        // 1phi0(q^2; -; q, q) = (q^3;q)_inf / (q;q)_inf
        let q_order = 20;
        let lhs = phi_eval(&PhiSeriesSpec::new(vec![QMono::q(2)], vec![], QMono::q(1)), q_order).unwrap();
        let cap = 21;
        let rhs = poch_inf(&QMono::q(3), 1, cap).unwrap().mul(&poch_inf(&QMono::q(1), 1, cap).unwrap().inv().unwrap());
        assert_eq!(lhs, rhs.to_qseries(q_order).unwrap());
    }

    #[test]
    fn second_chu_vandermonde_instance() {
        // 2phi1(q, q^-2; q^3; q, q) = q^2 (q^2;q)_2/(q^3;q)_2
        let lhs = phi_eval(&PhiSeriesSpec::new(vec![QMono::q(1), QMono::q(-2)], vec![QMono::q(3)], QMono::q(1)), 25).unwrap();
        let cap = 26;
        let rhs = QMono::q(2)
            .lser(cap)
            .mul(&poch_series(&QMono::q(2), 1, 2, cap).unwrap())
            .mul(&poch_series(&QMono::q(3), 1, 2, cap).unwrap().inv().unwrap());
        assert_eq!(lhs, rhs.to_qseries(25).unwrap());
    }

    #[test]
    fn divergence_is_reported() {
        let r = phi_eval(&PhiSeriesSpec::new(vec![QMono::q(1)], vec![], QMono::constant(int(2))), 10);
        assert!(matches!(r, Err(Error::DivergentSpec(_))));
    }
}
