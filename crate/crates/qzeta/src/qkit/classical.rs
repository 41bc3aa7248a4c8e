use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::phi::{phi_lser, PhiSeriesSpec};
use super::poch::{poch_inf, poch_inf_inv, poch_series, QMono};
use crate::error::{Error, Result};
use crate::exact::{rat, Lser, Rational};
use crate::report::{CheckReport, Regime, Status};

/// Ids of the classical summation and transformation formulas.
pub const CLASSICAL_IDS: [&str; 8] =
    ["q-binomial", "q-gauss", "qcv-1", "qcv-2", "heine-1", "heine-2", "heine-3", "3phi2-iii9"];

pub fn classical_ref(id: &str) -> &'static str {
    match id {
        "q-binomial" => "q-binomial theorem",
        "q-gauss" => "q-Gauss sum",
        "qcv-1" => "first q-Chu-Vandermonde sum",
        "qcv-2" => "second q-Chu-Vandermonde sum",
        "heine-1" => "first Heine transformation",
        "heine-2" => "second Heine transformation",
        "heine-3" => "third Heine transformation",
        "3phi2-iii9" => "3phi2 transformation (Gasper-Rahman III.9)",
        _ => "unknown",
    }
}

/// Parameters of a classical identity: named series-regime monomials plus `N`
/// for the terminating sums.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassicalParams {
    pub vals: BTreeMap<char, QMono>,
    pub n: i64,
}

impl ClassicalParams {
    pub fn new(pairs: &[(char, QMono)]) -> Self {
        ClassicalParams { vals: pairs.iter().cloned().collect(), n: 0 }
    }

    pub fn with_n(mut self, n: i64) -> Self {
        self.n = n;
        self
    }

    fn get(&self, k: char) -> Result<QMono> {
        self.vals.get(&k).cloned().ok_or_else(|| Error::Config(format!("missing parameter {}", k)))
    }
}

fn phi(upper: Vec<QMono>, lower: Vec<QMono>, z: QMono, cap: i64) -> Result<Lser> {
    phi_lser(&PhiSeriesSpec::new(upper, lower, z), cap)
}

fn inf(a: &QMono, cap: i64) -> Result<Lser> {
    poch_inf(a, 1, cap)
}

fn inf_inv(a: &QMono, cap: i64) -> Result<Lser> {
    poch_inf_inv(a, 1, cap)
}

/// Both sides of a classical identity at truncation `cap`.
fn sides(id: &str, p: &ClassicalParams, cap: i64) -> Result<(Lser, Lser)> {
    let g = |k| p.get(k);
    match id {
        "q-binomial" => {
            let (a, z) = (g('a')?, g('z')?);
            let lhs = phi(vec![a.clone()], vec![], z.clone(), cap)?;
            let rhs = inf(&a.mul(&z), cap)?.mul(&inf_inv(&z, cap)?);
            Ok((lhs, rhs))
        }
        "q-gauss" => {
            let (a, b, c) = (g('a')?, g('b')?, g('c')?);
            let arg = c.div(&a.mul(&b));
            let lhs = phi(vec![a.clone(), b.clone()], vec![c.clone()], arg.clone(), cap)?;
            let rhs = inf(&c.div(&a), cap)?
                .mul(&inf(&c.div(&b), cap)?)
                .mul(&inf_inv(&c, cap)?)
                .mul(&inf_inv(&arg, cap)?);
            Ok((lhs, rhs))
        }
        "qcv-1" => {
            let (a, c, n) = (g('a')?, g('c')?, p.n);
            let arg = c.mul(&QMono::q(n)).div(&a);
            let lhs = phi(vec![a.clone(), QMono::q(-n)], vec![c.clone()], arg, cap)?;
            let rhs = poch_series(&c.div(&a), 1, n, cap)?.mul(&poch_series(&c, 1, n, cap)?.inv()?);
            Ok((lhs, rhs))
        }
        "qcv-2" => {
            let (a, c, n) = (g('a')?, g('c')?, p.n);
            let lhs = phi(vec![a.clone(), QMono::q(-n)], vec![c.clone()], QMono::q(1), cap)?;
            let rhs = a
                .pow(n)
                .lser(cap)
                .mul(&poch_series(&c.div(&a), 1, n, cap)?)
                .mul(&poch_series(&c, 1, n, cap)?.inv()?);
            Ok((lhs, rhs))
        }
        "heine-1" => {
            let (a, b, c, z) = (g('a')?, g('b')?, g('c')?, g('z')?);
            let lhs = phi(vec![a.clone(), b.clone()], vec![c.clone()], z.clone(), cap)?;
            let az = a.mul(&z);
            let pre = inf(&b, cap)?.mul(&inf(&az, cap)?).mul(&inf_inv(&c, cap)?).mul(&inf_inv(&z, cap)?);
            let rhs = pre.mul(&phi(vec![c.div(&b), z.clone()], vec![az], b.clone(), cap)?);
            Ok((lhs, rhs))
        }
        "heine-2" => {
            let (a, b, c, z) = (g('a')?, g('b')?, g('c')?, g('z')?);
            let lhs = phi(vec![a.clone(), b.clone()], vec![c.clone()], z.clone(), cap)?;
            let bz = b.mul(&z);
            let pre = inf(&c.div(&b), cap)?.mul(&inf(&bz, cap)?).mul(&inf_inv(&c, cap)?).mul(&inf_inv(&z, cap)?);
            let abzc = a.mul(&b).mul(&z).div(&c);
            let rhs = pre.mul(&phi(vec![abzc, b.clone()], vec![bz], c.div(&b), cap)?);
            Ok((lhs, rhs))
        }
        "heine-3" => {
            let (a, b, c, z) = (g('a')?, g('b')?, g('c')?, g('z')?);
            let lhs = phi(vec![a.clone(), b.clone()], vec![c.clone()], z.clone(), cap)?;
            let abzc = a.mul(&b).mul(&z).div(&c);
            let pre = inf(&abzc, cap)?.mul(&inf_inv(&z, cap)?);
            let rhs = pre.mul(&phi(vec![c.div(&a), c.div(&b)], vec![c.clone()], abzc, cap)?);
            Ok((lhs, rhs))
        }
        "3phi2-iii9" => {
            let (a, b, c, d, e) = (g('a')?, g('b')?, g('c')?, g('d')?, g('e')?);
            let arg = d.mul(&e).div(&a.mul(&b).mul(&c));
            let lhs = phi(vec![a.clone(), b.clone(), c.clone()], vec![d.clone(), e.clone()], arg.clone(), cap)?;
            let debc = d.mul(&e).div(&b.mul(&c));
            let pre = inf(&e.div(&a), cap)?
                .mul(&inf(&debc, cap)?)
                .mul(&inf_inv(&e, cap)?)
                .mul(&inf_inv(&arg, cap)?);
            let rhs = pre.mul(&phi(vec![a.clone(), d.div(&b), d.div(&c)], vec![d.clone(), debc], e.div(&a), cap)?);
            Ok((lhs, rhs))
        }
        other => Err(Error::UnknownIdentity(other.to_string())),
    }
}

/// Checks a classical identity to order `order` in the series regime.
pub fn verify_classical(id: &str, params: &ClassicalParams, order: usize) -> Result<CheckReport> {
    if !CLASSICAL_IDS.contains(&id) {
        return Err(Error::UnknownIdentity(id.to_string()));
    }
    Ok(CheckReport::timed(|| {
        let mut rep = CheckReport::new(id, classical_ref(id), Regime::Series).param("Q", order);
        for (k, v) in &params.vals {
            rep = rep.param(&k.to_string(), v);
        }
        if matches!(id, "qcv-1" | "qcv-2") {
            rep = rep.param("N", params.n);
        }
        let mut cap = order as i64 + 1;
        loop {
            let res = sides(id, params, cap).and_then(|(l, r)| {
                let lo = l.val().min(r.val()).min(0);
                Ok((lo, l.window(lo, order as i64)?, r.window(lo, order as i64)?))
            });
            match res {
                Ok((lo, l, r)) => return rep.compare(&Coeffs(lo, l), &Coeffs(lo, r)),
                Err(Error::PrecisionLoss { .. }) if cap < 16 * (order as i64 + 1) => cap *= 2,
                Err(Error::PoleAtPoint) => return rep.with_status(Status::SkippedPole),
                Err(e) => return rep.fail(format!("error: {}", e), "-"),
            }
        }
    }))
}

/// Whether every Pochhammer denominator and series argument is admissible.
fn admissible(id: &str, p: &ClassicalParams) -> bool {
    let unit = |x: &QMono| !(x.d <= 0 && x.c == rat(1, 1)) && (x.d >= 1 || x.d == 0);
    let conv = |x: &QMono| x.d >= 1;
    let v = |k: char| p.vals[&k].clone();
    match id {
        "q-binomial" => conv(&v('z')) && v('a').d >= 0,
        "q-gauss" => unit(&v('c')) && conv(&v('c').div(&v('a').mul(&v('b')))) && v('a').d >= 0 && v('b').d >= 0,
        "qcv-1" | "qcv-2" => unit(&v('c')) && v('a').d >= 0,
        "heine-1" => {
            let az = v('a').mul(&v('z'));
            conv(&v('z')) && conv(&v('b')) && unit(&v('c')) && unit(&az) && v('a').d >= 0 && v('c').div(&v('b')).d >= 0
        }
        "heine-2" => {
            let bz = v('b').mul(&v('z'));
            let abzc = v('a').mul(&v('b')).mul(&v('z')).div(&v('c'));
            conv(&v('z')) && conv(&v('c').div(&v('b'))) && unit(&v('c')) && unit(&bz) && abzc.d >= 0 && v('a').d >= 0 && v('b').d >= 0
        }
        "heine-3" => {
            let abzc = v('a').mul(&v('b')).mul(&v('z')).div(&v('c'));
            conv(&v('z')) && conv(&abzc) && unit(&v('c')) && v('c').div(&v('a')).d >= 0 && v('c').div(&v('b')).d >= 0
        }
        "3phi2-iii9" => {
            let arg = v('d').mul(&v('e')).div(&v('a').mul(&v('b')).mul(&v('c')));
            let debc = v('d').mul(&v('e')).div(&v('b').mul(&v('c')));
            conv(&arg)
                && conv(&v('e').div(&v('a')))
                && unit(&v('d'))
                && unit(&v('e'))
                && unit(&debc)
                && v('d').div(&v('b')).d >= 0
                && v('d').div(&v('c')).d >= 0
                && [v('a'), v('b'), v('c')].iter().all(|x| x.d >= 0)
        }
        _ => false,
    }
}

fn letters(id: &str) -> &'static [char] {
    match id {
        "q-binomial" => &['a', 'z'],
        "q-gauss" => &['a', 'b', 'c'],
        "qcv-1" | "qcv-2" => &['a', 'c'],
        "heine-1" | "heine-2" | "heine-3" => &['a', 'b', 'c', 'z'],
        _ => &['a', 'b', 'c', 'd', 'e'],
    }
}

/// The worked instances first, then deterministic random admissible points.
pub fn classical_points(id: &str, seed: u64, count: usize) -> Vec<ClassicalParams> {
    let q = QMono::q;
    let mut out: Vec<ClassicalParams> = match id {
        "q-binomial" => vec![ClassicalParams::new(&[('a', q(2)), ('z', q(1))])],
        "q-gauss" => vec![ClassicalParams::new(&[('a', q(1)), ('b', q(2)), ('c', q(5))])],
        "qcv-1" => vec![ClassicalParams::new(&[('a', q(1)), ('c', q(3))]).with_n(2)],
        "qcv-2" => vec![ClassicalParams::new(&[('a', q(1)), ('c', q(3))]).with_n(2)],
        "heine-1" => vec![ClassicalParams::new(&[('a', q(1)), ('b', q(2)), ('c', q(4)), ('z', q(3))])],
        "heine-2" => vec![ClassicalParams::new(&[('a', q(1)), ('b', q(2)), ('c', q(4)), ('z', q(3))])],
        "heine-3" => vec![ClassicalParams::new(&[('a', q(1)), ('b', q(2)), ('c', q(4)), ('z', q(3))])],
        "3phi2-iii9" => {
            vec![ClassicalParams::new(&[('a', q(1)), ('b', q(1)), ('c', q(2)), ('d', q(4)), ('e', q(4))])]
        }
        _ => Vec::new(),
    };
    let coeffs = [rat(1, 1), rat(1, 1), rat(-1, 1), rat(2, 1), rat(1, 2), rat(-1, 2), rat(3, 1)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fxhash(id));
    let mut tries = 0;
    while out.len() < count && tries < 100_000 {
        tries += 1;
        let mut p = ClassicalParams::default();
        for &k in letters(id) {
            let c: Rational = coeffs[rng.gen_range(0..coeffs.len())].clone();
            let d: i64 = rng.gen_range(0..=5);
            p.vals.insert(k, QMono::new(c, d));
        }
        p.n = rng.gen_range(0..=4);
        if admissible(id, &p) && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn fxhash(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

/// Coefficient list starting at `q^lo`, for witnesses.
#[derive(PartialEq)]
struct Coeffs(i64, Vec<Rational>);

impl std::fmt::Display for Coeffs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.1.iter().map(|c| c.to_string()).collect();
        write!(f, "q^{}: [{}]", self.0, parts.join(", "))
    }
}

/// Runs every classical identity at `points` deterministic parameter sets.
pub fn classical_suite(order: usize, seed: u64, points: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for id in CLASSICAL_IDS {
        for p in classical_points(id, seed, points) {
            out.push(verify_classical(id, &p, order).expect("registered id"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_instances_pass() {
        for id in CLASSICAL_IDS {
            let p = &classical_points(id, 1, 1)[0];
            let r = verify_classical(id, p, 25).unwrap();
            assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn wrong_identity_fails() {
        // perturb the q-Gauss argument: must not pass
        let p = ClassicalParams::new(&[('a', QMono::q(1)), ('b', QMono::q(2)), ('c', QMono::q(5))]);
        let (l, _) = sides("q-gauss", &p, 20).unwrap();
        let p2 = ClassicalParams::new(&[('a', QMono::q(1)), ('b', QMono::q(2)), ('c', QMono::q(6))]);
        let (_, r2) = sides("q-gauss", &p2, 20).unwrap();
        assert_ne!(l.to_qseries(15).unwrap(), r2.to_qseries(15).unwrap());
        assert!(matches!(verify_classical("nope", &p, 10), Err(Error::UnknownIdentity(_))));
    }
}
