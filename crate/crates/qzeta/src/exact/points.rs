use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{rat, Rational, Var};
use crate::error::{Error, Result};

/// Deterministic source of small rational evaluation points.
///
/// Numerators and denominators are drawn from `[-9, 9]`; values for `q` and `z`
/// are kept strictly inside the unit interval. Callers resample on a pole.
#[derive(Debug, Clone)]
pub struct PointSampler {
    rng: ChaCha8Rng,
}

const RESAMPLE_LIMIT: usize = 200;

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        PointSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn value(&mut self, v: Var) -> Rational {
        loop {
            let n: i64 = self.rng.gen_range(-9..=9);
            let d: i64 = self.rng.gen_range(-9..=9);
            if d == 0 {
                continue;
            }
            let x = rat(n, d);
            let small = matches!(v, Var::Q | Var::Z);
            if x.is_zero() || (small && x.abs() >= rat(1, 1)) {
                continue;
            }
            return x;
        }
    }

    pub fn point(&mut self, vars: &[Var]) -> Vec<(Var, Rational)> {
        vars.iter().map(|&v| (v, self.value(v))).collect()
    }

    /// Draws points until `f` succeeds, skipping poles.
    pub fn sample_with<T, F>(&mut self, vars: &[Var], mut f: F) -> Result<(Vec<(Var, Rational)>, T)>
    where
        F: FnMut(&[(Var, Rational)]) -> Result<T>,
    {
        for _ in 0..RESAMPLE_LIMIT {
            let p = self.point(vars);
            match f(&p) {
                Ok(x) => return Ok((p, x)),
                Err(Error::PoleAtPoint) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::PoleAtPoint)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_bounded() {
        let mut a = PointSampler::new(7);
        let mut b = PointSampler::new(7);
        for _ in 0..200 {
            let pa = a.point(&[Var::Q, Var::T]);
            assert_eq!(pa, b.point(&[Var::Q, Var::T]));
            assert!(pa[0].1.abs() < rat(1, 1));
            assert!(pa[1].1.numer().abs() <= 9.into() && *pa[1].1.denom() <= 9.into());
        }
    }
}
