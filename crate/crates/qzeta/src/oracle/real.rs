//! Totally real and co-totally-real submodules of `Ṽ`, an `F_{q^2}[T]/T^m`-module
//! viewed over `F_q[T]/T^m`.

use std::collections::HashMap;

use super::field::{build_field, Elt};
use super::linalg::{Matrix, Subspace};
use super::module::FqModule;
use crate::error::Result;
use crate::partitions::{partitions_in_rectangle, Partition};

/// `W ∩ Theta W = 0`.
pub fn is_totally_real(v: &FqModule, w: &Subspace) -> bool {
    v.tilde_span(w).dim() == 2 * w.dim()
}

/// `Ã W = Ṽ`.
pub fn is_ctr(v: &FqModule, w: &Subspace) -> bool {
    v.tilde_span(w).dim() == v.dim
}

/// The two choices of `Theta` used for the independence check: `x` and `x + 1`.
pub fn theta_choices(p: u8) -> [Elt; 2] {
    let ext = build_field(p, 2).expect("p is 2 or 3");
    let x = ext.gen().unwrap();
    [x, ext.add(x, 1)]
}

#[derive(Debug, Clone)]
pub struct SubRecord {
    pub space: Subspace,
    pub ty: Partition,
    pub cotype: Partition,
    pub tr: bool,
    pub ctr: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reality {
    Tr,
    Ctr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Pr1,
    Pr2,
}

/// Every `A`-submodule of `Ṽ = Ã^n`, tagged with its type, cotype and reality.
#[derive(Debug, Clone)]
pub struct RealCensus {
    pub p: u8,
    pub m: i64,
    pub n: i64,
    pub theta: Elt,
    pub module: FqModule,
    pub subs: Vec<SubRecord>,
}

impl RealCensus {
    pub fn new(p: u8, m: i64, n: i64, theta: Elt) -> Result<Self> {
        let module = FqModule::tilde_free(p, m as usize, n as usize, theta)?;
        let mut subs = Vec::new();
        for space in module.submodules()? {
            subs.push(SubRecord {
                ty: module.module_type(&space)?,
                cotype: module.cotype(&space)?,
                tr: is_totally_real(&module, &space),
                ctr: is_ctr(&module, &space),
                space,
            });
        }
        Ok(RealCensus { p, m, n, theta, module, subs })
    }

    pub fn q(&self) -> u64 {
        self.p as u64
    }

    /// `Gr^TR(lambda)` or `Gr^cTR(lambda)` as indices into `subs`.
    pub fn grassmannian(&self, kind: Reality, lambda: &Partition) -> Vec<usize> {
        (0..self.subs.len())
            .filter(|&i| {
                let s = &self.subs[i];
                match kind {
                    Reality::Tr => s.tr && &s.ty == lambda,
                    Reality::Ctr => s.ctr && &s.cotype == lambda,
                }
            })
            .collect()
    }

    pub fn count_tr_grassmannian(&self, lambda: &Partition) -> u64 {
        self.grassmannian(Reality::Tr, lambda).len() as u64
    }

    pub fn count_ctr_grassmannian(&self, lambda: &Partition) -> u64 {
        self.grassmannian(Reality::Ctr, lambda).len() as u64
    }

    /// Fibre sizes of the two projections from the flag variety.
    ///
    /// TR flags are `W_1 ⊆ W_2` of types `(mu, lambda)`; cTR flags are
    /// `W_2 ⊆ W_1` of cotypes `(lambda, mu)`. `Pr1` fibres sit over the `mu`
    /// end, `Pr2` fibres over the `lambda` end.
    pub fn flag_fibers(&self, kind: Reality, lambda: &Partition, mu: &Partition, side: Side) -> Vec<(Subspace, u64)> {
        let f = &self.module.field;
        let big = self.grassmannian(kind, lambda);
        let small = self.grassmannian(kind, mu);
        // `lambda`-end contains the `mu`-end for TR, and is contained in it for cTR
        let incident = |l: usize, s: usize| {
            let (ls, ss) = (&self.subs[l].space, &self.subs[s].space);
            match kind {
                Reality::Tr => ls.contains_space(f, ss),
                Reality::Ctr => ss.contains_space(f, ls),
            }
        };
        let (base, other) = match side {
            Side::Pr1 => (&small, &big),
            Side::Pr2 => (&big, &small),
        };
        base.iter()
            .map(|&b| {
                let c = other
                    .iter()
                    .filter(|&&o| match side {
                        Side::Pr1 => incident(o, b),
                        Side::Pr2 => incident(b, o),
                    })
                    .count();
                (self.subs[b].space.clone(), c as u64)
            })
            .collect()
    }

    pub fn rectangle(&self) -> Vec<Partition> {
        partitions_in_rectangle(self.m, self.n)
    }
}

/// Number of orbits of the matrix group `group` acting on `set` by images.
/// Panics if some image leaves `set`.
pub fn orbit_count(v: &FqModule, group: &[Matrix], set: &[Subspace]) -> usize {
    let index: HashMap<&Subspace, usize> = set.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut seen = vec![false; set.len()];
    let mut orbits = 0;
    for start in 0..set.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for g in group {
                let j = index[&set[i].image(&v.field, g)];
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::linalg::unit;

    fn p(xs: &[i64]) -> Partition {
        Partition::new(xs).unwrap()
    }

    #[test]
    fn reality_of_small_spaces() {
        let v = FqModule::tilde_free(2, 1, 1, 2).unwrap();
        let f = &v.field;
        let line = Subspace::span(f, vec![unit(2, 0)]);
        assert!(is_totally_real(&v, &line) && is_ctr(&v, &line));
        assert!(is_totally_real(&v, &v.zero()) && !is_ctr(&v, &v.zero()));
        assert!(!is_totally_real(&v, &v.full()) && is_ctr(&v, &v.full()));
    }

    #[test]
    fn one_by_one_counts() {
        let c = RealCensus::new(2, 1, 1, 2).unwrap();
        assert_eq!(c.count_tr_grassmannian(&p(&[1])), 3);
        assert_eq!(c.count_ctr_grassmannian(&Partition::empty()), 1);
        let fib = c.flag_fibers(Reality::Tr, &p(&[1]), &Partition::empty(), Side::Pr1);
        assert_eq!(fib.iter().map(|x| x.1).collect::<Vec<_>>(), vec![3]);
    }
}
