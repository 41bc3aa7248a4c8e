use super::field::{build_field, Elt, SmallField};
use super::linalg::{all_subspaces, left_kernel, unit, Matrix, Subspace};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Largest dimension enumerated over a field with `q` elements: `q^dim <= 256`,
/// which is 8 over F_2 and 5 over F_3.
pub fn enumeration_cap(q: usize) -> usize {
    (1..).take_while(|&d| q.pow(d as u32) <= 256).last().unwrap_or(0)
}

/// Largest dimension for automorphism enumeration: `q^(dim^2) <= 65536`,
/// which is 4 over F_2 and 3 over F_3.
pub fn automorphism_cap(q: usize) -> usize {
    (1..).take_while(|&d: &usize| q.pow((d * d) as u32) <= 65536).last().unwrap_or(0)
}

/// A finite module over `F_q[T]/T^m`: an `F_q`-space with a nilpotent `T`,
/// and optionally multiplication by `Theta` in `F_{q^2}` when it is an
/// `F_{q^2}[T]/T^m`-module seen over `F_q`.
#[derive(Debug, Clone)]
pub struct FqModule {
    pub field: SmallField,
    pub dim: usize,
    pub t: Matrix,
    pub m: u32,
    pub theta: Option<Matrix>,
}

impl FqModule {
    /// `M(lambda) = ⊕ F_q[T]/T^{lambda_i}`.
    pub fn of_type(field: &SmallField, lambda: &Partition) -> Self {
        let dim = lambda.size() as usize;
        let mut t = Matrix::zero(dim, dim);
        let mut at = 0;
        for &len in lambda.parts() {
            for a in 0..(len as usize - 1) {
                // T e_a = e_{a+1}
                t.set(at + a + 1, at + a, 1);
            }
            at += len as usize;
        }
        FqModule { field: field.clone(), dim, t, m: lambda.largest() as u32, theta: None }
    }

    /// `(F_{p^2}[T]/T^m)^n` over `F_p`, with `Theta` acting by the given element.
    pub fn tilde_free(p: u8, m: usize, n: usize, theta: Elt) -> Result<Self> {
        Self::tilde_of_type(p, &Partition::rectangle(m as i64, n as i64), theta)
    }

    /// `⊕ F_{p^2}[T]/T^{lambda_j}` over `F_p`. The basis vector `x^c T^a` of
    /// the `j`-th summand sits at `2(lambda_1 + ... + lambda_{j-1}) + 2a + c`,
    /// so the even coordinates span the standard real structure.
    pub fn tilde_of_type(p: u8, lambda: &Partition, theta: Elt) -> Result<Self> {
        let field = build_field(p, 1)?;
        let ext = build_field(p, 2)?;
        assert!(!ext.in_prime_field(theta), "Theta must lie outside the prime field");
        let dim = 2 * lambda.size() as usize;
        let mut t = Matrix::zero(dim, dim);
        let mut th = Matrix::zero(dim, dim);
        let mm = ext.mult_matrix(theta);
        let mut offset = 0;
        for &len in lambda.parts() {
            let len = len as usize;
            for a in 0..len {
                for c in 0..2 {
                    let at = offset + 2 * a + c;
                    if a + 1 < len {
                        t.set(at + 2, at, 1);
                    }
                    for r in 0..2 {
                        th.set(offset + 2 * a + r, at, mm[r][c]);
                    }
                }
            }
            offset += 2 * len;
        }
        Ok(FqModule { field, dim, t, m: lambda.largest() as u32, theta: Some(th) })
    }

    pub fn q(&self) -> usize {
        self.field.size()
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    pub fn zero(&self) -> Subspace {
        Subspace::zero(self.dim)
    }

    /// `A^n` inside `Ã^n`: the span of the `c = 0` coordinates.
    pub fn real_part(&self) -> Subspace {
        Subspace::span_in(&self.field, self.dim, (0..self.dim).step_by(2).map(|i| unit(self.dim, i)))
    }

    pub fn is_submodule(&self, w: &Subspace) -> bool {
        w.is_invariant(&self.field, &self.t)
    }

    pub fn is_tilde_submodule(&self, w: &Subspace) -> bool {
        self.is_submodule(w) && self.theta.as_ref().is_none_or(|th| w.is_invariant(&self.field, th))
    }

    /// `A·W`, the smallest `T`-invariant subspace containing `W`.
    pub fn generated(&self, w: &Subspace) -> Subspace {
        let mut s = w.clone();
        loop {
            let next = s.sum(&self.field, &s.image(&self.field, &self.t));
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// `Ã·W = W + Theta W` for a `T`-invariant `W`.
    pub fn tilde_span(&self, w: &Subspace) -> Subspace {
        let th = self.theta.as_ref().expect("module carries a Theta action");
        w.sum(&self.field, &w.image(&self.field, th))
    }

    fn check_cap(&self) -> Result<()> {
        let cap = enumeration_cap(self.q());
        if self.dim > cap {
            return Err(Error::TooLarge { dim: self.dim, q: self.q() as u32, cap });
        }
        Ok(())
    }

    /// Every `T`-invariant subspace exactly once.
    pub fn submodules(&self) -> Result<Vec<Subspace>> {
        self.check_cap()?;
        let mut out = Vec::new();
        all_subspaces(&self.field, self.dim, |s| {
            if self.is_submodule(s) {
                out.push(s.clone());
            }
        });
        Ok(out)
    }

    /// Submodules that are also `Theta`-invariant.
    pub fn tilde_submodules(&self) -> Result<Vec<Subspace>> {
        Ok(self.submodules()?.into_iter().filter(|w| self.is_tilde_submodule(w)).collect())
    }

    /// Type of `X/Y` for submodules `Y ⊆ X`, from
    /// `lambda'_j = dim(T^{j-1}X + Y) - dim(T^j X + Y)`.
    pub fn quotient_type(&self, x: &Subspace, y: &Subspace) -> Result<Partition> {
        if !self.is_submodule(x) || !self.is_submodule(y) {
            return Err(Error::NotTInvariant);
        }
        let f = &self.field;
        let mut conj = Vec::new();
        let mut cur = x.clone();
        let mut prev = cur.sum(f, y).dim();
        loop {
            cur = cur.image(f, &self.t);
            let d = cur.sum(f, y).dim();
            if d == prev {
                break;
            }
            conj.push((prev - d) as i64);
            prev = d;
        }
        Ok(Partition::new(&conj).expect("ranks of powers of T decrease").conjugate())
    }

    pub fn module_type(&self, w: &Subspace) -> Result<Partition> {
        self.quotient_type(w, &self.zero())
    }

    pub fn cotype(&self, w: &Subspace) -> Result<Partition> {
        self.quotient_type(&self.full(), w)
    }

    /// Type over `F_{q^2}[T]/T^m` of a `Theta`-stable quotient `X/Y`.
    pub fn tilde_quotient_type(&self, x: &Subspace, y: &Subspace) -> Result<Partition> {
        let conj = self.quotient_type(x, y)?.conjugate();
        let halves: Vec<i64> = conj.parts().iter().map(|c| c / 2).collect();
        debug_assert!(conj.parts().iter().all(|c| c % 2 == 0));
        Ok(Partition::new(&halves).expect("halved conjugate").conjugate())
    }

    pub fn tilde_type(&self, w: &Subspace) -> Result<Partition> {
        self.tilde_quotient_type(w, &self.zero())
    }

    /// Basis of the commutant of `T` (and `Theta`), as flattened matrices.
    fn commutant_basis(&self) -> Vec<Matrix> {
        let f = &self.field;
        let d = self.dim;
        let mut ops = vec![&self.t];
        if let Some(th) = &self.theta {
            ops.push(th);
        }
        let basis: Vec<Matrix> = (0..d * d)
            .map(|k| {
                let mut e = Matrix::zero(d, d);
                e.data[k] = 1;
                e
            })
            .collect();
        let images: Vec<Vec<Elt>> = basis
            .iter()
            .map(|e| {
                ops.iter()
                    .flat_map(|op| {
                        let a = e.mul(f, op);
                        let b = op.mul(f, e).scale(f, f.neg(1));
                        a.add(f, &b).data
                    })
                    .collect()
            })
            .collect();
        left_kernel(f, &images)
            .into_iter()
            .map(|c| Matrix { rows: d, cols: d, data: c })
            .collect()
    }

    /// All invertible `F_q`-linear maps commuting with `T` (and `Theta`).
    pub fn automorphisms(&self) -> Result<Vec<Matrix>> {
        let cap = automorphism_cap(self.q());
        if self.dim > cap {
            return Err(Error::TooLarge { dim: self.dim, q: self.q() as u32, cap });
        }
        let f = &self.field;
        let basis = self.commutant_basis();
        let flat: Vec<Vec<Elt>> = basis.iter().map(|b| b.data.clone()).collect();
        let space = Subspace::span_in(f, self.dim * self.dim, flat);
        Ok(space
            .elements(f)
            .into_iter()
            .map(|data| Matrix { rows: self.dim, cols: self.dim, data })
            .filter(|g| g.rank(f) == self.dim)
            .collect())
    }

    pub fn count_automorphisms(&self) -> Result<u64> {
        Ok(self.automorphisms()?.len() as u64)
    }

    pub fn count_by_type_cotype(&self, mu: &Partition, nu: &Partition) -> Result<u64> {
        let mut n = 0;
        for w in self.submodules()? {
            if &self.module_type(&w)? == mu && &self.cotype(&w)? == nu {
                n += 1;
            }
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(xs: &[i64]) -> Partition {
        Partition::new(xs).unwrap()
    }

    #[test]
    fn caps() {
        assert_eq!(enumeration_cap(2), 8);
        assert_eq!(enumeration_cap(3), 5);
        assert_eq!(automorphism_cap(2), 4);
        assert_eq!(automorphism_cap(3), 3);
    }

    #[test]
    fn types() {
        let f2 = build_field(2, 1).unwrap();
        let a = FqModule::of_type(&f2, &p(&[2]));
        assert_eq!(a.module_type(&a.full()).unwrap(), p(&[2]));
        let v = FqModule::of_type(&f2, &p(&[1, 1]));
        assert_eq!(v.module_type(&v.full()).unwrap(), p(&[1, 1]));
        let vt = FqModule::tilde_free(2, 2, 1, 2).unwrap();
        assert_eq!(vt.module_type(&vt.full()).unwrap(), p(&[2, 2]));
        assert_eq!(vt.tilde_type(&vt.full()).unwrap(), p(&[2]));
        let bad = Subspace::span(&f2, vec![vec![1, 0]]);
        assert!(matches!(a.module_type(&bad), Err(Error::NotTInvariant)));
    }

    #[test]
    fn submodule_counts() {
        let f2 = build_field(2, 1).unwrap();
        assert_eq!(FqModule::of_type(&f2, &p(&[1, 1])).submodules().unwrap().len(), 5);
        assert_eq!(FqModule::of_type(&f2, &p(&[2])).submodules().unwrap().len(), 3);
        let big = FqModule::of_type(&build_field(3, 1).unwrap(), &p(&[3, 3]));
        assert!(matches!(big.submodules(), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn automorphism_counts() {
        let f2 = build_field(2, 1).unwrap();
        assert_eq!(FqModule::of_type(&f2, &p(&[1, 1])).count_automorphisms().unwrap(), 6);
        assert_eq!(FqModule::of_type(&f2, &p(&[2])).count_automorphisms().unwrap(), 2);
        // GL_1(F_4) inside F_2-linear maps of F_4
        let vt = FqModule::tilde_free(2, 1, 1, 2).unwrap();
        assert_eq!(vt.count_automorphisms().unwrap(), 3);
    }

    #[test]
    fn type_cotype() {
        let f2 = build_field(2, 1).unwrap();
        let v = FqModule::of_type(&f2, &p(&[1, 1]));
        assert_eq!(v.count_by_type_cotype(&p(&[1]), &p(&[1])).unwrap(), 3);
        assert_eq!(v.count_by_type_cotype(&Partition::empty(), &p(&[1, 1])).unwrap(), 1);
    }
}
