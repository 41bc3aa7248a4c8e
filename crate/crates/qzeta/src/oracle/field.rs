use std::fmt;

use crate::error::{Error, Result};

/// Element of a [`SmallField`], encoded as `a + b*p` for `a + b x`.
pub type Elt = u8;

/// `F_p` or `F_{p^2}` for `p` in {2, 3}, by lookup tables.
///
/// `F_4 = F_2[x]/(x^2+x+1)`, `F_9 = F_3[x]/(x^2+1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SmallField {
    pub p: u8,
    pub k: u8,
    /// `x^2 = c0 + c1 x` for `k = 2`.
    pub irreducible: Option<(u8, u8)>,
    size: usize,
    add: Vec<Elt>,
    mul: Vec<Elt>,
    neg: Vec<Elt>,
    inv: Vec<Elt>,
}

impl fmt::Debug for SmallField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.size)
    }
}

pub fn build_field(p: u8, k: u8) -> Result<SmallField> {
    let irreducible = match (p, k) {
        (2, 1) | (3, 1) => None,
        // x^2 = x + 1
        (2, 2) => Some((1, 1)),
        // x^2 = -1
        (3, 2) => Some((2, 0)),
        _ => return Err(Error::UnsupportedField { p: p as u32, k: k as u32 }),
    };
    let size = (p as usize).pow(k as u32);
    let pp = p as usize;
    let split = |e: usize| (e % pp, e / pp);
    let join = |a: usize, b: usize| ((a % pp) + (b % pp) * pp) as Elt;
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            let (a, b) = split(x);
            let (c, d) = split(y);
            add[x * size + y] = join(a + c, b + d);
            // (a + bx)(c + dx) = ac + (ad + bc) x + bd x^2
            let (lo, hi) = (a * c, a * d + b * c);
            let bd = b * d;
            let (c0, c1) = irreducible.map_or((0, 0), |(c0, c1)| (c0 as usize, c1 as usize));
            mul[x * size + y] = join(lo + bd * c0, hi + bd * c1);
        }
    }
    let mut neg = vec![0; size];
    let mut inv = vec![0; size];
    for x in 0..size {
        neg[x] = (0..size).find(|&y| add[x * size + y] == 0).unwrap() as Elt;
        if x != 0 {
            inv[x] = (0..size).find(|&y| mul[x * size + y] == 1).unwrap() as Elt;
        }
    }
    Ok(SmallField { p, k, irreducible, size, add, mul, neg, inv })
}

impl SmallField {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add(&self, x: Elt, y: Elt) -> Elt {
        self.add[x as usize * self.size + y as usize]
    }

    pub fn mul(&self, x: Elt, y: Elt) -> Elt {
        self.mul[x as usize * self.size + y as usize]
    }

    pub fn neg(&self, x: Elt) -> Elt {
        self.neg[x as usize]
    }

    pub fn sub(&self, x: Elt, y: Elt) -> Elt {
        self.add(x, self.neg(y))
    }

    /// Panics on zero.
    pub fn inv(&self, x: Elt) -> Elt {
        assert!(x != 0, "inverse of zero");
        self.inv[x as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        0..self.size as Elt
    }

    /// Coordinates `(a, b)` of `a + b x` over the prime field.
    pub fn coords(&self, x: Elt) -> (Elt, Elt) {
        (x % self.p, x / self.p)
    }

    pub fn from_coords(&self, a: Elt, b: Elt) -> Elt {
        a + b * self.p
    }

    pub fn in_prime_field(&self, x: Elt) -> bool {
        x < self.p
    }

    /// The generator `x`, the default choice of `Theta`.
    pub fn gen(&self) -> Option<Elt> {
        (self.k == 2).then_some(self.p)
    }

    /// 2x2 matrix over `F_p` of multiplication by `theta` in the basis {1, x}.
    pub fn mult_matrix(&self, theta: Elt) -> [[Elt; 2]; 2] {
        let (a0, b0) = self.coords(self.mul(theta, 1));
        let (a1, b1) = self.coords(self.mul(theta, self.p));
        [[a0, a1], [b0, b1]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms() {
        for (p, k) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            let f = build_field(p, k).unwrap();
            let els: Vec<Elt> = f.elements().collect();
            for &x in &els {
                assert_eq!(f.add(x, 0), x);
                assert_eq!(f.mul(x, 1), x);
                assert_eq!(f.add(x, f.neg(x)), 0);
                if x != 0 {
                    assert_eq!(f.mul(x, f.inv(x)), 1);
                }
                for &y in &els {
                    assert_eq!(f.add(x, y), f.add(y, x));
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for &z in &els {
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                        assert_eq!(f.mul(x, f.mul(y, z)), f.mul(f.mul(x, y), z));
                    }
                }
            }
            // prime subfield is closed
            for x in 0..p {
                for y in 0..p {
                    assert!(f.in_prime_field(f.add(x, y)) && f.in_prime_field(f.mul(x, y)));
                }
            }
        }
    }

    #[test]
    fn small_tables() {
        let f2 = build_field(2, 1).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        let f4 = build_field(2, 2).unwrap();
        let x = f4.gen().unwrap();
        assert_eq!(f4.mul(x, x), f4.add(x, 1));
        let f9 = build_field(3, 2).unwrap();
        let x = f9.gen().unwrap();
        assert_eq!(f9.mul(x, x), 2);
        assert!(matches!(build_field(5, 3), Err(Error::UnsupportedField { .. })));
    }
}
