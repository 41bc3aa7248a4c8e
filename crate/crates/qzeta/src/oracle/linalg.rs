//! Dense linear algebra over a [`SmallField`]. Vectors are columns; a
//! matrix acts by `M v`.

use super::field::{Elt, SmallField};

pub type Vector = Vec<Elt>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Elt>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> Elt {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Elt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn apply(&self, f: &SmallField, v: &[Elt]) -> Vector {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0, |acc, j| f.add(acc, f.mul(self.get(i, j), v[j]))))
            .collect()
    }

    pub fn mul(&self, f: &SmallField, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s = (0..self.cols).fold(0, |acc, k| f.add(acc, f.mul(self.get(i, k), other.get(k, j))));
                out.set(i, j, s);
            }
        }
        out
    }

    pub fn add(&self, f: &SmallField, other: &Matrix) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, f: &SmallField, c: Elt) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(c, a)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn pow(&self, f: &SmallField, e: u32) -> Matrix {
        (0..e).fold(Matrix::identity(self.rows), |acc, _| acc.mul(f, self))
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).collect()).collect()
    }

    pub fn rank(&self, f: &SmallField) -> usize {
        Subspace::span(f, self.columns()).dim()
    }
}

/// Subspace of `F^d` held as a reduced row-echelon basis, so equality of
/// subspaces is equality of values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    pub ambient: usize,
    pub rows: Vec<Vector>,
}

fn pivot(v: &[Elt]) -> Option<usize> {
    v.iter().position(|&x| x != 0)
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, rows: (0..ambient).map(|i| unit(ambient, i)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| pivot(r).unwrap()).collect()
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, f: &SmallField, v: &[Elt]) -> Vector {
        let mut v = v.to_vec();
        for row in &self.rows {
            let p = pivot(row).unwrap();
            let c = v[p];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, f: &SmallField, v: &[Elt]) -> bool {
        self.reduce(f, v).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, f: &SmallField, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(f, r))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, f: &SmallField, v: &[Elt]) -> bool {
        let mut r = self.reduce(f, v);
        let Some(p) = pivot(&r) else { return false };
        let c = f.inv(r[p]);
        for x in r.iter_mut() {
            *x = f.mul(c, *x);
        }
        for row in self.rows.iter_mut() {
            let a = row[p];
            if a != 0 {
                for (x, &y) in row.iter_mut().zip(&r) {
                    *x = f.sub(*x, f.mul(a, y));
                }
            }
        }
        let at = self.rows.iter().position(|row| pivot(row).unwrap() > p).unwrap_or(self.rows.len());
        self.rows.insert(at, r);
        true
    }

    pub fn span<I: IntoIterator<Item = Vector>>(f: &SmallField, vs: I) -> Subspace {
        let mut it = vs.into_iter().peekable();
        let ambient = it.peek().map_or(0, |v| v.len());
        let mut s = Subspace::zero(ambient);
        for v in it {
            s.ambient = v.len();
            s.insert(f, &v);
        }
        s
    }

    pub fn span_in(f: &SmallField, ambient: usize, vs: impl IntoIterator<Item = Vector>) -> Subspace {
        let mut s = Subspace::zero(ambient);
        for v in vs {
            s.insert(f, &v);
        }
        s
    }

    pub fn sum(&self, f: &SmallField, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(f, r);
        }
        s
    }

    pub fn image(&self, f: &SmallField, m: &Matrix) -> Subspace {
        Subspace::span_in(f, self.ambient, self.rows.iter().map(|r| m.apply(f, r)))
    }

    pub fn is_invariant(&self, f: &SmallField, m: &Matrix) -> bool {
        self.rows.iter().all(|r| self.contains(f, &m.apply(f, r)))
    }

    /// Dimension of the intersection, via `dim(U) + dim(W) - dim(U + W)`.
    pub fn intersection_dim(&self, f: &SmallField, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(f, other).dim()
    }

    pub fn intersection(&self, f: &SmallField, other: &Subspace) -> Subspace {
        // solve a.U = b.W by the kernel of [U; -W]
        let mut gens: Vec<Vector> = self.rows.clone();
        gens.extend(other.rows.iter().map(|r| r.iter().map(|&x| f.neg(x)).collect()));
        let coeffs = left_kernel(f, &gens);
        Subspace::span_in(
            f,
            self.ambient,
            coeffs.into_iter().map(|c| {
                let mut v = vec![0; self.ambient];
                for (i, row) in self.rows.iter().enumerate() {
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = f.add(*x, f.mul(c[i], y));
                    }
                }
                v
            }),
        )
    }

    /// Every vector of the subspace.
    pub fn elements(&self, f: &SmallField) -> Vec<Vector> {
        let mut out = vec![vec![0; self.ambient]];
        for row in &self.rows {
            let mut next = Vec::with_capacity(out.len() * f.size());
            for v in &out {
                for c in f.elements() {
                    next.push(v.iter().zip(row).map(|(&x, &y)| f.add(x, f.mul(c, y))).collect());
                }
            }
            out = next;
        }
        out
    }
}

impl std::fmt::Display for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        write!(f, "<{}>", rows.join(" "))
    }
}

pub fn unit(d: usize, i: usize) -> Vector {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

/// Basis of `{c : sum c_i v_i = 0}`.
pub fn left_kernel(f: &SmallField, vs: &[Vector]) -> Vec<Vector> {
    let k = vs.len();
    if k == 0 {
        return Vec::new();
    }
    let d = vs[0].len();
    // row-reduce [v_i | e_i]; rows whose left part vanishes give the kernel
    let aug: Vec<Vector> = vs.iter().enumerate().map(|(i, v)| v.iter().copied().chain(unit(k, i)).collect()).collect();
    let mut rows = aug;
    let mut r = 0;
    for c in 0..d {
        let Some(pi) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pi);
        let inv = f.inv(rows[r][c]);
        rows[r] = rows[r].iter().map(|&x| f.mul(inv, x)).collect();
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let a = rows[i][c];
                let pr = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pr) {
                    *x = f.sub(*x, f.mul(a, y));
                }
            }
        }
        r += 1;
    }
    rows[r..].iter().map(|row| row[d..].to_vec()).collect()
}

/// Every subspace of `F^d`, by RREF pivot patterns.
pub fn all_subspaces(f: &SmallField, d: usize, mut visit: impl FnMut(&Subspace)) {
    for k in 0..=d {
        for_each_pivot_set(d, k, &mut |pivots: &[usize]| {
            // free positions: (row i, col j) with j > pivot i and j not a pivot
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(i, &p)| ((p + 1)..d).filter(|j| !pivots.contains(j)).map(move |j| (i, j)))
                .collect();
            let mut rows: Vec<Vector> = pivots.iter().map(|&p| unit(d, p)).collect();
            let mut assign = vec![0 as Elt; free.len()];
            loop {
                for (&(i, j), &x) in free.iter().zip(&assign) {
                    rows[i][j] = x;
                }
                visit(&Subspace { ambient: d, rows: rows.clone() });
                // odometer
                let mut pos = 0;
                loop {
                    if pos == assign.len() {
                        return;
                    }
                    assign[pos] += 1;
                    if (assign[pos] as usize) < f.size() {
                        break;
                    }
                    assign[pos] = 0;
                    pos += 1;
                }
            }
        });
    }
}

fn for_each_pivot_set(d: usize, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for p in start..d {
            cur.push(p);
            rec(p + 1, d, k, cur, visit);
            cur.pop();
        }
    }
    rec(0, d, k, &mut Vec::new(), visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::build_field;

    #[test]
    fn subspace_counts() {
        // Gaussian binomials at q = 2: [3 choose k] = 1, 7, 7, 1
        let f = build_field(2, 1).unwrap();
        let mut by_dim = [0usize; 4];
        all_subspaces(&f, 3, |s| by_dim[s.dim()] += 1);
        assert_eq!(by_dim, [1, 7, 7, 1]);
    }

    #[test]
    fn span_is_canonical() {
        let f = build_field(3, 1).unwrap();
        let a = Subspace::span(&f, vec![vec![1, 2, 0], vec![0, 1, 1]]);
        let b = Subspace::span(&f, vec![vec![1, 0, 1], vec![1, 1, 2]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.elements(&f).len(), 9);
    }

    #[test]
    fn intersections() {
        let f = build_field(2, 1).unwrap();
        let u = Subspace::span(&f, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let w = Subspace::span(&f, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let i = u.intersection(&f, &w);
        assert_eq!(i, Subspace::span(&f, vec![vec![0, 1, 0]]));
        assert_eq!(u.intersection_dim(&f, &w), 1);
    }
}
