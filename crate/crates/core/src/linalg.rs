//! Dense matrices over a coefficient ring, with exact elimination over fields.

use std::fmt;

use crate::scalars::{Field, Laurent, Ring};

#[derive(Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type LMat = Mat<Laurent>;

impl<T: Ring> Mat<T> {
    pub fn zeros(rows: usize, cols: usize, ctx: &T::Ctx) -> Self {
        Mat { rows, cols, data: vec![T::zero(ctx); rows * cols] }
    }

    pub fn identity(n: usize, ctx: &T::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m.data[i * n + i] = T::one(ctx);
        }
        m
    }

    pub fn diag(d: Vec<T>, ctx: &T::Ctx) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n, ctx);
        for (i, x) in d.into_iter().enumerate() {
            m.data[i * n + i] = x;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data: Vec<T> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        Mat { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, o: &Self, ctx: &T::Ctx) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols, ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.mul(b);
                    out.data[i * o.cols + j].add_assign(&t);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn pow(&self, n: u32, ctx: &T::Ctx) -> Self {
        let mut acc = Self::identity(self.rows, ctx);
        for _ in 0..n {
            acc = acc.mul(self, ctx);
        }
        acc
    }

    pub fn kron(&self, o: &Self, ctx: &T::Ctx) -> Self {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        let mut out = Self::zeros(r, c, ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Mat { rows: self.cols, cols: self.rows, data }
    }
}

impl<T: Field> Mat<T> {
    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    let pj = self.get(r, j);
                    if pj.is_zero() {
                        continue;
                    }
                    let v = self.get(i, j).sub(&f.mul(pj));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn nullspace(&self, ctx: &T::Ctx) -> Vec<Vec<T>> {
        let mut m = self.clone();
        let piv = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(ctx); self.cols];
                v[f] = T::one(ctx);
                for (r, &pc) in piv.iter().enumerate() {
                    v[pc] = m.get(r, f).neg();
                }
                v
            })
            .collect()
    }

    /// Some solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[T], ctx: &T::Ctx) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.rows, self.cols + 1, ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let piv = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(ctx); self.cols];
        for (r, &pc) in piv.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self, ctx: &T::Ctx) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n, ctx);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, T::one(ctx));
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut out = Mat::zeros(n, n, ctx);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(out)
    }
}

impl<T: Ring> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat {}x{}\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rf, Rf};

    #[test]
    fn inverse_and_kernel() {
        let q = rf(Laurent::q_pow(1));
        let one = Rf::one(&());
        let m = Mat::from_rows(vec![vec![q.clone(), one.clone()], vec![one.clone(), q.clone()]]);
        let inv = m.inverse(&()).unwrap();
        assert_eq!(m.mul(&inv, &()), Mat::identity(2, &()));
        let s = Mat::from_rows(vec![vec![q.clone(), one.clone()], vec![q.mul(&q), q.clone()]]);
        assert_eq!(s.rank(), 1);
        let k = s.nullspace(&());
        assert_eq!(k.len(), 1);
        assert!(s.solve(&[one.clone(), one.clone()], &()).is_none());
        assert!(s.solve(&[one.clone(), q.clone()], &()).is_some());
    }
}
