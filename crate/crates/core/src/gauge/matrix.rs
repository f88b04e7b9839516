use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::scalar::GQ;

/// Small dense square matrix over `ℚ(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<GQ>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix { n, data: vec![GQ::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, GQ::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GQ>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[(i64, i64)]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&(a, b)| GQ::complex(a, b)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &GQ {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GQ) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<GQ>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn scale(&self, c: &GQ) -> Self {
        Matrix { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, self.get(j, i).conj());
            }
        }
        m
    }

    pub fn trace(&self) -> GQ {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Matrix) -> Matrix {
        &(self * other) + &(other * self)
    }

    /// Column vectors spanning the column space, by Gaussian elimination.
    pub fn column_basis(&self) -> Vec<Vec<GQ>> {
        let n = self.n;
        let cols: Vec<Vec<GQ>> = (0..n).map(|j| (0..n).map(|i| self.get(i, j).clone()).collect()).collect();
        let mut reduced: Vec<(usize, Vec<GQ>)> = Vec::new();
        let mut basis = Vec::new();
        for col in cols {
            let mut v = col.clone();
            for (pivot, r) in &reduced {
                if !v[*pivot].is_zero() {
                    let f = v[*pivot].clone();
                    for (x, y) in v.iter_mut().zip(r) {
                        *x -= &(&f * y);
                    }
                }
            }
            if let Some(p) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[p].inverse().expect("nonzero pivot");
                let normed: Vec<GQ> = v.iter().map(|x| x * &inv).collect();
                // keep earlier rows reduced against the new pivot
                for (_, r) in reduced.iter_mut() {
                    if !r[p].is_zero() {
                        let f = r[p].clone();
                        for (x, y) in r.iter_mut().zip(&normed) {
                            *x -= &(&f * y);
                        }
                    }
                }
                reduced.push((p, normed));
                basis.push(col);
            }
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.column_basis().len()
    }
}

/// Determinant by cofactor expansion; only used on Gram matrices of size ≤ 4.
pub fn determinant(m: &[Vec<GQ>]) -> GQ {
    let n = m.len();
    if n == 0 {
        return GQ::one();
    }
    let mut total = GQ::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<GQ>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * &determinant(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= &term;
        }
    }
    total
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}
